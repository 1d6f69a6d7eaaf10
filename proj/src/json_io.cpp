#include "rt/json_io.hpp"

#include <fstream>

#include "rt/errors.hpp"

namespace rt {

Json rat_vec_to_json(const std::vector<Rat>& v) {
    Json out = Json::array();
    for (const Rat& x : v) out.push_back(rat_to_string(x));
    return out;
}

std::vector<Rat> rat_vec_from_json(const Json& j, const std::string& field) {
    if (!j.is_array()) throw SchemaError("field '" + field + "' must be an array");
    std::vector<Rat> out;
    for (const auto& e : j) {
        if (!e.is_string())
            throw SchemaError("field '" + field + "' must hold rational strings");
        try {
            out.push_back(rat_from_string(e.get<std::string>()));
        } catch (const std::invalid_argument& ex) {
            throw SchemaError("field '" + field + "': " + ex.what());
        }
    }
    return out;
}

Json mat_to_json(const Mat& m) {
    Json out = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m(i, j)));
        out.push_back(row);
    }
    return out;
}

Mat mat_from_json(const Json& j, const std::string& field) {
    if (!j.is_array() || j.empty())
        throw SchemaError("field '" + field + "' must be a nonempty matrix");
    const int rows = int(j.size());
    const int cols = int(j.at(0).size());
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        std::vector<Rat> row = rat_vec_from_json(j.at(i), field);
        if (int(row.size()) != cols)
            throw SchemaError("field '" + field + "' has ragged rows");
        for (int k = 0; k < cols; ++k) m(i, k) = row[k];
    }
    return m;
}

Json triple_to_json(const RigidTriple& t) {
    Json j;
    j["family"] = t.spectrum.kind.name();
    j["spectrum"] = {{"a", rat_vec_to_json(t.spectrum.a)},
                     {"b", rat_vec_to_json(t.spectrum.b)},
                     {"c", rat_vec_to_json(t.spectrum.c)}};
    j["B"] = mat_to_json(t.B);
    j["C"] = mat_to_json(t.C);
    j["A"] = mat_to_json(t.A);
    return j;
}

RigidTriple triple_from_json(const Json& j) {
    for (const char* f : {"family", "spectrum", "B", "C", "A"})
        if (!j.contains(f))
            throw SchemaError(std::string("missing field '") + f + "'");
    FamilyKind kind = parse_family(j.at("family").get<std::string>());
    const Json& sp = j.at("spectrum");
    for (const char* f : {"a", "b", "c"})
        if (!sp.contains(f))
            throw SchemaError(std::string("missing field 'spectrum.") + f + "'");
    TripleSpectrum s;
    s.kind = kind;
    s.a = rat_vec_from_json(sp.at("a"), "spectrum.a");
    s.b = rat_vec_from_json(sp.at("b"), "spectrum.b");
    s.c = rat_vec_from_json(sp.at("c"), "spectrum.c");
    s = validate_spectrum(kind, std::move(s));
    RigidTriple t;
    t.spectrum = std::move(s);
    t.B = mat_from_json(j.at("B"), "B");
    t.C = mat_from_json(j.at("C"), "C");
    t.A = mat_from_json(j.at("A"), "A");
    const int n = t.spectrum.kind.n();
    for (const Mat* m : {&t.B, &t.C, &t.A})
        if (m->rows() != n || m->cols() != n)
            throw SchemaError("matrix size does not match the family");
    return t;
}

Json form_to_json(const InvariantForm& f) {
    Json j;
    j["gram"] = rat_vec_to_json(f.gram);
    j["G"] = mat_to_json(f.G);
    return j;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw SchemaError("parse error in '" + path + "': " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw SchemaError("cannot open '" + path + "' for writing");
    out << j.dump(2) << "\n";
}

}  // namespace rt
