#include "rt/fuchsian.hpp"

#include "rt/errors.hpp"

namespace rt {
namespace {

Json point_to_json(const ProjPoint& p) {
    if (p.infinite) return Json{{"type", "infinity"}};
    return Json{{"type", "finite"}, {"value", rat_to_string(p.value)}};
}

ProjPoint point_from_json(const Json& j, const std::string& field) {
    if (!j.is_object() || !j.contains("type"))
        throw SchemaError("field '" + field + "' must be a tagged point");
    std::string type = j.at("type").get<std::string>();
    if (type == "infinity") return ProjPoint::infinity();
    if (type != "finite")
        throw SchemaError("field '" + field + "' has unknown type '" + type + "'");
    if (!j.contains("value"))
        throw SchemaError("field '" + field + "' is missing 'value'");
    try {
        return ProjPoint::at(rat_from_string(j.at("value").get<std::string>()));
    } catch (const std::invalid_argument& e) {
        throw SchemaError("field '" + field + "': " + e.what());
    }
}

Json exponents_to_json(const std::vector<std::pair<Rat, int>>& eigs) {
    Json out = Json::array();
    for (const auto& [v, mult] : eigs)
        out.push_back(Json::array({rat_to_string(v), mult}));
    return out;
}

std::vector<std::pair<Rat, int>> exponents_from_json(const Json& j,
                                                     const std::string& field) {
    if (!j.is_array()) throw SchemaError("field '" + field + "' must be an array");
    std::vector<std::pair<Rat, int>> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw SchemaError("field '" + field +
                              "' entries must be [value, multiplicity] pairs");
        out.emplace_back(rat_from_string(e.at(0).get<std::string>()),
                         e.at(1).get<int>());
    }
    return out;
}

}  // namespace

bool operator==(const ProjPoint& p, const ProjPoint& q) {
    if (p.infinite || q.infinite) return p.infinite == q.infinite;
    return p.value == q.value;
}

FuchsianSystem assemble(const RigidTriple& t, const ProjPoint& z1,
                        const ProjPoint& z2, const ProjPoint& z3) {
    if (z1 == z2 || z1 == z3 || z2 == z3)
        throw CoincidentSingularities("singular points must be pairwise distinct");
    FuchsianSystem sys;
    sys.singularities = {z1, z2, z3};
    sys.residues = {Rat(-1) * t.A, t.B, t.C};
    Mat total = sys.residues[0] + sys.residues[1] + sys.residues[2];
    for (int i = 0; i < total.rows(); ++i)
        for (int j = 0; j < total.cols(); ++j)
            if (total(i, j) != 0)
                throw SchemaError("residue sum is nonzero");
    auto negate = [](std::vector<std::pair<Rat, int>> eigs) {
        for (auto& [v, mult] : eigs) v = -v;
        return eigs;
    };
    sys.exponents = {negate(t.spectrum.a_eigs()), t.spectrum.b_eigs(),
                     t.spectrum.c_eigs()};
    return sys;
}

Json fuchsian_to_json(const FuchsianSystem& sys) {
    Json j;
    j["singularities"] = Json::array();
    j["residues"] = Json::array();
    j["exponents"] = Json::array();
    for (int i = 0; i < 3; ++i) {
        j["singularities"].push_back(point_to_json(sys.singularities[i]));
        j["residues"].push_back(mat_to_json(sys.residues[i]));
        j["exponents"].push_back(exponents_to_json(sys.exponents[i]));
    }
    if (sys.form) j["form"] = mat_to_json(*sys.form);
    return j;
}

FuchsianSystem fuchsian_from_json(const Json& j) {
    for (const char* f : {"singularities", "residues", "exponents"})
        if (!j.contains(f))
            throw SchemaError(std::string("missing field '") + f + "'");
    if (j.at("singularities").size() != 3 || j.at("residues").size() != 3 ||
        j.at("exponents").size() != 3)
        throw SchemaError("system must have exactly three singular points");
    FuchsianSystem sys;
    for (int i = 0; i < 3; ++i) {
        std::string slot = "[" + std::to_string(i) + "]";
        sys.singularities[i] =
            point_from_json(j.at("singularities").at(i), "singularities" + slot);
        sys.residues[i] = mat_from_json(j.at("residues").at(i), "residues" + slot);
        sys.exponents[i] =
            exponents_from_json(j.at("exponents").at(i), "exponents" + slot);
    }
    if (j.contains("form")) sys.form = mat_from_json(j.at("form"), "form");
    return sys;
}

}  // namespace rt
