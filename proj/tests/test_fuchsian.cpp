#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rt/fuchsian.hpp"
#include "rt/spectral.hpp"

using namespace rt;

TEST_CASE("assemble: residues, residue sum, exponents") {
    for (auto kind : {FamilyKind{Family::Hypergeometric, 3},
                      FamilyKind{Family::Even, 2}, FamilyKind{Family::Odd, 2},
                      FamilyKind{Family::ExtraE8hat, 0},
                      FamilyKind{Family::E8, 0}}) {
        auto s = sample_generic_spectrum(kind, 3);
        RigidTriple t = build(s);
        FuchsianSystem sys = assemble(t, ProjPoint::infinity(),
                                      ProjPoint::at(Rat(0)),
                                      ProjPoint::at(Rat(1)));
        Mat total = sys.residues[0] + sys.residues[1] + sys.residues[2];
        CHECK(total.is_zero());
        CHECK(sys.residues[1] == t.B);
        CHECK(sys.residues[2] == t.C);
        CHECK(verify_spectrum(sys.residues[0], sys.exponents[0]));
        CHECK(verify_spectrum(sys.residues[1], sys.exponents[1]));
        CHECK(verify_spectrum(sys.residues[2], sys.exponents[2]));
    }
}

TEST_CASE("assemble rejects coincident singularities") {
    auto s = sample_generic_spectrum({Family::Hypergeometric, 2}, 4);
    RigidTriple t = build(s);
    CHECK_THROWS_AS((void)assemble(t, ProjPoint::at(Rat(1)),
                                   ProjPoint::at(Rat(1)),
                                   ProjPoint::at(Rat(2))),
                    CoincidentSingularities);
    CHECK_THROWS_AS((void)assemble(t, ProjPoint::infinity(),
                                   ProjPoint::infinity(),
                                   ProjPoint::at(Rat(2))),
                    CoincidentSingularities);
}

TEST_CASE("json round-trip is bit-exact") {
    auto s = sample_generic_spectrum({Family::Even, 3}, 5);
    RigidTriple t = build(s);
    FuchsianSystem sys = assemble(t, ProjPoint::at(rat(-1, 2)),
                                  ProjPoint::at(Rat(0)), ProjPoint::infinity());
    InvariantForm f = invariant_form(t, eigenvectors(t));
    sys.form = f.G;
    Json j = fuchsian_to_json(sys);
    // serialize to text and back: the JSON document itself must round-trip
    std::string text = j.dump();
    FuchsianSystem back = fuchsian_from_json(Json::parse(text));
    CHECK(fuchsian_to_json(back).dump() == text);
    for (int i = 0; i < 3; ++i) {
        CHECK(back.singularities[i] == sys.singularities[i]);
        CHECK(back.residues[i] == sys.residues[i]);
        CHECK(back.exponents[i] == sys.exponents[i]);
    }
    REQUIRE(back.form.has_value());
    CHECK(*back.form == *sys.form);
}

TEST_CASE("malformed documents are rejected with the field named") {
    Json j;
    j["singularities"] = Json::array();
    try {
        (void)fuchsian_from_json(j);
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(std::string(e.what()).find("residues") != std::string::npos);
    }
    auto s = sample_generic_spectrum({Family::Hypergeometric, 2}, 6);
    FuchsianSystem sys = assemble(build(s), ProjPoint::infinity(),
                                  ProjPoint::at(Rat(0)), ProjPoint::at(Rat(1)));
    Json good = fuchsian_to_json(sys);
    good["singularities"][0] = Json{{"type", "nowhere"}};
    CHECK_THROWS_AS((void)fuchsian_from_json(good), SchemaError);
}
