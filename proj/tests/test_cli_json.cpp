#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "rt/json_io.hpp"

using namespace rt;

namespace {

int run(const std::string& args) {
    std::string cmd = std::string(RIGID_BIN) + " " + args + " >/dev/null 2>&1";
    int st = std::system(cmd.c_str());
    return WEXITSTATUS(st);
}

}  // namespace

TEST_CASE("triple json round-trip is exact") {
    for (auto kind : {FamilyKind{Family::Hypergeometric, 4},
                      FamilyKind{Family::Even, 3}, FamilyKind{Family::Odd, 2},
                      FamilyKind{Family::ExtraE8hat, 0},
                      FamilyKind{Family::E8, 0}}) {
        RigidTriple t = build(sample_generic_spectrum(kind, 8));
        Json j = triple_to_json(t);
        RigidTriple back = triple_from_json(Json::parse(j.dump()));
        CHECK(back.B == t.B);
        CHECK(back.C == t.C);
        CHECK(back.A == t.A);
        CHECK(back.spectrum.a == t.spectrum.a);
        CHECK(back.spectrum.kind.name() == kind.name());
    }
}

TEST_CASE("schema errors name the offending field") {
    RigidTriple t = build(sample_generic_spectrum({Family::Hypergeometric, 2}, 1));
    Json j = triple_to_json(t);
    Json broken = j;
    broken.erase("B");
    try {
        (void)triple_from_json(broken);
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(std::string(e.what()).find("B") != std::string::npos);
    }
    broken = j;
    broken["spectrum"]["a"][0] = "not-a-rational";
    CHECK_THROWS_AS((void)triple_from_json(broken), SchemaError);
    broken = j;
    broken["C"][0][0] = "1/0";
    CHECK_THROWS_AS((void)triple_from_json(broken), SchemaError);
}

TEST_CASE("cli: generate then verify round-trips with exit 0") {
    CHECK(run("generate --family odd --m 2 --seed 3 --out cli_t.json") == 0);
    CHECK(run("verify --in cli_t.json") == 0);
}

TEST_CASE("cli: corrupted entry fails verify with exit 1") {
    REQUIRE(run("generate --family hg --m 3 --seed 5 --out cli_c.json") == 0);
    Json j = read_json_file("cli_c.json");
    j["B"][0][1] = "7777";
    write_json_file("cli_c.json", j);
    CHECK(run("verify --in cli_c.json") == 1);
}

TEST_CASE("cli: usage errors exit 2") {
    CHECK(run("generate --family hg --m 3") == 2);  // no seed, no file
    CHECK(run("nonsense") == 2);
    CHECK(run("generate --family wat --seed 1") == 2);
    // --seed and --spectrum-file are mutually exclusive
    CHECK(run("generate --family hg --m 3 --seed 1 --spectrum-file x.json") ==
          2);
}

TEST_CASE("cli: identities and lr exit codes") {
    CHECK(run("identities --trials 2 --seed 9") == 0);
    CHECK(run("lr --lambda 2,1 --mu 2,1 --nu 3,2,1") == 0);
    CHECK(run("lr --face even --m 2 --seed 1 --count 3") == 0);
    CHECK(run("fuchsian --family extra --seed 4 --out cli_f.json") == 0);
    CHECK(run("positivity --family hg --m 3 --seed 11") == 0);
}
