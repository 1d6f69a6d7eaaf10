#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rt/identities.hpp"
#include "rt/errors.hpp"

using namespace rt;

TEST_CASE("hand-checked small cases") {
    // identity 2, n=2: (x1-y1)/(x1-x2) + (x2-y1)/(x2-x1) = 1
    auto [l2, r2] = eval_sides(identity(2), {Rat(5), Rat(3)}, {rat(7, 2)});
    CHECK(l2 == r2);
    CHECK(r2 == 1);
    // identity 8, n=2: antisymmetry gives 0
    auto [l8, r8] = eval_sides(identity(8), {Rat(4), Rat(1)}, {});
    CHECK(l8 == 0);
    CHECK(r8 == 0);
    // identity 3, n=2
    auto [l3, r3] =
        eval_sides(identity(3), {Rat(2), Rat(-1)}, {rat(1, 3), Rat(4)});
    CHECK(l3 == r3);
    CHECK(r3 == Rat(2) - rat(1, 3) + Rat(-1) - Rat(4));
}

TEST_CASE("poles are reported, not evaluated") {
    CHECK_THROWS_AS((void)eval_sides(identity(2), {Rat(1), Rat(1)}, {Rat(0)}),
                    PoleAtPoint);
    CHECK_THROWS_AS(
        (void)eval_sides(identity(7), {Rat(1), Rat(2)}, {Rat(-1)}, {0}),
        PoleAtPoint);
}

TEST_CASE("all fourteen identities pass 100 random points") {
    for (int id = 1; id <= 14; ++id) {
        IdentityReport rep = check_identity(id, 100, 42);
        CHECK(rep.pass);
        CHECK(rep.trials == 100);
        CHECK(rep.first_failure == -1);
        CHECK(!rep.degree_note.empty());
    }
}

TEST_CASE("perturbed identity 3 fails at the first point") {
    IdentityReport rep = check_identity(3, 10, 42, /*perturb_rhs=*/true);
    CHECK(!rep.pass);
    CHECK(rep.first_failure == 0);
}

TEST_CASE("same seed reproduces the same report") {
    IdentityReport a = check_identity(13, 25, 7);
    IdentityReport b = check_identity(13, 25, 7);
    CHECK(a.pass == b.pass);
    CHECK(a.degree_note == b.degree_note);
    CHECK(a.first_failure == b.first_failure);
}
