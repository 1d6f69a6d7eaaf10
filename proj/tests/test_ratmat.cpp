#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rt/matrix.hpp"
#include "rt/rat.hpp"

using namespace rt;

TEST_CASE("rational parsing and printing round-trips") {
    CHECK(rat_to_string(rat(1, 2)) == "1/2");
    CHECK(rat_to_string(rat(-4, 2)) == "-2");
    CHECK(rat_from_string("6/-4") == rat(-3, 2));
    CHECK(rat_from_string("-7") == rat(-7, 1));
    CHECK(rat_from_string(rat_to_string(rat(22, -8))) == rat(-11, 4));
    CHECK_THROWS_AS((void)rat_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS((void)rat_from_string("x"), std::invalid_argument);
}

static Mat from_rows(const std::vector<std::vector<long>>& rows) {
    Mat m(int(rows.size()), int(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    return m;
}

TEST_CASE("matrix arithmetic basics") {
    Mat a = from_rows({{1, 2}, {3, 4}});
    Mat b = from_rows({{0, 1}, {1, 0}});
    CHECK((a * b) == from_rows({{2, 1}, {4, 3}}));
    CHECK((a + b - b) == a);
    CHECK((Rat(2) * a) == from_rows({{2, 4}, {6, 8}}));
    CHECK(a.transpose() == from_rows({{1, 3}, {2, 4}}));
    CHECK(Mat::identity(2) * a == a);
    Vec v = {Rat(1), Rat(1)};
    Vec av = a * v;
    CHECK(av[0] == 3);
    CHECK(av[1] == 7);
}

TEST_CASE("rank, kernel and solve agree on a rank-deficient system") {
    Mat m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(rank(m) == 2);
    auto ker = kernel(m);
    REQUIRE(ker.size() == 1);
    for (int i = 0; i < 3; ++i) {
        Rat dot = 0;
        for (int j = 0; j < 3; ++j) dot += m(i, j) * ker[0][j];
        CHECK(dot == 0);
    }
    Vec rhs = {Rat(6), Rat(12), Rat(2)};
    auto x = solve_linear(m, rhs);
    REQUIRE(x.has_value());
    Vec mx = m * *x;
    CHECK(mx == rhs);
    Vec bad = {Rat(6), Rat(13), Rat(2)};
    CHECK(!solve_linear(m, bad).has_value());
}

TEST_CASE("inverse and determinant") {
    Mat m = from_rows({{2, 1}, {7, 4}});
    CHECK(det(m) == 1);
    CHECK(inverse(m) * m == Mat::identity(2));
    Mat sing = from_rows({{1, 2}, {2, 4}});
    CHECK(det(sing) == 0);
    CHECK_THROWS_AS((void)inverse(sing), DegenerateForm);
}

TEST_CASE("characteristic polynomial matches the root factorization") {
    Mat m = from_rows({{2, 0, 0}, {1, 3, 0}, {0, 5, 3}});
    auto cp = char_poly(m);
    auto pr = poly_from_roots({Rat(2), Rat(3), Rat(3)});
    CHECK(cp == pr);
}

TEST_CASE("verify_spectrum demands diagonalizability") {
    Mat diagable = from_rows({{2, 0, 0}, {0, 3, 0}, {0, 0, 3}});
    CHECK(verify_spectrum(diagable, {{Rat(2), 1}, {Rat(3), 2}}));
    CHECK(!verify_spectrum(diagable, {{Rat(2), 2}, {Rat(3), 1}}));
    Mat jordan = from_rows({{3, 1, 0}, {0, 3, 0}, {0, 0, 2}});
    CHECK(!verify_spectrum(jordan, {{Rat(2), 1}, {Rat(3), 2}}));
}
