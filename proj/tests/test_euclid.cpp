#include "bott/euclid.hpp"
#include "bott/census.hpp"

#include <doctest.h>

#include <random>

using namespace bott;
using namespace bott::euclid;

namespace {

const char* const kExample2 =
    "0 0 1 1 1 1\n0 0 1 1 1 1\n0 0 0 0 1 1\n0 0 0 0 1 1\n0 0 0 0 0 0\n0 0 0 0 0 0\n";

Motion translation(std::size_t n, std::size_t i, long long twice) {
    std::vector<long long> t(n, 0);
    t[i] = twice;
    return Motion(std::vector<int>(n, 1), t);
}

Motion random_motion(std::mt19937& rng, std::size_t n) {
    std::vector<int> s(n);
    std::vector<long long> t(n);
    for (std::size_t i = 0; i < n; ++i) {
        s[i] = (rng() & 1U) ? 1 : -1;
        t[i] = static_cast<long long>(rng() % 9) - 4;
    }
    return Motion(s, t);
}

}  // namespace

TEST_CASE("generators") {
    const auto torus = generators(BottMatrix(2));
    CHECK(torus[0] == translation(2, 0, 1));
    CHECK(torus[1] == translation(2, 1, 1));

    const auto klein = generators(parse_bott("01/00"));
    CHECK(klein[0] == Motion({1, -1}, {1, 0}));
    CHECK(klein[1] == translation(2, 1, 1));

    const BottMatrix ex = parse_bott(kExample2);
    const auto gens = generators(ex);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        CHECK(square(gens[i]) == translation(6, i, 2));
    }
}

TEST_CASE("composition") {
    const Motion g({1, -1}, {1, 0});
    CHECK(square(g) == translation(2, 0, 2));
    CHECK(compose(g, Motion(2)) == g);
    CHECK(compose(Motion(2), g) == g);
    CHECK(compose(g, g.inverse()) == Motion(2));
    CHECK_THROWS_AS(compose(Motion(2), Motion(3)), DimensionError);
    CHECK_THROWS_AS(Motion({1, 0}, {0, 0}), ValidationError);

    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + rng() % 5;
        const Motion a = random_motion(rng, n);
        const Motion b = random_motion(rng, n);
        const Motion c = random_motion(rng, n);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * a.inverse() == Motion(n));
        CHECK(a.inverse() * a == Motion(n));
    }
}

TEST_CASE("element_of") {
    const BottMatrix klein = parse_bott("01/00");
    CHECK(element_of(klein, 0) == Motion(2));
    CHECK(element_of(klein, 0b01) == generators(klein)[0]);
    // s1 s2: x -> s1(x + e2/2) = (x1 + 1/2, -x2 - 1/2).
    CHECK(element_of(klein, 0b11) == Motion({1, -1}, {1, -1}));
}

TEST_CASE("acts_freely") {
    CHECK_FALSE(acts_freely(Motion({-1}, {0})));
    CHECK(acts_freely(Motion({1}, {1})));
    CHECK_FALSE(acts_freely(Motion({1}, {2})));
    CHECK_FALSE(acts_freely(realize(parse_pmatrix("2"), 1)));
    CHECK(acts_freely(realize(parse_pmatrix("1"), 1)));
    for (std::size_t n = 1; n <= 5; ++n) {
        census::enumerate(n, [n](std::uint64_t, const BottMatrix& a) {
            CHECK(acts_freely(a, Subset{1} << (n - 1)));
            for (Subset t = 1; t < (Subset{1} << n); ++t) {
                CHECK(acts_freely(a, t));
            }
        });
    }
}

TEST_CASE("realize follows the circle automorphisms") {
    const PMatrix p = parse_pmatrix("0 1 2 3");
    CHECK(row_motion(p, 0) == Motion({1, 1, -1, -1}, {0, 1, 0, 1}));
    // g3 = g1 g2 as motions of the circle, up to integer translations.
    const PMatrix g = parse_pmatrix("1 / 2");
    const Motion prod = realize(g, 0b11);
    CHECK(prod.signs() == std::vector<int>{-1});
    CHECK(prod.trans2()[0] % 2 != 0);
}

TEST_CASE("holonomy_matrix") {
    CHECK(holonomy_matrix(parse_bott("01/00"), 0) == std::vector<int>{1, 1});
    CHECK(holonomy_matrix(parse_bott("01/00"), 0b01) == std::vector<int>{1, -1});
    CHECK(holonomy_matrix(parse_bott(kExample2), 0b01) == std::vector<int>{1, 1, -1, -1, -1, -1});
}

TEST_CASE("cross_check finds no disagreement for n <= 5") {
    for (std::size_t n = 1; n <= 5; ++n) {
        census::enumerate(n, [n](std::uint64_t, const BottMatrix& a) {
            const census::CrossCheck c = census::cross_check(a);
            CHECK(c.subsets == (std::uint64_t{1} << n) - 1);
            CHECK(c.disagreements == 0);
        });
    }
}
