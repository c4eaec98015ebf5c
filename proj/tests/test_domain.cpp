#include <doctest.h>

#include "helpers.hpp"
#include "kstab/domain.hpp"
#include "kstab/errors.hpp"

using namespace kstab;
using namespace kstab::testing;

TEST_CASE("two lines: only the origin survives") {
    Polytope region = necessary_region(two_lines());
    CHECK(region.vertices == std::vector<CoefficientPoint>{point({"0", "0"})});
}

TEST_CASE("two conics: the pentagon") {
    Polytope region = necessary_region(two_conics());
    std::vector<CoefficientPoint> expected{point({"0", "0"}), point({"0", "1/2"}),
                                           point({"1/3", "2/3"}), point({"1/2", "0"}),
                                           point({"2/3", "1/3"})};
    CHECK(region.vertices == expected);
}

TEST_CASE("conic plus line: the triangle") {
    Polytope region = necessary_region(conic_line());
    std::vector<CoefficientPoint> expected{point({"0", "0"}), point({"1/2", "0"}),
                                           point({"2/3", "1/3"})};
    CHECK(region.vertices == expected);
}

TEST_CASE("quadric plus hyperplane for general n") {
    for (int n = 2; n <= 10; ++n) {
        Polytope region = necessary_region(quadric_hyperplane(n));
        std::vector<CoefficientPoint> expected{
            {Rat(0), Rat(0)}, {Rat(n + 1, 2 * n), Rat(0)}, {Rat(n, 2 * (n - 1)), Rat(1, n - 1)}};
        std::sort(expected.begin(), expected.end());
        CHECK(region.vertices == expected);
    }
}

TEST_CASE("two quadrics for general n") {
    for (int n = 3; n <= 10; ++n) {
        Polytope region = necessary_region(two_quadrics(n));
        std::vector<CoefficientPoint> expected{{Rat(0), Rat(0)},
                                               {Rat(0), Rat(n + 1, 2 * n)},
                                               {Rat(n + 1, 2 * n), Rat(0)},
                                               {Rat(n + 1, 2 * (n - 1)), Rat(n + 1, 2 * (n - 1))}};
        std::sort(expected.begin(), expected.end());
        CHECK(region.vertices == expected);
    }
}

TEST_CASE("single-divisor families cut the predicted interval") {
    for (int n = 1; n <= 8; ++n) {
        for (int d = 1; d <= n; ++d) {
            PairFamily family = make_pair_family(make_projective_space(n),
                                                 {BoundaryEntry{"S", Rat(d), Rat(1)}});
            Polytope region = necessary_region(family);
            Rat upper = Rat((n + 1) * (d - 1), d * n);
            std::vector<CoefficientPoint> expected;
            expected.push_back({Rat(0)});
            if (upper > 0) expected.push_back({upper});
            CHECK(region.vertices == expected);
        }
    }
}

TEST_CASE("region stays inside the box and the log Fano closure") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        PairFamily family = make_pair_family(
            make_projective_space(n),
            {BoundaryEntry{"A", Rat(1 + rng() % 3), Rat(1 + rng() % 2, 1 + rng() % 2)},
             BoundaryEntry{"B", Rat(1 + rng() % 3), Rat(1 + rng() % 2)}});
        Polytope region = necessary_region(family);
        for (const auto& v : region.vertices) {
            for (const auto& c : v) {
                CHECK(c >= 0);
                CHECK(c <= 1);
            }
            CHECK(level(family, v) >= 0);
        }
    }
}

TEST_CASE("bare ambient has no region") {
    PairFamily bare = make_pair_family(make_projective_space(2), {});
    CHECK_THROWS_AS(necessary_region(bare), contract_violation);
}
