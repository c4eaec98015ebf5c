#include <doctest.h>

#include "helpers.hpp"
#include "kstab/errors.hpp"
#include "kstab/model.hpp"

using namespace kstab;
using namespace kstab::testing;

TEST_CASE("projective space factory") {
    AmbientModel p2 = make_projective_space(2);
    CHECK(p2.kind == AmbientKind::ProjectiveSpace);
    CHECK(p2.dim == 2);
    CHECK(p2.volume_multiplier == 1);
    CHECK(p2.anticanonical_level == 3);

    AmbientModel p3 = make_projective_space(3);
    CHECK(p3.dim == 3);
    CHECK(p3.anticanonical_level == 4);

    CHECK_THROWS_AS(make_projective_space(0), contract_violation);
}

TEST_CASE("quadric factory") {
    AmbientModel q2 = make_quadric(2);
    CHECK(q2.kind == AmbientKind::Quadric);
    CHECK(q2.dim == 2);
    CHECK(q2.volume_multiplier == 2);
    CHECK(q2.anticanonical_level == 2);

    AmbientModel q4 = make_quadric(4);
    CHECK(q4.dim == 4);
    CHECK(q4.anticanonical_level == 4);

    CHECK_THROWS_AS(make_quadric(1), contract_violation);
}

TEST_CASE("family validation") {
    CHECK_THROWS_AS(make_pair_family(make_projective_space(2),
                                     {BoundaryEntry{"D", Rat(1), Rat(1)},
                                      BoundaryEntry{"D", Rat(2), Rat(1)}}),
                    contract_violation);
    CHECK_THROWS_AS(
        make_pair_family(make_projective_space(2), {BoundaryEntry{"D", Rat(0), Rat(1)}}),
        contract_violation);
    CHECK_THROWS_AS(
        make_pair_family(make_projective_space(2), {BoundaryEntry{"D", Rat(1), Rat(-1)}}),
        contract_violation);

    // Empty boundary denotes the bare ambient.
    PairFamily bare = make_pair_family(make_projective_space(3), {});
    CHECK(bare.coefficient_count() == 0);
    CHECK(level(bare, {}) == 4);
}

TEST_CASE("level examples") {
    for (int n = 2; n <= 6; ++n)
        CHECK(level(quadric_hyperplane(n), point({"0", "0"})) == n + 1);

    CHECK(level(two_conics(), point({"1/3", "2/3"})) == 0);
    CHECK(level(conic_line(), point({"1/2", "0"})) == rat("3/2"));
}

TEST_CASE("level form coefficients") {
    PairFamily family = conic_line();
    AffineForm form = level_form(family);
    CHECK(form.constant == 3);
    CHECK(form.coeffs == std::vector<Rat>{Rat(-3), Rat(-3)});

    // level(c) agrees with the affine form at random rational points.
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 24; ++trial) {
        CoefficientPoint c{random_rational(rng, 2, 7), random_rational(rng, 2, 7)};
        CHECK(level(family, c) == form(c));
    }
}

TEST_CASE("volume") {
    PairFamily bare_p2 = make_pair_family(make_projective_space(2), {});
    CHECK(volume(bare_p2, {}) == 9);

    CHECK(volume(two_conics(), point({"1/3", "2/3"})) == 0);

    PairFamily q3 = make_pair_family(make_quadric(3), {BoundaryEntry{"H", Rat(1), Rat(1)}});
    CHECK(volume(q3, point({"1"})) == 16);

    CHECK_THROWS_AS(volume(two_conics(), point({"1", "1"})), contract_violation);
}

TEST_CASE("volume matches multiplier times level power") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        PairFamily family = trial % 2 == 0 ? quadric_hyperplane(2 + trial % 5)
                                           : make_pair_family(make_quadric(2 + trial % 4),
                                                              {BoundaryEntry{"S", Rat(1), Rat(1)}});
        CoefficientPoint c(family.coefficient_count());
        for (auto& x : c) x = random_rational(rng, 1, 5);
        Rat s = level(family, c);
        if (s < 0) continue;
        Rat power(1);
        for (int i = 0; i < family.ambient.dim; ++i) power *= s;
        CHECK(volume(family, c) == family.ambient.volume_multiplier * power);
    }
}

TEST_CASE("volume non-increasing along coordinate rays") {
    PairFamily family = two_conics();
    Rat previous = volume(family, point({"0", "0"}));
    for (int step = 1; step <= 6; ++step) {
        CoefficientPoint c{Rat(step, 20), Rat(0)};
        Rat v = volume(family, c);
        CHECK(v <= previous);
        previous = v;
    }
}
