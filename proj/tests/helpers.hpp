#pragma once

#include <random>
#include <string>
#include <vector>

#include "kstab/model.hpp"
#include "kstab/rational.hpp"

namespace kstab::testing {

inline Rat rat(const std::string& text) { return parse_rational(text); }

inline CoefficientPoint point(std::initializer_list<std::string> coords) {
    CoefficientPoint p;
    for (const auto& c : coords) p.push_back(rat(c));
    return p;
}

// (P^2, 3L1 + 3L2)
inline PairFamily two_lines() {
    return make_pair_family(make_projective_space(2), {BoundaryEntry{"L1", Rat(1), Rat(3)},
                                                       BoundaryEntry{"L2", Rat(1), Rat(3)}});
}

// (P^2, 3/2 Q1 + 3/2 Q2)
inline PairFamily two_conics() {
    return make_pair_family(make_projective_space(2),
                            {BoundaryEntry{"Q1", Rat(2), Rat(3, 2)},
                             BoundaryEntry{"Q2", Rat(2), Rat(3, 2)}});
}

// (P^2, 3/2 Q + 3L)
inline PairFamily conic_line() {
    return make_pair_family(make_projective_space(2), {BoundaryEntry{"Q", Rat(2), Rat(3, 2)},
                                                       BoundaryEntry{"L", Rat(1), Rat(3)}});
}

// (P^n, Q + L)
inline PairFamily quadric_hyperplane(int n) {
    return make_pair_family(make_projective_space(n), {BoundaryEntry{"Q", Rat(2), Rat(1)},
                                                       BoundaryEntry{"L", Rat(1), Rat(1)}});
}

// (P^n, Q + Q')
inline PairFamily two_quadrics(int n) {
    return make_pair_family(make_projective_space(n), {BoundaryEntry{"Q", Rat(2), Rat(1)},
                                                       BoundaryEntry{"Q'", Rat(2), Rat(1)}});
}

// Uniform small rational in [0, hi_num/hi_den] with denominator <= max_den.
inline Rat random_rational(std::mt19937& rng, int hi_num, int max_den) {
    std::uniform_int_distribution<int> den_dist(1, max_den);
    int den = den_dist(rng);
    std::uniform_int_distribution<int> num_dist(0, hi_num * den);
    return Rat(num_dist(rng), den);
}

}  // namespace kstab::testing
