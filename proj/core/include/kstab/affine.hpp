#pragma once

#include <cstddef>
#include <vector>

#include "kstab/rational.hpp"

namespace kstab {

// A coefficient vector (c_1, ..., c_k). Compared lexicographically.
using CoefficientPoint = std::vector<Rat>;

// Exact affine function of the boundary coefficients:
//   constant + sum_i coeffs[i] * c[i].
// Every invariant the library manipulates (level, A, S, beta) is one of
// these, so polytope constraints stay closed under the whole pipeline.
struct AffineForm {
    Rat constant;
    std::vector<Rat> coeffs;

    AffineForm() : constant(0) {}
    AffineForm(Rat c, std::vector<Rat> a) : constant(std::move(c)), coeffs(std::move(a)) {}

    std::size_t arity() const { return coeffs.size(); }

    // Exact evaluation; throws contract_violation on arity mismatch.
    Rat operator()(const CoefficientPoint& point) const;

    bool operator==(const AffineForm& other) const = default;
};

AffineForm operator+(const AffineForm& a, const AffineForm& b);
AffineForm operator-(const AffineForm& a, const AffineForm& b);
AffineForm operator*(const Rat& scale, const AffineForm& form);

// True when constant and all coefficients vanish.
bool is_zero(const AffineForm& form);

// Constant form in `arity` variables.
AffineForm constant_form(Rat value, std::size_t arity);

// The single-coordinate form c_index (coefficient 1, constant 0).
AffineForm coordinate_form(std::size_t index, std::size_t arity);

}  // namespace kstab
