#pragma once

#include <string>
#include <vector>

#include "kstab/affine.hpp"
#include "kstab/rational.hpp"

namespace kstab {

// The ambient varieties supported by the linear volume model: projective
// space P^n and the smooth quadric Q_l in P^{l+1}. Both have Picard rank 1
// with ample generator H, and vol(mH) = C * m^dim holds for every rational
// m >= 0, which is what makes all invariants below closed-form.
enum class AmbientKind { ProjectiveSpace, Quadric };

struct AmbientModel {
    AmbientKind kind;
    int dim;                  // n
    Rat volume_multiplier;    // C = H^dim   (1 for P^n, 2 for Q_l)
    Rat anticanonical_level;  // kappa, with -K = kappa * H  (n+1 for P^n, l for Q_l)

    bool operator==(const AmbientModel& other) const = default;
};

AmbientModel make_projective_space(int n);  // n >= 1
AmbientModel make_quadric(int l);           // l >= 2

// One boundary summand m_i * D_i where D_i is a smooth prime hypersurface of
// degree d_i in units of H. The polytope coordinate c_i scales the whole
// summand, so the prime divisor D_i appears with coefficient m_i * c_i.
// All primes are assumed pairwise transversal and smooth (log smooth total
// pair); this is declared, not computed.
struct BoundaryEntry {
    std::string label;
    Rat prime_degree;  // d_i > 0
    Rat multiplier;    // m_i > 0

    Rat effective_degree() const { return prime_degree * multiplier; }

    bool operator==(const BoundaryEntry& other) const = default;
};

struct PairFamily {
    AmbientModel ambient;
    std::vector<BoundaryEntry> boundary;

    std::size_t coefficient_count() const { return boundary.size(); }

    bool operator==(const PairFamily& other) const = default;
};

// Validates degrees, multipliers and label uniqueness. k = 0 is legal and
// denotes the bare Fano ambient.
PairFamily make_pair_family(AmbientModel ambient, std::vector<BoundaryEntry> boundary);

// s(c) = kappa - sum_i e_i c_i, the H-multiple of -K_X - sum_i c_i (m_i D_i).
// s(c) > 0 iff the pair is log Fano in the model, s(c) = 0 iff log
// Calabi-Yau.
AffineForm level_form(const PairFamily& family);
Rat level(const PairFamily& family, const CoefficientPoint& point);

// vol(-K_X - Delta) = C * s(c)^dim, exact. Errors when s(c) < 0 (the class
// is no longer pseudo-effective).
Rat volume(const PairFamily& family, const CoefficientPoint& point);

}  // namespace kstab
