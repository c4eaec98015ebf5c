#pragma once

#include <cstddef>

#include "kstab/model.hpp"
#include "kstab/polytope.hpp"

namespace kstab {

// A prime hypersurface divisor on the ambient variety: either the prime
// underlying a boundary entry, or a general smooth prime of given degree not
// in the boundary support. These are the only divisors beta is evaluated on;
// exceptional divisors of blow-ups are outside the model.
class DivisorRef {
  public:
    static DivisorRef boundary(std::size_t index);
    static DivisorRef external(Rat degree);  // degree > 0

    bool is_boundary() const { return is_boundary_; }
    std::size_t boundary_index() const;
    const Rat& external_degree() const;

    // Degree of the underlying prime in units of H; range-checks boundary
    // indices against the family.
    Rat prime_degree(const PairFamily& family) const;

  private:
    DivisorRef() : degree_(0) {}
    bool is_boundary_ = false;
    std::size_t index_ = 0;
    Rat degree_;
};

// A(E) = 1 - (coefficient of E in the boundary). For Boundary(i) this is
// 1 - m_i c_i; an external divisor is not in the support, so A = 1.
AffineForm log_discrepancy_form(const PairFamily& family, const DivisorRef& divisor);

// S(E) = s(c) / (d (n+1)) with d the prime degree of E: the normalized
// integral of vol(-K - Delta - tE) collapses to this closed form because the
// volume profile is C (s - td)^n on [0, s/d].
AffineForm s_invariant_form(const PairFamily& family, const DivisorRef& divisor);

// beta(E) = A(E) - S(E).
AffineForm beta_form(const PairFamily& family, const DivisorRef& divisor);

// Composite Simpson quadrature of the defining integral of S over the exact
// support interval [0, s/d], with `subdivisions` panels (>= 2). This is the
// independent numeric cross-check of the closed form; level 0 yields 0.
double s_invariant_numeric(const PairFamily& family, const CoefficientPoint& point,
                           const DivisorRef& divisor, int subdivisions);

// Pseudo-effective threshold tau(E; -K - Delta) = s(c) / d. Errors when
// s(c) < 0.
Rat pseudo_effective_threshold(const PairFamily& family, const CoefficientPoint& point,
                               const DivisorRef& divisor);

// Dimension-only constants for log Fano pairs of Maeda type: the
// pseudo-effective threshold lower bound a_d = 1/(d+1) and the coefficient
// gap eps_d = a_d / (2(d+1)) = 1/(2(d+1)^2).
struct GapConstants {
    Rat threshold_bound;   // a_d
    Rat coefficient_gap;   // eps_d
};
GapConstants maeda_gap_constants(int d);

// Minimum of sum_i c_i over a non-empty domain polytope (attained at a
// vertex).
Rat mu_value(const Polytope& domain);

}  // namespace kstab
