#include "kstab/invariants.hpp"

#include <cmath>

#include "kstab/errors.hpp"

namespace kstab {

DivisorRef DivisorRef::boundary(std::size_t index) {
    DivisorRef ref;
    ref.is_boundary_ = true;
    ref.index_ = index;
    return ref;
}

DivisorRef DivisorRef::external(Rat degree) {
    if (degree <= 0) throw contract_violation("external divisor degree must be positive");
    DivisorRef ref;
    ref.is_boundary_ = false;
    ref.degree_ = std::move(degree);
    return ref;
}

std::size_t DivisorRef::boundary_index() const {
    if (!is_boundary_) throw contract_violation("divisor is not a boundary reference");
    return index_;
}

const Rat& DivisorRef::external_degree() const {
    if (is_boundary_) throw contract_violation("divisor is not an external reference");
    return degree_;
}

Rat DivisorRef::prime_degree(const PairFamily& family) const {
    if (!is_boundary_) return degree_;
    if (index_ >= family.boundary.size())
        throw contract_violation("boundary divisor index out of range");
    return family.boundary[index_].prime_degree;
}

AffineForm log_discrepancy_form(const PairFamily& family, const DivisorRef& divisor) {
    const std::size_t k = family.coefficient_count();
    AffineForm form = constant_form(Rat(1), k);
    if (divisor.is_boundary()) {
        std::size_t i = divisor.boundary_index();
        if (i >= k) throw contract_violation("boundary divisor index out of range");
        form.coeffs[i] = -family.boundary[i].multiplier;
    }
    return form;
}

AffineForm s_invariant_form(const PairFamily& family, const DivisorRef& divisor) {
    Rat d = divisor.prime_degree(family);
    Rat scale = Rat(1) / (d * Rat(family.ambient.dim + 1));
    return scale * level_form(family);
}

AffineForm beta_form(const PairFamily& family, const DivisorRef& divisor) {
    return log_discrepancy_form(family, divisor) - s_invariant_form(family, divisor);
}

double s_invariant_numeric(const PairFamily& family, const CoefficientPoint& point,
                           const DivisorRef& divisor, int subdivisions) {
    if (subdivisions < 2) throw contract_violation("quadrature needs at least 2 subdivisions");
    Rat s = level(family, point);
    if (s < 0) throw contract_violation("level is negative: " + to_string(s));
    if (s == 0) return 0.0;

    const double s_d = to_double(s);
    const double d = to_double(divisor.prime_degree(family));
    const int n = family.ambient.dim;
    const double tau = s_d / d;
    const auto integrand = [&](double t) { return std::pow(s_d - t * d, n); };

    // Composite Simpson with `subdivisions` panels of three nodes each. The
    // volume multiplier C cancels against the normalizer.
    const double h = tau / subdivisions;
    double integral = 0.0;
    for (int j = 0; j < subdivisions; ++j) {
        double a = j * h;
        integral += (h / 6.0) * (integrand(a) + 4.0 * integrand(a + h / 2.0) + integrand(a + h));
    }
    return integral / std::pow(s_d, n);
}

Rat pseudo_effective_threshold(const PairFamily& family, const CoefficientPoint& point,
                               const DivisorRef& divisor) {
    Rat s = level(family, point);
    if (s < 0) throw contract_violation("level is negative: " + to_string(s));
    return s / divisor.prime_degree(family);
}

GapConstants maeda_gap_constants(int d) {
    if (d < 1) throw contract_violation("dimension must be positive");
    Rat a = Rat(1, d + 1);
    return GapConstants{a, a / Rat(2 * (d + 1))};
}

Rat mu_value(const Polytope& domain) {
    if (domain.is_empty()) throw contract_violation("mu over empty domain");
    AffineForm objective = constant_form(Rat(0), domain.dim_ambient);
    for (auto& c : objective.coeffs) c = 1;
    return linear_min(domain, objective);
}

}  // namespace kstab
