#include "kstab/model.hpp"

#include <unordered_set>

#include "kstab/errors.hpp"

namespace kstab {

AmbientModel make_projective_space(int n) {
    if (n < 1) throw contract_violation("projective space requires dim >= 1");
    return AmbientModel{AmbientKind::ProjectiveSpace, n, Rat(1), Rat(n + 1)};
}

AmbientModel make_quadric(int l) {
    if (l < 2) throw contract_violation("smooth quadric model requires dim >= 2");
    return AmbientModel{AmbientKind::Quadric, l, Rat(2), Rat(l)};
}

PairFamily make_pair_family(AmbientModel ambient, std::vector<BoundaryEntry> boundary) {
    std::unordered_set<std::string> labels;
    for (const auto& entry : boundary) {
        if (entry.prime_degree <= 0) throw contract_violation("prime degree must be positive");
        if (entry.multiplier <= 0) throw contract_violation("multiplier must be positive");
        if (!labels.insert(entry.label).second)
            throw contract_violation("duplicate boundary label '" + entry.label + "'");
    }
    return PairFamily{std::move(ambient), std::move(boundary)};
}

AffineForm level_form(const PairFamily& family) {
    std::vector<Rat> coeffs;
    coeffs.reserve(family.boundary.size());
    for (const auto& entry : family.boundary) coeffs.push_back(-entry.effective_degree());
    return AffineForm(family.ambient.anticanonical_level, std::move(coeffs));
}

Rat level(const PairFamily& family, const CoefficientPoint& point) {
    return level_form(family)(point);
}

Rat volume(const PairFamily& family, const CoefficientPoint& point) {
    Rat s = level(family, point);
    if (s < 0)
        throw contract_violation("class is not pseudo-effective: level " + to_string(s));
    Rat power(1);
    for (int i = 0; i < family.ambient.dim; ++i) power *= s;
    return family.ambient.volume_multiplier * power;
}

}  // namespace kstab
