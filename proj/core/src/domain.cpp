#include "kstab/domain.hpp"

#include "kstab/errors.hpp"

namespace kstab {

Polytope necessary_region(const PairFamily& family) {
    const std::size_t k = family.coefficient_count();
    if (k == 0) throw contract_violation("necessary region needs at least one boundary entry");

    std::vector<HalfSpace> rows;
    for (std::size_t i = 0; i < k; ++i) rows.push_back(HalfSpace{coordinate_form(i, k)});
    for (std::size_t i = 0; i < k; ++i)
        rows.push_back(HalfSpace{constant_form(Rat(1), k) - coordinate_form(i, k)});
    rows.push_back(HalfSpace{level_form(family)});
    for (std::size_t i = 0; i < k; ++i)
        rows.push_back(HalfSpace{beta_form(family, DivisorRef::boundary(i))});

    return polytope_from_halfspaces(std::move(rows), k);
}

}  // namespace kstab
