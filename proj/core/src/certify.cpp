#include "kstab/certify.hpp"

#include <algorithm>
#include <optional>

#include "kstab/errors.hpp"

namespace kstab {

namespace {

Axiom ambient_axiom(AmbientKind kind) {
    return kind == AmbientKind::ProjectiveSpace ? Axiom::KssProjectiveSpace
                                                : Axiom::KssSmoothQuadric;
}

bool is_integer(const Rat& value) { return denominator(value) == 1; }

struct KnownBound {
    Rat prime_coefficient_bound;
    std::vector<Axiom> axioms;
};

// The largest prime coefficient known to be K-semistable on the axis of
// boundary entry `index`, when the single-divisor pair matches a quoted
// interval result. Unmatched shapes yield nothing.
std::optional<KnownBound> known_axis_bound(const PairFamily& family, std::size_t index) {
    const Rat& d = family.boundary[index].prime_degree;
    const int n = family.ambient.dim;
    if (!is_integer(d) || d < 1) return std::nullopt;

    if (family.ambient.kind == AmbientKind::ProjectiveSpace) {
        if (d > n) return std::nullopt;
        Rat lambda = d / Rat(n + 1);
        if (lambda >= 1) return std::nullopt;
        KnownBound bound{zz_upper_bound(n, lambda), {Axiom::KssProjectiveSpace}};
        if (d == 2) bound.axioms.push_back(Axiom::KssSmoothQuadric);
        if (d >= 3) bound.axioms.push_back(Axiom::KssSmoothHypersurface);
        return bound;
    }

    // Quadric ambient of dimension l = n.
    if (d == 1) return KnownBound{quadric_fact_interval(2, n), {Axiom::KssSmoothQuadric}};
    if (d == 2)
        return KnownBound{quadric_fact_interval(3, n),
                          {Axiom::KssSmoothQuadric, Axiom::KssSmoothHypersurface}};
    return std::nullopt;
}

CoefficientPoint axis_point(std::size_t index, const Rat& value, std::size_t k) {
    CoefficientPoint point(k, Rat(0));
    point[index] = value;
    return point;
}

// Largest t >= 0 with t * e_index inside every half-space, capped at t_max.
// Returns nothing when even t = 0 is infeasible.
std::optional<Rat> clip_along_axis(const std::vector<HalfSpace>& halfspaces, std::size_t index,
                                   Rat t_max) {
    Rat t = std::move(t_max);
    for (const auto& hs : halfspaces) {
        const Rat& slope = hs.form.coeffs[index];
        const Rat& offset = hs.form.constant;
        if (slope == 0) {
            if (offset < 0) return std::nullopt;
        } else if (slope < 0) {
            t = std::min(t, Rat(offset / -slope));
        }
    }
    if (t < 0) return std::nullopt;
    return t;
}

void merge_axioms(std::vector<Axiom>& into, const std::vector<Axiom>& from) {
    for (Axiom a : from)
        if (std::find(into.begin(), into.end(), a) == into.end()) into.push_back(a);
}

// The (P^n, Q + L) and (P^n, Q + Q') theorem points, expressed in family
// coordinates (prime coefficient divided by the entry multiplier).
void append_cone_anchors(const PairFamily& family, const Polytope& necessary,
                         std::vector<Anchor>& anchors) {
    if (family.ambient.kind != AmbientKind::ProjectiveSpace) return;
    if (family.coefficient_count() != 2) return;
    const int n = family.ambient.dim;
    const Rat& d0 = family.boundary[0].prime_degree;
    const Rat& d1 = family.boundary[1].prime_degree;

    const auto try_add = [&](std::size_t cone_idx, std::size_t base_idx,
                             const Rat& cone_prime_coeff, const Rat& base_prime_coeff,
                             const Rat& base_section_degree, std::vector<Axiom> axioms) {
        PairFamily base = make_pair_family(
            make_quadric(n - 1), {BoundaryEntry{"section", base_section_degree, Rat(1)}});
        ConeData cone = cone_reduction(base, {base_prime_coeff}, Rat(2));
        if (cone.infinity_coefficient != cone_prime_coeff) return;

        CoefficientPoint point(2, Rat(0));
        point[cone_idx] = cone_prime_coeff / family.boundary[cone_idx].multiplier;
        point[base_idx] = base_prime_coeff / family.boundary[base_idx].multiplier;
        if (!contains(necessary, point)) return;

        Certificate cert;
        cert.kind = CertificateKind::ConeReduction;
        cert.data = ConeReductionData{n - 1,
                                      base_section_degree,
                                      base_prime_coeff,
                                      Rat(2),
                                      cone.r,
                                      cone.infinity_coefficient,
                                      cone_idx,
                                      base_idx};
        cert.axioms = std::move(axioms);
        anchors.push_back(Anchor{std::move(point), std::move(cert)});
    };

    if (n >= 3 && verify_cone_theorem_one(n)) {
        // Quadric-plus-hyperplane shape; the degree-2 prime degenerates to
        // the cone, the hyperplane extends the base boundary.
        if (d0 == 2 && d1 == 1)
            try_add(0, 1, Rat(n, 2 * (n - 1)), Rat(1, n - 1), Rat(1),
                    {Axiom::KssProjectiveSpace, Axiom::KssSmoothQuadric});
        else if (d0 == 1 && d1 == 2)
            try_add(1, 0, Rat(n, 2 * (n - 1)), Rat(1, n - 1), Rat(1),
                    {Axiom::KssProjectiveSpace, Axiom::KssSmoothQuadric});
    }
    if (n >= 4 && d0 == 2 && d1 == 2 && verify_cone_theorem_two(n)) {
        Rat coeff(n + 1, 2 * (n - 1));
        try_add(0, 1, coeff, coeff, Rat(2),
                {Axiom::KssProjectiveSpace, Axiom::KssSmoothQuadric,
                 Axiom::KssSmoothHypersurface});
    }
}

}  // namespace

std::string axiom_name(Axiom axiom) {
    switch (axiom) {
        case Axiom::KssProjectiveSpace: return "kss_projective_space";
        case Axiom::KssSmoothQuadric: return "kss_smooth_quadric";
        case Axiom::KssSmoothHypersurface: return "kss_smooth_hypersurface";
    }
    throw contract_violation("unknown axiom");
}

std::string certificate_kind_name(CertificateKind kind) {
    switch (kind) {
        case CertificateKind::KnownInterval: return "known_interval";
        case CertificateKind::LcCalabiYau: return "lc_calabi_yau";
        case CertificateKind::ConeReduction: return "cone_reduction";
        case CertificateKind::ConvexCombination: return "convex_combination";
        case CertificateKind::AxiomBareFano: return "axiom_bare_fano";
    }
    throw contract_violation("unknown certificate kind");
}

Rat zz_upper_bound(int n, const Rat& lambda) {
    if (n < 1) throw contract_violation("dimension must be positive");
    if (lambda <= 0 || lambda >= 1)
        throw contract_violation("lambda must lie strictly between 0 and 1");
    Rat r = Rat(1) / lambda - 1;
    return Rat(1) - r / Rat(n);
}

Rat quadric_fact_interval(int which, int n_or_l) {
    switch (which) {
        case 1:
            if (n_or_l < 2) throw contract_violation("fact 1 needs n >= 2");
            return Rat(n_or_l + 1, 2 * n_or_l);
        case 2:
            if (n_or_l < 2) throw contract_violation("fact 2 needs l >= 2");
            return Rat(1, n_or_l);
        case 3:
            if (n_or_l < 2) throw contract_violation("fact 3 needs l >= 2");
            return Rat((n_or_l + 1) + 3, 2 * (n_or_l + 1));
        default:
            throw contract_violation("fact index must be 1, 2 or 3");
    }
}

ConeData cone_reduction(const PairFamily& base, const CoefficientPoint& base_point,
                        const Rat& polarization_degree) {
    if (polarization_degree <= 0)
        throw contract_violation("polarization degree must be positive");
    Rat s = level(base, base_point);
    if (s <= 0) throw contract_violation("cone base must be log Fano (level > 0)");
    Rat r = s / polarization_degree;
    Rat bound(base.ambient.dim + 1);
    if (r > bound)
        throw contract_violation("cone parameter r exceeds dim + 1: " + to_string(r));
    return ConeData{r, Rat(1) - r / bound};
}

bool verify_cone_theorem_one(int n) {
    if (n < 2) throw contract_violation("theorem one needs n >= 2");
    if (n == 2) {
        // Degenerate case: the pair (P^2, Q + L) at full coefficients is log
        // Calabi-Yau with log canonical boundary.
        PairFamily family = make_pair_family(
            make_projective_space(2),
            {BoundaryEntry{"Q", Rat(2), Rat(1)}, BoundaryEntry{"L", Rat(1), Rat(1)}});
        CoefficientPoint point{Rat(1), Rat(1)};
        return level(family, point) == 0 && lc_calabi_yau_anchor(family, point);
    }
    PairFamily base =
        make_pair_family(make_quadric(n - 1), {BoundaryEntry{"section", Rat(1), Rat(1)}});
    CoefficientPoint base_point{Rat(1, n - 1)};
    ConeData cone = cone_reduction(base, base_point, Rat(2));
    Rat expected_r = (Rat(n - 1) - Rat(1, n - 1)) / 2;
    return cone.r == expected_r && cone.infinity_coefficient == Rat(n, 2 * (n - 1)) &&
           base_point[0] <= quadric_fact_interval(2, n - 1);
}

bool verify_cone_theorem_two(int n) {
    if (n < 3) throw contract_violation("theorem two needs n >= 3");
    if (n == 3) {
        PairFamily family = make_pair_family(
            make_projective_space(3),
            {BoundaryEntry{"Q", Rat(2), Rat(1)}, BoundaryEntry{"Q'", Rat(2), Rat(1)}});
        CoefficientPoint point{Rat(1), Rat(1)};
        return level(family, point) == 0 && lc_calabi_yau_anchor(family, point);
    }
    PairFamily base =
        make_pair_family(make_quadric(n - 1), {BoundaryEntry{"section", Rat(2), Rat(1)}});
    CoefficientPoint base_point{Rat(n + 1, 2 * (n - 1))};
    ConeData cone = cone_reduction(base, base_point, Rat(2));
    Rat expected_r = (Rat(n - 1) - Rat(n + 1, n - 1)) / 2;
    return cone.r == expected_r && cone.infinity_coefficient == Rat(n + 1, 2 * (n - 1)) &&
           base_point[0] <= quadric_fact_interval(3, n - 1);
}

bool verify_cone_theorems(int n) {
    if (n < 2) throw contract_violation("cone theorems need n >= 2");
    bool ok = verify_cone_theorem_one(n);
    if (n >= 3) ok = ok && verify_cone_theorem_two(n);
    return ok;
}

bool lc_calabi_yau_anchor(const PairFamily& family, const CoefficientPoint& point) {
    if (level(family, point) != 0)
        throw contract_violation("log Calabi-Yau check requires level 0");
    for (std::size_t i = 0; i < family.boundary.size(); ++i)
        if (family.boundary[i].multiplier * point[i] > 1) return false;
    return true;
}

bool revalidate(const PairFamily& family, const std::vector<Anchor>& anchors,
                std::size_t index) {
    if (index >= anchors.size()) return false;
    const Anchor& anchor = anchors[index];
    const std::size_t k = family.coefficient_count();
    if (anchor.point.size() != k) return false;

    try {
        switch (anchor.certificate.kind) {
            case CertificateKind::AxiomBareFano: {
                for (const auto& c : anchor.point)
                    if (c != 0) return false;
                const auto& axioms = anchor.certificate.axioms;
                return std::find(axioms.begin(), axioms.end(),
                                 ambient_axiom(family.ambient.kind)) != axioms.end();
            }
            case CertificateKind::KnownInterval: {
                const auto& data = std::get<KnownIntervalData>(anchor.certificate.data);
                if (data.divisor_index >= k) return false;
                for (std::size_t i = 0; i < k; ++i)
                    if (i != data.divisor_index && anchor.point[i] != 0) return false;
                const Rat& c = anchor.point[data.divisor_index];
                if (c < 0) return false;
                auto known = known_axis_bound(family, data.divisor_index);
                if (!known || known->prime_coefficient_bound != data.prime_coefficient_bound)
                    return false;
                return family.boundary[data.divisor_index].multiplier * c <=
                       data.prime_coefficient_bound;
            }
            case CertificateKind::LcCalabiYau:
                return level(family, anchor.point) == 0 &&
                       lc_calabi_yau_anchor(family, anchor.point);
            case CertificateKind::ConeReduction: {
                const auto& data = std::get<ConeReductionData>(anchor.certificate.data);
                if (family.ambient.kind != AmbientKind::ProjectiveSpace) return false;
                if (data.base_quadric_dim + 1 != family.ambient.dim) return false;
                if (data.cone_divisor_index >= k || data.base_divisor_index >= k ||
                    data.cone_divisor_index == data.base_divisor_index)
                    return false;
                PairFamily base = make_pair_family(
                    make_quadric(data.base_quadric_dim),
                    {BoundaryEntry{"section", data.base_section_degree, Rat(1)}});
                ConeData cone =
                    cone_reduction(base, {data.base_prime_coefficient}, data.polarization_degree);
                if (cone.r != data.r || cone.infinity_coefficient != data.infinity_coefficient)
                    return false;
                Rat fact_bound;
                if (data.base_section_degree == 1)
                    fact_bound = quadric_fact_interval(2, data.base_quadric_dim);
                else if (data.base_section_degree == 2)
                    fact_bound = quadric_fact_interval(3, data.base_quadric_dim);
                else
                    return false;
                if (data.base_prime_coefficient > fact_bound) return false;
                // The anchor's coordinates must carry exactly the cone
                // coefficients.
                for (std::size_t i = 0; i < k; ++i) {
                    Rat prime_coeff = family.boundary[i].multiplier * anchor.point[i];
                    if (i == data.cone_divisor_index) {
                        if (prime_coeff != data.infinity_coefficient) return false;
                    } else if (i == data.base_divisor_index) {
                        if (prime_coeff != data.base_prime_coefficient) return false;
                    } else if (anchor.point[i] != 0) {
                        return false;
                    }
                }
                return true;
            }
            case CertificateKind::ConvexCombination: {
                const auto& data = std::get<ConvexCombinationData>(anchor.certificate.data);
                if (data.points.size() != data.weights.size() || data.weights.empty())
                    return false;
                Rat total(0);
                CoefficientPoint combo(k, Rat(0));
                for (std::size_t j = 0; j < data.weights.size(); ++j) {
                    if (data.weights[j] < 0) return false;
                    const auto& ref = data.points[j];
                    if (ref.size() != k) return false;
                    // The referenced point must itself be anchored by a
                    // non-combination certificate elsewhere in the list.
                    bool backed = false;
                    for (std::size_t other = 0; other < anchors.size() && !backed; ++other) {
                        if (other == index) continue;
                        backed = anchors[other].certificate.kind !=
                                     CertificateKind::ConvexCombination &&
                                 anchors[other].point == ref;
                    }
                    if (!backed) return false;
                    total += data.weights[j];
                    for (std::size_t i = 0; i < k; ++i) combo[i] += data.weights[j] * ref[i];
                }
                return total == 1 && combo == anchor.point;
            }
        }
    } catch (const contract_violation&) {
        return false;
    } catch (const std::bad_variant_access&) {
        return false;
    }
    return false;
}

Verdict certify_domain(const PairFamily& family, const std::vector<Anchor>& extra_anchors) {
    const std::size_t k = family.coefficient_count();

    Verdict verdict;
    if (k == 0) {
        // Bare ambient: the coefficient space is a single point.
        verdict.necessary.dim_ambient = 0;
        verdict.necessary.vertices = {CoefficientPoint{}};
        Certificate cert{CertificateKind::AxiomBareFano, AxiomBareFanoData{},
                         {ambient_axiom(family.ambient.kind)}};
        verdict.anchors.push_back(Anchor{CoefficientPoint{}, cert});
        verdict.certified = verdict.necessary;
        verdict.status = VerdictStatus::Determined;
        verdict.axioms = cert.axioms;
        return verdict;
    }

    verdict.necessary = necessary_region(family);
    std::vector<Anchor>& anchors = verdict.anchors;

    if (!verdict.necessary.is_empty()) {
        CoefficientPoint origin(k, Rat(0));
        if (contains(verdict.necessary, origin)) {
            Certificate cert{CertificateKind::AxiomBareFano, AxiomBareFanoData{},
                             {ambient_axiom(family.ambient.kind)}};
            anchors.push_back(Anchor{std::move(origin), std::move(cert)});
        }

        for (std::size_t i = 0; i < k; ++i) {
            auto known = known_axis_bound(family, i);
            if (!known) continue;
            Rat t_max = known->prime_coefficient_bound / family.boundary[i].multiplier;
            auto t = clip_along_axis(verdict.necessary.hrep, i, std::move(t_max));
            if (!t || *t == 0) continue;
            Certificate cert{CertificateKind::KnownInterval,
                             KnownIntervalData{i, known->prime_coefficient_bound},
                             known->axioms};
            anchors.push_back(Anchor{axis_point(i, *t, k), std::move(cert)});
        }

        for (const auto& vertex : verdict.necessary.vertices) {
            if (level(family, vertex) != 0) continue;
            if (!lc_calabi_yau_anchor(family, vertex)) continue;
            Certificate cert{CertificateKind::LcCalabiYau, LcCalabiYauData{}, {}};
            anchors.push_back(Anchor{vertex, std::move(cert)});
        }

        append_cone_anchors(family, verdict.necessary, anchors);
    }

    for (const auto& extra : extra_anchors) anchors.push_back(extra);

    std::vector<CoefficientPoint> points;
    for (std::size_t idx = 0; idx < anchors.size(); ++idx) {
        if (!revalidate(family, anchors, idx))
            throw contract_violation("anchor certificate failed revalidation");
        if (!contains(verdict.necessary, anchors[idx].point))
            throw contract_violation("anchor lies outside the necessary region");
        points.push_back(anchors[idx].point);
        merge_axioms(verdict.axioms, anchors[idx].certificate.axioms);
    }
    std::sort(verdict.axioms.begin(), verdict.axioms.end());

    verdict.certified = convex_hull(points, k);
    verdict.status = equal(verdict.certified, verdict.necessary) ? VerdictStatus::Determined
                                                                 : VerdictStatus::Gap;
    return verdict;
}

}  // namespace kstab
