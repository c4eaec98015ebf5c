#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "kstab/domain.hpp"

namespace kstab {

// Known K-semistability facts the certificates rest on. They are quoted
// results, not recomputed; every verdict lists the ones it uses.
enum class Axiom {
    KssProjectiveSpace,    // P^n is K-semistable
    KssSmoothQuadric,      // smooth quadrics are K-semistable
    KssSmoothHypersurface  // smooth hypersurfaces of degree >= 3 (expected)
};

std::string axiom_name(Axiom axiom);

enum class CertificateKind {
    KnownInterval,      // single-divisor pair inside a known K-semistable interval
    LcCalabiYau,        // log Calabi-Yau level with log canonical coefficients
    ConeReduction,      // projective cone over a K-semistable polarized base
    ConvexCombination,  // interpolation between certified anchors
    AxiomBareFano       // the bare ambient itself
};

std::string certificate_kind_name(CertificateKind kind);

struct KnownIntervalData {
    std::size_t divisor_index;    // boundary entry whose axis carries the anchor
    Rat prime_coefficient_bound;  // admissible upper bound for m_i c_i
};

struct LcCalabiYauData {};

struct ConeReductionData {
    int base_quadric_dim;        // l = n - 1, the cone base Q_l
    Rat base_section_degree;     // degree of the base boundary section (1 or 2)
    Rat base_prime_coefficient;  // its coefficient on the base
    Rat polarization_degree;     // degree m of the polarization on the base
    Rat r;                       // -(1/r)(K + Delta) ~ polarization
    Rat infinity_coefficient;    // 1 - r/(dim base + 1)
    std::size_t cone_divisor_index;  // family entry degenerating to the cone
    std::size_t base_divisor_index;  // family entry extending the base boundary
};

struct ConvexCombinationData {
    std::vector<Rat> weights;             // nonnegative, summing to 1
    std::vector<CoefficientPoint> points; // each must match another non-combination anchor
};

struct AxiomBareFanoData {};

struct Certificate {
    CertificateKind kind;
    std::variant<KnownIntervalData, LcCalabiYauData, ConeReductionData, ConvexCombinationData,
                 AxiomBareFanoData>
        data;
    std::vector<Axiom> axioms;
};

// A coefficient point with a machine-checkable K-semistability certificate.
struct Anchor {
    CoefficientPoint point;
    Certificate certificate;
};

enum class VerdictStatus { Determined, Gap };

// Result of comparing the certified region against the necessary one.
// certified is always contained in necessary; Determined means they agree,
// so the necessary polytope is exactly the K-semistable domain (granted the
// listed axioms).
struct Verdict {
    VerdictStatus status;
    Polytope necessary;
    Polytope certified;
    std::vector<Anchor> anchors;
    std::vector<Axiom> axioms;
};

// Upper endpoint 1 - r/n, r = 1/lambda - 1, of the K-semistable interval of
// (V, aS) for an n-dimensional K-semistable V with K-semistable S ~ -lambda K.
// Requires 0 < lambda < 1.
Rat zz_upper_bound(int n, const Rat& lambda);

// The three quadric interval bounds:
//   1: (P^n, aQ) for a in [0, (n+1)/(2n)], n >= 2
//   2: (Q_l, a * hyperplane section) for a in [0, 1/l], l >= 2
//   3: (Q_l, a * quadric section) for a in [0, ((l+1)+3)/(2(l+1))], l >= 2
Rat quadric_fact_interval(int which, int n_or_l);

struct ConeData {
    Rat r;
    Rat infinity_coefficient;
};

// Projective cone over the polarized base pair: the polarization has degree
// m in base units, r = s_base / m must satisfy 0 < r <= dim(base) + 1, and
// the infinity divisor carries coefficient 1 - r/(dim(base)+1).
ConeData cone_reduction(const PairFamily& base, const CoefficientPoint& base_point,
                        const Rat& polarization_degree);

// Checks the cone construction behind the two product theorems:
//   one: (P^n, n/(2(n-1)) Q + 1/(n-1) L) is K-semistable, n >= 2;
//   two: (P^n, (n+1)/(2(n-1)) (Q + Q')) is K-semistable, n >= 3.
// n = 2 (resp. n = 3) degenerates to the log Calabi-Yau case and is checked
// as such; otherwise the stated r, infinity coefficient, and base interval
// membership are all verified exactly.
bool verify_cone_theorem_one(int n);
bool verify_cone_theorem_two(int n);
bool verify_cone_theorems(int n);

// For a coefficient point at level 0: true iff every prime coefficient
// m_i c_i is <= 1, i.e. the log smooth Calabi-Yau pair is log canonical.
// Errors when the level is nonzero.
bool lc_calabi_yau_anchor(const PairFamily& family, const CoefficientPoint& point);

// Re-checks one anchor's certificate from its payload alone. Convex
// combinations may reference earlier anchors in `anchors`.
bool revalidate(const PairFamily& family, const std::vector<Anchor>& anchors,
                std::size_t index);

// Builds the necessary region, auto-generates anchors (bare ambient, known
// axis intervals, log canonical Calabi-Yau vertices, cone-theorem points),
// folds in the caller's extra anchors after revalidating them, hulls
// everything, and compares against the necessary region.
Verdict certify_domain(const PairFamily& family, const std::vector<Anchor>& extra_anchors = {});

}  // namespace kstab
