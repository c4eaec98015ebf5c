#include "kstab/affine.hpp"

#include "kstab/errors.hpp"

namespace kstab {

namespace {

void require_same_arity(const AffineForm& a, const AffineForm& b) {
    if (a.arity() != b.arity())
        throw contract_violation("affine form arity mismatch");
}

}  // namespace

Rat AffineForm::operator()(const CoefficientPoint& point) const {
    if (point.size() != coeffs.size())
        throw contract_violation("point dimension does not match form arity");
    Rat value = constant;
    for (std::size_t i = 0; i < coeffs.size(); ++i) value += coeffs[i] * point[i];
    return value;
}

AffineForm operator+(const AffineForm& a, const AffineForm& b) {
    require_same_arity(a, b);
    AffineForm out = a;
    out.constant += b.constant;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
    return out;
}

AffineForm operator-(const AffineForm& a, const AffineForm& b) {
    require_same_arity(a, b);
    AffineForm out = a;
    out.constant -= b.constant;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
    return out;
}

AffineForm operator*(const Rat& scale, const AffineForm& form) {
    AffineForm out = form;
    out.constant *= scale;
    for (auto& c : out.coeffs) c *= scale;
    return out;
}

bool is_zero(const AffineForm& form) {
    if (form.constant != 0) return false;
    for (const auto& c : form.coeffs)
        if (c != 0) return false;
    return true;
}

AffineForm constant_form(Rat value, std::size_t arity) {
    return AffineForm(std::move(value), std::vector<Rat>(arity, Rat(0)));
}

AffineForm coordinate_form(std::size_t index, std::size_t arity) {
    if (index >= arity) throw contract_violation("coordinate index out of range");
    std::vector<Rat> coeffs(arity, Rat(0));
    coeffs[index] = 1;
    return AffineForm(Rat(0), std::move(coeffs));
}

}  // namespace kstab
