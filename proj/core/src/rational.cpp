#include "kstab/rational.hpp"

#include <cctype>

#include "kstab/errors.hpp"

namespace kstab {

Rat parse_rational(const std::string& text) {
    std::size_t pos = 0;
    const auto fail = [&text]() -> Rat {
        throw invalid_input("not an exact rational: '" + text + "'");
    };

    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    std::size_t digits_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits_begin) return fail();

    Int num(text.substr(0, pos));
    if (pos == text.size()) return Rat(num);

    if (text[pos] != '/') return fail();
    ++pos;
    std::size_t den_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_begin || pos != text.size()) return fail();

    Int den(text.substr(den_begin));
    if (den == 0) throw invalid_input("zero denominator: '" + text + "'");
    return Rat(num, den);
}

std::string to_string(const Rat& value) {
    return value.str();
}

double to_double(const Rat& value) {
    return static_cast<double>(value);
}

}  // namespace kstab
