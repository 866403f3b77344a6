#include "a2w/rat.hpp"

#include "a2w/errors.hpp"

#include <cctype>

namespace a2w {

std::string rat_to_string(const Rat& r) {
    return r.str();
}

Rat make_rat(Int num, Int den) {
    if (den == 0) throw InvalidParameter("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den);
}

Rat parse_rat(std::string_view text) {
    auto fail = [&](const char* why) -> Rat {
        throw ParseError("bad rational '" + std::string(text) + "': " + why);
    };
    std::size_t i = 0;
    const std::size_t n = text.size();
    if (n == 0) return fail("empty");
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    std::size_t num_begin = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) return fail("missing numerator digits");
    Int num(std::string(text.substr(num_begin, i - num_begin)));
    if (negative) num = -num;
    Int den = 1;
    if (i < n) {
        if (text[i] != '/') return fail("unexpected character");
        ++i;
        std::size_t den_begin = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_begin) return fail("missing denominator digits");
        if (i != n) return fail("trailing characters");
        den = Int(std::string(text.substr(den_begin, i - den_begin)));
        if (den == 0) return fail("zero denominator");
    }
    return Rat(num, den);
}

}  // namespace a2w
