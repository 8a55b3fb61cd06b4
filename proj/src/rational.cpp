#include "gfc/rational.hpp"

#include <stdexcept>

namespace gfc {

std::string to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_fraction(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

bool is_zero_vector(const RationalVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

void normalize_leading(RationalVector& v) {
    for (const auto& x : v) {
        if (x != 0) {
            const Rational lead = x;
            for (auto& y : v) y /= lead;
            return;
        }
    }
}

}  // namespace gfc
