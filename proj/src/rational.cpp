#include "shadowlab/rational.hpp"

#include <limits>
#include <stdexcept>

namespace shadowlab {

std::string to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const Integer& x) { return x.get_str(); }

static Integer parse_integer(std::string_view s) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw std::invalid_argument("empty integer");
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("bad integer '" + std::string(s) + "'");
    std::string str(s[0] == '+' ? s.substr(1) : s);
    return Integer(str, 10);
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

std::int64_t to_int64(const Integer& x) {
    if (!x.fits_slong_p()) throw std::domain_error("integer overflows int64: " + x.get_str());
    return static_cast<std::int64_t>(x.get_si());
}

std::int64_t to_int64(const Rational& x) {
    if (!is_integer(x)) throw std::domain_error("not an integer: " + to_string(x));
    return to_int64(x.get_num());
}

Rational pow2(long e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

}  // namespace shadowlab
