#include "gfn/rational.hpp"

#include "gfn/errors.hpp"

#include <cctype>

namespace gfn {

Rational parse_rational(const std::string& text) {
    if (text.empty())
        throw ParseError("empty rational literal");
    for (char c : text) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw ParseError("invalid rational literal '" + text + "'");
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw ParseError("invalid rational literal '" + text + "'");
    if (q.get_den() == 0)
        throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

long floor_long(const Rational& q) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    if (!fl.fits_slong_p())
        throw Error("rational floor out of range: " + q.get_str());
    return fl.get_si();
}

bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

Rational pow_rational(const Rational& base, int exponent) {
    if (exponent == 0)
        return Rational(1);
    mpz_class num, den;
    const unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
    if (exponent < 0) {
        if (num == 0)
            throw Error("zero base raised to a negative power");
        std::swap(num, den);
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

} // namespace gfn
