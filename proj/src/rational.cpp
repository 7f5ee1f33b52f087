#include "qkp/rational.hpp"

#include <cctype>
#include <ostream>

namespace qkp {

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty input");
    if (text.find('.') != std::string::npos)
        throw std::invalid_argument(
            "Rational: decimal input '" + text + "' rejected; use exact rational form p/r (e.g. 3/2)");
    std::size_t slash = text.find('/');
    auto check_int = [&](const std::string& s) {
        if (s.empty()) throw std::invalid_argument("Rational: malformed input '" + text + "'");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("Rational: malformed input '" + text + "'");
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw std::invalid_argument("Rational: malformed input '" + text + "'");
    };
    if (slash == std::string::npos) {
        check_int(text);
        return Rational(mpq_class(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    check_int(num);
    check_int(den);
    if (mpz_class(den) == 0) throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
    return Rational(mpq_class(num + "/" + den));
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw std::domain_error("Rational: negative power of zero");
        return Rational(0);
    }
    mpq_class base = e < 0 ? mpq_class(1 / v_) : v_;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), n);
    mpq_class out(num);
    out /= mpq_class(den);
    return Rational(out);
}

Rational Rational::sqrt_exact() const {
    if (sign() < 0) throw std::domain_error("Rational: square root of negative value");
    mpz_class num = v_.get_num(), den = v_.get_den();
    mpz_class rn, rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), 2) == 0 && num != rn * rn)
        throw std::domain_error("Rational: " + str() + " is not a perfect square");
    if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 2) == 0 && den != rd * rd)
        throw std::domain_error("Rational: " + str() + " is not a perfect square");
    if (rn * rn != num || rd * rd != den)
        throw std::domain_error("Rational: " + str() + " is not a perfect square");
    return Rational(mpq_class(rn) / mpq_class(rd));
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational binom_generalized(long n, long k) {
    if (k < 0) throw std::invalid_argument("binom_generalized: negative k");
    Rational out(1);
    for (long i = 0; i < k; ++i) out *= Rational(n - i, i + 1);
    return out;
}

Rational factorial(long k) {
    if (k < 0) throw std::invalid_argument("factorial: negative argument");
    Rational out(1);
    for (long i = 2; i <= k; ++i) out *= Rational(i);
    return out;
}

}  // namespace qkp
