#include "rhsinv/rational.hpp"

namespace rhsinv {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    std::string nums = s, dens = "1";
    if (auto pos = s.find('/'); pos != std::string::npos) {
        nums = s.substr(0, pos);
        dens = s.substr(pos + 1);
    }
    auto valid = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (!valid(nums) || !valid(dens))
        throw std::invalid_argument("Rational: malformed value \"" + s + "\"");
    Int n, d;
    if (mpz_set_str(n.get_mpz_t(), nums.c_str(), 10) != 0 ||
        mpz_set_str(d.get_mpz_t(), dens.c_str(), 10) != 0)
        throw std::invalid_argument("Rational: malformed value \"" + s + "\"");
    if (d == 0) throw std::invalid_argument("Rational: zero denominator in \"" + s + "\"");
    return Rational(n, d);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw std::domain_error("Rational: negative power of zero");
        return Rational(0);
    }
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    Int n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), a);
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), a);
    return e > 0 ? Rational(n, d) : Rational(d, n);
}

Int Rational::floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return q;
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::string Rational::str_fraction() const {
    return num().get_str() + "/" + den().get_str();
}

GaussianRational imaginary_unit_pow(long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {Rational(1), Rational(0)};
        case 1: return {Rational(0), Rational(1)};
        case 2: return {Rational(-1), Rational(0)};
        default: return {Rational(0), Rational(-1)};
    }
}

Int factorial(unsigned long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Int binomial(unsigned long n, unsigned long k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace rhsinv
