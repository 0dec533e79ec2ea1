#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rhsinv {

using Int = mpz_class;

// Exact arbitrary-precision fraction. Always stored reduced, denominator > 0.
// The wire format is "num/den" (see str_fraction); parse() also accepts "num".
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(int n) : q_(n) {}
    Rational(long long n) : q_(static_cast<long>(n)) {
        static_assert(sizeof(long) == sizeof(long long), "needs LP64");
    }
    Rational(long n, long d) : q_(n, d) { require_nonzero_den(); q_.canonicalize(); }
    Rational(const Int& n, const Int& d) : q_(n, d) { require_nonzero_den(); q_.canonicalize(); }
    explicit Rational(const Int& n) : q_(n) {}
    explicit Rational(const mpq_class& q) : q_(q) { require_nonzero_den(); q_.canonicalize(); }

    static Rational parse(const std::string& s);

    Int num() const { return q_.get_num(); }
    Int den() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r(*this); r.q_ = -r.q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    // Integer power; e < 0 requires a nonzero value.
    Rational pow(long e) const;

    // floor(num/den) as an integer.
    Int floor() const;

    double to_double() const { return q_.get_d(); }

    // Human format: "3", "-1/6".
    std::string str() const;
    // Wire format: always "num/den" ("0/1", "-1/3").
    std::string str_fraction() const;

private:
    void require_nonzero_den() {
        if (q_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    }
    mpq_class q_;
};

// Element of Q(i); shows up in the stationary-phase coefficients, where the
// Gaussian moments carry powers of i.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_real() const { return im.is_zero(); }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

// i^k as a Gaussian rational unit.
GaussianRational imaginary_unit_pow(long k);

Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);

}  // namespace rhsinv
