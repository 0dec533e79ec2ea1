#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "rhsinv/rational.hpp"

namespace rhsinv::series {

// Notified when a binary operation mixes truncation orders and the result is
// truncated to the shorter one. Default: no-op. The CLI installs a stderr
// warning here.
extern std::function<void(int kept, int dropped)> on_truncation;

// Truncated formal power series in h = i*pi/K with exact rational
// coefficients; coeff(n) is the coefficient of h^n, n = 0..order.
class KSeries {
public:
    KSeries() : coeffs_(1) {}
    explicit KSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {}
    KSeries(int order, std::vector<Rational> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    void set_coeff(int n, Rational v) { coeffs_.at(static_cast<std::size_t>(n)) = std::move(v); }

    KSeries truncated(int order) const;

    friend KSeries operator+(const KSeries& a, const KSeries& b);
    friend KSeries operator-(const KSeries& a, const KSeries& b);
    friend KSeries operator*(const KSeries& a, const KSeries& b);
    friend KSeries operator*(const Rational& c, const KSeries& s);
    friend bool operator==(const KSeries& a, const KSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<Rational> coeffs_;
};

// log(s); requires constant term 1.
KSeries series_log(const KSeries& s);

// exp(s); requires constant term 0.
KSeries series_exp(const KSeries& s);

// 1/s; requires nonzero constant term.
KSeries series_inverse(const KSeries& s);

// sum_n S_n(S^3) h^n = log((K/pi) sin(pi/K)) re-expanded in h = i*pi/K:
// 0, 0, 1/6, 0, -1/180, ...
KSeries sphere_series(int n_max);

// Coefficient table of an even expansion G_ev = sum d_{m,n} a^{2m} K^{-n}.
// Every entry obeys n >= -(2/3) m, i.e. 3n + 2m >= 0.
class EvGrid {
public:
    void set(int m, int n, Rational v);
    const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }

private:
    std::map<std::pair<int, int>, Rational> entries_;
};

// Stationary-phase coefficients of int e^{iKf(a)} g(a,K) da at a = 0, for
// f''(0) = fpp and even preexponential grid G_ev:
//   Delta_n = sum_{m=0}^{3n} (2m)!/m! (i/(2 fpp))^m d_{m,n-m}.
// Returned as exact Gaussian rationals, indices 0..n_max.
std::vector<GaussianRational> stationary_phase_delta(const Rational& fpp, const EvGrid& grid,
                                                     int n_max);

}  // namespace rhsinv::series
