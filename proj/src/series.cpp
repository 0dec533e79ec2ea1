#include "rhsinv/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace rhsinv::series {

std::function<void(int, int)> on_truncation;

namespace {

int common_order(const KSeries& a, const KSeries& b) {
    if (a.order() == b.order()) return a.order();
    int kept = std::min(a.order(), b.order());
    int dropped = std::max(a.order(), b.order());
    if (on_truncation) on_truncation(kept, dropped);
    return kept;
}

}  // namespace

KSeries::KSeries(int order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != order + 1)
        throw std::invalid_argument("KSeries: coefficient count does not match order");
}

KSeries KSeries::truncated(int order) const {
    KSeries r(order);
    for (int n = 0; n <= std::min(order, this->order()); ++n) r.set_coeff(n, coeff(n));
    return r;
}

KSeries operator+(const KSeries& a, const KSeries& b) {
    int ord = common_order(a, b);
    KSeries r(ord);
    for (int n = 0; n <= ord; ++n) r.set_coeff(n, a.coeff(n) + b.coeff(n));
    return r;
}

KSeries operator-(const KSeries& a, const KSeries& b) {
    int ord = common_order(a, b);
    KSeries r(ord);
    for (int n = 0; n <= ord; ++n) r.set_coeff(n, a.coeff(n) - b.coeff(n));
    return r;
}

KSeries operator*(const KSeries& a, const KSeries& b) {
    int ord = common_order(a, b);
    KSeries r(ord);
    for (int i = 0; i <= ord; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= ord; ++j) {
            if (b.coeff(j).is_zero()) continue;
            r.set_coeff(i + j, r.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
    }
    return r;
}

KSeries operator*(const Rational& c, const KSeries& s) {
    KSeries r(s.order());
    for (int n = 0; n <= s.order(); ++n) r.set_coeff(n, c * s.coeff(n));
    return r;
}

KSeries series_log(const KSeries& s) {
    if (s.coeff(0) != Rational(1))
        throw std::domain_error("series_log: constant term must be 1");
    int ord = s.order();
    KSeries u = s;
    u.set_coeff(0, Rational(0));
    // log(1+u) = sum_{k>=1} (-1)^{k+1} u^k / k; u has valuation >= 1.
    KSeries acc(ord), upow(ord);
    upow.set_coeff(0, Rational(1));
    for (int k = 1; k <= ord; ++k) {
        upow = upow * u;
        Rational c(k % 2 == 1 ? 1 : -1, k);
        acc = acc + c * upow;
    }
    return acc;
}

KSeries series_exp(const KSeries& s) {
    if (!s.coeff(0).is_zero())
        throw std::domain_error("series_exp: constant term must be 0");
    int ord = s.order();
    KSeries acc(ord), term(ord);
    term.set_coeff(0, Rational(1));
    acc.set_coeff(0, Rational(1));
    for (int k = 1; k <= ord; ++k) {
        term = term * s;
        term = Rational(1, k) * term;
        acc = acc + term;
    }
    return acc;
}

KSeries series_inverse(const KSeries& s) {
    if (s.coeff(0).is_zero())
        throw std::domain_error("series_inverse: constant term must be nonzero");
    int ord = s.order();
    KSeries r(ord);
    Rational c0inv = Rational(1) / s.coeff(0);
    r.set_coeff(0, c0inv);
    for (int n = 1; n <= ord; ++n) {
        Rational acc(0);
        for (int k = 1; k <= n; ++k) acc += s.coeff(k) * r.coeff(n - k);
        r.set_coeff(n, -c0inv * acc);
    }
    return r;
}

KSeries sphere_series(int n_max) {
    if (n_max < 0) throw std::invalid_argument("sphere_series: negative order");
    // sin(z)/z with z = pi/K becomes sum_k h^{2k}/(2k+1)! in h = i*pi/K.
    KSeries f(n_max);
    for (int k = 0; 2 * k <= n_max; ++k)
        f.set_coeff(2 * k, Rational(Int(1), factorial(2 * static_cast<unsigned long>(k) + 1)));
    return series_log(f);
}

void EvGrid::set(int m, int n, Rational v) {
    if (m < 0) throw std::invalid_argument("EvGrid: negative power index");
    if (3 * n + 2 * m < 0)
        throw std::invalid_argument("EvGrid: entry below the n >= -2m/3 bound");
    if (v.is_zero())
        entries_.erase({m, n});
    else
        entries_[{m, n}] = std::move(v);
}

std::vector<GaussianRational> stationary_phase_delta(const Rational& fpp, const EvGrid& grid,
                                                     int n_max) {
    if (fpp.is_zero()) throw std::domain_error("stationary_phase_delta: degenerate phase, f''(0) = 0");
    std::vector<GaussianRational> delta(static_cast<std::size_t>(n_max) + 1);
    Rational half_inv = Rational(1) / (Rational(2) * fpp);
    for (const auto& [key, value] : grid.entries()) {
        auto [m, n] = key;
        int target = m + n;  // d_{m,n} a^{2m} K^{-n} feeds Delta_{m+n}
        if (target < 0 || target > n_max) continue;
        Rational mag = Rational(factorial(2 * static_cast<unsigned long>(m)),
                                factorial(static_cast<unsigned long>(m))) *
                       half_inv.pow(m) * value;
        GaussianRational term = imaginary_unit_pow(m) * GaussianRational(mag);
        delta[static_cast<std::size_t>(target)] = delta[static_cast<std::size_t>(target)] + term;
    }
    return delta;
}

}  // namespace rhsinv::series
