// Generates the trefoil expansion-grid fixture from Habiro's cyclotomic
// formula for the colored Jones polynomial of the right-handed trefoil,
//
//   J'_N(q) = sum_{k>=0} q^{-k(k+2)} prod_{j=1}^k (1 - q^{j-N})(1 - q^{j+N}),
//
// normalized so J'_N(unknot) = 1. With q = e^{2h}, q^N = e^{2y} (y = i*pi*a,
// h = i*pi/K, N = Ka) every factor becomes a rational bivariate series, and
//
//   sum d_{m,n} y^{2m} h^n = J'(y,h) * (sinh y / y) * (h / sinh h).
//
// Before writing the fixture the generator checks:
//   - J'_2 equals the Jones polynomial -t^{-4} + t^{-3} + t^{-1} (t = q),
//   - the diagonal column equals (sinh y/y) / (1 + 4 sinh^2 y), i.e. the
//     Alexander polynomial 1 + z^2,
//   - d_{0,0} = 1, d_{0,1} = 0, and no odd powers of y survive.

#include <fstream>
#include <iostream>
#include <map>
#include <utility>

#include <json.hpp>

#include "rhsinv/jones.hpp"
#include "rhsinv/json_io.hpp"
#include "rhsinv/rational.hpp"

using rhsinv::Int;
using rhsinv::Rational;

namespace {

constexpr int kOrder = 6;  // grid window m + n <= kOrder

// Bivariate series in (y, h), truncated at total degree kWindow.
constexpr int kWindow = 2 * kOrder + 1;  // y^{2m} h^n with 2m + n <= 2*order + ...
using Bivar = std::map<std::pair<int, int>, Rational>;

Bivar mul(const Bivar& a, const Bivar& b) {
    Bivar r;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b) {
            int dy = ka.first + kb.first, dh = ka.second + kb.second;
            if (dy + dh > kWindow) continue;
            Rational acc = va * vb;
            auto it = r.find({dy, dh});
            if (it == r.end())
                r[{dy, dh}] = acc;
            else {
                it->second += acc;
                if (it->second.is_zero()) r.erase(it);
            }
        }
    return r;
}

Bivar add(Bivar a, const Bivar& b) {
    for (const auto& [k, v] : b) {
        auto it = a.find(k);
        if (it == a.end())
            a[k] = v;
        else {
            it->second += v;
            if (it->second.is_zero()) a.erase(it);
        }
    }
    return a;
}

Bivar one() { return Bivar{{{0, 0}, Rational(1)}}; }

// exp(c * y^dy * h^dh) with dy + dh >= 1.
Bivar exp_monomial(const Rational& c, int dy, int dh) {
    Bivar r = one();
    Rational term(1);
    for (int t = 1; t * (dy + dh) <= kWindow; ++t) {
        term *= c;
        term /= Rational(t);
        r[{t * dy, t * dh}] = term;
    }
    return r;
}

// Laurent polynomials in q for the color-2 check.
using Laurent = std::map<long, long>;

Laurent lmul(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            r[ea + eb] += ca * cb;
            if (r[ea + eb] == 0) r.erase(ea + eb);
        }
    return r;
}

Laurent add_laurent(Laurent a, const Laurent& b) {
    for (const auto& [e, c] : b) {
        a[e] += c;
        if (a[e] == 0) a.erase(e);
    }
    return a;
}

Laurent habiro_at_color(long N, int kmax) {
    Laurent total{{0, 1}};  // k = 0 term
    Laurent partial{{0, 1}};
    for (long k = 1; k <= kmax; ++k) {
        Laurent f1 = add_laurent(Laurent{{0, 1}}, Laurent{{k - N, -1}});
        Laurent f2 = add_laurent(Laurent{{0, 1}}, Laurent{{k + N, -1}});
        partial = lmul(partial, lmul(f1, f2));
        Laurent shifted;
        for (const auto& [e, c] : partial) shifted[e - k * (k + 2)] += c;
        total = add_laurent(total, shifted);
    }
    return total;
}

}  // namespace

int main(int argc, char** argv) {
    // Habiro sum: the k-th term has valuation >= 2k in (y, h).
    Bivar jprime = one();
    Bivar partial = one();
    for (int k = 1; 2 * k <= kWindow; ++k) {
        // (1 - e^{2kh} e^{-2y}) and (1 - e^{2kh} e^{2y})
        Bivar eh = exp_monomial(Rational(2 * k), 0, 1);
        Bivar f1 = add(one(), mul(Bivar{{{0, 0}, Rational(-1)}}, mul(eh, exp_monomial(Rational(-2), 1, 0))));
        Bivar f2 = add(one(), mul(Bivar{{{0, 0}, Rational(-1)}}, mul(eh, exp_monomial(Rational(2), 1, 0))));
        partial = mul(partial, mul(f1, f2));
        Bivar term = mul(exp_monomial(Rational(-2 * k * (k + 2)), 0, 1), partial);
        jprime = add(jprime, term);
    }

    // sinh(y)/y and h/sinh(h).
    Bivar sinhy_over_y, sinhh_over_h;
    for (int m = 0; 2 * m <= kWindow; ++m) {
        Rational c(Int(1), rhsinv::factorial(2 * static_cast<unsigned long>(m) + 1));
        sinhy_over_y[{2 * m, 0}] = c;
        sinhh_over_h[{0, 2 * m}] = c;
    }
    // Invert sinh(h)/h by the triangular recurrence.
    Bivar h_over_sinhh{{{0, 0}, Rational(1)}};
    for (int n = 2; n <= kWindow; n += 2) {
        Rational acc(0);
        for (int k = 2; k <= n; k += 2) {
            auto f = sinhh_over_h.find({0, k});
            auto g = h_over_sinhh.find({0, n - k});
            if (f != sinhh_over_h.end() && g != h_over_sinhh.end()) acc += f->second * g->second;
        }
        if (!acc.is_zero()) h_over_sinhh[{0, n}] = -acc;
    }

    Bivar grid_series = mul(jprime, mul(sinhy_over_y, h_over_sinhh));

    // --- checks ----------------------------------------------------------
    // Color 2: J'_2(q) = -q^{-4} + q^{-3} + q^{-1}.
    {
        Laurent j2 = habiro_at_color(2, 1);
        Laurent expected{{-4, -1}, {-3, 1}, {-1, 1}};
        if (j2 != expected) {
            std::cerr << "trefoil fixture: color-2 Jones polynomial check failed\n";
            return 1;
        }
    }
    // No odd powers of y; d(0,0) = 1; d(0,1) = 0.
    for (const auto& [k, v] : grid_series) {
        if (k.first % 2 != 0 && !v.is_zero()) {
            std::cerr << "trefoil fixture: odd power of y survived at (" << k.first << ","
                      << k.second << ")\n";
            return 1;
        }
    }
    if (grid_series.at({0, 0}) != Rational(1) || grid_series.count({0, 1})) {
        std::cerr << "trefoil fixture: normalization check failed\n";
        return 1;
    }
    // Diagonal column: (sinh y / y) / (1 + 4 sinh^2 y).
    {
        // 1 + 4 sinh^2 y = 1 + 4 y^2 (sinh y/y)^2 as univariate series in y.
        std::map<int, Rational> s;  // sinh y / y
        for (int m = 0; 2 * m <= kWindow; ++m)
            s[2 * m] = Rational(Int(1), rhsinv::factorial(2 * static_cast<unsigned long>(m) + 1));
        std::map<int, Rational> s2;
        for (const auto& [da, va] : s)
            for (const auto& [db, vb] : s)
                if (da + db <= kWindow) s2[da + db] += va * vb;
        std::map<int, Rational> denom{{0, Rational(1)}};
        for (const auto& [d, v] : s2)
            if (d + 2 <= kWindow) denom[d + 2] += Rational(4) * v;
        std::map<int, Rational> diag{{0, Rational(1)}};  // s / denom by recurrence
        for (int n = 2; n <= kWindow; n += 2) {
            Rational acc = s.count(n) ? s[n] : Rational(0);
            for (int k = 2; k <= n; k += 2)
                if (denom.count(k) && diag.count(n - k)) acc -= denom[k] * diag[n - k];
            diag[n] = acc;
        }
        for (int m = 0; 2 * m <= kWindow; ++m) {
            auto it = grid_series.find({2 * m, 0});
            Rational got = it == grid_series.end() ? Rational(0) : it->second;
            if (got != diag[2 * m]) {
                std::cerr << "trefoil fixture: Melvin-Morton diagonal check failed at m = " << m
                          << "\n";
                return 1;
            }
        }
    }

    // --- emit -------------------------------------------------------------
    rhsinv::jones::JonesGrid g;
    g.N = 1;
    g.cls = rhsinv::jones::SlopeClass::BL;
    g.order = kOrder;
    for (const auto& [k, v] : grid_series) {
        int m = k.first / 2, n = k.second;
        if (m + n > kOrder) continue;
        g.set(rhsinv::jones::GridKey{{m}, n}, v);
    }
    rhsinv::jones::require_valid(g);

    nlohmann::json out = rhsinv::io::grid_to_json(g);
    out["knot"] = "trefoil (right-handed)";
    if (argc > 1) {
        std::ofstream f(argv[1]);
        f << out.dump(2) << "\n";
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}
