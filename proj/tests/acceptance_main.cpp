// Acceptance suite: eight exact/numeric criteria, one pass/fail line each.
// Exit status is the number of failing criteria.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "rhsinv/finitetype.hpp"
#include "rhsinv/json_io.hpp"
#include "rhsinv/rt_numeric.hpp"
#include "rhsinv/surgery.hpp"
#include "support/numtheory_oracles.hpp"
#include "support/sd_oracle.hpp"

using namespace rhsinv;
using jones::GridKey;
using jones::JonesGrid;
using jones::MilnorData;
using jones::SlopeClass;
using numtheory::SurgeryCoeff;
using surgery::RhsInvariants;
using surgery::SurgeryPresentation;

namespace {

int failures = 0;

void report(int idx, const char* name, bool ok, double seconds) {
    std::printf("[%s] criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", idx, name, seconds);
    if (!ok) ++failures;
}

template <typename F>
void criterion(int idx, const char* name, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::printf("  exception: %s\n", e.what());
        ok = false;
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(idx, name, ok, dt);
}

SurgeryPresentation unknot_surgery(const JonesGrid& grid, long long p, long long q) {
    SurgeryPresentation sp;
    sp.cls = SlopeClass::BL;
    sp.grid = grid;
    sp.components.push_back({SurgeryCoeff(p, q), 0});
    return sp;
}

SurgeryPresentation borromean(long long q1, long long q2, long long q3, int order = 1) {
    MilnorData md;
    md.N = 3;
    md.triples[{0, 1, 2}] = 1;
    SurgeryPresentation sp;
    sp.cls = SlopeClass::ASL;
    sp.milnor = md;
    sp.grid = jones::asl_low_order_grid(md, order);
    sp.components = {{SurgeryCoeff(1, q1), 0}, {SurgeryCoeff(1, q2), 0}, {SurgeryCoeff(1, q3), 0}};
    return sp;
}

bool criterion1_dedekind() {
    bool ok = true;
    for (long long q = 1; q <= 50 && ok; ++q)
        for (long long p = 0; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            if (numtheory::dedekind_sum(p, q) != oracles::dedekind_sawtooth(p, q)) {
                ok = false;
                break;
            }
        }
    std::mt19937 rng(20240801);
    std::uniform_int_distribution<long long> dist(1, 1000000);
    int checked = 0;
    while (checked < 200 && ok) {
        long long p = dist(rng), q = dist(rng);
        if (std::gcd(p, q) != 1) continue;
        ++checked;
        Rational lhs = numtheory::dedekind_sum(p, q) + numtheory::dedekind_sum(q, p);
        Rational rhs = Rational(Int(static_cast<long>(p)) * static_cast<long>(p) +
                                    Int(static_cast<long>(q)) * static_cast<long>(q) + 1,
                                Int(12) * static_cast<long>(p) * static_cast<long>(q)) -
                       Rational(1, 4);
        if (lhs != rhs) ok = false;
    }
    return ok;
}

bool criterion2_lens_two_path() {
    JonesGrid u = jones::unknot_grid(6);
    for (long long p = 2; p <= 12; ++p)
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            RhsInvariants via = surgery::perturbative_invariants(unknot_surgery(u, p, q), 6);
            RhsInvariants closed = surgery::lens_space_invariants(p, q, 6);
            if (!(via.S == closed.S && via.ord_h1 == closed.ord_h1)) return false;
        }
    // spot values
    if (surgery::lens_space_invariants(3, 1, 1).s(1) != Rational(-1, 3)) return false;
    for (long long p = 2; p <= 12; ++p) {
        long long q = p - 1;
        if (surgery::lens_space_invariants(p, q, 2).s(2) !=
            Rational(1, static_cast<long>(6 * p * p)))
            return false;
    }
    return true;
}

bool criterion3_casson_walker() {
    for (long long q1 = -3; q1 <= 3; ++q1)
        for (long long q2 = -3; q2 <= 3; ++q2)
            for (long long q3 = -3; q3 <= 3; ++q3) {
                if (q1 == 0 || q2 == 0 || q3 == 0) continue;
                SurgeryPresentation sp = borromean(q1, q2, q3);
                Rational expect = Rational(12) * Rational(static_cast<long>(q1 * q2 * q3));
                RhsInvariants inv = surgery::perturbative_invariants(sp, 1);
                if (inv.s(1) != expect) return false;
                if (surgery::hoste_s1(sp) != expect) return false;
                if (inv.lambda_cw() != Rational(2) * Rational(static_cast<long>(q1 * q2 * q3)))
                    return false;
            }
    return true;
}

bool criterion4_finite_type() {
    MilnorData md;
    md.N = 4;
    md.triples[{0, 1, 2}] = 1;
    SurgeryPresentation four;
    four.cls = SlopeClass::ASL;
    four.milnor = md;
    four.grid = jones::asl_low_order_grid(md, 1);
    four.components = {{SurgeryCoeff(1, 2), 0},
                       {SurgeryCoeff(1, -3), 0},
                       {SurgeryCoeff(1, 5), 0},
                       {SurgeryCoeff(1, 7), 0}};
    if (!finitetype::alternating_sum_sublinks(four, 1).is_zero()) return false;

    for (long long q1 : {1LL, 2LL, -2LL})
        for (long long q2 : {1LL, 3LL})
            for (long long q3 : {1LL, -1LL}) {
                SurgeryPresentation sp = borromean(q1, q2, q3);
                Rational expect = Rational(static_cast<long>(-12 * q1 * q2 * q3));
                Rational alt = finitetype::alternating_sum_sublinks(sp, 1);
                Rational dia = finitetype::diagram_sum(sp, 1);
                if (alt != expect || dia != expect) return false;
            }
    return true;
}

bool criterion5_vassiliev_shift_sums() {
    JonesGrid u = jones::unknot_grid(3);
    for (int n = 1; n <= 3; ++n) {
        for (int np = 1; np < n; ++np)
            if (!finitetype::surgery_shift_alternating_sum_delta(u, 13, 8, n, np).is_zero())
                return false;
        if (finitetype::surgery_shift_alternating_sum_delta(u, 13, 8, n, n) !=
            Rational(-1, 13).pow(n))
            return false;
    }
    // S-level first-order sum, computed directly and reported against the
    // two readings of the first-order identity.
    Rational direct = finitetype::surgery_shift_alternating_sum(u, 1, 8, 1, 1);
    Rational corrected = Rational(1) - Rational(6) * u.at(GridKey{{1}, 0});
    Rational literal = Rational(8) - Rational(6) * u.at(GridKey{{1}, 0});
    std::printf("  S-level n=1 sum: computed %s; 1 - 6 D_{1,2} = %s; q - 6 D_{1,2} = %s\n",
                direct.str().c_str(), corrected.str().c_str(), literal.str().c_str());
    return direct == corrected;
}

bool criterion6_integrality() {
    std::vector<RhsInvariants> cases;
    std::vector<RhsInvariants> lenses;
    for (long long p = 2; p <= 12; ++p)
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            lenses.push_back(surgery::lens_space_invariants(p, q, 3));
        }
    cases = lenses;
    for (std::size_t i = 0; i < lenses.size(); i += 7)
        for (std::size_t j = i; j < lenses.size(); j += 11)
            cases.push_back(surgery::connected_sum(lenses[i], lenses[j]));
    for (long long q1 : {1LL, 2LL})
        for (long long q3 : {3LL, -2LL})
            cases.push_back(surgery::perturbative_invariants(borromean(q1, 1, q3, 3), 3));

    for (const RhsInvariants& inv : cases)
        for (int n = 1; n <= 3; ++n) {
            if (!surgery::integerize(inv, n).integral) return false;
            if (!surgery::denominator_bound_check(inv, n).pass) return false;
        }
    return true;
}

bool criterion7_stationary_phase() {
    std::vector<sd::TestPair> pairs = {
        {Rational(1), Rational(1), Rational(0), {{0, 0, Rational(1)}}},
        {Rational(3), Rational(1, 2), Rational(0), {{0, 0, Rational(1)}, {1, 0, Rational(1, 4)}}},
        {Rational(1), Rational(-2, 3), Rational(0), {{0, 0, Rational(1)}, {0, 1, Rational(1)}}},
        {Rational(2), Rational(1), Rational(1, 2), {{0, 0, Rational(1)}}},
        {Rational(1), Rational(1), Rational(0), {{0, 0, Rational(1)}, {1, 1, Rational(-1, 2)}}},
    };
    for (const sd::TestPair& tp : pairs) {
        auto grid = sd::exact_grid(tp, 4);
        auto exact = series::stationary_phase_delta(tp.fpp, grid, 4);
        auto to_c = [&](int n) {
            return sd::C(static_cast<long double>(exact[static_cast<std::size_t>(n)].re.to_double()),
                         static_cast<long double>(exact[static_cast<std::size_t>(n)].im.to_double()));
        };
        auto got = sd::cauchy_deltas(tp, 3);
        for (int n = 0; n <= 3; ++n) {
            long double rel = std::abs(got[static_cast<std::size_t>(n)] - to_c(n)) /
                              std::max<long double>(std::abs(to_c(n)), 1e-12L);
            if (rel > 1e-6L) return false;
        }
        // the coefficients reproduce the integral itself at large K: the
        // remainder after Delta_3 must sit at the Delta_4 K^{-4} scale
        const long double K = 50000.0L;
        sd::C r = sd::normalized_integral(tp, K);
        long double Kp = 1.0L;
        for (int n = 0; n <= 3; ++n) {
            r -= to_c(n) / Kp;
            Kp *= K;
        }
        long double want = std::abs(to_c(4)) / (K * K * K * K);
        if (std::abs(r) > 4.0L * want + 1e-14L) return false;
    }
    return true;
}

bool criterion8_rt_sums() {
    // (1,1) surgery reproduces Z(S^3) for K = 3..50
    for (int K = 3; K <= 50; ++K) {
        rt::RTLevel level(K - 2);
        rt::Complex z = rt::rt_unknot_surgery({SurgeryCoeff(1, 1)}, level);
        double want = rt::z_sphere(level);
        if (std::abs(z - rt::Complex(want, 0.0)) / std::abs(want) > 1e-9) return false;
    }
    // completion independence at the u_tilde level, through the full sum;
    // the error is measured against the term-magnitude scale because the
    // invariant itself has genuine zeros at some levels.
    for (int K : {11, 30, 47}) {
        rt::RTLevel level(K - 2);
        const double pi = 3.141592653589793238462643383279502884;
        for (auto [p, q] : std::vector<std::pair<long long, long long>>{{3, 1}, {2, 3}}) {
            auto m = numtheory::complete_surgery_matrix(SurgeryCoeff(p, q));
            numtheory::SL2Matrix shifted(m.p, m.r + m.p, m.q, m.s + m.q);
            double scale = 0.0;
            auto value = [&](const numtheory::SL2Matrix& mm) {
                rt::Complex acc(0, 0);
                for (int a = 1; a <= level.K - 1; ++a) {
                    rt::Complex term = std::sin(pi * a / level.K) / std::sin(pi / level.K) *
                                       rt::u_tilde(mm, a, 1, level);
                    acc += term;
                    scale += std::abs(term);
                }
                double phi = numtheory::rademacher_phi(mm).to_double();
                return std::polar(1.0, pi / 4.0 * (level.K - 2.0) / level.K * (phi - 3.0)) * acc;
            };
            rt::Complex za = value(m), zb = value(shifted);
            if (std::abs(za - zb) > 1e-9 * scale) return false;
        }
    }
    // L(2,1) residual: bounded and decaying like K^{-3/2}
    std::vector<double> logk, logr;
    double early = 0.0, late = 0.0;
    {
        std::vector<int> ks;
        std::vector<double> vals;
        for (int K = 50; K <= 400; ++K) {
            rt::RTLevel level(K - 2);
            rt::Complex z = rt::rt_unknot_surgery({SurgeryCoeff(2, 1)}, level);
            rt::Complex ztr = rt::lens_trivial_connection(2, 1, level);
            double r = std::abs(z - ztr);
            ks.push_back(K);
            vals.push_back(r);
            if (K <= 120) early = std::max(early, r);
            if (K >= 330) late = std::max(late, r);
        }
        if (late > early) return false;
        // window maxima, log-log slope
        int windows = 10;
        std::size_t per = vals.size() / static_cast<std::size_t>(windows);
        for (int w = 0; w < windows; ++w) {
            double best = 0.0;
            int bestk = 0;
            for (std::size_t i = static_cast<std::size_t>(w) * per;
                 i < std::min(vals.size(), static_cast<std::size_t>(w + 1) * per); ++i)
                if (vals[i] > best) {
                    best = vals[i];
                    bestk = ks[i];
                }
            logk.push_back(std::log(bestk));
            logr.push_back(std::log(best));
        }
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < logk.size(); ++i) {
        sx += logk[i];
        sy += logr[i];
        sxx += logk[i] * logk[i];
        sxy += logk[i] * logr[i];
    }
    double n = static_cast<double>(logk.size());
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    std::printf("  L(2,1) residual decay exponent: %.3f\n", slope);
    return slope > -1.7 && slope < -1.3;
}

}  // namespace

int main() {
    criterion(1, "dedekind reciprocity + sawtooth oracle", criterion1_dedekind);
    criterion(2, "lens-space two-path equality, n <= 6", criterion2_lens_two_path);
    criterion(3, "casson-walker consistency on borromean surgeries", criterion3_casson_walker);
    criterion(4, "finite-type vanishing and two-path diagram sum", criterion4_finite_type);
    criterion(5, "vassiliev shift alternating sums", criterion5_vassiliev_shift_sums);
    criterion(6, "integrality and denominator bound, n <= 3", criterion6_integrality);
    criterion(7, "stationary-phase engine vs quadrature oracle", criterion7_stationary_phase);
    criterion(8, "finite-K surgery sums", criterion8_rt_sums);
    return failures;
}
