#include "rhsinv/surgery.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rhsinv::surgery {

using jones::GridKey;
using jones::JonesGrid;
using jones::MilnorData;
using jones::ShiftedJonesGrid;
using jones::SlopeClass;

RhsInvariants RhsInvariants::sphere(int order) {
    return RhsInvariants{series::sphere_series(order), Int(1)};
}

long long SurgeryPresentation::denominator(int j) const {
    const auto& c = components[static_cast<std::size_t>(j)];
    return c.slope.p + c.slope.q * c.framing;
}

void SurgeryPresentation::validate() const {
    int n = size();
    if (grid.N != n)
        throw std::invalid_argument("presentation: grid has " + std::to_string(grid.N) +
                                    " components, surgery list has " + std::to_string(n));
    if (grid.cls != cls)
        throw std::invalid_argument("presentation: link class does not match the grid class");
    jones::require_valid(grid);
    if (!linking.empty()) {
        if (static_cast<int>(linking.size()) != n)
            throw std::invalid_argument("presentation: linking matrix size != N");
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(linking[static_cast<std::size_t>(i)].size()) != n)
                throw std::invalid_argument("presentation: linking matrix is not square");
            if (linking[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] !=
                components[static_cast<std::size_t>(i)].framing)
                throw std::invalid_argument("presentation: linking diagonal != framing");
            for (int j = 0; j < n; ++j) {
                if (linking[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                    linking[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                    throw std::invalid_argument("presentation: linking matrix not symmetric");
                if (i != j && linking[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0)
                    throw std::invalid_argument(
                        "presentation: nonzero off-diagonal linking numbers are not allowed for "
                        "special link classes");
            }
        }
    }
    for (int j = 0; j < n; ++j)
        if (denominator(j) == 0)
            throw std::invalid_argument("presentation: component " + std::to_string(j) +
                                        " has p + q*l = 0 (not a rational homology sphere)");
    if (milnor) {
        if (milnor->N != n) throw std::invalid_argument("presentation: Milnor data size != N");
        milnor->validate();
        if (cls != SlopeClass::ASL) {
            for (const auto& [k, v] : milnor->triples)
                if (v != 0)
                    throw std::invalid_argument("presentation: nonzero mu_ijk on a " +
                                                std::string(jones::slope_class_name(cls)) + " link");
            for (const auto& [k, v] : milnor->phi1_triples)
                if (!v.is_zero())
                    throw std::invalid_argument("presentation: nonzero phi1 triple on a " +
                                                std::string(jones::slope_class_name(cls)) + " link");
        }
        if (cls == SlopeClass::BL) {
            for (const auto& [k, v] : milnor->quartic_pairs)
                if (v != 0)
                    throw std::invalid_argument("presentation: nonzero mu_iijj on a boundary link");
            for (const auto& [k, v] : milnor->phi1_pairs)
                if (!v.is_zero())
                    throw std::invalid_argument("presentation: nonzero phi1 pair on a boundary link");
        }
    }
}

SurgeryPresentation SurgeryPresentation::sublink(const std::vector<int>& kept) const {
    SurgeryPresentation sub;
    sub.cls = cls;
    sub.base = base;
    for (int j : kept) sub.components.push_back(components[static_cast<std::size_t>(j)]);
    JonesGrid g = grid;
    for (int j = size() - 1; j >= 0; --j) {
        if (std::find(kept.begin(), kept.end(), j) == kept.end()) g = jones::remove_component(g, j);
    }
    sub.grid = std::move(g);
    if (milnor) sub.milnor = milnor->restricted(kept);
    return sub;
}

Rational framing_correction(const SurgeryPresentation& sp) {
    sp.validate();
    Rational acc(0);
    for (int j = 0; j < sp.size(); ++j) {
        const auto& c = sp.components[static_cast<std::size_t>(j)];
        Rational slope = Rational(c.slope.p, c.slope.q) + Rational(c.framing);
        Rational term = Rational(12) * numtheory::dedekind_sum(c.slope.p, c.slope.q) - slope -
                        Rational(Int(1), Int(static_cast<long>(c.slope.q)) *
                                             Int(static_cast<long>(sp.denominator(j)))) +
                        Rational(3 * slope.sign());
        acc += term;
    }
    return Rational(1, 2) * acc;
}

std::vector<Rational> delta_coefficients(const SurgeryPresentation& sp, int n_max) {
    sp.validate();
    if (n_max < 0) throw std::invalid_argument("delta_coefficients: negative order");
    if (sp.grid.order < n_max)
        throw std::invalid_argument(
            "delta_coefficients: incomplete grid data: grid window covers m+n <= " +
            std::to_string(sp.grid.order) + " but entries up to m+n = " + std::to_string(n_max) +
            " are required");

    std::vector<long long> denoms;
    for (int j = 0; j < sp.size(); ++j) denoms.push_back(sp.denominator(j));
    ShiftedJonesGrid shifted = jones::shift_grid(sp.grid, denoms);

    std::vector<Rational> delta(static_cast<std::size_t>(n_max) + 1);
    for (const auto& [key, value] : shifted.entries) {
        int m = key.m();
        int n = m + key.n;  // dtilde^{(m, n-m)} feeds Delta_n
        if (n < 1 || n > n_max) continue;
        Rational w = Rational(m % 2 == 0 ? 1 : -1, 1) * Rational(Int(1), Int(1) << m) * value;
        for (int j = 0; j < sp.size(); ++j) {
            int mj = key.multi[static_cast<std::size_t>(j)];
            if (mj == 0) continue;
            const auto& c = sp.components[static_cast<std::size_t>(j)];
            w *= Rational(factorial(2 * static_cast<unsigned long>(mj)),
                          factorial(static_cast<unsigned long>(mj)));
            w *= Rational(static_cast<long>(c.slope.q), static_cast<long>(sp.denominator(j))).pow(mj);
        }
        delta[static_cast<std::size_t>(n)] += w;
    }
    return delta;
}

RhsInvariants perturbative_invariants(const SurgeryPresentation& sp, int n_max) {
    RhsInvariants base = sp.base ? *sp.base : RhsInvariants::sphere(n_max);
    if (base.order() < n_max)
        throw std::invalid_argument("perturbative_invariants: base invariants truncated below n_max");
    std::vector<Rational> delta = delta_coefficients(sp, n_max);

    series::KSeries one_plus(n_max);
    one_plus.set_coeff(0, Rational(1));
    for (int n = 1; n <= n_max; ++n) one_plus.set_coeff(n, delta[static_cast<std::size_t>(n)]);
    series::KSeries s = base.S.truncated(n_max) + series::series_log(one_plus);
    if (n_max >= 1) s.set_coeff(1, s.coeff(1) + framing_correction(sp));

    Int ord = base.ord_h1;
    for (int j = 0; j < sp.size(); ++j) {
        long long pj = sp.denominator(j);
        ord *= Int(static_cast<long>(pj < 0 ? -pj : pj));
    }
    return RhsInvariants{std::move(s), std::move(ord)};
}

RhsInvariants lens_space_invariants(long long p, long long q, int n_max) {
    if (p == 0) throw std::domain_error("lens_space_invariants: p = 0 is not a rational homology sphere");
    if (std::gcd(p < 0 ? -p : p, q < 0 ? -q : q) != 1)
        throw std::domain_error("lens_space_invariants: p, q not coprime");
    // log(sin z/z) at z = pi/(Kp): sum_k h^{2k} / ((2k+1)! p^{2k}).
    series::KSeries f(n_max);
    Rational pinv2 = Rational(1, static_cast<long>(p)).pow(2);
    Rational scale(1);
    for (int k = 0; 2 * k <= n_max; ++k) {
        f.set_coeff(2 * k, scale * Rational(Int(1), factorial(2 * static_cast<unsigned long>(k) + 1)));
        scale *= pinv2;
    }
    series::KSeries s = series::series_log(f);
    if (n_max >= 1)
        s.set_coeff(1, s.coeff(1) - Rational(6) * numtheory::dedekind_sum(q, p));
    return RhsInvariants{std::move(s), Int(static_cast<long>(p < 0 ? -p : p))};
}

RhsInvariants connected_sum(const RhsInvariants& a, const RhsInvariants& b) {
    int ord = std::min(a.order(), b.order());
    series::KSeries s = (a.S + b.S) - series::sphere_series(ord);
    return RhsInvariants{std::move(s), a.ord_h1 * b.ord_h1};
}

Rational hoste_s1(const SurgeryPresentation& sp) {
    sp.validate();
    if (!sp.milnor) throw std::invalid_argument("hoste_s1: phi_1 / Milnor data required");
    const MilnorData& md = *sp.milnor;
    Rational base_s1 = sp.base ? sp.base->s(1) : Rational(0);

    auto inv_slope = [&](int j) {  // 1/(p_j/q_j + l_jj) = q_j/P_j
        const auto& c = sp.components[static_cast<std::size_t>(j)];
        return Rational(static_cast<long>(c.slope.q), static_cast<long>(sp.denominator(j)));
    };

    Rational acc(0);
    for (int j = 0; j < sp.size(); ++j)
        acc += (md.phi1_single(j) - Rational(1, 24)) * inv_slope(j);
    for (int i = 0; i < sp.size(); ++i)
        for (int j = i + 1; j < sp.size(); ++j)
            acc += md.phi1_pair(i, j) * inv_slope(i) * inv_slope(j);
    for (int i = 0; i < sp.size(); ++i)
        for (int j = i + 1; j < sp.size(); ++j)
            for (int k = j + 1; k < sp.size(); ++k)
                acc += md.phi1_triple(i, j, k) * inv_slope(i) * inv_slope(j) * inv_slope(k);

    return base_s1 + framing_correction(sp) + Rational(12) * acc;
}

IntegerizeResult integerize(const RhsInvariants& inv, int n) {
    if (n < 0 || n > inv.order())
        throw std::invalid_argument("integerize: n out of range for the invariant series");
    Int factor = Int(1) << (3 * n);
    factor *= factorial(static_cast<unsigned long>(n));
    factor *= factorial(2 * static_cast<unsigned long>(n));
    factor *= factorial(9 * static_cast<unsigned long>(n));
    Int ordpow;
    mpz_pow_ui(ordpow.get_mpz_t(), inv.ord_h1.get_mpz_t(), static_cast<unsigned long>(n));
    Rational value = Rational(Int(factor * ordpow)) * inv.s(n);
    bool integral = value.is_integer();
    return IntegerizeResult{std::move(value), integral};
}

DenominatorReport denominator_bound_check(const RhsInvariants& inv, int n) {
    if (n < 0 || n > inv.order())
        throw std::invalid_argument("denominator_bound_check: n out of range");
    Int ordpow;
    mpz_pow_ui(ordpow.get_mpz_t(), inv.ord_h1.get_mpz_t(), static_cast<unsigned long>(n));
    Rational scaled = Rational(ordpow) * inv.s(n);

    DenominatorReport rep;
    rep.denominator = scaled.den();
    Int d = rep.denominator;
    for (Int f(2); f * f <= d;) {
        if (d % f == 0) {
            rep.prime_factors.push_back(f);
            while (d % f == 0) d /= f;
        }
        f += (f == 2) ? 1 : 2;
    }
    if (d > 1) rep.prime_factors.push_back(d);
    for (const Int& f : rep.prime_factors)
        if (f > 2 * n) rep.offending.push_back(f);
    rep.pass = rep.offending.empty();
    return rep;
}

}  // namespace rhsinv::surgery
