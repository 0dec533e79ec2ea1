// Test-only helpers for expansion grids: a literal mu-sum shift oracle,
// product grids of split links, and random windowed grids.
#pragma once

#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "rhsinv/jones.hpp"

namespace grid_oracles {

using rhsinv::Rational;
using rhsinv::jones::GridKey;
using rhsinv::jones::JonesGrid;
using rhsinv::jones::ShiftedJonesGrid;
using rhsinv::jones::SlopeClass;

// Literal even-part shift. A grid entry stands for
//   d * K^{N-n} * prod_j a_j^{2m_j+1}   (the (i pi)-powers ride along),
// and the shifted polynomial is
//   (prod_j P_j / 2^N) sum_{mu in {+-1}^N} (prod_j mu_j) J(a_j + mu_j/(K P_j)).
// Expand every binomial fully over explicit mu vectors, tracking raw integer
// powers of a_j; the odd powers must cancel in the mu sum, the even ones are
// the shifted entries d~ * K^{-n'} * prod a_j^{2m'_j}.
inline ShiftedJonesGrid shift_oracle(const JonesGrid& g, const std::vector<long long>& denoms) {
    ShiftedJonesGrid out;
    out.N = g.N;
    out.cls = g.cls;
    out.order = g.order;
    out.denominators = denoms;
    const int N = g.N;

    using RawKey = std::pair<std::vector<int>, int>;  // raw a-powers, K^{-n} power
    std::map<RawKey, Rational> raw;

    for (const auto& [key, value] : g.entries) {
        for (std::uint32_t mu_bits = 0; mu_bits < (1u << N); ++mu_bits) {
            Rational mu_sign(1);
            for (int j = 0; j < N; ++j)
                if (!(mu_bits & (1u << j))) mu_sign = -mu_sign;

            std::map<RawKey, Rational> partial{
                {{std::vector<int>(static_cast<std::size_t>(N), 0), key.n - N}, value * mu_sign}};
            for (int j = 0; j < N; ++j) {
                int mj = key.multi[static_cast<std::size_t>(j)];
                int mu = (mu_bits & (1u << j)) ? 1 : -1;
                std::map<RawKey, Rational> next;
                for (int i = 0; i <= 2 * mj + 1; ++i) {
                    Rational c = Rational(rhsinv::binomial(2 * static_cast<unsigned long>(mj) + 1,
                                                           static_cast<unsigned long>(i))) *
                                 Rational(mu).pow(i) *
                                 Rational(1, static_cast<long>(denoms[static_cast<std::size_t>(j)]))
                                     .pow(i);
                    for (const auto& [pk, pv] : partial) {
                        RawKey nk = pk;
                        nk.first[static_cast<std::size_t>(j)] = 2 * mj + 1 - i;
                        nk.second = pk.second + i;
                        next[nk] += pv * c;
                    }
                }
                partial = std::move(next);
            }
            for (const auto& [pk, pv] : partial) {
                raw[pk] += pv;
                if (raw[pk].is_zero()) raw.erase(pk);
            }
        }
    }

    Rational prefactor = Rational(1, 2).pow(N);
    for (int j = 0; j < N; ++j) prefactor *= Rational(static_cast<long>(denoms[static_cast<std::size_t>(j)]));

    for (const auto& [rk, rv] : raw) {
        GridKey k;
        k.multi.resize(static_cast<std::size_t>(N));
        for (int j = 0; j < N; ++j) {
            if (rk.first[static_cast<std::size_t>(j)] % 2 != 0)
                throw std::logic_error("shift_oracle: odd power survived the mu average");
            k.multi[static_cast<std::size_t>(j)] = rk.first[static_cast<std::size_t>(j)] / 2;
        }
        k.n = rk.second;
        if (k.m() + k.n > out.order) continue;
        Rational acc = out.at(k) + prefactor * rv;
        if (acc.is_zero())
            out.entries.erase(k);
        else
            out.entries[k] = acc;
    }
    return out;
}

// Grid of a split union: entries are convolutions of the factors' entries.
inline JonesGrid split_union(const JonesGrid& a, const JonesGrid& b) {
    JonesGrid g;
    g.N = a.N + b.N;
    g.cls = a.cls;
    g.order = std::min(a.order, b.order);
    for (const auto& [ka, va] : a.entries)
        for (const auto& [kb, vb] : b.entries) {
            GridKey k;
            k.multi = ka.multi;
            k.multi.insert(k.multi.end(), kb.multi.begin(), kb.multi.end());
            k.n = ka.n + kb.n;
            if (k.m() + k.n > g.order) continue;
            Rational acc = g.at(k) + va * vb;
            if (acc.is_zero())
                g.entries.erase(k);
            else
                g.entries[k] = acc;
        }
    return g;
}

// Random sparse grid obeying the class slope bound and window, with the
// d(0,0) = 1, d(0,1) = 0 normalization.
inline JonesGrid random_grid(std::mt19937& rng, int N, SlopeClass cls, int order,
                             int extra_entries) {
    JonesGrid g;
    g.N = N;
    g.cls = cls;
    g.order = order;
    g.set(GridKey{std::vector<int>(static_cast<std::size_t>(N), 0), 0}, Rational(1));
    std::uniform_int_distribution<int> mdist(0, 2);
    std::uniform_int_distribution<int> ndist(-4, 4);
    std::uniform_int_distribution<long> nums(-5, 5);
    std::uniform_int_distribution<long> dens(1, 4);
    int placed = 0, attempts = 0;
    while (placed < extra_entries && attempts < 500) {
        ++attempts;
        GridKey k;
        k.multi.resize(static_cast<std::size_t>(N));
        for (int j = 0; j < N; ++j) k.multi[static_cast<std::size_t>(j)] = mdist(rng);
        k.n = ndist(rng);
        int m = k.m();
        if (m + k.n > order || m + k.n < 0) continue;
        if (m == 0 && (k.n == 0 || k.n == 1)) continue;  // keep normalization
        bool ok = false;
        switch (cls) {
            case SlopeClass::ASL: ok = 3 * k.n + 2 * m >= 0; break;
            case SlopeClass::SASL: ok = 2 * k.n + m >= 0; break;
            case SlopeClass::BL: ok = k.n >= 0; break;
        }
        if (!ok) continue;
        Rational v(nums(rng), dens(rng));
        if (v.is_zero()) continue;
        g.set(k, v);
        ++placed;
    }
    return g;
}

}  // namespace grid_oracles
