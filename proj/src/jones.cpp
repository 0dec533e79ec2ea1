#include "rhsinv/jones.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rhsinv::jones {

Rational slope_sigma(SlopeClass c) {
    switch (c) {
        case SlopeClass::ASL: return Rational(2, 3);
        case SlopeClass::SASL: return Rational(1, 2);
        case SlopeClass::BL: return Rational(0);
    }
    throw std::logic_error("slope_sigma: bad class");
}

const char* slope_class_name(SlopeClass c) {
    switch (c) {
        case SlopeClass::ASL: return "ASL";
        case SlopeClass::SASL: return "SASL";
        case SlopeClass::BL: return "BL";
    }
    throw std::logic_error("slope_class_name: bad class");
}

SlopeClass slope_class_from_name(const std::string& name) {
    if (name == "ASL") return SlopeClass::ASL;
    if (name == "SASL") return SlopeClass::SASL;
    if (name == "BL") return SlopeClass::BL;
    throw std::invalid_argument("unknown link class \"" + name + "\" (expected ASL, SASL or BL)");
}

int GridKey::m() const { return std::accumulate(multi.begin(), multi.end(), 0); }

bool GridKey::operator<(const GridKey& o) const {
    int ma = m(), mb = o.m();
    if (ma != mb) return ma < mb;
    if (n != o.n) return n < o.n;
    return multi < o.multi;
}

namespace {

std::string key_str(const GridKey& k) {
    std::string s = "(m=" + std::to_string(k.m()) + ", n=" + std::to_string(k.n) + ", multi=[";
    for (std::size_t i = 0; i < k.multi.size(); ++i)
        s += (i ? "," : "") + std::to_string(k.multi[i]);
    return s + "])";
}

bool slope_ok(SlopeClass cls, int m, int n) {
    switch (cls) {
        case SlopeClass::ASL: return 3 * n + 2 * m >= 0;
        case SlopeClass::SASL: return 2 * n + m >= 0;
        case SlopeClass::BL: return n >= 0;
    }
    return false;
}

void check_key_shape(int N, const GridKey& k) {
    if (static_cast<int>(k.multi.size()) != N)
        throw std::invalid_argument("grid entry " + key_str(k) + ": multi-index length != N");
    for (int mj : k.multi)
        if (mj < 0) throw std::invalid_argument("grid entry " + key_str(k) + ": negative exponent");
}

}  // namespace

Rational JonesGrid::at(const GridKey& k) const {
    auto it = entries.find(k);
    return it == entries.end() ? Rational(0) : it->second;
}

bool JonesGrid::in_window(const GridKey& k) const { return k.m() + k.n <= order; }

void JonesGrid::set(GridKey k, Rational v) {
    check_key_shape(N, k);
    if (!in_window(k))
        throw std::invalid_argument("grid entry " + key_str(k) + ": outside the m+n <= " +
                                    std::to_string(order) + " window");
    if (v.is_zero())
        entries.erase(k);
    else
        entries[std::move(k)] = std::move(v);
}

Rational ShiftedJonesGrid::at(const GridKey& k) const {
    auto it = entries.find(k);
    return it == entries.end() ? Rational(0) : it->second;
}

SlopeReport validate_slope(const JonesGrid& g) {
    SlopeReport rep;
    for (const auto& [key, value] : g.entries) {
        (void)value;
        int m = key.m();
        if (!slope_ok(g.cls, m, key.n)) {
            rep.ok = false;
            rep.violations.push_back(
                {key, "entry " + key_str(key) + " violates n >= -sigma*m for class " +
                          slope_class_name(g.cls)});
        }
    }
    GridKey zero{std::vector<int>(static_cast<std::size_t>(g.N), 0), 0};
    if (g.at(zero) != Rational(1)) {
        rep.ok = false;
        rep.violations.push_back({zero, "normalization d(0,0) != 1"});
    }
    GridKey one{std::vector<int>(static_cast<std::size_t>(g.N), 0), 1};
    if (g.order >= 1 && !g.at(one).is_zero()) {
        rep.ok = false;
        rep.violations.push_back({one, "normalization d(0,1) != 0"});
    }
    return rep;
}

void require_valid(const JonesGrid& g) {
    SlopeReport rep = validate_slope(g);
    if (!rep.ok) throw std::invalid_argument("invalid Jones grid: " + rep.violations.front().message);
}

void MilnorData::validate() const {
    auto in_range = [this](int i) { return i >= 0 && i < N; };
    for (const auto& [k, v] : triples) {
        (void)v;
        if (!(in_range(k[0]) && k[0] < k[1] && k[1] < k[2] && in_range(k[2])))
            throw std::invalid_argument("MilnorData: triple index out of order or range");
    }
    for (const auto& [k, v] : quartic_pairs) {
        (void)v;
        if (!(in_range(k[0]) && k[0] < k[1] && in_range(k[1])))
            throw std::invalid_argument("MilnorData: pair index out of order or range");
    }
    for (const auto& [k, v] : phi1_pairs) {
        auto it = quartic_pairs.find(k);
        if (it != quartic_pairs.end() && v != Rational(it->second))
            throw std::invalid_argument("MilnorData: phi1 pair differs from mu_iijj");
    }
    for (const auto& [k, v] : phi1_triples) {
        auto it = triples.find(k);
        if (it != triples.end() && v != Rational(it->second * it->second))
            throw std::invalid_argument("MilnorData: phi1 triple differs from mu_ijk^2");
    }
}

long long MilnorData::mu_triple(int i, int j, int k) const {
    std::array<int, 3> key{i, j, k};
    std::sort(key.begin(), key.end());
    auto it = triples.find(key);
    return it == triples.end() ? 0 : it->second;
}

Rational MilnorData::phi1_single(int j) const {
    auto it = phi1_singles.find(j);
    return it == phi1_singles.end() ? Rational(0) : it->second;
}

Rational MilnorData::phi1_pair(int i, int j) const {
    std::array<int, 2> key{std::min(i, j), std::max(i, j)};
    if (auto it = phi1_pairs.find(key); it != phi1_pairs.end()) return it->second;
    if (auto it = quartic_pairs.find(key); it != quartic_pairs.end()) return Rational(it->second);
    return Rational(0);
}

Rational MilnorData::phi1_triple(int i, int j, int k) const {
    std::array<int, 3> key{i, j, k};
    std::sort(key.begin(), key.end());
    if (auto it = phi1_triples.find(key); it != phi1_triples.end()) return it->second;
    if (auto it = triples.find(key); it != triples.end())
        return Rational(it->second * it->second);
    return Rational(0);
}

MilnorData MilnorData::restricted(const std::vector<int>& kept) const {
    std::vector<int> newindex(static_cast<std::size_t>(N), -1);
    for (std::size_t t = 0; t < kept.size(); ++t) newindex[static_cast<std::size_t>(kept[t])] = static_cast<int>(t);
    MilnorData r;
    r.N = static_cast<int>(kept.size());
    auto live = [&](int i) { return newindex[static_cast<std::size_t>(i)] >= 0; };
    for (const auto& [k, v] : triples)
        if (live(k[0]) && live(k[1]) && live(k[2]))
            r.triples[{newindex[k[0]], newindex[k[1]], newindex[k[2]]}] = v;
    for (const auto& [k, v] : quartic_pairs)
        if (live(k[0]) && live(k[1])) r.quartic_pairs[{newindex[k[0]], newindex[k[1]]}] = v;
    for (const auto& [k, v] : phi1_singles)
        if (live(k)) r.phi1_singles[newindex[static_cast<std::size_t>(k)]] = v;
    for (const auto& [k, v] : phi1_pairs)
        if (live(k[0]) && live(k[1])) r.phi1_pairs[{newindex[k[0]], newindex[k[1]]}] = v;
    for (const auto& [k, v] : phi1_triples)
        if (live(k[0]) && live(k[1]) && live(k[2]))
            r.phi1_triples[{newindex[k[0]], newindex[k[1]], newindex[k[2]]}] = v;
    return r;
}

JonesGrid unknot_grid(int order) {
    if (order < 0) throw std::invalid_argument("unknot_grid: negative order");
    JonesGrid g;
    g.N = 1;
    g.cls = SlopeClass::BL;
    g.order = order;
    // e_n: h/sinh(h) written in h, the inverse series of sum h^{2k}/(2k+1)!.
    series::KSeries sinc(order);
    for (int k = 0; 2 * k <= order; ++k)
        sinc.set_coeff(2 * k, Rational(Int(1), factorial(2 * static_cast<unsigned long>(k) + 1)));
    series::KSeries e = series_inverse(sinc);
    for (int n = 0; n <= order; ++n) {
        if (e.coeff(n).is_zero()) continue;
        for (int m = 0; m + n <= order; ++m)
            g.set(GridKey{{m}, n},
                  e.coeff(n) * Rational(Int(1), factorial(2 * static_cast<unsigned long>(m) + 1)));
    }
    return g;
}

series::KSeries alexander_diagonal(const JonesGrid& g) {
    if (g.N != 1) throw std::domain_error("alexander_diagonal: knot grids only (N = 1)");
    series::KSeries r(g.order);
    for (int m = 0; m <= g.order; ++m) r.set_coeff(m, g.at(GridKey{{m}, 0}));
    return r;
}

ShiftedJonesGrid shift_grid(const JonesGrid& g, const std::vector<long long>& denominators) {
    if (static_cast<int>(denominators.size()) != g.N)
        throw std::invalid_argument("shift_grid: need one denominator per component");
    for (long long d : denominators)
        if (d == 0) throw std::domain_error("shift_grid: degenerate surgery, p + q*l = 0");

    ShiftedJonesGrid out;
    out.N = g.N;
    out.cls = g.cls;
    out.order = g.order;
    out.denominators = denominators;

    // Walk t-vectors 0 <= t_j <= m_j per source entry; target entry lives at
    // (multi - t, n + 2T) with weight prod_j C(2 m_j + 1, 2 t_j + 1) P_j^{-2 t_j}.
    for (const auto& [key, value] : g.entries) {
        std::vector<int> t(static_cast<std::size_t>(g.N), 0);
        while (true) {
            int T = std::accumulate(t.begin(), t.end(), 0);
            GridKey target;
            target.n = key.n + 2 * T;
            target.multi.resize(static_cast<std::size_t>(g.N));
            Rational w(1);
            for (int j = 0; j < g.N; ++j) {
                int mj = key.multi[static_cast<std::size_t>(j)];
                int tj = t[static_cast<std::size_t>(j)];
                target.multi[static_cast<std::size_t>(j)] = mj - tj;
                w *= Rational(binomial(2 * static_cast<unsigned long>(mj) + 1,
                                       2 * static_cast<unsigned long>(tj) + 1));
                if (tj > 0)
                    w *= Rational(Int(1), Int(static_cast<long>(denominators[static_cast<std::size_t>(j)]))).pow(2 * tj);
            }
            if (target.m() + target.n <= out.order) {
                Rational acc = out.at(target) + w * value;
                if (acc.is_zero())
                    out.entries.erase(target);
                else
                    out.entries[target] = acc;
            }
            // next t-vector
            int j = 0;
            for (; j < g.N; ++j) {
                if (t[static_cast<std::size_t>(j)] < key.multi[static_cast<std::size_t>(j)]) {
                    ++t[static_cast<std::size_t>(j)];
                    break;
                }
                t[static_cast<std::size_t>(j)] = 0;
            }
            if (j == g.N) break;
        }
    }
    return out;
}

JonesGrid remove_component(const JonesGrid& g, int j) {
    if (j < 0 || j >= g.N) throw std::invalid_argument("remove_component: index out of range");
    JonesGrid out;
    out.N = g.N - 1;
    out.cls = g.cls;
    out.order = g.order;
    for (const auto& [key, value] : g.entries) {
        int mj = key.multi[static_cast<std::size_t>(j)];
        GridKey target;
        target.n = key.n + 2 * mj;
        target.multi = key.multi;
        target.multi.erase(target.multi.begin() + j);
        if (target.m() + target.n > out.order) continue;
        Rational acc = out.at(target) + value;
        if (acc.is_zero())
            out.entries.erase(target);
        else
            out.entries[target] = acc;
    }
    return out;
}

JonesGrid asl_low_order_grid(const MilnorData& m, int order, SlopeClass cls) {
    if (order < 1) throw std::invalid_argument("asl_low_order_grid: order must be >= 1");
    m.validate();
    if (cls != SlopeClass::ASL) {
        for (int i = 0; i < m.N; ++i)
            for (int j = i + 1; j < m.N; ++j)
                for (int k = j + 1; k < m.N; ++k)
                    if (!m.phi1_triple(i, j, k).is_zero())
                        throw std::invalid_argument("asl_low_order_grid: triple data on a non-ASL class");
        if (cls == SlopeClass::BL)
            for (int i = 0; i < m.N; ++i)
                for (int j = i + 1; j < m.N; ++j)
                    if (!m.phi1_pair(i, j).is_zero())
                        throw std::invalid_argument("asl_low_order_grid: pair data on a boundary link");
    }

    JonesGrid g;
    g.N = m.N;
    g.cls = cls;
    g.order = order;
    auto basis = [&](std::initializer_list<int> comps) {
        std::vector<int> v(static_cast<std::size_t>(m.N), 0);
        for (int c : comps) v[static_cast<std::size_t>(c)] = 1;
        return v;
    };
    g.set(GridKey{std::vector<int>(static_cast<std::size_t>(m.N), 0), 0}, Rational(1));
    for (int j = 0; j < m.N; ++j)
        g.set(GridKey{basis({j}), 0}, Rational(-4) * (m.phi1_single(j) - Rational(1, 24)));
    for (int i = 0; i < m.N; ++i)
        for (int j = i + 1; j < m.N; ++j)
            g.set(GridKey{basis({i, j}), -1}, Rational(4, 3) * m.phi1_pair(i, j));
    for (int i = 0; i < m.N; ++i)
        for (int j = i + 1; j < m.N; ++j)
            for (int k = j + 1; k < m.N; ++k)
                g.set(GridKey{basis({i, j, k}), -2}, Rational(-4, 9) * m.phi1_triple(i, j, k));
    require_valid(g);
    return g;
}

}  // namespace rhsinv::jones
