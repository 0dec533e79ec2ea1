#include "rhsinv/finitetype.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rhsinv::finitetype {

using jones::GridKey;
using jones::JonesGrid;
using jones::MilnorData;
using surgery::SurgeryPresentation;

int Diagram::edge_count() const { return static_cast<int>(edge_labels().size()); }

std::vector<int> Diagram::edge_labels() const {
    std::set<int> labels;
    for (const auto& v : vertices) labels.insert(v.begin(), v.end());
    return {labels.begin(), labels.end()};
}

Rational alternating_sum_sublinks(const SurgeryPresentation& sp, int n) {
    sp.validate();
    int N = sp.size();
    if (N > 20) throw std::invalid_argument("alternating_sum_sublinks: too many components");
    Rational acc(0);
    for (std::uint32_t mask = 0; mask < (1u << N); ++mask) {
        std::vector<int> kept;
        for (int j = 0; j < N; ++j)
            if (mask & (1u << j)) kept.push_back(j);
        SurgeryPresentation sub = sp.sublink(kept);
        Rational sn = perturbative_invariants(sub, n).s(n);
        acc += (kept.size() % 2 == 0) ? sn : -sn;
    }
    return acc;
}

namespace {

// Runs f over the 2^n sign vectors; w = prod mu_j.
template <typename F>
Rational signed_mu_sum(int n, F&& f) {
    Rational acc(0);
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        int sum = 0, parity = 0;
        for (int j = 0; j < n; ++j) {
            if (bits & (1u << j)) {
                sum += 1;
            } else {
                sum -= 1;
                parity ^= 1;
            }
        }
        Rational v = f(sum);
        acc += parity ? -v : v;
    }
    return acc;
}

SurgeryPresentation knot_presentation(const JonesGrid& knot, long long p, long long q) {
    SurgeryPresentation sp;
    sp.cls = knot.cls;
    sp.grid = knot;
    sp.components.push_back({numtheory::SurgeryCoeff(p, q), 0});
    return sp;
}

}  // namespace

Rational surgery_shift_alternating_sum(const JonesGrid& knot, long long p, long long q, int n,
                                       int n_prime) {
    if (knot.N != 1) throw std::invalid_argument("surgery_shift_alternating_sum: knot grids only");
    if (n < 1 || n > 20) throw std::invalid_argument("surgery_shift_alternating_sum: bad n");
    return signed_mu_sum(n, [&](int shift) {
        long long qs = q + shift;
        if (qs == 0) throw std::domain_error("surgery_shift_alternating_sum: degenerate surgery q + sum mu = 0");
        SurgeryPresentation sp = knot_presentation(knot, p, qs);
        return perturbative_invariants(sp, n_prime).s(n_prime);
    });
}

Rational surgery_shift_alternating_sum_delta(const JonesGrid& knot, long long p, long long q,
                                             int n, int n_prime) {
    if (knot.N != 1) throw std::invalid_argument("surgery_shift_alternating_sum_delta: knot grids only");
    if (n < 1 || n > 20) throw std::invalid_argument("surgery_shift_alternating_sum_delta: bad n");
    return signed_mu_sum(n, [&](int shift) {
        long long qs = q + shift;
        if (qs == 0) throw std::domain_error("surgery_shift_alternating_sum_delta: degenerate surgery q + sum mu = 0");
        SurgeryPresentation sp = knot_presentation(knot, p, qs);
        return delta_coefficients(sp, n_prime)[static_cast<std::size_t>(n_prime)];
    });
}

namespace {

bool connected_and_bridgeless(const std::vector<std::array<int, 3>>& vertices) {
    int V = static_cast<int>(vertices.size());
    if (V == 0) return false;
    // Edges: each component label joins the two vertices carrying it.
    std::map<int, std::vector<int>> incidence;
    for (int v = 0; v < V; ++v)
        for (int lbl : vertices[static_cast<std::size_t>(v)]) incidence[lbl].push_back(v);
    struct Edge { int a, b; };
    std::vector<Edge> edges;
    for (const auto& [lbl, vs] : incidence) {
        (void)lbl;
        if (vs.size() != 2) return false;
        edges.push_back({vs[0], vs[1]});
    }
    int E = static_cast<int>(edges.size());

    // Connectivity.
    std::vector<int> comp(static_cast<std::size_t>(V), -1);
    std::vector<int> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const Edge& e : edges) {
            int w = -1;
            if (e.a == v) w = e.b;
            else if (e.b == v) w = e.a;
            if (w >= 0 && comp[static_cast<std::size_t>(w)] < 0) {
                comp[static_cast<std::size_t>(w)] = 0;
                stack.push_back(w);
            }
        }
    }
    for (int v = 0; v < V; ++v)
        if (comp[static_cast<std::size_t>(v)] < 0) return false;

    // 1PI: removing any single edge must keep the graph connected.
    for (int skip = 0; skip < E; ++skip) {
        std::fill(comp.begin(), comp.end(), -1);
        stack.assign(1, 0);
        comp[0] = 0;
        int seen = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int ei = 0; ei < E; ++ei) {
                if (ei == skip) continue;
                const Edge& e = edges[static_cast<std::size_t>(ei)];
                int w = -1;
                if (e.a == v) w = e.b;
                else if (e.b == v) w = e.a;
                if (w >= 0 && comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = 0;
                    stack.push_back(w);
                    ++seen;
                }
            }
        }
        if (seen != V) return false;
    }
    return true;
}

void enumerate_multisets(const std::vector<std::array<int, 3>>& candidates, int target,
                         std::size_t from, std::vector<std::array<int, 3>>& picked,
                         std::map<int, int>& degree, std::vector<Diagram>& out) {
    if (static_cast<int>(picked.size()) == target) {
        for (const auto& [lbl, deg] : degree) {
            (void)lbl;
            if (deg != 0 && deg != 2) return;  // every participating label pairs up
        }
        if (!connected_and_bridgeless(picked)) return;
        out.push_back(Diagram{picked});
        return;
    }
    for (std::size_t c = from; c < candidates.size(); ++c) {
        const auto& t = candidates[c];
        bool ok = true;
        for (int lbl : t)
            if (degree[lbl] >= 2) { ok = false; break; }
        if (!ok) continue;
        for (int lbl : t) ++degree[lbl];
        picked.push_back(t);
        enumerate_multisets(candidates, target, c, picked, degree, out);  // repeats allowed
        picked.pop_back();
        for (int lbl : t) --degree[lbl];
    }
}

}  // namespace

std::vector<Diagram> enumerate_diagrams(const MilnorData& milnor, int n) {
    if (n < 1) throw std::invalid_argument("enumerate_diagrams: n must be >= 1");
    std::vector<std::array<int, 3>> candidates;
    for (const auto& [key, mu] : milnor.triples)
        if (mu != 0) candidates.push_back(key);

    std::vector<Diagram> out;
    std::vector<std::array<int, 3>> picked;
    std::map<int, int> degree;
    enumerate_multisets(candidates, 2 * n, 0, picked, degree, out);

    // Each diagram must use exactly 3n distinct components as edges.
    std::vector<Diagram> filtered;
    for (auto& d : out)
        if (d.edge_count() == 3 * n) filtered.push_back(std::move(d));
    return filtered;
}

long long diagram_weight(const Diagram& d) {
    int V = static_cast<int>(d.vertices.size());
    // Slot (v, s) carries the label d.vertices[v][s]; each label must appear
    // in exactly two slots, which an edge then joins.
    std::map<int, std::vector<std::pair<int, int>>> slots;
    for (int v = 0; v < V; ++v)
        for (int s = 0; s < 3; ++s) slots[d.vertices[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)]].push_back({v, s});
    struct Edge { int v1, s1, v2, s2; };
    std::vector<Edge> edges;
    for (const auto& [lbl, sl] : slots) {
        if (sl.size() != 2)
            throw std::invalid_argument("diagram_weight: dangling index, component " +
                                        std::to_string(lbl) + " appears " +
                                        std::to_string(sl.size()) + " times");
        edges.push_back({sl[0].first, sl[0].second, sl[1].first, sl[1].second});
    }
    int E = static_cast<int>(edges.size());
    if (E > 18) throw std::invalid_argument("diagram_weight: diagram too large");

    static const int eps[3][3][3] = {{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
                                     {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
                                     {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}};

    long long total = 0;
    std::vector<int> assign(static_cast<std::size_t>(E), 0);  // edge index values in {0,1,2}
    while (true) {
        // Product of epsilon tensors under this assignment.
        long long prod = 1;
        std::vector<std::array<int, 3>> idx(static_cast<std::size_t>(V), {-1, -1, -1});
        for (int ei = 0; ei < E; ++ei) {
            const Edge& e = edges[static_cast<std::size_t>(ei)];
            idx[static_cast<std::size_t>(e.v1)][static_cast<std::size_t>(e.s1)] = assign[static_cast<std::size_t>(ei)];
            idx[static_cast<std::size_t>(e.v2)][static_cast<std::size_t>(e.s2)] = assign[static_cast<std::size_t>(ei)];
        }
        for (int v = 0; v < V && prod != 0; ++v)
            prod *= eps[idx[static_cast<std::size_t>(v)][0]][idx[static_cast<std::size_t>(v)][1]][idx[static_cast<std::size_t>(v)][2]];
        total += prod;

        int j = 0;
        for (; j < E; ++j) {
            if (assign[static_cast<std::size_t>(j)] < 2) {
                ++assign[static_cast<std::size_t>(j)];
                break;
            }
            assign[static_cast<std::size_t>(j)] = 0;
        }
        if (j == E) break;
    }
    return total;
}

Rational diagram_sum(const SurgeryPresentation& sp, int n) {
    sp.validate();
    if (sp.cls != jones::SlopeClass::ASL)
        throw std::invalid_argument("diagram_sum: ASL presentations only");
    if (n < 1) throw std::invalid_argument("diagram_sum: n must be >= 1");
    if (sp.size() != 3 * n)
        throw std::invalid_argument("diagram_sum: need exactly 3n = " + std::to_string(3 * n) +
                                    " components, got " + std::to_string(sp.size()));
    if (!sp.milnor) throw std::invalid_argument("diagram_sum: Milnor data required");

    Rational sum(0);
    for (const Diagram& d : enumerate_diagrams(*sp.milnor, n)) {
        Rational mu_prod(1);
        for (const auto& v : d.vertices)
            mu_prod *= Rational(static_cast<long>(sp.milnor->mu_triple(v[0], v[1], v[2])));
        sum += Rational(diagram_weight(d)) * mu_prod;
    }

    Rational prefactor = Rational(-4).pow(n);
    if (n == 1) prefactor *= Rational(1, 2);
    for (int j = 0; j < sp.size(); ++j) {
        const auto& c = sp.components[static_cast<std::size_t>(j)];
        prefactor *= Rational(static_cast<long>(c.slope.q), static_cast<long>(sp.denominator(j)));
    }
    return prefactor * sum;
}

DiagramReport two_path_report(const SurgeryPresentation& sp, int n) {
    DiagramReport rep;
    rep.order = n;
    rep.alternating_sum = alternating_sum_sublinks(sp, n);
    rep.diagram_value = diagram_sum(sp, n);
    if (sp.milnor)
        for (const Diagram& d : enumerate_diagrams(*sp.milnor, n)) {
            rep.weights.push_back(diagram_weight(d));
            rep.diagrams.push_back(d);
        }
    rep.match = rep.alternating_sum == rep.diagram_value;
    return rep;
}

}  // namespace rhsinv::finitetype
