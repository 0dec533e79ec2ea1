#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "rhsinv/rational.hpp"
#include "rhsinv/series.hpp"

namespace rhsinv::jones {

// Link class and the slope index sigma bounding its expansion grid
// (n >= -sigma*m): algebraically split (2/3), special algebraically split
// (1/2, triple Milnor numbers vanish too), boundary link (0).
enum class SlopeClass { ASL, SASL, BL };

Rational slope_sigma(SlopeClass c);
const char* slope_class_name(SlopeClass c);
SlopeClass slope_class_from_name(const std::string& name);

// Per-component even powers: entry key (m_1..m_N, n) denotes the coefficient
// d^{(m,n)}_{m_1..m_N} of a_1^{2m_1}...a_N^{2m_N} K^{-n}, m = sum m_j.
struct GridKey {
    std::vector<int> multi;
    int n = 0;

    int m() const;
    bool operator<(const GridKey& o) const;  // ordered by (m, n, multi)
    bool operator==(const GridKey& o) const { return n == o.n && multi == o.multi; }
};

// Expansion grid of a colored Jones polynomial around the trivial connection:
//   J = K^N (prod_j a_j) sum d^{(m,n)}_{m_1..m_N} (i pi)^{2m+n} K^{-n} prod a_j^{2m_j}.
// Sparse: absent entries are zero. Only entries with m + n <= order are kept;
// entries above that window cannot influence invariants S_1..S_order.
struct JonesGrid {
    int N = 0;
    SlopeClass cls = SlopeClass::BL;
    int order = 0;
    std::map<GridKey, Rational> entries;

    Rational at(const GridKey& k) const;
    void set(GridKey k, Rational v);  // drops zeros; rejects out-of-window keys
    bool in_window(const GridKey& k) const;
};

// Same shape for the even part of the shifted polynomial
//   Jtilde = (prod_j P_j / 2^N) sum_{mu_j = +-1} (prod mu_j) J(a_j + mu_j/(K P_j)),
// which has no positive powers of K. Records the shift denominators P_j.
struct ShiftedJonesGrid {
    int N = 0;
    SlopeClass cls = SlopeClass::BL;
    int order = 0;
    std::vector<long long> denominators;
    std::map<GridKey, Rational> entries;

    Rational at(const GridKey& k) const;
};

struct SlopeViolation {
    GridKey key;
    std::string message;
};

struct SlopeReport {
    bool ok = true;
    std::vector<SlopeViolation> violations;
};

// Checks n >= -sigma*m for every entry plus the normalization d(0,0) = 1,
// d(0,1) = 0. Report-based; engine entry points throw on a failing report.
SlopeReport validate_slope(const JonesGrid& g);
void require_valid(const JonesGrid& g);

// Milnor data and Hoste's phi_1 coefficients of a special link. phi_1(L') is
// the coefficient of z^{#L'+1} in the one-variable Alexander polynomial of
// the sublink L'. Where both are given, phi_1 pairs must equal mu_iijj and
// phi_1 triples must equal mu_ijk^2; missing phi_1 entries fall back to the
// Milnor numbers (and to 0).
struct MilnorData {
    int N = 0;
    std::map<std::array<int, 3>, long long> triples;        // keys i<j<k
    std::map<std::array<int, 2>, long long> quartic_pairs;  // keys i<j
    std::map<int, Rational> phi1_singles;
    std::map<std::array<int, 2>, Rational> phi1_pairs;
    std::map<std::array<int, 3>, Rational> phi1_triples;

    void validate() const;

    long long mu_triple(int i, int j, int k) const;
    Rational phi1_single(int j) const;
    Rational phi1_pair(int i, int j) const;
    Rational phi1_triple(int i, int j, int k) const;

    MilnorData restricted(const std::vector<int>& kept) const;
};

// Grid of the unknot: J = sin(pi a)/sin(pi/K), i.e.
// d_{m,n} = e_n/(2m+1)! with sum e_n h^n = inverse of sum h^{2k}/(2k+1)!.
JonesGrid unknot_grid(int order);

// Diagonal column d_{m,0} as a series in X = (i pi a)^2:
// pi*a * sum d_{m,0} X^m = sin(pi a)/Delta_A(e^{2 pi i a}) for a
// homologically trivial knot.
series::KSeries alexander_diagonal(const JonesGrid& g);

// Even part of the shifted polynomial on the formal grid. Each source
// monomial a_j^{2m_j+1} expands binomially in eps_j = 1/(K P_j); the
// mu-antisymmetrization keeps odd powers of eps_j, so
//   dtilde^{(m',n')} = sum_{t_j>=0} prod_j C(2(m'_j+t_j)+1, 2t_j+1) P_j^{-2t_j}
//                      * d^{(m'+T, n'-2T)}, T = sum t_j.
// On a grid with no negative-n entries this gives dtilde_{m,0} = (2m+1) d_{m,0}.
ShiftedJonesGrid shift_grid(const JonesGrid& g, const std::vector<long long>& denominators);

// Sets a_j = 1/K: entry with exponent 2m_j moves to (m - m_j, n + 2m_j) on
// the remaining components.
JonesGrid remove_component(const JonesGrid& g, int j);

// Low-order ASL grid determined by phi_1 data:
//   dtilde_{1,0}  = -12 sum_j (phi1(L_j) - 1/24) a_j^2        (d = dtilde/3)
//   dtilde_{2,-1} =  12 sum_{i<j} phi1(L_i,L_j) a_i^2 a_j^2   (d = dtilde/9)
//   dtilde_{3,-2} = -12 sum_{i<j<k} phi1(L_i,L_j,L_k) a^2a^2a^2 (d = dtilde/27)
// plus d(0,0) = 1; all other entries at this order are zero.
JonesGrid asl_low_order_grid(const MilnorData& m, int order, SlopeClass cls = SlopeClass::ASL);

}  // namespace rhsinv::jones
