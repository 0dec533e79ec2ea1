#pragma once

#include <optional>
#include <vector>

#include "rhsinv/jones.hpp"
#include "rhsinv/numtheory.hpp"
#include "rhsinv/rational.hpp"
#include "rhsinv/series.hpp"

namespace rhsinv::surgery {

// Invariants of a rational homology sphere: the series sum_n S_n h^n
// (constant term 0, h = i*pi/K), the order of H_1, and lambda_CW = S_1/6.
struct RhsInvariants {
    series::KSeries S;
    Int ord_h1 = 1;

    int order() const { return S.order(); }
    Rational s(int n) const { return S.coeff(n); }
    Rational lambda_cw() const { return S.coeff(1) / Rational(6); }

    static RhsInvariants sphere(int order);
};

struct ComponentSurgery {
    numtheory::SurgeryCoeff slope;
    long long framing = 0;
};

// Rational surgery presentation on a special link in a rational homology
// sphere (default base S^3). Off-diagonal linking numbers must vanish for
// every supported class.
struct SurgeryPresentation {
    jones::SlopeClass cls = jones::SlopeClass::BL;
    std::vector<ComponentSurgery> components;
    std::vector<std::vector<long long>> linking;  // empty means zero matrix + framings
    jones::JonesGrid grid;
    std::optional<jones::MilnorData> milnor;
    std::optional<RhsInvariants> base;

    int size() const { return static_cast<int>(components.size()); }
    long long denominator(int j) const;  // P_j = p_j + q_j * l_jj
    void validate() const;

    // Presentation for the sublink of the components listed in `kept`
    // (ascending): removed components are substituted out of the grid and
    // the Milnor data is restricted.
    SurgeryPresentation sublink(const std::vector<int>& kept) const;
};

// Delta_fr = (1/2) sum_j [ 12 s(p_j,q_j) - (p_j/q_j + l_jj)
//                          - 1/(q_j P_j) + 3 sign(p_j/q_j + l_jj) ].
Rational framing_correction(const SurgeryPresentation& sp);

// Delta_n = sum_{m} (-1)^m/2^m sum_multi dtilde^{(m,n-m)}_{m_1..m_N}
//           prod_j (2m_j)!/m_j! (q_j/P_j)^{m_j},  n = 1..n_max.
// Index 0 of the returned vector is unused (zero).
std::vector<Rational> delta_coefficients(const SurgeryPresentation& sp, int n_max);

// sum S_n(M') h^n = sum S_n(M) h^n + Delta_fr h + log(1 + sum Delta_n h^n),
// ord H_1(M') = ord H_1(M) * prod |P_j|.
RhsInvariants perturbative_invariants(const SurgeryPresentation& sp, int n_max);

// Closed form for the lens space L(p,q):
// S_1 = -6 s(q,p); higher terms from log(sin z/z), z = pi/(Kp):
// S_2 = 1/(6p^2), S_3 = 0, S_4 = -1/(180 p^4), ...; ord H_1 = |p|.
RhsInvariants lens_space_invariants(long long p, long long q, int n_max);

// S_n(a # b) = S_n(a) + S_n(b) - S_n(S^3); ord H_1 multiplies.
// Mixed orders truncate to the shorter one (series truncation hook fires).
RhsInvariants connected_sum(const RhsInvariants& a, const RhsInvariants& b);

// S_1 by the explicit surgery formula in terms of phi_1 data:
// S_1(M') = S_1(M) + Delta_fr + 12 [ sum_j (phi1(L_j) - 1/24)/(p_j/q_j + l_jj)
//            + sum_{i<j} phi1(L_i,L_j)/prod + sum_{i<j<k} phi1/prod ].
Rational hoste_s1(const SurgeryPresentation& sp);

struct IntegerizeResult {
    Rational value;   // 2^{3n} n! (2n)! (9n)! (ord H_1)^n S_n
    bool integral = false;
};

IntegerizeResult integerize(const RhsInvariants& inv, int n);

struct DenominatorReport {
    bool pass = true;
    Int denominator = 1;          // denominator of (ord H_1)^n S_n
    std::vector<Int> prime_factors;
    std::vector<Int> offending;   // prime factors > 2n
};

// Every prime factor of the denominator of (ord H_1)^n S_n must be <= 2n.
DenominatorReport denominator_bound_check(const RhsInvariants& inv, int n);

}  // namespace rhsinv::surgery
