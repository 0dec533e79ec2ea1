#pragma once

#include <complex>
#include <vector>

#include "rhsinv/numtheory.hpp"

namespace rhsinv::rt {

// Level of the finite sums: K = k + 2 >= 3.
struct RTLevel {
    int k = 1;
    int K = 3;

    RTLevel() = default;
    explicit RTLevel(int k_);
};

using Complex = std::complex<double>;

// Representation matrix element of (p r; q s) on level-k characters:
//   Utilde_{ab} = i sign(q)/sqrt(2K|q|) e^{-i pi Phi/4}
//     sum_{n mod |q|} sum_{mu=+-1} mu
//       exp[(i pi)/(2Kq) (p a^2 - 2a(2Kn + mu b) + s (2Kn + mu b)^2)].
// Colors 1 <= a, b <= K-1.
Complex u_tilde(const numtheory::SL2Matrix& m, int alpha, int beta, RTLevel level);

// Trivial-connection truncation of u_tilde (n = 0 term only):
//   Uhat_{ab} = sqrt(2/(K|q|)) sign(q) e^{-i pi Phi/4} sin(pi a b/(K q))
//               exp[(i pi)/(2Kq) (p a^2 + s b^2)].
// The slope is completed canonically to an SL(2,Z) matrix.
Complex u_hat(const numtheory::SurgeryCoeff& c, int alpha, int beta, RTLevel level);

// Z(S^3; k) = sqrt(2/K) sin(pi/K).
double z_sphere(RTLevel level);

// Full surgery sum for rational surgeries on a split unlink in S^3:
//   Z(M') = e^{i phi_fr} sum_{colors} Z(S^3) prod_j [sin(pi a_j/K)/sin(pi/K)]
//           Utilde^{(p_j,q_j)}_{a_j 1},
//   phi_fr = (pi/4)((K-2)/K) [sum_j Phi_j - 3 sign(L_tot)].
// The sum factorizes over components for a split unlink.
Complex rt_unknot_surgery(const std::vector<numtheory::SurgeryCoeff>& surgeries, RTLevel level);

// Trivial-connection value of a lens space at finite K, from the closed form
//   Z_tr(L(p,q)) = sqrt(2/(K|p|)) sin(pi/(K|p|)) e^{-6 pi i s(q,p)/K}.
Complex lens_trivial_connection(long long p, long long q, RTLevel level);

// Same for a connected sum of lens spaces: product over factors divided by
// Z(S^3)^{count-1}.
Complex lens_sum_trivial_connection(const std::vector<numtheory::SurgeryCoeff>& factors,
                                    RTLevel level);

}  // namespace rhsinv::rt
