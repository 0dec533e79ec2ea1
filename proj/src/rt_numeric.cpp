#include "rhsinv/rt_numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace rhsinv::rt {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Compensated complex accumulator; the surgery sums have O(K|q|) unit-modulus
// terms and the acceptance tolerances sit at 1e-9.
struct KahanSum {
    Complex sum{0.0, 0.0};
    Complex c{0.0, 0.0};

    void add(Complex x) {
        Complex y = x - c;
        Complex t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

void check_colors(int alpha, int beta, RTLevel level) {
    if (alpha < 1 || alpha > level.K - 1 || beta < 1 || beta > level.K - 1)
        throw std::domain_error("rt: colors must lie in 1..K-1");
}

Complex ensure_finite(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::runtime_error("rt: non-finite value");
    return z;
}

}  // namespace

RTLevel::RTLevel(int k_) : k(k_), K(k_ + 2) {
    if (K < 3) throw std::domain_error("RTLevel: K = k + 2 must be >= 3");
}

Complex u_tilde(const numtheory::SL2Matrix& m, int alpha, int beta, RTLevel level) {
    if (m.q == 0) throw std::domain_error("u_tilde: q = 0");
    check_colors(alpha, beta, level);
    const double K = level.K;
    const double q = static_cast<double>(m.q);
    const long long qa = m.q > 0 ? m.q : -m.q;
    const double phi = numtheory::rademacher_phi(m).to_double();

    KahanSum s;
    for (long long n = 0; n < qa; ++n) {
        for (int mu : {+1, -1}) {
            double w = 2.0 * K * static_cast<double>(n) + mu * static_cast<double>(beta);
            double arg = kPi / (2.0 * K * q) *
                         (static_cast<double>(m.p) * alpha * alpha - 2.0 * alpha * w +
                          static_cast<double>(m.s) * w * w);
            s.add(static_cast<double>(mu) * std::polar(1.0, arg));
        }
    }
    Complex prefactor = Complex(0.0, 1.0) * static_cast<double>(m.q > 0 ? 1 : -1) /
                        std::sqrt(2.0 * K * static_cast<double>(qa)) *
                        std::polar(1.0, -kPi * phi / 4.0);
    return ensure_finite(prefactor * s.sum);
}

Complex u_hat(const numtheory::SurgeryCoeff& c, int alpha, int beta, RTLevel level) {
    check_colors(alpha, beta, level);
    numtheory::SL2Matrix m = numtheory::complete_surgery_matrix(c);
    const double K = level.K;
    const double q = static_cast<double>(m.q);
    const double phi = numtheory::rademacher_phi(m).to_double();
    double sign_q = m.q > 0 ? 1.0 : -1.0;
    double amp = std::sqrt(2.0 / (K * std::abs(q))) * sign_q;
    double arg = kPi / (2.0 * K * q) *
                 (static_cast<double>(m.p) * alpha * alpha + static_cast<double>(m.s) * beta * beta);
    return ensure_finite(amp * std::polar(1.0, -kPi * phi / 4.0) *
                         std::sin(kPi * alpha * beta / (K * q)) * std::polar(1.0, arg));
}

double z_sphere(RTLevel level) {
    return std::sqrt(2.0 / level.K) * std::sin(kPi / level.K);
}

Complex rt_unknot_surgery(const std::vector<numtheory::SurgeryCoeff>& surgeries, RTLevel level) {
    const double K = level.K;
    const int N = static_cast<int>(surgeries.size());

    // L_tot = diag(p_j/q_j) for a split 0-framed unlink.
    numtheory::FramingMatrix ltot(N);
    for (int j = 0; j < N; ++j)
        ltot.at(j, j) = Rational(static_cast<long>(surgeries[static_cast<std::size_t>(j)].p),
                                 static_cast<long>(surgeries[static_cast<std::size_t>(j)].q));
    int sig = N == 0 ? 0 : numtheory::signature(ltot);

    double phi_sum = 0.0;
    Complex product(1.0, 0.0);
    const double sin1 = std::sin(kPi / K);
    for (const auto& c : surgeries) {
        numtheory::SL2Matrix m = numtheory::complete_surgery_matrix(c);
        phi_sum += numtheory::rademacher_phi(m).to_double();
        KahanSum s;
        for (int alpha = 1; alpha <= level.K - 1; ++alpha)
            s.add(std::sin(kPi * alpha / K) / sin1 * u_tilde(m, alpha, 1, level));
        product *= s.sum;
    }
    double phi_fr = kPi / 4.0 * (K - 2.0) / K * (phi_sum - 3.0 * sig);
    return ensure_finite(std::polar(1.0, phi_fr) * z_sphere(level) * product);
}

Complex lens_trivial_connection(long long p, long long q, RTLevel level) {
    if (p == 0) throw std::domain_error("lens_trivial_connection: p = 0");
    const double K = level.K;
    const double pa = static_cast<double>(p < 0 ? -p : p);
    double s = numtheory::dedekind_sum(q, p).to_double();
    return std::sqrt(2.0 / (K * pa)) * std::sin(kPi / (K * pa)) *
           std::polar(1.0, -6.0 * kPi * s / K);
}

Complex lens_sum_trivial_connection(const std::vector<numtheory::SurgeryCoeff>& factors,
                                    RTLevel level) {
    Complex z(z_sphere(level), 0.0);
    for (const auto& c : factors) z *= lens_trivial_connection(c.p, c.q, level) / z_sphere(level);
    return z;
}

}  // namespace rhsinv::rt
