#include "rhsinv/numtheory.hpp"

#include <numeric>
#include <stdexcept>

namespace rhsinv::numtheory {

namespace {

long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    return std::gcd(a, b);
}

// ((x)) for x = a/q: x - floor(x) - 1/2, and 0 at integers.
Rational sawtooth(long long a, long long q) {
    if (a % q == 0) return Rational(0);
    Rational x(a, q);
    return x - Rational(x.floor()) - Rational(1, 2);
}

// Direct sawtooth evaluation, q > 0.
Rational dedekind_sawtooth(long long p, long long q) {
    Rational s(0);
    for (long long j = 1; j < q; ++j) s += sawtooth(j, q) * sawtooth(p * j, q);
    return s;
}

// q > 0, 0 <= p < q, gcd(p,q) = 1. Reciprocity descent:
//   s(p,q) = (p^2 + q^2 + 1)/(12pq) - 1/4 - s(q,p),  p,q > 0 coprime,
// with s periodic in p mod q. O(log q) like the Euclid algorithm.
Rational dedekind_positive(long long p, long long q) {
    if (q == 1) return Rational(0);
    if (q <= 8) return dedekind_sawtooth(p, q);
    Rational acc(0);
    int flip = 1;
    while (true) {
        p %= q;
        if (q == 1 || p == 0) break;
        if (q <= 8) {
            acc += Rational(flip) * dedekind_sawtooth(p, q);
            break;
        }
        // p^2 + q^2 + 1 can exceed 64 bits for q near 10^6? No: q <= 1e6
        // gives ~2e12, well inside long long; still build Ints to be safe
        // for larger callers.
        Int pp(static_cast<long>(p)), qq(static_cast<long>(q));
        Rational recip = Rational(pp * pp + qq * qq + 1, 12 * pp * qq) - Rational(1, 4);
        acc += Rational(flip) * recip;
        flip = -flip;
        std::swap(p, q);
    }
    return acc;
}

}  // namespace

SurgeryCoeff::SurgeryCoeff(long long p_, long long q_) : p(p_), q(q_) {
    if (q == 0) throw std::domain_error("SurgeryCoeff: q = 0 means no surgery");
    if (gcd_ll(p, q) != 1) throw std::domain_error("SurgeryCoeff: p/q not reduced");
}

SL2Matrix::SL2Matrix(long long p_, long long r_, long long q_, long long s_)
    : p(p_), r(r_), q(q_), s(s_) {
    if (p * s - q * r != 1) throw std::domain_error("SL2Matrix: ps - qr != 1");
}

Rational dedekind_sum(long long p, long long q) {
    if (q == 0) throw std::domain_error("dedekind_sum: q = 0");
    if (gcd_ll(p, q) != 1) throw std::domain_error("dedekind_sum: arguments not coprime");
    int sign_q = q > 0 ? 1 : -1;
    long long qa = q > 0 ? q : -q;
    long long pm = ((p % qa) + qa) % qa;
    Rational s = dedekind_positive(pm, qa);
    return sign_q > 0 ? s : -s;
}

Rational rademacher_phi(const SL2Matrix& m) {
    if (m.q == 0) throw std::domain_error("rademacher_phi: undefined at q = 0");
    return Rational(m.p + m.s, m.q) - Rational(12) * dedekind_sum(m.p, m.q);
}

SL2Matrix complete_surgery_matrix(const SurgeryCoeff& c) {
    long long qa = c.q > 0 ? c.q : -c.q;
    // Extended Euclid: x with p*x == 1 (mod |q|); then s = x mod |q|,
    // r = (p s - 1)/q.
    long long old_r = ((c.p % qa) + qa) % qa, r = qa;
    long long old_x = 1, x = 0;
    while (r != 0) {
        long long k = old_r / r;
        old_r -= k * r;
        std::swap(old_r, r);
        old_x -= k * x;
        std::swap(old_x, x);
    }
    long long s = qa == 1 ? 0 : ((old_x % qa) + qa) % qa;
    long long rr = (c.p * s - 1) / c.q;
    return SL2Matrix(c.p, rr, c.q, s);
}

bool FramingMatrix::is_symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

int signature(const FramingMatrix& m) {
    if (!m.is_symmetric()) throw std::domain_error("signature: matrix not symmetric");
    int n = m.size();
    FramingMatrix a = m;
    int sig = 0;
    for (int k = 0; k < n; ++k) {
        if (a.at(k, k).is_zero()) {
            int pivot = -1;
            for (int j = k + 1; j < n; ++j)
                if (!a.at(j, j).is_zero()) { pivot = j; break; }
            if (pivot >= 0) {
                for (int t = 0; t < n; ++t) std::swap(a.at(k, t), a.at(pivot, t));
                for (int t = 0; t < n; ++t) std::swap(a.at(t, k), a.at(t, pivot));
            } else {
                // All remaining diagonal entries vanish; pull in a hyperbolic
                // partner: row/col k += row/col j makes a(k,k) = 2 a(k,j).
                int partner = -1;
                for (int j = k + 1; j < n; ++j)
                    if (!a.at(k, j).is_zero()) { partner = j; break; }
                if (partner < 0)
                    throw std::domain_error("signature: singular matrix (not a rational homology sphere)");
                for (int t = 0; t < n; ++t) a.at(k, t) += a.at(partner, t);
                for (int t = 0; t < n; ++t) a.at(t, k) += a.at(t, partner);
            }
        }
        const Rational d = a.at(k, k);
        sig += d.sign();
        for (int i = k + 1; i < n; ++i) {
            if (a.at(i, k).is_zero()) continue;
            Rational f = a.at(i, k) / d;
            for (int t = 0; t < n; ++t) a.at(i, t) -= f * a.at(k, t);
            for (int t = 0; t < n; ++t) a.at(t, i) -= f * a.at(t, k);
        }
    }
    return sig;
}

}  // namespace rhsinv::numtheory
