#pragma once

#include <cstdint>
#include <vector>

#include "rhsinv/rational.hpp"

namespace rhsinv::numtheory {

// Rational surgery slope p/q. gcd(|p|,|q|) = 1 and q != 0; q = 0 would mean
// "no surgery" and is rejected when presentations are parsed.
struct SurgeryCoeff {
    long long p = 0;
    long long q = 1;

    SurgeryCoeff() = default;
    SurgeryCoeff(long long p_, long long q_);
};

// Integer matrix (p r; q s) with ps - qr = 1.
struct SL2Matrix {
    long long p = 1, r = 0, q = 0, s = 1;

    SL2Matrix() = default;
    SL2Matrix(long long p_, long long r_, long long q_, long long s_);
};

// Dedekind sum s(p,q) = (1/4q) sum_{j mod q} cot(pi j/q) cot(pi p j/q),
// computed exactly: the sawtooth sum s(p,q) = sum_j ((j/q))((pj/q)) for small
// q, reciprocity descent otherwise. Odd in each argument; s(p,-q) = -s(p,q)
// follows from reading the cotangent sum over residues mod |q| with the
// signed 1/(4q) prefactor.
Rational dedekind_sum(long long p, long long q);

// Rademacher function Phi(p r; q s) = (p+s)/q - 12 s(p,q). Undefined at q=0.
Rational rademacher_phi(const SL2Matrix& m);

// Completes a surgery slope to an SL(2,Z) matrix (p r; q s), ps - qr = 1.
// Canonical choice: the unique s with 0 <= s < |q| (solutions differ by
// (r,s) -> (r+p, s+q), so s is determined mod |q|); exported invariants do
// not depend on the choice.
SL2Matrix complete_surgery_matrix(const SurgeryCoeff& c);

// Symmetric matrix of rationals; off-diagonal entries are linking numbers,
// the diagonal carries framings plus surgery slopes.
struct FramingMatrix {
    explicit FramingMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

    int size() const { return n_; }
    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    bool is_symmetric() const;

private:
    int n_;
    std::vector<Rational> a_;
};

// Signature (n_+ - n_-) by exact symmetric Gaussian elimination (congruence
// diagonalization, Sylvester's law of inertia). Throws std::domain_error on a
// singular matrix: the presentation is not a rational homology sphere.
int signature(const FramingMatrix& m);

}  // namespace rhsinv::numtheory
