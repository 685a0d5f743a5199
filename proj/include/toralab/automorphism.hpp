#pragma once

#include "toralab/algebra.hpp"
#include "toralab/report.hpp"

namespace toralab {

/// Element of GL(N, Z): integer matrix with determinant +-1.
struct IntegralMatrix {
    int n = 0;
    std::array<std::array<long long, kMaxArity>, kMaxArity> a{};

    IntegralMatrix() = default;
    explicit IntegralMatrix(int size) : n(size) {
        if (size < 1 || size > kMaxArity) throw ArityError("IntegralMatrix: size out of range");
    }
    static IntegralMatrix identity(int n);

    long long at(int i, int j) const { return a[i][j]; }
    void set(int i, int j, long long v) { a[i][j] = v; }

    long long det() const;
    bool unimodular() const { return det() == 1 || det() == -1; }
    IntegralMatrix transpose() const;
    /// Exact inverse; requires |det| = 1.
    IntegralMatrix inverse() const;
    friend IntegralMatrix operator*(const IntegralMatrix& x, const IntegralMatrix& y);
    friend bool operator==(const IntegralMatrix& x, const IntegralMatrix& y);

    Deg apply(const Deg& d) const;
    RatVec apply(const RatVec& v) const;

    std::string str() const;
    json to_json() const;
};

/// Identity outside rows/cols {m, 2m}, with block [[a,1],[a-1,1]] there
/// (1-based m, 2m <= N). Requires 2a - 1 > 0; the determinant is 1.
IntegralMatrix shear_matrix(long long a, int m, int N);

/// The GL(N,Z) action X(r) -> X(Br), K(u,r) -> K(Bu,Br),
/// D(u,r) -> D(Fu,Br) with F = (B^T)^{-1}. The result is normalized for the
/// target family; families not stable under B surface InadmissibleElement.
Element apply_automorphism(const AlgebraSpec& spec, const IntegralMatrix& B, const Element& x);

/// B[x,y] = [Bx,By] over all unordered window generator pairs.
VerificationReport verify_automorphism(const AlgebraSpec& spec, const IntegralMatrix& B, const Window& w);

/// Span equality B(K) = K_B at every window degree (N even): the image of
/// the ideal K under B against K_B from its own defining constraint.
VerificationReport verify_kspan(int N, const IntegralMatrix& B, const Window& w);

/// Deterministic pseudo-random unimodular matrix (product of elementary
/// operations drawn from the seeded generator).
IntegralMatrix random_unimodular(int N, unsigned long long seed, int ops = 12, long long max_entry = 3);

}  // namespace toralab
