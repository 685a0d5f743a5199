#pragma once

#include <optional>
#include <vector>

#include "toralab/rational.hpp"

namespace toralab {

/// Dense matrix over Q. Sized for the graded components and windowed module
/// slices that show up here (tens to a few hundred rows); plain Gaussian
/// elimination with exact scalars.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows, std::vector<Rational>(cols)) {}

    static RatMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Rational& at(size_t i, size_t j) const { return a_[i][j]; }
    Rational& at(size_t i, size_t j) { return a_[i][j]; }
    const std::vector<Rational>& row(size_t i) const { return a_[i]; }

    void append_row(std::vector<Rational> r);

    RatMatrix transpose() const;
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator+(RatMatrix a, const RatMatrix& b);
    friend RatMatrix operator-(RatMatrix a, const RatMatrix& b);
    friend RatMatrix operator*(const Rational& k, RatMatrix a);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b);
    bool is_zero() const;

    std::vector<Rational> apply(const std::vector<Rational>& v) const;  // A v

    /// In-place reduced row echelon form; returns pivot columns.
    std::vector<size_t> rref();

    size_t rank() const;
    /// Basis of { x : A x = 0 }, canonical (one vector per free column of the
    /// RREF, free coordinate set to 1).
    std::vector<std::vector<Rational>> nullspace() const;
    /// Some solution of A x = b, if consistent.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;
    /// Inverse of a square full-rank matrix.
    std::optional<RatMatrix> inverse() const;
    Rational det() const;  // square only

    /// True iff v lies in the row span.
    bool row_span_contains(const std::vector<Rational>& v) const;
    /// True iff the row spans coincide.
    static bool same_row_span(const RatMatrix& a, const RatMatrix& b);

    std::string str() const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<std::vector<Rational>> a_;
};

}  // namespace toralab
