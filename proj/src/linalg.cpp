#include "toralab/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace toralab {

RatMatrix RatMatrix::identity(size_t n) {
    RatMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

void RatMatrix::append_row(std::vector<Rational> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("RatMatrix::append_row: width mismatch");
    a_.push_back(std::move(r));
    ++rows_;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = a_[i][j];
    return t;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("RatMatrix: product shape mismatch");
    RatMatrix c(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            if (a.a_[i][k].is_zero()) continue;
            for (size_t j = 0; j < b.cols_; ++j) {
                if (!b.a_[k][j].is_zero()) c.a_[i][j] += a.a_[i][k] * b.a_[k][j];
            }
        }
    return c;
}

RatMatrix operator+(RatMatrix a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("RatMatrix: sum shape mismatch");
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t j = 0; j < a.cols_; ++j) a.a_[i][j] += b.a_[i][j];
    return a;
}

RatMatrix operator-(RatMatrix a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("RatMatrix: diff shape mismatch");
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t j = 0; j < a.cols_; ++j) a.a_[i][j] -= b.a_[i][j];
    return a;
}

RatMatrix operator*(const Rational& k, RatMatrix a) {
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t j = 0; j < a.cols_; ++j) a.a_[i][j] *= k;
    return a;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t j = 0; j < a.cols_; ++j)
            if (a.a_[i][j] != b.a_[i][j]) return false;
    return true;
}

bool RatMatrix::is_zero() const {
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!a_[i][j].is_zero()) return false;
    return true;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("RatMatrix::apply: shape mismatch");
    std::vector<Rational> out(rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!a_[i][j].is_zero() && !v[j].is_zero()) out[i] += a_[i][j] * v[j];
    return out;
}

std::vector<size_t> RatMatrix::rref() {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t col = 0; col < cols_ && r < rows_; ++col) {
        size_t p = r;
        while (p < rows_ && a_[p][col].is_zero()) ++p;
        if (p == rows_) continue;
        std::swap(a_[p], a_[r]);
        Rational inv = a_[r][col].inverse();
        for (size_t j = col; j < cols_; ++j) a_[r][j] *= inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r || a_[i][col].is_zero()) continue;
            Rational f = a_[i][col];
            for (size_t j = col; j < cols_; ++j) {
                if (!a_[r][j].is_zero()) a_[i][j] -= f * a_[r][j];
            }
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

size_t RatMatrix::rank() const {
    RatMatrix m(*this);
    return m.rref().size();
}

std::vector<std::vector<Rational>> RatMatrix::nullspace() const {
    RatMatrix m(*this);
    std::vector<size_t> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (size_t fc = 0; fc < cols_; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rational> v(cols_);
        v[fc] = Rational(1);
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m.at(k, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> RatMatrix::solve(const std::vector<Rational>& b) const {
    if (b.size() != rows_) throw std::invalid_argument("RatMatrix::solve: shape mismatch");
    RatMatrix aug(rows_, cols_ + 1);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = a_[i][j];
        aug.at(i, cols_) = b[i];
    }
    std::vector<size_t> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
    std::vector<Rational> x(cols_);
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(k, cols_);
    return x;
}

std::optional<RatMatrix> RatMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMatrix::inverse: not square");
    RatMatrix aug(rows_, 2 * cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = a_[i][j];
        aug.at(i, cols_ + i) = Rational(1);
    }
    std::vector<size_t> pivots = aug.rref();
    if (pivots.size() != rows_) return std::nullopt;
    for (size_t k = 0; k < pivots.size(); ++k)
        if (pivots[k] != k) return std::nullopt;
    RatMatrix inv(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

Rational RatMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMatrix::det: not square");
    RatMatrix m(*this);
    Rational d(1);
    size_t r = 0;
    for (size_t col = 0; col < cols_; ++col) {
        size_t p = r;
        while (p < rows_ && m.a_[p][col].is_zero()) ++p;
        if (p == rows_) return Rational(0);
        if (p != r) {
            std::swap(m.a_[p], m.a_[r]);
            d = -d;
        }
        d *= m.a_[r][col];
        Rational inv = m.a_[r][col].inverse();
        for (size_t j = col; j < cols_; ++j) m.a_[r][j] *= inv;
        for (size_t i = r + 1; i < rows_; ++i) {
            if (m.a_[i][col].is_zero()) continue;
            Rational f = m.a_[i][col];
            for (size_t j = col; j < cols_; ++j)
                if (!m.a_[r][j].is_zero()) m.a_[i][j] -= f * m.a_[r][j];
        }
        ++r;
    }
    return d;
}

bool RatMatrix::row_span_contains(const std::vector<Rational>& v) const {
    RatMatrix m(*this);
    size_t base = m.rref().size();
    RatMatrix with(*this);
    with.append_row(v);
    return with.rank() == base;
}

bool RatMatrix::same_row_span(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.cols()) return false;
    size_t ra = a.rank();
    size_t rb = b.rank();
    if (ra != rb) return false;
    RatMatrix joint(a);
    for (size_t i = 0; i < b.rows(); ++i) joint.append_row(b.row(i));
    return joint.rank() == ra;
}

std::string RatMatrix::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        os << (i ? "\n[" : "[");
        for (size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << a_[i][j].str();
        }
        os << "]";
    }
    return os.str();
}

}  // namespace toralab
