#include "matrix.hpp"

#include <stdexcept>

namespace nhomega {

RatMat RatMat::identity(size_t n) {
    RatMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::from_rows(size_t cols, const std::vector<RatVec>& rows) {
    RatMat m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
        for (size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

RatVec RatMat::row(size_t r) const {
    RatVec v(cols_);
    for (size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

RatVec RatMat::col(size_t c) const {
    RatVec v(rows_);
    for (size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

RatMat RatMat::operator*(const RatMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    RatMat m(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j)
                if (o.at(k, j) != 0) m.at(i, j) += x * o.at(k, j);
        }
    return m;
}

RatVec RatMat::operator*(const RatVec& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    RatVec out(rows_, Rat(0));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[j] != 0) out[i] += at(i, j) * v[j];
    return out;
}

RatMat RatMat::operator+(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    RatMat m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
}

RatMat RatMat::operator-(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix diff shape mismatch");
    RatMat m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
}

RatMat RatMat::scaled(const Rat& s) const {
    RatMat m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
    return m;
}

RatMat RatMat::transpose() const {
    RatMat m(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

bool RatMat::is_zero() const {
    for (const Rat& x : a_)
        if (x != 0) return false;
    return true;
}

std::vector<size_t> rref(RatMat& m, RatMat* transform) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t p = r;
        while (p < m.rows() && m.at(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r) {
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
            if (transform)
                for (size_t j = 0; j < transform->cols(); ++j)
                    std::swap(transform->at(p, j), transform->at(r, j));
        }
        Rat inv = 1 / m.at(r, c);
        for (size_t j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
        if (transform)
            for (size_t j = 0; j < transform->cols(); ++j) transform->at(r, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
            if (transform)
                for (size_t j = 0; j < transform->cols(); ++j)
                    transform->at(i, j) -= f * transform->at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

RatMat nullspace(const RatMat& m) {
    RatMat r = m;
    std::vector<size_t> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;

    std::vector<size_t> free_cols;
    for (size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    RatMat ker(free_cols.size(), m.cols());
    for (size_t k = 0; k < free_cols.size(); ++k) {
        size_t fc = free_cols[k];
        ker.at(k, fc) = 1;
        for (size_t i = 0; i < pivots.size(); ++i) ker.at(k, pivots[i]) = -r.at(i, fc);
    }
    return ker;
}

Subspace Subspace::span(size_t ambient, const std::vector<RatVec>& generators) {
    return from_row_matrix(RatMat::from_rows(ambient, generators));
}

Subspace Subspace::from_row_matrix(const RatMat& rows) {
    RatMat m = rows;
    std::vector<size_t> pivots = rref(m);
    Subspace s(rows.cols());
    RatMat basis(pivots.size(), rows.cols());
    for (size_t i = 0; i < pivots.size(); ++i)
        for (size_t c = 0; c < rows.cols(); ++c) basis.at(i, c) = m.at(i, c);
    s.basis_ = basis;
    return s;
}

Subspace Subspace::full(size_t ambient) {
    Subspace s(ambient);
    s.basis_ = RatMat::identity(ambient);
    return s;
}

bool Subspace::contains(const RatVec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("subspace membership: dimension mismatch");
    RatVec w = v;
    for (size_t i = 0; i < basis_.rows(); ++i) {
        // locate pivot of row i
        size_t p = 0;
        while (p < ambient_ && basis_.at(i, p) == 0) ++p;
        if (p == ambient_) continue;
        if (w[p] != 0) {
            Rat f = w[p];
            for (size_t c = p; c < ambient_; ++c) w[c] -= f * basis_.at(i, c);
        }
    }
    return is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
    for (size_t i = 0; i < other.basis_.rows(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("subspace sum: ambient mismatch");
    std::vector<RatVec> gens;
    for (size_t i = 0; i < basis_.rows(); ++i) gens.push_back(basis_.row(i));
    for (size_t i = 0; i < other.basis_.rows(); ++i) gens.push_back(other.basis_.row(i));
    return span(ambient_, gens);
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("subspace intersect: ambient mismatch");
    // (u,v) with u*A - v*B = 0  <=>  [A; -B]^T (u,v)^T = 0
    size_t ra = basis_.rows(), rb = other.basis_.rows();
    RatMat stacked(ambient_, ra + rb);
    for (size_t c = 0; c < ambient_; ++c) {
        for (size_t i = 0; i < ra; ++i) stacked.at(c, i) = basis_.at(i, c);
        for (size_t i = 0; i < rb; ++i) stacked.at(c, ra + i) = -other.basis_.at(i, c);
    }
    RatMat ker = nullspace(stacked);
    std::vector<RatVec> gens;
    for (size_t k = 0; k < ker.rows(); ++k) {
        RatVec v(ambient_, Rat(0));
        for (size_t i = 0; i < ra; ++i)
            if (ker.at(k, i) != 0)
                for (size_t c = 0; c < ambient_; ++c) v[c] += ker.at(k, i) * basis_.at(i, c);
        gens.push_back(std::move(v));
    }
    return span(ambient_, gens);
}

bool is_zero(const RatVec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

RatVec add(const RatVec& a, const RatVec& b) {
    RatVec c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

RatVec sub(const RatVec& a, const RatVec& b) {
    RatVec c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

RatVec scale(const Rat& s, const RatVec& v) {
    RatVec c(v.size());
    for (size_t i = 0; i < v.size(); ++i) c[i] = s * v[i];
    return c;
}

}  // namespace nhomega
