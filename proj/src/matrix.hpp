#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace nhomega {

using Rat = mpq_class;
using RatVec = std::vector<Rat>;

// Dense matrix over exact rationals. Small sizes only; all operations
// are straightforward loops.
class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    static RatMat identity(size_t n);
    static RatMat from_rows(size_t cols, const std::vector<RatVec>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rat& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Rat& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    RatVec row(size_t r) const;
    RatVec col(size_t c) const;

    RatMat operator*(const RatMat& o) const;
    RatVec operator*(const RatVec& v) const;
    RatMat operator+(const RatMat& o) const;
    RatMat operator-(const RatMat& o) const;
    RatMat scaled(const Rat& s) const;
    RatMat transpose() const;

    bool is_zero() const;
    bool operator==(const RatMat&) const = default;

private:
    size_t rows_, cols_;
    std::vector<Rat> a_;
};

// In-place reduced row echelon form; returns pivot columns. If
// transform is non-null it must start as the identity and is updated so
// that transform * original == result.
std::vector<size_t> rref(RatMat& m, RatMat* transform = nullptr);

// Rows form a basis of { x : m x = 0 }.
RatMat nullspace(const RatMat& m);

// Canonical subspace of Q^ambient: RREF row basis, no zero rows, so two
// subspaces are equal iff their representations are equal.
class Subspace {
public:
    Subspace() : Subspace(0) {}
    explicit Subspace(size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace span(size_t ambient, const std::vector<RatVec>& generators);
    static Subspace from_row_matrix(const RatMat& rows);
    static Subspace full(size_t ambient);

    size_t ambient_dim() const { return ambient_; }
    size_t dim() const { return basis_.rows(); }
    const RatMat& basis() const { return basis_; }

    bool contains(const RatVec& v) const;
    bool contains(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    bool operator==(const Subspace&) const = default;

private:
    size_t ambient_;
    RatMat basis_;
};

bool is_zero(const RatVec& v);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rat& s, const RatVec& v);

}  // namespace nhomega
