#pragma once

#include <map>
#include <optional>
#include <string>

#include "group.hpp"
#include "matrix.hpp"

namespace nhomega {

// Linear map of the underlying d-dimensional space. Column convention:
// column i is the image of e_i. The optional degree xi means entry
// (j,i) may be nonzero only when deg(e_j) = deg(e_i) + xi.
struct Endo {
    RatMat matrix;
    std::optional<GroupElement> degree;

    Endo() = default;
    explicit Endo(RatMat m, std::optional<GroupElement> deg = std::nullopt)
        : matrix(std::move(m)), degree(std::move(deg)) {}

    static Endo identity(size_t d, GroupElement zero_deg);

    size_t dim() const { return matrix.rows(); }
    RatVec apply(const RatVec& v) const { return matrix * v; }
    Endo compose(const Endo& inner) const;  // this after inner
    Endo power(int k) const;

    bool operator==(const Endo&) const = default;
};

// Sparse coefficient vector: index -> nonzero coefficient.
using SparseVec = std::map<int, Rat>;

// Finite-dimensional G-graded n-ary algebra given by structure
// constants, with twisting map alpha and bicharacter eps.
struct Algebra {
    std::string name;
    int arity = 2;
    int dim = 0;
    GradingGroup group;
    std::vector<GroupElement> degrees;  // degree of each basis vector
    Bicharacter eps;
    Endo alpha;
    // n-tuple of basis indices -> bracket value; absent tuples are zero.
    std::map<std::vector<int>, SparseVec> structure;
    // optional display names; empty means e0..e{d-1}
    std::vector<std::string> basis_names;

    // Degree of the (would-be) bracket of the given basis tuple.
    GroupElement tuple_degree(const std::vector<int>& tuple) const;

    const SparseVec* bracket_basis(const std::vector<int>& tuple) const;

    // n-linear extension of the structure constants.
    RatVec bracket(const std::vector<RatVec>& args) const;

    // Grading compatibility, evenness of alpha, multiplicativity of
    // alpha on all basis tuples. Dimension mismatches are hard errors.
    ValidationReport validate() const;

    // True iff entry pattern of m is compatible with homogeneity of
    // degree xi.
    bool degree_compatible(const RatMat& m, const GroupElement& xi) const;

    RatVec basis_vector(int i) const;
    RatVec zero_vector() const { return RatVec(dim, Rat(0)); }

    bool alpha_surjective() const;
};

// [f,g] = f g - eps(f,g) g f; degrees required.
Endo color_commutator(const Bicharacter& b, const Endo& f, const Endo& g);

// f*g = 1/2 (f g + eps(f,g) g f); degrees required.
Endo jordan_product(const Bicharacter& b, const Endo& f, const Endo& g);

// as(x,y,z) = [[x,y],alpha(z)] - [alpha(x),[y,z]]; arity 2 only.
RatVec hom_associator(const Algebra& a, const RatVec& x, const RatVec& y, const RatVec& z);

// Iterate over all d^n basis tuples in lexicographic order.
bool next_tuple(std::vector<int>& tuple, int dim);

}  // namespace nhomega
