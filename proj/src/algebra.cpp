#include "algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace nhomega {

Endo Endo::identity(size_t d, GroupElement zero_deg) {
    return Endo(RatMat::identity(d), std::move(zero_deg));
}

Endo Endo::compose(const Endo& inner) const {
    // degree addition needs the group's cyclic orders, so the caller
    // sets the composed degree when it matters
    return Endo(matrix * inner.matrix, std::nullopt);
}

Endo Endo::power(int k) const {
    if (k < 0) throw std::invalid_argument("negative endomorphism power");
    RatMat acc = RatMat::identity(matrix.rows());
    for (int i = 0; i < k; ++i) acc = acc * matrix;
    return Endo(std::move(acc), degree);
}

GroupElement Algebra::tuple_degree(const std::vector<int>& tuple) const {
    GroupElement g = group.zero();
    for (int i : tuple) g = group.add(g, degrees.at(i));
    return g;
}

const SparseVec* Algebra::bracket_basis(const std::vector<int>& tuple) const {
    auto it = structure.find(tuple);
    return it == structure.end() ? nullptr : &it->second;
}

RatVec Algebra::bracket(const std::vector<RatVec>& args) const {
    if (static_cast<int>(args.size()) != arity)
        throw std::invalid_argument("bracket: expected " + std::to_string(arity) + " arguments");
    for (const auto& v : args)
        if (static_cast<int>(v.size()) != dim)
            throw std::invalid_argument("bracket: argument dimension mismatch");
    RatVec out(dim, Rat(0));
    for (const auto& [tuple, value] : structure) {
        Rat coeff(1);
        bool zero = false;
        for (int slot = 0; slot < arity; ++slot) {
            const Rat& x = args[slot][tuple[slot]];
            if (x == 0) {
                zero = true;
                break;
            }
            coeff *= x;
        }
        if (zero) continue;
        for (const auto& [idx, c] : value) out[idx] += coeff * c;
    }
    return out;
}

ValidationReport Algebra::validate() const {
    if (dim < 1) throw std::invalid_argument("algebra dimension must be >= 1");
    if (arity < 2) throw std::invalid_argument("algebra arity must be >= 2");
    if (degrees.size() != static_cast<size_t>(dim))
        throw std::invalid_argument("degrees list length != dim");
    if (alpha.matrix.rows() != static_cast<size_t>(dim) ||
        alpha.matrix.cols() != static_cast<size_t>(dim))
        throw std::invalid_argument("alpha shape != dim x dim");
    for (const auto& g : degrees)
        if (!group.contains(g)) throw std::invalid_argument("basis degree not in group");
    for (const auto& [tuple, value] : structure) {
        if (tuple.size() != static_cast<size_t>(arity))
            throw std::invalid_argument("structure tuple length != arity");
        for (int i : tuple)
            if (i < 0 || i >= dim) throw std::invalid_argument("structure tuple index out of range");
        for (const auto& [idx, c] : value) {
            (void)c;
            if (idx < 0 || idx >= dim) throw std::invalid_argument("structure value index out of range");
        }
    }

    ValidationReport report;
    for (auto v : eps.validate()) report.push_back(std::move(v));

    // grading compatibility of the structure constants
    for (const auto& [tuple, value] : structure) {
        GroupElement want = tuple_degree(tuple);
        for (const auto& [idx, c] : value) {
            if (c == 0) continue;
            if (degrees[idx] != want) {
                std::ostringstream os;
                os << "bracket of tuple (";
                for (size_t i = 0; i < tuple.size(); ++i) os << (i ? "," : "") << tuple[i];
                os << ") hits e" << idx << " of degree " << to_string(degrees[idx])
                   << ", expected " << to_string(want);
                report.push_back({"grading", os.str()});
            }
        }
    }

    // alpha even
    if (!degree_compatible(alpha.matrix, group.zero()))
        report.push_back({"alpha-even", "alpha does not preserve the grading"});

    // multiplicativity on all basis tuples
    std::vector<int> tuple(arity, 0);
    do {
        std::vector<RatVec> args(arity);
        std::vector<RatVec> alpha_args(arity);
        for (int s = 0; s < arity; ++s) {
            args[s] = basis_vector(tuple[s]);
            alpha_args[s] = alpha.apply(args[s]);
        }
        RatVec lhs = alpha.apply(bracket(args));
        RatVec rhs = bracket(alpha_args);
        if (lhs != rhs) {
            std::ostringstream os;
            os << "alpha([...]) != [alpha(...),...] at tuple (";
            for (size_t i = 0; i < tuple.size(); ++i) os << (i ? "," : "") << tuple[i];
            os << ")";
            report.push_back({"multiplicativity", os.str()});
        }
    } while (next_tuple(tuple, dim));

    return report;
}

bool Algebra::degree_compatible(const RatMat& m, const GroupElement& xi) const {
    for (size_t j = 0; j < m.rows(); ++j)
        for (size_t i = 0; i < m.cols(); ++i)
            if (m.at(j, i) != 0 && degrees[j] != group.add(degrees[i], xi)) return false;
    return true;
}

RatVec Algebra::basis_vector(int i) const {
    RatVec v(dim, Rat(0));
    v.at(i) = 1;
    return v;
}

bool Algebra::alpha_surjective() const {
    RatMat m = alpha.matrix;
    return rref(m).size() == static_cast<size_t>(dim);
}

static void require_degrees(const Endo& f, const Endo& g) {
    if (!f.degree || !g.degree)
        throw std::invalid_argument("operator product requires declared degrees");
}

Endo color_commutator(const Bicharacter& b, const Endo& f, const Endo& g) {
    require_degrees(f, g);
    int e = b.eps(*f.degree, *g.degree);
    RatMat m = f.matrix * g.matrix - (g.matrix * f.matrix).scaled(Rat(e));
    return Endo(std::move(m), b.group().add(*f.degree, *g.degree));
}

Endo jordan_product(const Bicharacter& b, const Endo& f, const Endo& g) {
    require_degrees(f, g);
    int e = b.eps(*f.degree, *g.degree);
    RatMat m = (f.matrix * g.matrix + (g.matrix * f.matrix).scaled(Rat(e))).scaled(Rat(1, 2));
    return Endo(std::move(m), b.group().add(*f.degree, *g.degree));
}

RatVec hom_associator(const Algebra& a, const RatVec& x, const RatVec& y, const RatVec& z) {
    if (a.arity != 2) throw std::invalid_argument("hom_associator requires arity 2");
    RatVec left = a.bracket({a.bracket({x, y}), a.alpha.apply(z)});
    RatVec right = a.bracket({a.alpha.apply(x), a.bracket({y, z})});
    return sub(left, right);
}

bool next_tuple(std::vector<int>& tuple, int dim) {
    for (size_t i = tuple.size(); i-- > 0;) {
        if (++tuple[i] < dim) return true;
        tuple[i] = 0;
    }
    return false;
}

}  // namespace nhomega
