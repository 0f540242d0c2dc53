#include "extension.hpp"

#include <stdexcept>

namespace nhomega {

namespace {

RatMat invert(const RatMat& m) {
    size_t d = m.rows();
    RatMat aug = m;
    RatMat inv = RatMat::identity(d);
    std::vector<size_t> pivots = rref(aug, &inv);
    if (pivots.size() != d) throw std::invalid_argument("matrix not invertible");
    return inv;
}

// projection onto `image` along `complement` (the two must be complementary)
RatMat projector(size_t d, const Subspace& image, const Subspace& complement) {
    if (image.dim() + complement.dim() != d)
        throw std::invalid_argument("projector: dimensions do not add up");
    RatMat cols(d, d);
    for (size_t i = 0; i < complement.dim(); ++i)
        for (size_t r = 0; r < d; ++r) cols.at(r, i) = complement.basis().at(i, r);
    for (size_t i = 0; i < image.dim(); ++i)
        for (size_t r = 0; r < d; ++r) cols.at(r, complement.dim() + i) = image.basis().at(i, r);
    RatMat sel(d, d);
    for (size_t i = complement.dim(); i < d; ++i) sel.at(i, i) = 1;
    return cols * sel * invert(cols);
}

}  // namespace

ExtendedAlgebra extend(const Algebra& a) {
    int d = a.dim;
    ExtendedAlgebra x;
    x.base = a;
    Algebra& b = x.alg;
    b.name = a.name + ".breve";
    b.arity = a.arity;
    b.dim = 2 * d;
    b.group = a.group;
    b.eps = a.eps;
    b.degrees = a.degrees;
    b.degrees.insert(b.degrees.end(), a.degrees.begin(), a.degrees.end());
    RatMat am(2 * d, 2 * d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) {
            am.at(j, i) = a.alpha.matrix.at(j, i);
            am.at(d + j, d + i) = a.alpha.matrix.at(j, i);
        }
    b.alpha = Endo(std::move(am), b.group.zero());
    // only all-arguments-from-the-t-half products survive (sum of
    // t-exponents = n); they land in the t^n-half
    for (const auto& [tuple, value] : a.structure) {
        SparseVec shifted;
        for (const auto& [idx, c] : value) shifted[idx + d] = c;
        b.structure[tuple] = std::move(shifted);
    }
    auto name_of = [&](int i) {
        return a.basis_names.empty() ? "e" + std::to_string(i) : a.basis_names[i];
    };
    for (int i = 0; i < d; ++i) b.basis_names.push_back(name_of(i) + "·t");
    for (int i = 0; i < d; ++i)
        b.basis_names.push_back(name_of(i) + "·t^" + std::to_string(a.arity));
    return x;
}

Subspace graded_complement(const Algebra& a) {
    Subspace span = derived_subspace(a);
    std::vector<RatVec> chosen;
    for (int i = 0; i < a.dim; ++i) {
        RatVec e = a.basis_vector(i);
        if (!span.contains(e)) {
            chosen.push_back(e);
            span = span.sum(Subspace::span(a.dim, {e}));
        }
    }
    return Subspace::span(a.dim, chosen);
}

PhiMap phi(const ExtendedAlgebra& x, const WitnessedMap& w, const Subspace& complement,
           const SpaceQuery& q) {
    const Algebra& a = x.base;
    if (q.kind != SpaceKind::qder || !check_membership(a, q, w))
        throw std::invalid_argument("phi: map is not a quasiderivation with the given witness");
    int d = a.dim;
    RatMat P = projector(d, derived_subspace(a), complement);
    RatMat dp = w.witnesses[0].matrix * P;
    RatMat m(2 * d, 2 * d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) {
            m.at(j, i) = w.map.matrix.at(j, i);
            m.at(d + j, d + i) = dp.at(j, i);
        }
    return PhiMap{Endo(std::move(m), q.degree)};
}

EmbeddingReport verify_embedding(const Algebra& a, int kmax) {
    EmbeddingReport report;
    int d = a.dim;
    ExtendedAlgebra ext = extend(a);
    Subspace complement = graded_complement(a);
    SpaceSolver base_solver(a);
    SpaceSolver ext_solver(ext.alg);
    GroupElement zero = a.group.zero();

    report.entries.push_back({"extension validates", 0, zero,
                              ext.alg.validate().empty() ? "pass" : "fail", ""});

    Subspace ann_base = annihilator(a);
    Subspace ann_ext = annihilator(ext.alg);
    {
        std::vector<RatVec> tn_half;
        for (int i = 0; i < d; ++i) tn_half.push_back(ext.alg.basis_vector(d + i));
        Subspace tn = Subspace::span(2 * d, tn_half);
        report.entries.push_back({"Ann(ext) contains the t^n-half", 0, zero,
                                  ann_ext.contains(tn) ? "pass" : "fail", ""});
        if (ann_base.dim() == 0)
            report.entries.push_back({"Ann(T)={0} gives Ann(ext) = t^n-half", 0, zero,
                                      ann_ext == tn ? "pass" : "fail",
                                      "dim Ann(ext) = " + std::to_string(ann_ext.dim())});
        else
            report.entries.push_back({"Ann(T)={0} gives Ann(ext) = t^n-half", 0, zero, "skipped",
                                      "hypothesis: Ann(T) != {0}"});
    }

    for (int k = 0; k <= kmax; ++k) {
        for (const GroupElement& xi : a.group.elements()) {
            SpaceQuery q{SpaceKind::qder, k, xi, true};
            const SpaceBasis& qd = base_solver.space(SpaceKind::qder, k, xi);

            std::vector<PhiMap> images;
            bool even_ok = true;
            for (const auto& w : qd.vectors) {
                PhiMap pm = phi(ext, w, complement, q);
                if (!ext.alg.degree_compatible(pm.matrix.matrix, xi)) even_ok = false;
                images.push_back(std::move(pm));
            }
            report.entries.push_back({"3.4-1 phi preserves degree", k, xi,
                                      even_ok ? "pass" : "fail", ""});

            std::vector<RatVec> flat;
            for (const auto& pm : images) flat.push_back(flatten(pm.matrix.matrix));
            Subspace phi_q = Subspace::span(static_cast<size_t>(2 * d) * (2 * d), flat);
            report.entries.push_back({"3.4-2 phi injective", k, xi,
                                      phi_q.dim() == qd.dim() ? "pass" : "fail",
                                      "rank " + std::to_string(phi_q.dim()) + " of " +
                                          std::to_string(qd.dim())});

            bool indep = true;
            for (const auto& z : qd.witness_freedom) {
                for (size_t i = 0; i < qd.vectors.size(); ++i) {
                    WitnessedMap alt = qd.vectors[i];
                    alt.witnesses[0].matrix = alt.witnesses[0].matrix + z.witnesses[0].matrix;
                    PhiMap pm = phi(ext, alt, complement, q);
                    if (!(pm.matrix.matrix == images[i].matrix.matrix)) indep = false;
                }
            }
            report.entries.push_back({"3.4-2 phi independent of the witness", k, xi,
                                      indep ? "pass" : "fail",
                                      std::to_string(qd.witness_freedom.size()) +
                                          " witness freedom generators"});

            bool in_der = true;
            for (const auto& pm : images) {
                WitnessedMap wm{pm.matrix, {}};
                if (!check_membership(ext.alg, SpaceQuery{SpaceKind::der, k, xi, true}, wm))
                    in_der = false;
            }
            report.entries.push_back({"3.4-3 phi(QDer(T)) inside Der(ext)", k, xi,
                                      in_der ? "pass" : "fail", ""});

            if (ann_base.dim() == 0) {
                const Subspace& der_ext = ext_solver.space(SpaceKind::der, k, xi).projection;
                const Subspace& zder_ext = ext_solver.space(SpaceKind::zder, k, xi).projection;
                bool sum_ok = phi_q.sum(zder_ext) == der_ext;
                bool int_ok = phi_q.intersect(zder_ext).dim() == 0;
                report.entries.push_back(
                    {"3.5 Der(ext) = phi(QDer(T)) (+) ZDer(ext)", k, xi,
                     (sum_ok && int_ok) ? "pass" : "fail",
                     "dim der(ext)=" + std::to_string(der_ext.dim()) +
                         " phi(qder)=" + std::to_string(phi_q.dim()) +
                         " zder(ext)=" + std::to_string(zder_ext.dim())});
            } else {
                report.entries.push_back({"3.5 Der(ext) = phi(QDer(T)) (+) ZDer(ext)", k, xi,
                                          "skipped", "hypothesis: Ann(T) != {0}"});
            }
        }
    }
    return report;
}

}  // namespace nhomega
