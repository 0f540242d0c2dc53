#pragma once

#include "solver.hpp"

namespace nhomega {

// The enlarged algebra on {e_i t} + {e_i t^n}: brackets multiply the
// t-exponents and vanish past t^n, so only all-t-half products survive,
// landing in the t^n-half.
struct ExtendedAlgebra {
    Algebra base;
    Algebra alg;  // dimension 2*base.dim; indices [0,d) = t-half, [d,2d) = t^n-half
};

ExtendedAlgebra extend(const Algebra& a);

// Homogeneous complement U of [T,...,T]: greedy standard-basis pivots,
// deterministic; always spanned by unit vectors.
Subspace graded_complement(const Algebra& a);

// phi(D)(at + ut^n + bt^n) = D(a)t + D'(b)t^n, with b the component of
// the t^n coefficient in [T,...,T] along U.
struct PhiMap {
    Endo matrix;  // on the 2d space, degree = deg D
};

// q identifies the quasiderivation level/degree of w; membership is
// verified before the map is built.
PhiMap phi(const ExtendedAlgebra& x, const WitnessedMap& w, const Subspace& complement,
           const SpaceQuery& q);

struct EmbeddingEntry {
    std::string item;
    int k;
    GroupElement degree;
    std::string status;  // pass | fail | skipped
    std::string detail;
};

struct EmbeddingReport {
    std::vector<EmbeddingEntry> entries;
    bool failed() const {
        for (const auto& e : entries)
            if (e.status == "fail") return true;
        return false;
    }
};

// Checks, per k <= kmax and degree xi: phi is even, injective and
// witness-independent, with image inside Der of the extension; and when
// Ann(T)={0}, Der(ext) = phi(QDer(T)) (+) ZDer(ext) exactly.
EmbeddingReport verify_embedding(const Algebra& a, int kmax);

}  // namespace nhomega
