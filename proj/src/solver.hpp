#pragma once

#include <map>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace nhomega {

enum class SpaceKind { der, gder, qder, c, qc, zder };

SpaceKind space_kind_from_string(const std::string& s);
std::string to_string(SpaceKind k);

struct SpaceQuery {
    SpaceKind kind = SpaceKind::der;
    int k = 0;
    GroupElement degree;
    bool require_alpha_commuting = true;

    auto operator<=>(const SpaceQuery&) const = default;
};

// D together with the auxiliary maps its defining identity needs:
// qder: {D'}; gder: {D^(1),...,D^(n)}; other kinds: none.
struct WitnessedMap {
    Endo map;
    std::vector<Endo> witnesses;
};

struct SpaceBasis {
    SpaceQuery query;
    std::vector<WitnessedMap> vectors;
    // Canonical RREF basis of the D-projection in Q^{d*d}
    // (flattened row-major, index = j*d + i for entry (j,i)).
    Subspace projection;
    // Joint solutions with D = 0 (pure witness freedom).
    std::vector<WitnessedMap> witness_freedom;

    size_t dim() const { return vectors.size(); }
};

RatVec flatten(const RatMat& m);
RatMat unflatten(const RatVec& v, size_t d);

// Incremental exact RREF; used to deduplicate large equation sets.
class RowReducer {
public:
    explicit RowReducer(size_t cols) : cols_(cols) {}
    // Returns true if the row increased the rank.
    bool add(RatVec row);
    size_t rank() const { return rows_.size(); }
    size_t cols() const { return cols_; }
    RatMat matrix() const;
    RatMat kernel() const;  // nullspace of the accumulated system

private:
    size_t cols_;
    std::vector<RatVec> rows_;
    std::vector<size_t> pivots_;
};

// S = {u : u alpha = alpha u}, as a subspace of Q^{d*d}.
Subspace commutant(const Algebra& a);

// Ann(T) = {x : inserting x into any slot kills every bracket}.
Subspace annihilator(const Algebra& a);

// [T,...,T] = span of all bracket values.
Subspace derived_subspace(const Algebra& a);

SpaceBasis solve_space(const Algebra& a, const SpaceQuery& q);

// Independent evaluator: checks the defining identity of q.kind for the
// given maps directly on all basis tuples, without any constraint
// assembly. This is the oracle for solve_space.
bool check_membership(const Algebra& a, const SpaceQuery& q, const WitnessedMap& w);

// Caches solve_space results per query.
class SpaceSolver {
public:
    explicit SpaceSolver(const Algebra& a) : a_(a) {}
    const Algebra& algebra() const { return a_; }
    const SpaceBasis& space(SpaceKind kind, int k, const GroupElement& xi,
                            bool commute_alpha = true);

private:
    const Algebra& a_;
    std::map<SpaceQuery, SpaceBasis> cache_;
};

struct ChainViolation {
    std::string smaller, larger;
    int k;
    GroupElement degree;
    RatVec witness;  // flattened map in smaller \ larger
};

struct ChainReport {
    bool pass = true;
    std::vector<ChainViolation> violations;
};

// ZDer <= Der <= QDer <= GDer as computed D-projections, for every
// k <= kmax and every degree.
ChainReport inclusion_chain(SpaceSolver& solver, int kmax);

struct LemmaCheck {
    std::string description;
    std::string status;  // "pass" | "fail" | "skipped"
    std::string witness;
};

struct LemmaEntry {
    std::string lemma;
    bool hypotheses_ok = true;
    std::vector<LemmaCheck> checks;

    bool failed() const {
        for (const auto& c : checks)
            if (c.status == "fail") return true;
        return false;
    }
};

using LemmaReport = std::vector<LemmaEntry>;

// Instance checks of the closure/containment lemmas and the operator
// Hom-Jordan structure, truncated at kmax.
LemmaReport verify_lemmas(SpaceSolver& solver, int kmax,
                          const std::vector<std::string>& which = {});

std::vector<std::string> lemma_ids();

}  // namespace nhomega
