// Acceptance gate: eight independent criteria, one verdict line each.
// Exit code 0 iff all pass.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "extension.hpp"
#include "identity.hpp"
#include "report.hpp"

using namespace nhomega;

namespace {

int failures = 0;

void verdict(int n, const char* what, bool pass) {
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", n, what);
    if (!pass) ++failures;
}

std::vector<CorpusEntry> corpus() {
#ifdef NHOMEGA_CORPUS_PATH
    ::setenv("NHOMEGA_CORPUS_DIR", NHOMEGA_CORPUS_PATH, 0);
#endif
    std::vector<CorpusEntry> out;
    for (const auto& name : corpus_names()) out.push_back(load_corpus_entry(name));
    return out;
}

class Rng {
public:
    explicit Rng(unsigned long long seed) : state_(seed) {}
    unsigned long long next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_ >> 33;
    }
    Rat rat() {
        Rat r(static_cast<int>(next() % 19) - 9, static_cast<int>(next() % 7) + 1);
        r.canonicalize();
        return r;
    }

private:
    unsigned long long state_;
};

Monomial word(const std::string& text) { return parse_identity(text).terms[0].monomial; }

// 1. The colorizer/Hom-izer reproduces the hand-encoded twisted forms of
// skew-symmetry, the binary Jacobi identity, and binary associativity.
bool criterion1() {
    using Pairs = std::vector<std::pair<int, int>>;
    using AExp = std::map<int, int>;
    bool ok = true;
    auto term_is = [&](const ColorHomTerm& t, const Rat& coeff, const std::string& mono,
                       const Pairs& pairs, const AExp& aexp) {
        ok = ok && t.coeff == coeff && t.monomial == word(mono) && t.sign_pairs == pairs &&
             t.alpha_exp == aexp;
    };

    {  // [x1,x2] + e(x1,x2)[x2,x1]
        ColorHomIdentity c = homize(colorize(builtin_identities("skew", 2)[0]));
        ok = ok && c.terms.size() == 2;
        term_is(c.terms[0], 1, "[x1,x2]", {}, {});
        term_is(c.terms[1], 1, "[x2,x1]", {{1, 2}}, {});
    }
    {  // [a(x1),[x2,x3]] - [[x1,x2],a(x3)] - e(x1,x2)[a(x2),[x1,x3]]
        ColorHomIdentity c = homize(colorize(builtin_identities("hom_jacobi", 2)[0]));
        ok = ok && c.terms.size() == 3;
        term_is(c.terms[0], 1, "[x1,[x2,x3]]", {}, {{1, 1}});
        term_is(c.terms[1], -1, "[[x1,x2],x3]", {}, {{3, 1}});
        term_is(c.terms[2], -1, "[x2,[x1,x3]]", {{1, 2}}, {{2, 1}});
    }
    {  // [[x1,x2],a(x3)] - [a(x1),[x2,x3]]
        ColorHomIdentity c = homize(colorize(builtin_identities("hom_associative", 2)[0]));
        ok = ok && c.terms.size() == 2;
        term_is(c.terms[0], 1, "[[x1,x2],x3]", {}, {{3, 1}});
        term_is(c.terms[1], -1, "[x1,[x2,x3]]", {}, {{1, 1}});
    }
    return ok;
}

// 2. Every corpus entry validates and satisfies its claimed identities
// with zero residual.
bool criterion2(const std::vector<CorpusEntry>& entries) {
    for (const auto& e : entries) {
        if (!e.algebra.validate().empty()) return false;
        for (const auto& name : e.tags.satisfies)
            for (const Identity& id : builtin_identities(name, e.algebra.arity))
                if (!check_identity(e.algebra, homize(colorize(id))).pass) return false;
    }
    return true;
}

// 3. ZDer <= Der <= QDer <= GDer at every k <= 2 and every degree.
bool criterion3(const std::vector<CorpusEntry>& entries) {
    for (const auto& e : entries) {
        SpaceSolver solver(e.algebra);
        ChainReport rep = inclusion_chain(solver, 2);
        if (!rep.pass || !rep.violations.empty()) return false;
    }
    return true;
}

// 4. Full structural check suite at kmax = 1, no failing entries.
bool criterion4(const std::vector<CorpusEntry>& entries) {
    for (const auto& e : entries) {
        SpaceSolver solver(e.algebra);
        for (const auto& lemma : verify_lemmas(solver, 1))
            if (lemma.failed()) return false;
    }
    return true;
}

// 5. Embedding of quasiderivations into derivations of the double at
// kmax = 1; exact direct sum on the annihilator-free entries.
bool criterion5(const std::vector<CorpusEntry>& entries) {
    for (const auto& e : entries) {
        EmbeddingReport rep = verify_embedding(e.algebra, 1);
        if (rep.failed()) return false;
        for (const auto& item : rep.entries)
            if (e.tags.ann_zero && item.status == "skipped") return false;
    }
    return true;
}

// 6. Independent evaluator agrees with the solver: every basis element
// is a member, maps outside the solved space are not.
bool criterion6(const std::vector<CorpusEntry>& entries) {
    Rng rng(2024);
    for (const auto& e : entries) {
        const Algebra& a = e.algebra;
        SpaceSolver solver(a);
        for (SpaceKind kind : {SpaceKind::zder, SpaceKind::der, SpaceKind::qder,
                               SpaceKind::gder, SpaceKind::c, SpaceKind::qc}) {
            for (int k = 0; k <= 2; ++k) {
                for (const GroupElement& xi : a.group.elements()) {
                    SpaceQuery q{kind, k, xi, true};
                    const SpaceBasis& basis = solver.space(kind, k, xi);
                    for (const auto& w : basis.vectors)
                        if (!check_membership(a, q, w)) return false;
                    int found = 0, attempts = 0;
                    while (found < 10 && attempts < 80) {
                        ++attempts;
                        RatMat cand(a.dim, a.dim);
                        for (int i = 0; i < a.dim; ++i)
                            for (int j = 0; j < a.dim; ++j)
                                if (a.degrees[j] == a.group.add(a.degrees[i], xi))
                                    cand.at(j, i) = rng.rat();
                        if (basis.projection.contains(flatten(cand))) continue;
                        ++found;
                        WitnessedMap w;
                        w.map = Endo(cand, xi);
                        size_t nwit = kind == SpaceKind::qder   ? 1
                                      : kind == SpaceKind::gder ? static_cast<size_t>(a.arity)
                                                                : 0;
                        w.witnesses.assign(nwit, Endo(RatMat(a.dim, a.dim), xi));
                        if (check_membership(a, q, w)) return false;
                    }
                }
            }
        }
    }
    return true;
}

// 7. Frozen dimensions and subspaces.
bool criterion7() {
    Algebra t2 = load_corpus_entry("trivial2").algebra;
    SpaceSolver st2(t2);
    if (st2.space(SpaceKind::der, 0, {0}).dim() != 4) return false;
    if (annihilator(t2) != Subspace::full(2)) return false;

    Algebra h = load_corpus_entry("heis3").algebra;
    Subspace e3 = Subspace::span(3, {h.basis_vector(2)});
    if (annihilator(h) != e3 || derived_subspace(h) != e3) return false;

    Algebra sl2 = load_corpus_entry("sl2").algebra;
    SpaceSolver ssl2(sl2);
    if (ssl2.space(SpaceKind::der, 0, {0}).dim() != 3) return false;
    if (ssl2.space(SpaceKind::c, 0, {0}).dim() != 1) return false;
    if (annihilator(sl2).dim() != 0) return false;

    Algebra f4 = load_corpus_entry("filippov4").algebra;
    SpaceSolver sf4(f4);
    return sf4.space(SpaceKind::der, 0, {0}).dim() == 6;
}

// 8. The report command is byte-identical across two runs, per entry.
bool criterion8() {
#ifdef NHOMEGA_CLI_PATH
    const char* cli = NHOMEGA_CLI_PATH;
#else
    const char* cli = "./build/tools/nhomega";
#endif
    std::string dir = corpus_dir();
    for (const auto& name : corpus_names()) {
        for (int run = 1; run <= 2; ++run) {
            std::ostringstream cmd;
            cmd << cli << " report \"" << dir << "/" << name << ".json\""
                << " > /tmp/nhomega_accept_" << run << ".json";
            if (std::system(cmd.str().c_str()) != 0) return false;
        }
        std::string a = read_file("/tmp/nhomega_accept_1.json");
        std::string b = read_file("/tmp/nhomega_accept_2.json");
        if (a.empty() || a != b) return false;
    }
    return true;
}

}  // namespace

int main() {
    std::vector<CorpusEntry> entries = corpus();
    verdict(1, "identity engine reproduces the golden twisted forms", criterion1());
    verdict(2, "corpus validity and claimed identities, zero residual", criterion2(entries));
    verdict(3, "inclusion chain at every k <= 2 and degree", criterion3(entries));
    verdict(4, "structural check suite at kmax 1", criterion4(entries));
    verdict(5, "quasiderivation embedding suite at kmax 1", criterion5(entries));
    verdict(6, "independent membership oracle cross-check", criterion6(entries));
    verdict(7, "frozen spot-check dimensions and subspaces", criterion7());
    verdict(8, "byte-identical reports across repeated runs", criterion8());
    return failures == 0 ? 0 : 1;
}
