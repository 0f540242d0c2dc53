#include "solver.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nhomega {

SpaceKind space_kind_from_string(const std::string& s) {
    if (s == "der") return SpaceKind::der;
    if (s == "gder") return SpaceKind::gder;
    if (s == "qder") return SpaceKind::qder;
    if (s == "c") return SpaceKind::c;
    if (s == "qc") return SpaceKind::qc;
    if (s == "zder") return SpaceKind::zder;
    throw std::invalid_argument("unknown space kind: " + s);
}

std::string to_string(SpaceKind k) {
    switch (k) {
        case SpaceKind::der: return "der";
        case SpaceKind::gder: return "gder";
        case SpaceKind::qder: return "qder";
        case SpaceKind::c: return "c";
        case SpaceKind::qc: return "qc";
        case SpaceKind::zder: return "zder";
    }
    return "?";
}

RatVec flatten(const RatMat& m) {
    RatVec v(m.rows() * m.cols());
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) v[r * m.cols() + c] = m.at(r, c);
    return v;
}

RatMat unflatten(const RatVec& v, size_t d) {
    RatMat m(d, d);
    for (size_t r = 0; r < d; ++r)
        for (size_t c = 0; c < d; ++c) m.at(r, c) = v[r * d + c];
    return m;
}

// ---------------------------------------------------------------------------
// RowReducer

bool RowReducer::add(RatVec row) {
    if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rat& x = row[pivots_[r]];
        if (x != 0) {
            Rat f = x;
            for (size_t c = pivots_[r]; c < cols_; ++c)
                if (rows_[r][c] != 0) row[c] -= f * rows_[r][c];
        }
    }
    size_t p = 0;
    while (p < cols_ && row[p] == 0) ++p;
    if (p == cols_) return false;
    Rat inv = 1 / row[p];
    for (size_t c = p; c < cols_; ++c) row[c] *= inv;
    // eliminate the new pivot from existing rows
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rat& x = rows_[r][p];
        if (x != 0) {
            Rat f = x;
            for (size_t c = p; c < cols_; ++c)
                if (row[c] != 0) rows_[r][c] -= f * row[c];
        }
    }
    // insert keeping pivots ascending
    size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < p) ++at;
    rows_.insert(rows_.begin() + at, std::move(row));
    pivots_.insert(pivots_.begin() + at, p);
    return true;
}

RatMat RowReducer::matrix() const { return RatMat::from_rows(cols_, rows_); }

RatMat RowReducer::kernel() const {
    std::vector<bool> is_pivot(cols_, false);
    for (size_t p : pivots_) is_pivot[p] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    RatMat ker(free_cols.size(), cols_);
    for (size_t f = 0; f < free_cols.size(); ++f) {
        ker.at(f, free_cols[f]) = 1;
        for (size_t r = 0; r < rows_.size(); ++r) ker.at(f, pivots_[r]) = -rows_[r][free_cols[f]];
    }
    return ker;
}

// ---------------------------------------------------------------------------
// plain subspaces

Subspace commutant(const Algebra& a) {
    size_t d = a.dim;
    const RatMat& A = a.alpha.matrix;
    // unknown u, row per output entry of uA - Au
    RatMat sys(d * d, d * d);
    for (size_t j = 0; j < d; ++j)
        for (size_t i = 0; i < d; ++i) {
            size_t row = j * d + i;
            for (size_t m = 0; m < d; ++m) {
                sys.at(row, j * d + m) += A.at(m, i);   // (uA)_{j,i}
                sys.at(row, m * d + i) -= A.at(j, m);   // (Au)_{j,i}
            }
        }
    return Subspace::from_row_matrix(nullspace(sys));
}

Subspace annihilator(const Algebra& a) {
    int d = a.dim, n = a.arity;
    RowReducer red(d);
    // x in slot `slot`, basis vectors elsewhere; row per output coordinate
    std::vector<int> others(n - 1, 0);
    for (int slot = 0; slot < n; ++slot) {
        std::fill(others.begin(), others.end(), 0);
        do {
            RatMat rows(d, d);
            for (int m = 0; m < d; ++m) {
                std::vector<int> tuple;
                tuple.reserve(n);
                for (int s = 0, o = 0; s < n; ++s) tuple.push_back(s == slot ? m : others[o++]);
                if (const SparseVec* val = a.bracket_basis(tuple))
                    for (const auto& [idx, c] : *val) rows.at(idx, m) += c;
            }
            for (int j = 0; j < d; ++j) {
                RatVec row = rows.row(j);
                if (!is_zero(row)) red.add(std::move(row));
            }
        } while (next_tuple(others, d));
    }
    return Subspace::from_row_matrix(red.kernel());
}

Subspace derived_subspace(const Algebra& a) {
    std::vector<RatVec> gens;
    for (const auto& [tuple, value] : a.structure) {
        RatVec v = a.zero_vector();
        for (const auto& [idx, c] : value) v[idx] = c;
        gens.push_back(std::move(v));
    }
    return Subspace::span(a.dim, gens);
}

// ---------------------------------------------------------------------------
// solve_space

namespace {

// Unknown layout for a joint linear system in several homogeneous maps
// of the same degree xi.
struct UnknownLayout {
    std::vector<std::pair<int, int>> positions;  // allowed (j,i)
    std::vector<std::vector<int>> pos_index;     // (j,i) -> position index or -1
    int nmaps = 1;

    size_t per_map() const { return positions.size(); }
    size_t total() const { return nmaps * positions.size(); }
    int idx(int block, int j, int i) const {
        int p = pos_index[j][i];
        return p < 0 ? -1 : block * static_cast<int>(positions.size()) + p;
    }
};

UnknownLayout make_layout(const Algebra& a, const GroupElement& xi, int nmaps) {
    UnknownLayout L;
    L.nmaps = nmaps;
    L.pos_index.assign(a.dim, std::vector<int>(a.dim, -1));
    for (int j = 0; j < a.dim; ++j)
        for (int i = 0; i < a.dim; ++i)
            if (a.degrees[j] == a.group.add(a.degrees[i], xi)) {
                L.pos_index[j][i] = static_cast<int>(L.positions.size());
                L.positions.emplace_back(j, i);
            }
    return L;
}

int maps_for_kind(SpaceKind kind, int arity) {
    switch (kind) {
        case SpaceKind::qder: return 2;
        case SpaceKind::gder: return arity + 1;
        default: return 1;
    }
}

// rows for M alpha - alpha M = 0, one per matrix entry
void add_commuting_rows(RowReducer& red, const Algebra& a, const UnknownLayout& L, int block) {
    const RatMat& A = a.alpha.matrix;
    int d = a.dim;
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) {
            RatVec row(L.total(), Rat(0));
            bool nonzero = false;
            for (int m = 0; m < d; ++m) {
                if (A.at(m, i) != 0) {
                    int u = L.idx(block, j, m);
                    if (u >= 0) {
                        row[u] += A.at(m, i);
                        nonzero = true;
                    }
                }
                if (A.at(j, m) != 0) {
                    int u = L.idx(block, m, i);
                    if (u >= 0) {
                        row[u] -= A.at(j, m);
                        nonzero = true;
                    }
                }
            }
            if (nonzero) red.add(std::move(row));
        }
}

struct TupleContext {
    std::vector<int> tuple;
    const SparseVec* value;          // bracket of the tuple, may be null
    std::vector<int> pre;            // eps(xi, X_{i-1}) per slot, 1-based -> [0..n)
    // slot_coeff[s][m] = bracket(alpha^k args with e_m at slot s)
    std::vector<std::vector<RatVec>> slot_coeff;
};

}  // namespace

SpaceBasis solve_space(const Algebra& a, const SpaceQuery& q) {
    if (!a.group.contains(q.degree)) throw std::invalid_argument("query degree not in grading group");
    if (q.k < 0) throw std::invalid_argument("query k must be >= 0");
    int d = a.dim, n = a.arity;
    UnknownLayout L = make_layout(a, q.degree, maps_for_kind(q.kind, n));
    RowReducer red(L.total());

    RatMat Ak = a.alpha.power(q.k).matrix;

    std::vector<int> tuple(n, 0);
    do {
        TupleContext ctx;
        ctx.tuple = tuple;
        ctx.value = a.bracket_basis(tuple);
        ctx.pre.resize(n);
        GroupElement partial = a.group.zero();
        for (int s = 0; s < n; ++s) {
            ctx.pre[s] = a.eps.eps(q.degree, partial);
            partial = a.group.add(partial, a.degrees[tuple[s]]);
        }
        // slot coefficients: replacing slot s by e_m, alpha^k elsewhere
        ctx.slot_coeff.assign(n, {});
        std::vector<RatVec> args(n);
        for (int s = 0; s < n; ++s) args[s] = Ak.col(tuple[s]);
        for (int s = 0; s < n; ++s) {
            ctx.slot_coeff[s].resize(d);
            RatVec saved = args[s];
            for (int m = 0; m < d; ++m) {
                // only columns that are actually unknowns matter
                bool needed = false;
                for (int j = 0; j < d && !needed; ++j) needed = L.pos_index[j][m] >= 0;
                if (!needed) {
                    ctx.slot_coeff[s][m] = RatVec();
                    continue;
                }
                RatVec em(d, Rat(0));
                em[m] = 1;
                args[s] = em;
                ctx.slot_coeff[s][m] = a.bracket(args);
            }
            args[s] = saved;
        }

        auto add_vector_equation = [&](auto&& fill) {
            // fill(jj, row) sets the coefficients for output coordinate jj
            for (int jj = 0; jj < d; ++jj) {
                RatVec row(L.total(), Rat(0));
                fill(jj, row);
                if (!is_zero(row)) red.add(std::move(row));
            }
        };

        auto add_map_of_value = [&](RatVec& row, int jj, int block, const Rat& scale_by) {
            if (!ctx.value) return;
            for (const auto& [m, c] : *ctx.value) {
                int u = L.idx(block, jj, m);
                if (u >= 0) row[u] += scale_by * c;
            }
        };
        auto add_slot_term = [&](RatVec& row, int jj, int block, int s, const Rat& scale_by) {
            int col = ctx.tuple[s];
            for (int m = 0; m < d; ++m) {
                int u = L.idx(block, m, col);
                if (u < 0 || ctx.slot_coeff[s][m].empty()) continue;
                const Rat& w = ctx.slot_coeff[s][m][jj];
                if (w != 0) row[u] += scale_by * w;
            }
        };

        switch (q.kind) {
            case SpaceKind::der:
                add_vector_equation([&](int jj, RatVec& row) {
                    add_map_of_value(row, jj, 0, Rat(1));
                    for (int s = 0; s < n; ++s) add_slot_term(row, jj, 0, s, Rat(-ctx.pre[s]));
                });
                break;
            case SpaceKind::qder:
                add_vector_equation([&](int jj, RatVec& row) {
                    for (int s = 0; s < n; ++s) add_slot_term(row, jj, 0, s, Rat(ctx.pre[s]));
                    add_map_of_value(row, jj, 1, Rat(-1));
                });
                break;
            case SpaceKind::gder:
                // blocks: 0 = D (slot 1), 1..n-1 = D^(1..n-1) (slots 2..n),
                // n = D^(n) (outer)
                add_vector_equation([&](int jj, RatVec& row) {
                    add_slot_term(row, jj, 0, 0, Rat(1));
                    for (int s = 1; s < n; ++s) add_slot_term(row, jj, s, s, Rat(ctx.pre[s]));
                    add_map_of_value(row, jj, n, Rat(-1));
                });
                break;
            case SpaceKind::c:
                for (int s = 0; s < n; ++s)
                    add_vector_equation([&](int jj, RatVec& row) {
                        add_map_of_value(row, jj, 0, Rat(1));
                        add_slot_term(row, jj, 0, s, Rat(-ctx.pre[s]));
                    });
                break;
            case SpaceKind::qc:
                for (int s = 1; s < n; ++s)
                    add_vector_equation([&](int jj, RatVec& row) {
                        add_slot_term(row, jj, 0, 0, Rat(1));
                        add_slot_term(row, jj, 0, s, Rat(-ctx.pre[s]));
                    });
                break;
            case SpaceKind::zder:
                add_vector_equation([&](int jj, RatVec& row) { add_map_of_value(row, jj, 0, Rat(1)); });
                for (int s = 0; s < n; ++s)
                    add_vector_equation([&](int jj, RatVec& row) { add_slot_term(row, jj, 0, s, Rat(1)); });
                break;
        }
    } while (next_tuple(tuple, d));

    if (q.require_alpha_commuting)
        for (int b = 0; b < L.nmaps; ++b) add_commuting_rows(red, a, L, b);

    RatMat ker = red.kernel();

    // canonicalize the D-projection; transform rows recover full solutions
    RatMat proj(ker.rows(), static_cast<size_t>(d) * d);
    for (size_t r = 0; r < ker.rows(); ++r)
        for (size_t p = 0; p < L.per_map(); ++p) {
            auto [j, i] = L.positions[p];
            proj.at(r, static_cast<size_t>(j) * d + i) = ker.at(r, p);
        }
    RatMat T = RatMat::identity(ker.rows());
    std::vector<size_t> pivots = rref(proj, &T);

    auto combo_to_maps = [&](size_t trow) {
        RatVec full(L.total(), Rat(0));
        for (size_t c = 0; c < ker.rows(); ++c) {
            if (T.at(trow, c) == 0) continue;
            for (size_t u = 0; u < L.total(); ++u) full[u] += T.at(trow, c) * ker.at(c, u);
        }
        std::vector<Endo> maps;
        for (int b = 0; b < L.nmaps; ++b) {
            RatMat m(d, d);
            for (size_t p = 0; p < L.per_map(); ++p) {
                auto [j, i] = L.positions[p];
                m.at(j, i) = full[b * L.per_map() + p];
            }
            maps.emplace_back(std::move(m), q.degree);
        }
        return maps;
    };

    SpaceBasis out;
    out.query = q;
    std::vector<RatVec> proj_rows;
    for (size_t r = 0; r < pivots.size(); ++r) {
        std::vector<Endo> maps = combo_to_maps(r);
        proj_rows.push_back(proj.row(r));
        WitnessedMap w;
        w.map = maps[0];
        w.witnesses.assign(maps.begin() + 1, maps.end());
        out.vectors.push_back(std::move(w));
    }
    for (size_t r = pivots.size(); r < ker.rows(); ++r) {
        std::vector<Endo> maps = combo_to_maps(r);
        WitnessedMap w;
        w.map = maps[0];  // zero by construction
        w.witnesses.assign(maps.begin() + 1, maps.end());
        out.witness_freedom.push_back(std::move(w));
    }
    out.projection = Subspace::span(static_cast<size_t>(d) * d, proj_rows);
    return out;
}

// ---------------------------------------------------------------------------
// membership oracle

bool check_membership(const Algebra& a, const SpaceQuery& q, const WitnessedMap& w) {
    int d = a.dim, n = a.arity;
    size_t expected_witnesses = static_cast<size_t>(maps_for_kind(q.kind, n)) - 1;
    if (w.witnesses.size() != expected_witnesses) return false;

    std::vector<const Endo*> all_maps{&w.map};
    for (const auto& e : w.witnesses) all_maps.push_back(&e);
    const RatMat& A = a.alpha.matrix;
    for (const Endo* e : all_maps) {
        if (e->matrix.rows() != static_cast<size_t>(d) || e->matrix.cols() != static_cast<size_t>(d))
            return false;
        if (!a.degree_compatible(e->matrix, q.degree)) return false;
        if (q.require_alpha_commuting && !(e->matrix * A == A * e->matrix)) return false;
    }

    RatMat Ak = a.alpha.power(q.k).matrix;
    const RatMat& D = w.map.matrix;

    std::vector<int> tuple(n, 0);
    do {
        std::vector<RatVec> base_args(n);
        for (int s = 0; s < n; ++s) base_args[s] = Ak.col(tuple[s]);
        RatVec br = a.zero_vector();
        if (const SparseVec* v = a.bracket_basis(tuple))
            for (const auto& [idx, c] : *v) br[idx] = c;

        std::vector<int> pre(n);
        GroupElement partial = a.group.zero();
        for (int s = 0; s < n; ++s) {
            pre[s] = a.eps.eps(q.degree, partial);
            partial = a.group.add(partial, a.degrees[tuple[s]]);
        }
        auto slot_insert = [&](const RatMat& M, int s) {
            std::vector<RatVec> args = base_args;
            args[s] = M.col(tuple[s]);
            return a.bracket(args);
        };

        switch (q.kind) {
            case SpaceKind::der: {
                RatVec lhs = D * br;
                RatVec rhs = a.zero_vector();
                for (int s = 0; s < n; ++s) rhs = add(rhs, scale(Rat(pre[s]), slot_insert(D, s)));
                if (lhs != rhs) return false;
                break;
            }
            case SpaceKind::qder: {
                RatVec lhs = a.zero_vector();
                for (int s = 0; s < n; ++s) lhs = add(lhs, scale(Rat(pre[s]), slot_insert(D, s)));
                RatVec rhs = w.witnesses[0].matrix * br;
                if (lhs != rhs) return false;
                break;
            }
            case SpaceKind::gder: {
                RatVec lhs = slot_insert(D, 0);
                for (int s = 1; s < n; ++s)
                    lhs = add(lhs, scale(Rat(pre[s]), slot_insert(w.witnesses[s - 1].matrix, s)));
                RatVec rhs = w.witnesses[n - 1].matrix * br;
                if (lhs != rhs) return false;
                break;
            }
            case SpaceKind::c: {
                RatVec lhs = D * br;
                for (int s = 0; s < n; ++s)
                    if (lhs != scale(Rat(pre[s]), slot_insert(D, s))) return false;
                break;
            }
            case SpaceKind::qc: {
                RatVec lhs = slot_insert(D, 0);
                for (int s = 0; s < n; ++s)
                    if (lhs != scale(Rat(pre[s]), slot_insert(D, s))) return false;
                break;
            }
            case SpaceKind::zder: {
                if (!is_zero(D * br)) return false;
                for (int s = 0; s < n; ++s)
                    if (!is_zero(slot_insert(D, s))) return false;
                break;
            }
        }
    } while (next_tuple(tuple, d));
    return true;
}

// ---------------------------------------------------------------------------
// cached solver, inclusion chain

const SpaceBasis& SpaceSolver::space(SpaceKind kind, int k, const GroupElement& xi,
                                     bool commute_alpha) {
    SpaceQuery q{kind, k, xi, commute_alpha};
    auto it = cache_.find(q);
    if (it == cache_.end()) it = cache_.emplace(q, solve_space(a_, q)).first;
    return it->second;
}

ChainReport inclusion_chain(SpaceSolver& solver, int kmax) {
    ChainReport report;
    const Algebra& a = solver.algebra();
    const std::vector<std::pair<SpaceKind, SpaceKind>> chain{
        {SpaceKind::zder, SpaceKind::der},
        {SpaceKind::der, SpaceKind::qder},
        {SpaceKind::qder, SpaceKind::gder},
    };
    for (int k = 0; k <= kmax; ++k) {
        for (const GroupElement& xi : a.group.elements()) {
            for (auto [small, large] : chain) {
                const Subspace& s = solver.space(small, k, xi).projection;
                const Subspace& l = solver.space(large, k, xi).projection;
                if (!l.contains(s)) {
                    report.pass = false;
                    for (size_t r = 0; r < s.basis().rows(); ++r)
                        if (!l.contains(s.basis().row(r)))
                            report.violations.push_back(
                                {to_string(small), to_string(large), k, xi, s.basis().row(r)});
                }
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// lemma suite

namespace {

struct LabeledEndo {
    Endo e;
    int k;
    std::string label;
};

std::vector<LabeledEndo> basis_of(SpaceSolver& solver, SpaceKind kind, int kmax) {
    std::vector<LabeledEndo> out;
    const Algebra& a = solver.algebra();
    for (int k = 0; k <= kmax; ++k)
        for (const GroupElement& xi : a.group.elements()) {
            const SpaceBasis& sb = solver.space(kind, k, xi);
            for (size_t i = 0; i < sb.vectors.size(); ++i)
                out.push_back({sb.vectors[i].map, k,
                               to_string(kind) + "[k=" + std::to_string(k) + ",xi=" +
                                   to_string(xi) + "]#" + std::to_string(i)});
        }
    return out;
}

bool in_space(SpaceSolver& solver, SpaceKind kind, int k, const Endo& e) {
    return solver.space(kind, k, *e.degree).projection.contains(flatten(e.matrix));
}

Endo tilde_alpha(const Algebra& a, const Endo& e) {
    // maps under consideration commute with alpha, so D alpha == alpha D
    return Endo(e.matrix * a.alpha.matrix, e.degree);
}

void add_check(LemmaEntry& entry, const std::string& desc, bool ok, const std::string& witness = "") {
    entry.checks.push_back({desc, ok ? "pass" : "fail", ok ? "" : witness});
}

void add_skip(LemmaEntry& entry, const std::string& desc, const std::string& reason) {
    entry.checks.push_back({desc, "skipped", reason});
}

}  // namespace

std::vector<std::string> lemma_ids() { return {"2.1", "2.2", "2.3", "2.5", "2.6", "2.7"}; }

LemmaReport verify_lemmas(SpaceSolver& solver, int kmax, const std::vector<std::string>& which) {
    const Algebra& a = solver.algebra();
    auto wanted = [&](const std::string& id) {
        return which.empty() || std::find(which.begin(), which.end(), id) != which.end();
    };
    LemmaReport report;

    auto gder_b = basis_of(solver, SpaceKind::gder, kmax);
    auto qder_b = basis_of(solver, SpaceKind::qder, kmax);
    auto der_b = basis_of(solver, SpaceKind::der, kmax);
    auto c_b = basis_of(solver, SpaceKind::c, kmax);
    auto qc_b = basis_of(solver, SpaceKind::qc, kmax);
    auto zder_b = basis_of(solver, SpaceKind::zder, kmax);

    if (wanted("2.1")) {
        LemmaEntry entry{"2.1", true, {}};
        for (auto [kind, basis] : std::initializer_list<std::pair<SpaceKind, const std::vector<LabeledEndo>*>>{
                 {SpaceKind::gder, &gder_b}, {SpaceKind::qder, &qder_b}, {SpaceKind::c, &c_b}}) {
            bool alpha_ok = true, bracket_ok = true;
            std::string wit_a, wit_b;
            for (const auto& u : *basis) {
                if (!in_space(solver, kind, u.k + 1, tilde_alpha(a, u.e))) {
                    alpha_ok = false;
                    wit_a = u.label;
                }
                for (const auto& v : *basis) {
                    Endo br = color_commutator(a.eps, u.e, v.e);
                    if (!in_space(solver, kind, u.k + v.k, br)) {
                        bracket_ok = false;
                        wit_b = "[" + u.label + "," + v.label + "]";
                    }
                }
            }
            add_check(entry, to_string(kind) + " closed under tilde-alpha", alpha_ok, wit_a);
            add_check(entry, to_string(kind) + " closed under color bracket", bracket_ok, wit_b);
        }
        {
            bool alpha_ok = true, ideal_ok = true;
            std::string wit_a, wit_b;
            for (const auto& z : zder_b) {
                if (!in_space(solver, SpaceKind::zder, z.k + 1, tilde_alpha(a, z.e))) {
                    alpha_ok = false;
                    wit_a = z.label;
                }
                for (const auto& dd : der_b) {
                    Endo br = color_commutator(a.eps, z.e, dd.e);
                    if (!in_space(solver, SpaceKind::zder, z.k + dd.k, br)) {
                        ideal_ok = false;
                        wit_b = "[" + z.label + "," + dd.label + "]";
                    }
                }
            }
            add_check(entry, "zder closed under tilde-alpha", alpha_ok, wit_a);
            add_check(entry, "[zder,der] inside zder (ideal)", ideal_ok, wit_b);
        }
        report.push_back(std::move(entry));
    }

    if (wanted("2.2")) {
        LemmaEntry entry{"2.2", true, {}};
        auto bracket_into = [&](const std::vector<LabeledEndo>& xs, const std::vector<LabeledEndo>& ys,
                                SpaceKind target, const std::string& desc) {
            bool ok = true;
            std::string wit;
            for (const auto& u : xs)
                for (const auto& v : ys) {
                    Endo br = color_commutator(a.eps, u.e, v.e);
                    if (!in_space(solver, target, u.k + v.k, br)) {
                        ok = false;
                        wit = "[" + u.label + "," + v.label + "]";
                    }
                }
            add_check(entry, desc, ok, wit);
        };
        bracket_into(der_b, c_b, SpaceKind::c, "(1) [der,c] inside c");
        bracket_into(qder_b, qc_b, SpaceKind::qc, "(2) [qder,qc] inside qc");
        {
            bool ok = true;
            std::string wit;
            for (const auto& u : c_b)
                for (const auto& v : der_b) {
                    Endo comp(u.e.matrix * v.e.matrix, a.group.add(*u.e.degree, *v.e.degree));
                    if (!in_space(solver, SpaceKind::der, u.k + v.k, comp)) {
                        ok = false;
                        wit = u.label + "*" + v.label;
                    }
                }
            add_check(entry, "(3) c composed with der inside der", ok, wit);
        }
        {
            bool ok = true;
            std::string wit;
            for (const auto& u : c_b)
                if (!in_space(solver, SpaceKind::qder, u.k, u.e)) {
                    ok = false;
                    wit = u.label;
                }
            add_check(entry, "(4) c inside qder", ok, wit);
        }
        bracket_into(qc_b, qc_b, SpaceKind::qder, "(5) [qc,qc] inside qder");
        {
            bool ok = true;
            std::string wit;
            for (const auto& u : qder_b)
                if (!in_space(solver, SpaceKind::gder, u.k, u.e)) {
                    ok = false;
                    wit = u.label;
                }
            for (const auto& u : qc_b)
                if (!in_space(solver, SpaceKind::gder, u.k, u.e)) {
                    ok = false;
                    wit = u.label;
                }
            add_check(entry, "(6) qder + qc inside gder", ok, wit);
        }
        report.push_back(std::move(entry));
    }

    if (wanted("2.3")) {
        LemmaEntry entry{"2.3", true, {}};
        // generators of QC + [QC,QC], tracked per level k
        std::vector<LabeledEndo> gens = qc_b;
        for (const auto& u : qc_b)
            for (const auto& v : qc_b)
                if (u.k + v.k <= kmax)
                    gens.push_back({color_commutator(a.eps, u.e, v.e), u.k + v.k,
                                    "[" + u.label + "," + v.label + "]"});
        // target span per level: QC_level + all [QC_a,QC_b] with a+b=level
        auto target_contains = [&](int level, const Endo& e) {
            RatVec f = flatten(e.matrix);
            Subspace span = solver.space(SpaceKind::qc, level, *e.degree).projection;
            for (const auto& u : qc_b)
                for (const auto& v : qc_b) {
                    if (u.k + v.k != level) continue;
                    Endo br = color_commutator(a.eps, u.e, v.e);
                    if (*br.degree != *e.degree) continue;
                    std::vector<RatVec> rows{flatten(br.matrix)};
                    span = span.sum(Subspace::span(f.size(), rows));
                }
            return span.contains(f);
        };
        bool closed = true, alpha_ok = true;
        std::string wit_c, wit_a;
        for (const auto& u : gens) {
            if (!target_contains(u.k + 1, tilde_alpha(a, u.e))) {
                alpha_ok = false;
                wit_a = u.label;
            }
            for (const auto& v : gens) {
                Endo br = color_commutator(a.eps, u.e, v.e);
                if (!target_contains(u.k + v.k, br)) {
                    closed = false;
                    wit_c = "[" + u.label + "," + v.label + "]";
                }
            }
        }
        bool in_gder = true;
        std::string wit_g;
        for (const auto& u : gens)
            if (!in_space(solver, SpaceKind::gder, u.k, u.e)) {
                in_gder = false;
                wit_g = u.label;
            }
        add_check(entry, "qc+[qc,qc] inside gder", in_gder, wit_g);
        add_check(entry, "qc+[qc,qc] closed under color bracket (truncated)", closed, wit_c);
        add_check(entry, "qc+[qc,qc] closed under tilde-alpha (truncated)", alpha_ok, wit_a);
        report.push_back(std::move(entry));
    }

    Subspace ann = annihilator(a);

    if (wanted("2.5")) {
        LemmaEntry entry{"2.5", true, {}};
        if (!a.alpha_surjective()) {
            entry.hypotheses_ok = false;
            add_skip(entry, "[c,qc] maps T into Ann(T)", "skipped: hypothesis (alpha not surjective)");
        } else {
            bool into_ann = true, zero_ok = true;
            std::string wit_a, wit_z;
            for (const auto& u : c_b)
                for (const auto& v : qc_b) {
                    Endo br = color_commutator(a.eps, u.e, v.e);
                    for (int i = 0; i < a.dim; ++i)
                        if (!ann.contains(br.matrix.col(i))) {
                            into_ann = false;
                            wit_a = "[" + u.label + "," + v.label + "](e" + std::to_string(i) + ")";
                        }
                    if (ann.dim() == 0 && !br.matrix.is_zero()) {
                        zero_ok = false;
                        wit_z = "[" + u.label + "," + v.label + "]";
                    }
                }
            add_check(entry, "[c,qc] maps T into Ann(T)", into_ann, wit_a);
            if (ann.dim() == 0)
                add_check(entry, "Ann(T)={0} forces [c,qc]={0}", zero_ok, wit_z);
            else
                add_skip(entry, "Ann(T)={0} forces [c,qc]={0}", "skipped: hypothesis (Ann(T) != {0})");
        }
        report.push_back(std::move(entry));
    }

    if (wanted("2.6")) {
        LemmaEntry entry{"2.6", true, {}};
        bool closed = true;
        std::string wit_c;
        for (const auto& u : qc_b)
            for (const auto& v : qc_b) {
                Endo p = jordan_product(a.eps, u.e, v.e);
                if (!in_space(solver, SpaceKind::qc, u.k + v.k, p)) {
                    closed = false;
                    wit_c = u.label + "." + v.label;
                }
            }
        add_check(entry, "qc closed under jordan product", closed, wit_c);

        auto ta = [&](const Endo& e) { return Endo(a.alpha.matrix * e.matrix, e.degree); };
        auto dot = [&](const Endo& x, const Endo& y) { return jordan_product(a.eps, x, y); };
        auto assoc = [&](const Endo& x, const Endo& y, const Endo& z) {
            Endo lhs = dot(dot(x, y), ta(z));
            Endo rhs = dot(ta(x), dot(y, z));
            return Endo(lhs.matrix - rhs.matrix, lhs.degree);
        };
        bool jordan_ok = true;
        std::string wit_j;
        for (const auto& dx : qc_b)
            for (const auto& dy : qc_b)
                for (const auto& dt : qc_b)
                    for (const auto& dg : qc_b) {
                        const GroupElement &xi = *dx.e.degree, &eta = *dy.e.degree,
                                           &theta = *dt.e.degree, &gamma = *dg.e.degree;
                        Endo t1 = assoc(dot(dx.e, dy.e), ta(dt.e), ta(dg.e));
                        Endo t2 = assoc(dot(dy.e, dg.e), ta(dt.e), ta(dx.e));
                        Endo t3 = assoc(dot(dg.e, dx.e), ta(dt.e), ta(dy.e));
                        RatMat total =
                            t1.matrix.scaled(Rat(a.eps.eps(gamma, a.group.add(xi, theta)))) +
                            t2.matrix.scaled(Rat(a.eps.eps(xi, a.group.add(eta, theta)))) +
                            t3.matrix.scaled(Rat(a.eps.eps(eta, a.group.add(gamma, theta))));
                        if (!total.is_zero()) {
                            jordan_ok = false;
                            wit_j = "(" + dx.label + "," + dy.label + "," + dt.label + "," +
                                    dg.label + ")";
                        }
                    }
        add_check(entry, "(qc, jordan product, tilde-alpha) satisfies the color Hom-Jordan identity",
                  jordan_ok, wit_j);
        report.push_back(std::move(entry));
    }

    if (wanted("2.7")) {
        LemmaEntry entry{"2.7", true, {}};
        bool bracket_closed = true, comp_closed = true, brackets_zero = true;
        for (const auto& u : qc_b)
            for (const auto& v : qc_b) {
                Endo br = color_commutator(a.eps, u.e, v.e);
                if (!in_space(solver, SpaceKind::qc, u.k + v.k, br)) bracket_closed = false;
                if (!br.matrix.is_zero()) brackets_zero = false;
                Endo comp(u.e.matrix * v.e.matrix, a.group.add(*u.e.degree, *v.e.degree));
                if (!in_space(solver, SpaceKind::qc, u.k + v.k, comp)) comp_closed = false;
            }
        add_check(entry,
                  "(1) bracket-closure of qc iff composition-closure of qc (truncated at kmax)",
                  bracket_closed == comp_closed,
                  "bracket_closed=" + std::to_string(bracket_closed) +
                      " composition_closed=" + std::to_string(comp_closed));
        if (a.alpha_surjective() && ann.dim() == 0)
            add_check(entry, "(2) with Ann(T)={0}: bracket-closure of qc iff [qc,qc]={0}",
                      bracket_closed == brackets_zero,
                      "bracket_closed=" + std::to_string(bracket_closed) +
                          " brackets_zero=" + std::to_string(brackets_zero));
        else
            add_skip(entry, "(2) with Ann(T)={0}: bracket-closure of qc iff [qc,qc]={0}",
                     "skipped: hypothesis (needs alpha surjective and Ann(T)={0})");
        report.push_back(std::move(entry));
    }

    return report;
}

}  // namespace nhomega
