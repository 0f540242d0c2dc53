#include "report.hpp"

#include "json.hpp"

namespace nhomega {

using json = nlohmann::ordered_json;

namespace {

json rat_matrix_json(const RatMat& m) {
    json rows = json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (size_t c = 0; c < m.cols(); ++c) row.push_back(rat_to_string(m.at(r, c)));
        rows.push_back(row);
    }
    return rows;
}

json rat_vec_json(const RatVec& v) {
    json row = json::array();
    for (const Rat& x : v) row.push_back(rat_to_string(x));
    return row;
}

json subspace_json(const Subspace& s) {
    return {{"dim", s.dim()}, {"basis", rat_matrix_json(s.basis())}};
}

json check_json(const std::string& id, const std::string& status, const std::string& witness) {
    return {{"id", id}, {"status", status}, {"witness", witness}};
}

struct ReportBuilder {
    json j;
    json checks = json::array();
    bool ok = true;

    ReportBuilder(const std::string& command, const std::string& input_bytes) {
        j["tool_version"] = kToolVersion;
        j["input_hash"] = input_hash(input_bytes);
        j["query"] = {{"command", command}};
    }

    void add_check(const std::string& id, const std::string& status,
                   const std::string& witness = "") {
        checks.push_back(check_json(id, status, witness));
        if (status == "fail") ok = false;
    }

    CommandResult finish() {
        j["checks"] = checks;
        j["ok"] = ok;
        return {j.dump(2) + "\n", ok};
    }
};

std::string tuple_string(const std::vector<int>& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

json witnessed_map_json(const WitnessedMap& w) {
    json out;
    out["map"] = rat_matrix_json(w.map.matrix);
    json wits = json::array();
    for (const Endo& e : w.witnesses) wits.push_back(rat_matrix_json(e.matrix));
    out["witnesses"] = wits;
    return out;
}

json solve_degree_json(const SpaceBasis& basis) {
    json out;
    out["degree"] = basis.query.degree;
    out["dim"] = basis.dim();
    json vecs = json::array();
    for (const auto& w : basis.vectors) vecs.push_back(witnessed_map_json(w));
    out["basis"] = vecs;
    out["witness_freedom"] = basis.witness_freedom.size();
    return out;
}

void add_lemma_entries(ReportBuilder& rb, const LemmaReport& lemmas) {
    json out = json::array();
    for (const auto& entry : lemmas) {
        json e;
        e["lemma"] = entry.lemma;
        e["hypotheses_ok"] = entry.hypotheses_ok;
        json cs = json::array();
        for (const auto& c : entry.checks) {
            cs.push_back({{"description", c.description},
                          {"status", c.status},
                          {"witness", c.witness}});
            rb.add_check(entry.lemma + ": " + c.description, c.status, c.witness);
        }
        e["checks"] = cs;
        out.push_back(e);
    }
    rb.j["result"]["lemmas"] = out;
}

void add_embedding_entries(ReportBuilder& rb, const EmbeddingReport& emb) {
    json out = json::array();
    for (const auto& e : emb.entries) {
        out.push_back({{"item", e.item},
                       {"k", e.k},
                       {"degree", e.degree},
                       {"status", e.status},
                       {"detail", e.detail}});
        rb.add_check("embedding " + e.item + " k=" + std::to_string(e.k) +
                         " degree=" + to_string(e.degree),
                     e.status, e.detail);
    }
    rb.j["result"]["embedding"] = out;
    rb.j["result"]["notes"] = json::array({"the adjoined letter t carries group degree 0"});
}

void run_check(ReportBuilder& rb, const Algebra& a, const std::string& label,
               const Identity& id) {
    ColorHomIdentity cid = homize(colorize(id));
    CheckResult res = check_identity(a, cid);
    std::string witness;
    if (!res.pass)
        witness = "tuple " + tuple_string(res.failing_tuple) + " residual " +
                  rat_vec_json(res.residual).dump();
    rb.add_check(label, res.pass ? "pass" : "fail", witness);
}

}  // namespace

CommandResult report_validate(const Algebra& a, const std::string& input_bytes) {
    ReportBuilder rb("validate", input_bytes);
    rb.j["query"]["algebra"] = a.name;
    rb.j["result"] = {{"name", a.name},
                      {"arity", a.arity},
                      {"dim", a.dim},
                      {"group", a.group.cyclic_orders()},
                      {"alpha_surjective", a.alpha_surjective()}};
    ValidationReport eps_report = a.eps.validate();
    ValidationReport alg_report = a.validate();
    for (const auto& v : eps_report) rb.add_check("bicharacter: " + v.axiom, "fail", v.detail);
    for (const auto& v : alg_report) rb.add_check("algebra: " + v.axiom, "fail", v.detail);
    if (eps_report.empty()) rb.add_check("bicharacter valid", "pass");
    if (alg_report.empty()) rb.add_check("algebra valid", "pass");
    return rb.finish();
}

CommandResult report_solve(const Algebra& a, const std::string& input_bytes, SpaceKind kind,
                           int k, const std::optional<GroupElement>& degree,
                           bool commute_alpha) {
    ReportBuilder rb("solve", input_bytes);
    rb.j["query"]["algebra"] = a.name;
    rb.j["query"]["space"] = to_string(kind);
    rb.j["query"]["k"] = k;
    rb.j["query"]["commute_alpha"] = commute_alpha;
    std::vector<GroupElement> degrees =
        degree ? std::vector<GroupElement>{*degree} : a.group.elements();
    SpaceSolver solver(a);
    json per_degree = json::array();
    size_t total = 0;
    for (const GroupElement& xi : degrees) {
        const SpaceBasis& basis = solver.space(kind, k, xi, commute_alpha);
        total += basis.dim();
        per_degree.push_back(solve_degree_json(basis));
    }
    rb.j["result"] = {{"total_dim", total}, {"degrees", per_degree}};
    rb.add_check("solve completed", "pass");
    return rb.finish();
}

CommandResult report_check(const Algebra& a, const std::string& input_bytes,
                           const std::string& identity_spec, bool is_text) {
    ReportBuilder rb("check", input_bytes);
    rb.j["query"]["algebra"] = a.name;
    rb.j["query"]["identity"] = is_text ? "<file>" : identity_spec;
    if (is_text) {
        run_check(rb, a, "identity", parse_identity(identity_spec));
    } else {
        std::vector<Identity> ids = builtin_identities(identity_spec, a.arity);
        for (size_t i = 0; i < ids.size(); ++i)
            run_check(rb, a, identity_spec + "[" + std::to_string(i) + "]", ids[i]);
    }
    return rb.finish();
}

CommandResult report_annihilator(const Algebra& a, const std::string& input_bytes) {
    ReportBuilder rb("ann", input_bytes);
    rb.j["query"]["algebra"] = a.name;
    rb.j["result"] = subspace_json(annihilator(a));
    rb.add_check("annihilator computed", "pass");
    return rb.finish();
}

CommandResult report_derived(const Algebra& a, const std::string& input_bytes) {
    ReportBuilder rb("derived", input_bytes);
    rb.j["query"]["algebra"] = a.name;
    rb.j["result"] = subspace_json(derived_subspace(a));
    rb.add_check("derived subspace computed", "pass");
    return rb.finish();
}

CommandResult report_extend(const Algebra& a, const std::string& input_bytes,
                            const std::string& out_path) {
    ReportBuilder rb("extend", input_bytes);
    rb.j["query"]["algebra"] = a.name;
    rb.j["query"]["output"] = out_path;
    ExtendedAlgebra ext = extend(a);
    std::string text = save_algebra_json(ext.alg);
    write_file(out_path, text);
    rb.j["result"] = {{"name", ext.alg.name},
                      {"dim", ext.alg.dim},
                      {"output_hash", input_hash(text)},
                      {"notes", json::array({"the adjoined letter t carries group degree 0"})}};
    rb.add_check("extension validates", ext.alg.validate().empty() ? "pass" : "fail");
    return rb.finish();
}

CommandResult report_verify(const Algebra& a, const std::string& input_bytes,
                            const std::vector<std::string>& lemmas, int kmax) {
    ReportBuilder rb("verify", input_bytes);
    rb.j["query"]["algebra"] = a.name;
    rb.j["query"]["lemmas"] = lemmas.empty() ? json("all") : json(lemmas);
    rb.j["query"]["kmax"] = kmax;
    SpaceSolver solver(a);
    add_lemma_entries(rb, verify_lemmas(solver, kmax, lemmas));
    return rb.finish();
}

CommandResult report_atlas(const Algebra& a, const std::string& input_bytes, int kmax) {
    ReportBuilder rb("report", input_bytes);
    rb.j["query"]["algebra"] = a.name;
    rb.j["query"]["kmax"] = kmax;
    SpaceSolver solver(a);

    json spaces = json::array();
    for (SpaceKind kind :
         {SpaceKind::zder, SpaceKind::der, SpaceKind::qder, SpaceKind::gder, SpaceKind::c,
          SpaceKind::qc}) {
        for (int k = 0; k <= kmax; ++k) {
            json per_degree = json::array();
            size_t total = 0;
            for (const GroupElement& xi : a.group.elements()) {
                const SpaceBasis& basis = solver.space(kind, k, xi);
                total += basis.dim();
                per_degree.push_back(solve_degree_json(basis));
            }
            spaces.push_back({{"space", to_string(kind)},
                              {"k", k},
                              {"total_dim", total},
                              {"degrees", per_degree}});
        }
    }
    rb.j["result"]["spaces"] = spaces;
    rb.j["result"]["annihilator"] = subspace_json(annihilator(a));
    rb.j["result"]["derived"] = subspace_json(derived_subspace(a));

    ChainReport chain = inclusion_chain(solver, kmax);
    json violations = json::array();
    for (const auto& v : chain.violations)
        violations.push_back({{"smaller", v.smaller},
                              {"larger", v.larger},
                              {"k", v.k},
                              {"degree", v.degree},
                              {"witness", rat_vec_json(v.witness)}});
    rb.j["result"]["inclusion_chain"] = {{"pass", chain.pass}, {"violations", violations}};
    rb.add_check("inclusion chain", chain.pass ? "pass" : "fail",
                 chain.pass ? "" : std::to_string(chain.violations.size()) + " violations");

    add_lemma_entries(rb, verify_lemmas(solver, kmax));
    add_embedding_entries(rb, verify_embedding(a, kmax));
    return rb.finish();
}

}  // namespace nhomega
