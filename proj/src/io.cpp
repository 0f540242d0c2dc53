#include "io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace nhomega {

using json = nlohmann::ordered_json;

Rat rat_from_string(const std::string& s) {
    auto parse_int = [&](const std::string& t) {
        if (t.empty()) throw FileError("empty integer in rational '" + s + "'");
        size_t i = t[0] == '-' ? 1 : 0;
        if (i == t.size()) throw FileError("bad rational '" + s + "'");
        for (size_t j = i; j < t.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(t[j])))
                throw FileError("bad rational '" + s + "'");
        return mpz_class(t);
    };
    auto slash = s.find('/');
    mpz_class p, q;
    if (slash == std::string::npos) {
        p = parse_int(s);
        q = 1;
    } else {
        p = parse_int(s.substr(0, slash));
        q = parse_int(s.substr(slash + 1));
        if (q == 0) throw FileError("zero denominator in rational '" + s + "'");
    }
    Rat r(p, q);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw FileError("invalid JSON");
    return j;
}

GroupElement degree_from_json(const json& j, int rank, const std::string& what) {
    if (!j.is_array() || j.size() != static_cast<size_t>(rank))
        throw FileError(what + ": degree tuple length != number of cyclic orders");
    GroupElement g;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw FileError(what + ": degree component must be an integer");
        g.push_back(v.get<int>());
    }
    return g;
}

}  // namespace

Algebra load_algebra_json(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object()) throw FileError("algebra file must be a JSON object");
    Algebra a;
    try {
        a.name = j.at("name").get<std::string>();
        a.arity = j.at("arity").get<int>();
        std::vector<int> orders = j.at("group").at("cyclic_orders").get<std::vector<int>>();
        a.group = GradingGroup(orders);
        int r = a.group.rank();

        const json& degs = j.at("degrees");
        if (!degs.is_array()) throw FileError("degrees must be an array");
        for (const auto& dj : degs) {
            GroupElement g = degree_from_json(dj, r, "degrees");
            if (!a.group.contains(g)) throw FileError("degree tuple out of range");
            a.degrees.push_back(std::move(g));
        }
        a.dim = static_cast<int>(a.degrees.size());
        if (a.dim < 1) throw FileError("empty degree list");
        if (a.arity < 2) throw FileError("arity must be >= 2");

        const json& bc = j.at("bicharacter");
        std::vector<std::vector<int>> gv;
        if (!bc.is_array() || bc.size() != static_cast<size_t>(r))
            throw FileError("bicharacter matrix must be rank x rank");
        for (const auto& rowj : bc) {
            if (!rowj.is_array() || rowj.size() != static_cast<size_t>(r))
                throw FileError("bicharacter matrix must be rank x rank");
            std::vector<int> row;
            for (const auto& v : rowj) {
                std::string s = v.get<std::string>();
                if (s == "1")
                    row.push_back(1);
                else if (s == "-1")
                    row.push_back(-1);
                else
                    throw FileError("bicharacter entries must be \"1\" or \"-1\"");
            }
            gv.push_back(std::move(row));
        }
        a.eps = Bicharacter(a.group, std::move(gv));

        const json& al = j.at("alpha");
        if (!al.is_array() || al.size() != static_cast<size_t>(a.dim))
            throw FileError("alpha must be a dim x dim matrix");
        RatMat am(a.dim, a.dim);
        for (int row = 0; row < a.dim; ++row) {
            if (!al[row].is_array() || al[row].size() != static_cast<size_t>(a.dim))
                throw FileError("alpha must be a dim x dim matrix");
            for (int col = 0; col < a.dim; ++col)
                am.at(row, col) = rat_from_string(al[row][col].get<std::string>());
        }
        a.alpha = Endo(std::move(am), a.group.zero());

        for (const auto& bj : j.at("brackets")) {
            std::vector<int> args = bj.at("args").get<std::vector<int>>();
            if (args.size() != static_cast<size_t>(a.arity))
                throw FileError("bracket args length != arity");
            for (int i : args)
                if (i < 0 || i >= a.dim) throw FileError("bracket arg index out of range");
            if (a.structure.count(args))
                throw FileError("duplicate bracket entry for one argument tuple");
            SparseVec val;
            for (const auto& vj : bj.at("value")) {
                int idx = vj.at("idx").get<int>();
                if (idx < 0 || idx >= a.dim) throw FileError("bracket value index out of range");
                Rat c = rat_from_string(vj.at("c").get<std::string>());
                if (val.count(idx)) throw FileError("duplicate index in bracket value");
                if (c != 0) val[idx] = c;
            }
            if (!val.empty()) a.structure[args] = std::move(val);
        }

        if (j.contains("basis")) {
            a.basis_names = j.at("basis").get<std::vector<std::string>>();
            if (a.basis_names.size() != static_cast<size_t>(a.dim))
                throw FileError("basis name list length != dim");
        }
    } catch (const json::exception& e) {
        throw FileError(std::string("malformed algebra file: ") + e.what());
    }
    return a;
}

Algebra load_algebra_file(const std::string& path) {
    return load_algebra_json(read_file(path));
}

std::string save_algebra_json(const Algebra& a) {
    json j;
    j["name"] = a.name;
    j["arity"] = a.arity;
    j["group"] = {{"cyclic_orders", a.group.cyclic_orders()}};
    json degs = json::array();
    for (const auto& g : a.degrees) degs.push_back(g);
    j["degrees"] = degs;
    json bc = json::array();
    for (const auto& row : a.eps.gen_values()) {
        json r = json::array();
        for (int v : row) r.push_back(v == 1 ? "1" : "-1");
        bc.push_back(r);
    }
    j["bicharacter"] = bc;
    json al = json::array();
    for (int row = 0; row < a.dim; ++row) {
        json r = json::array();
        for (int col = 0; col < a.dim; ++col) r.push_back(rat_to_string(a.alpha.matrix.at(row, col)));
        al.push_back(r);
    }
    j["alpha"] = al;
    json brackets = json::array();
    for (const auto& [args, value] : a.structure) {
        json b;
        b["args"] = args;
        json vals = json::array();
        for (const auto& [idx, c] : value) vals.push_back({{"idx", idx}, {"c", rat_to_string(c)}});
        b["value"] = vals;
        brackets.push_back(b);
    }
    j["brackets"] = brackets;
    if (!a.basis_names.empty()) j["basis"] = a.basis_names;
    return j.dump(2) + "\n";
}

void save_algebra_file(const Algebra& a, const std::string& path) {
    write_file(path, save_algebra_json(a));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileError("cannot write file: " + path);
    out << content;
}

std::string input_hash(const std::string& bytes) {
    unsigned long long h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return buf;
}

CorpusTags load_tags_json(const std::string& text) {
    json j = parse_json(text);
    CorpusTags tags;
    if (!j.contains("tags")) return tags;
    const json& t = j["tags"];
    if (t.contains("satisfies")) tags.satisfies = t["satisfies"].get<std::vector<std::string>>();
    if (t.contains("ann_zero")) tags.ann_zero = t["ann_zero"].get<bool>();
    if (t.contains("alpha_kind")) tags.alpha_kind = t["alpha_kind"].get<std::string>();
    return tags;
}

}  // namespace nhomega
