#include "identity.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nhomega {

namespace {

void collect_order(const Monomial::Node& n, std::vector<int>& out) {
    if (n.is_var()) {
        out.push_back(n.var);
        return;
    }
    for (const auto& c : n.children) collect_order(c, out);
}

void collect_depths(const Monomial::Node& n, int depth, std::map<int, int>& out) {
    if (n.is_var()) {
        out[n.var] = depth;
        return;
    }
    for (const auto& c : n.children) collect_depths(c, depth + 1, out);
}

}  // namespace

std::vector<int> Monomial::variable_order() const {
    std::vector<int> out;
    collect_order(root, out);
    return out;
}

std::map<int, int> Monomial::depths() const {
    std::map<int, int> out;
    collect_depths(root, 0, out);
    return out;
}

int Monomial::max_depth() const {
    int m = 0;
    for (const auto& [v, d] : depths()) m = std::max(m, d);
    return m;
}

// ---------------------------------------------------------------------------
// parser

namespace {

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
    }

    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    char get() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        ++col_;
        return text_[pos_++];
    }

    void expect(char c) {
        char got = get();
        if (got != c) fail(std::string("expected '") + c + "', got '" + got + "'");
    }

    long integer() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) fail("expected integer");
        col_ += static_cast<int>(pos_ - start);
        return std::stol(text_.substr(start, pos_ - start));
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_, col_); }

    int line() const { return line_; }
    int col() const { return col_; }

private:
    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

Monomial::Node parse_elem(Lexer& lx);

Monomial::Node parse_word(Lexer& lx) {
    lx.expect('[');
    Monomial::Node n;
    n.children.push_back(parse_elem(lx));
    while (lx.peek() == ',') {
        lx.get();
        n.children.push_back(parse_elem(lx));
    }
    lx.expect(']');
    return n;
}

Monomial::Node parse_elem(Lexer& lx) {
    char c = lx.peek();
    if (c == '[') return parse_word(lx);
    if (c == 'x') {
        lx.get();
        long v = lx.integer();
        if (v < 1) lx.fail("variable index must be >= 1");
        Monomial::Node n;
        n.var = static_cast<int>(v);
        return n;
    }
    lx.fail("expected '[' or variable");
}

int node_arity(const Monomial::Node& n, Lexer& lx) {
    int a = static_cast<int>(n.children.size());
    for (const auto& c : n.children) {
        if (c.is_var()) continue;
        if (node_arity(c, lx) != a) lx.fail("mixed bracket arity");
    }
    return a;
}

}  // namespace

Identity parse_identity(const std::string& text) {
    Lexer lx(text);
    Identity id;
    bool first = true;
    while (true) {
        Rat sign(1);
        if (first) {
            if (lx.peek() == '-') {
                lx.get();
                sign = -1;
            }
        } else {
            char op = lx.get();
            if (op == '+')
                sign = 1;
            else if (op == '-')
                sign = -1;
            else
                lx.fail("expected '+' or '-'");
        }
        Rat coeff(1);
        if (lx.peek() != '[') {
            long p = lx.integer();
            if (lx.peek() == '/') {
                lx.get();
                long q = lx.integer();
                if (q == 0) lx.fail("zero denominator");
                coeff = Rat(p, q);
            } else {
                coeff = Rat(p);
            }
            coeff.canonicalize();
            lx.expect('*');
        }
        IdentityTerm term;
        term.coeff = sign * coeff;
        term.monomial.root = parse_word(lx);
        id.terms.push_back(std::move(term));
        if (lx.eof()) break;
        first = false;
    }

    // multilinearity and shape validation
    id.arity = node_arity(id.terms[0].monomial.root, lx);
    if (id.arity < 2) lx.fail("bracket arity must be >= 2");
    std::vector<int> base = id.terms[0].monomial.variable_order();
    std::vector<int> sorted = base;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (i > 0 && sorted[i] == sorted[i - 1]) lx.fail("repeated variable x" + std::to_string(sorted[i]));
        if (sorted[i] != static_cast<int>(i) + 1)
            lx.fail("variable set must be exactly x1..x" + std::to_string(sorted.size()));
    }
    id.num_vars = static_cast<int>(sorted.size());
    for (const auto& t : id.terms) {
        if (node_arity(t.monomial.root, lx) != id.arity) lx.fail("mixed bracket arity between terms");
        std::vector<int> vs = t.monomial.variable_order();
        std::vector<int> s2 = vs;
        std::sort(s2.begin(), s2.end());
        if (s2 != sorted) lx.fail("terms use different variable sets or repeat a variable");
    }
    id.base_term_index = 0;
    return id;
}

// ---------------------------------------------------------------------------
// colorization and Hom-ization

ColorHomIdentity colorize(const Identity& id) {
    ColorHomIdentity out;
    out.arity = id.arity;
    out.num_vars = id.num_vars;
    const std::vector<int> base = id.terms[id.base_term_index].monomial.variable_order();
    // position of each variable in the base order
    std::map<int, int> base_pos;
    for (size_t i = 0; i < base.size(); ++i) base_pos[base[i]] = static_cast<int>(i);

    for (const auto& t : id.terms) {
        ColorHomTerm ct;
        ct.coeff = t.coeff;
        ct.monomial = t.monomial;
        std::vector<int> order = t.monomial.variable_order();
        // inversions relative to base order: a precedes b in base, b
        // precedes a here; each contributes eps(x_a, x_b)
        for (size_t i = 0; i < order.size(); ++i) {
            for (size_t j = i + 1; j < order.size(); ++j) {
                int b = order[i], a = order[j];
                if (base_pos[a] < base_pos[b]) ct.sign_pairs.emplace_back(a, b);
            }
        }
        std::sort(ct.sign_pairs.begin(), ct.sign_pairs.end());
        out.terms.push_back(std::move(ct));
    }
    return out;
}

ColorHomIdentity homize(const ColorHomIdentity& cid) {
    ColorHomIdentity out = cid;
    int max_depth = 0;
    for (const auto& t : out.terms) max_depth = std::max(max_depth, t.monomial.max_depth());
    for (auto& t : out.terms) {
        t.alpha_exp.clear();
        for (const auto& [v, d] : t.monomial.depths()) {
            int e = max_depth - d;
            if (e > 0) t.alpha_exp[v] = e;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// evaluation

namespace {

RatVec eval_node(const Algebra& a, const Monomial::Node& n,
                 const std::vector<RatVec>& leaf_values) {
    if (n.is_var()) return leaf_values[n.var - 1];
    std::vector<RatVec> args;
    args.reserve(n.children.size());
    for (const auto& c : n.children) args.push_back(eval_node(a, c, leaf_values));
    return a.bracket(args);
}

}  // namespace

CheckResult check_identity(const Algebra& a, const ColorHomIdentity& cid) {
    if (cid.arity != a.arity)
        throw std::invalid_argument("identity arity != algebra arity");
    int m = cid.num_vars;

    int max_exp = 0;
    for (const auto& t : cid.terms)
        for (const auto& [v, e] : t.alpha_exp) max_exp = std::max(max_exp, e);
    std::vector<RatMat> alpha_pow;
    alpha_pow.push_back(RatMat::identity(a.dim));
    for (int e = 1; e <= max_exp; ++e) alpha_pow.push_back(alpha_pow.back() * a.alpha.matrix);

    CheckResult res;
    std::vector<int> tuple(m, 0);
    do {
        RatVec total = a.zero_vector();
        for (const auto& t : cid.terms) {
            int sign = 1;
            for (const auto& [va, vb] : t.sign_pairs)
                sign *= a.eps.eps(a.degrees[tuple[va - 1]], a.degrees[tuple[vb - 1]]);
            std::vector<RatVec> leaves(m);
            for (int v = 1; v <= m; ++v) {
                auto it = t.alpha_exp.find(v);
                int e = it == t.alpha_exp.end() ? 0 : it->second;
                leaves[v - 1] = alpha_pow[e].col(tuple[v - 1]);
            }
            RatVec val = eval_node(a, t.monomial.root, leaves);
            Rat c = t.coeff * sign;
            for (int i = 0; i < a.dim; ++i)
                if (val[i] != 0) total[i] += c * val[i];
        }
        if (!is_zero(total)) {
            res.pass = false;
            res.failing_tuple = tuple;
            res.residual = total;
            return res;
        }
    } while (next_tuple(tuple, a.dim));
    return res;
}

// ---------------------------------------------------------------------------
// built-ins

namespace {

std::string plain_word(int from, int to) {  // [x{from},...,x{to}]
    std::string s = "[";
    for (int i = from; i <= to; ++i) s += (i > from ? ",x" : "x") + std::to_string(i);
    return s + "]";
}

// word over x1..x_total with inner bracket covering positions
// [inner_from, inner_from+n-1]
std::string nested_word(int total, int n, int inner_from) {
    std::string s = "[";
    bool first = true;
    for (int i = 1; i <= total;) {
        if (!first) s += ",";
        first = false;
        if (i == inner_from) {
            s += plain_word(i, i + n - 1);
            i += n;
        } else {
            s += "x" + std::to_string(i);
            ++i;
        }
    }
    return s + "]";
}

std::vector<Identity> skew_family(int n) {
    std::vector<Identity> out;
    for (int i = 1; i < n; ++i) {
        std::string base = plain_word(1, n);
        std::string swapped = "[";
        for (int j = 1; j <= n; ++j) {
            int v = j == i ? i + 1 : (j == i + 1 ? i : j);
            swapped += (j > 1 ? ",x" : "x") + std::to_string(v);
        }
        swapped += "]";
        out.push_back(parse_identity(base + " + " + swapped));
    }
    return out;
}

Identity jacobi(int n) {
    // [x1..x_{n-1},[x_n..x_{2n-1}]] = sum_i [y1..y_{i-1},[x's,y_i],y_{i+1}..]
    int m = 2 * n - 1;
    std::string s = nested_word(m, n, n);
    for (int i = 1; i <= n; ++i) {
        std::string term = "[";
        bool first = true;
        for (int j = 1; j < i; ++j) {
            term += (first ? "x" : ",x") + std::to_string(n - 1 + j);
            first = false;
        }
        // inner word [x1,...,x_{n-1}, y_i]
        if (!first) term += ",";
        term += "[";
        for (int j = 1; j < n; ++j) term += (j > 1 ? ",x" : "x") + std::to_string(j);
        term += ",x" + std::to_string(n - 1 + i) + "]";
        for (int j = i + 1; j <= n; ++j) term += ",x" + std::to_string(n - 1 + j);
        term += "]";
        s += " - " + term;
    }
    return parse_identity(s);
}

std::vector<Identity> associative_family(int n) {
    int m = 2 * n - 1;
    std::vector<Identity> out;
    std::string rhs = nested_word(m, n, n);
    for (int i = 0; i + 1 < n; ++i)
        out.push_back(parse_identity(nested_word(m, n, i + 1) + " - " + rhs));
    return out;
}

Identity jordan_linearized() {
    // cyclic sum over (x1,x2,x3) of as(x.x', x4, x'')
    return parse_identity(
        "[[[x1,x2],x4],x3] - [[x1,x2],[x4,x3]]"
        " + [[[x2,x3],x4],x1] - [[x2,x3],[x4,x1]]"
        " + [[[x3,x1],x4],x2] - [[x3,x1],[x4,x2]]");
}

}  // namespace

std::vector<Identity> builtin_identities(const std::string& name, int arity) {
    std::string base = name;
    int n = arity;
    auto paren = name.find('(');
    if (paren != std::string::npos && name.back() == ')') {
        base = name.substr(0, paren);
        n = std::stoi(name.substr(paren + 1, name.size() - paren - 2));
    }
    if (base == "skew") return skew_family(n);
    if (base == "hom_jacobi") return {jacobi(n)};
    if (base == "hom_associative") return associative_family(n);
    if (base == "hom_jordan") {
        std::vector<Identity> out;
        out.push_back(parse_identity("[x1,x2] - [x2,x1]"));
        out.push_back(jordan_linearized());
        return out;
    }
    if (base == "hom_lie") {
        std::vector<Identity> out = skew_family(2);
        out.push_back(jacobi(2));
        return out;
    }
    throw std::invalid_argument("unknown built-in identity: " + name);
}

std::vector<std::string> builtin_identity_names() {
    return {"skew", "hom_jacobi", "hom_associative", "hom_jordan", "hom_lie"};
}

// ---------------------------------------------------------------------------
// printing

namespace {

void print_node(std::ostream& os, const Monomial::Node& n, const std::map<int, int>& alpha_exp) {
    if (n.is_var()) {
        auto it = alpha_exp.find(n.var);
        int e = it == alpha_exp.end() ? 0 : it->second;
        for (int i = 0; i < e; ++i) os << "a(";
        os << "x" << n.var;
        for (int i = 0; i < e; ++i) os << ")";
        return;
    }
    os << "[";
    for (size_t i = 0; i < n.children.size(); ++i) {
        if (i) os << ",";
        print_node(os, n.children[i], alpha_exp);
    }
    os << "]";
}

}  // namespace

std::string to_string(const Monomial& m) {
    std::ostringstream os;
    print_node(os, m.root, {});
    return os.str();
}

std::string to_string(const ColorHomIdentity& cid) {
    std::ostringstream os;
    for (size_t i = 0; i < cid.terms.size(); ++i) {
        const auto& t = cid.terms[i];
        Rat c = t.coeff;
        if (i == 0) {
            if (c < 0) {
                os << "- ";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (c != 1) os << c << "*";
        for (const auto& [a, b] : t.sign_pairs) os << "e(x" << a << ",x" << b << ")*";
        print_node(os, t.monomial.root, t.alpha_exp);
    }
    return os.str();
}

}  // namespace nhomega
