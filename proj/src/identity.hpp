#pragma once

#include <string>
#include <vector>

#include "algebra.hpp"

namespace nhomega {

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
          line(line_),
          column(col_) {}
};

// Fully bracketed multilinear word: leaves are variables x1..xm, each
// occurring exactly once; every bracket node has exactly `arity` children.
struct Monomial {
    struct Node {
        int var = 0;  // >0: variable leaf x_var; 0: bracket node
        std::vector<Node> children;
        bool is_var() const { return var > 0; }
        bool operator==(const Node&) const = default;
    };
    Node root;

    // Variable indices read left to right.
    std::vector<int> variable_order() const;
    // Variable index -> number of bracket nodes strictly above it.
    std::map<int, int> depths() const;
    int max_depth() const;

    bool operator==(const Monomial&) const = default;
};

struct IdentityTerm {
    Rat coeff;
    Monomial monomial;
    bool operator==(const IdentityTerm&) const = default;
};

// Multilinear polynomial identity f = sum of terms; the first listed
// monomial is the base word fixing the reference variable order.
struct Identity {
    int arity = 2;
    int num_vars = 0;
    std::vector<IdentityTerm> terms;
    size_t base_term_index = 0;

    bool operator==(const Identity&) const = default;
};

struct ColorHomTerm {
    Rat coeff;
    // Ordered pairs (a,b): the term's coefficient carries a factor
    // eps(x_a, x_b) on evaluation. Sorted multiset.
    std::vector<std::pair<int, int>> sign_pairs;
    Monomial monomial;
    // Variable index -> alpha exponent (zero entries may be omitted).
    std::map<int, int> alpha_exp;

    bool operator==(const ColorHomTerm&) const = default;
};

struct ColorHomIdentity {
    int arity = 2;
    int num_vars = 0;
    std::vector<ColorHomTerm> terms;

    bool operator==(const ColorHomIdentity&) const = default;
};

struct CheckResult {
    bool pass = true;
    std::vector<int> failing_tuple;  // basis index per variable
    RatVec residual;
};

// DSL grammar:
//   identity := term (('+'|'-') term)*
//   term     := [coeff '*'] word
//   word     := '[' elem (',' elem)* ']'
//   elem     := variable | word
//   variable := 'x' integer
//   coeff    := integer | integer '/' integer
Identity parse_identity(const std::string& text);

// Koszul signs relative to the base term, by inversion counting.
ColorHomIdentity colorize(const Identity& id);

// Set each variable's alpha exponent to (max depth over all terms) -
// (the variable's depth in its own term).
ColorHomIdentity homize(const ColorHomIdentity& cid);

// Evaluate on every tuple of basis vectors.
CheckResult check_identity(const Algebra& a, const ColorHomIdentity& cid);

// Named built-in identity families: skew(n), hom_jacobi(n),
// hom_associative(n), hom_jordan, hom_lie. Raw (un-colorized) form.
std::vector<Identity> builtin_identities(const std::string& name, int arity);
std::vector<std::string> builtin_identity_names();

std::string to_string(const Monomial& m);
std::string to_string(const ColorHomIdentity& cid);

}  // namespace nhomega
