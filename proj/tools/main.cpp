// Command-line front end; talks to the library exclusively through the
// C API in nhomega.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nhomega.h"

namespace {

struct StringDeleter {
    void operator()(char* s) const { nh_free_string(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct AlgebraDeleter {
    void operator()(nh_algebra* a) const { nh_algebra_free(a); }
};
using OwnedAlgebra = std::unique_ptr<nh_algebra, AlgebraDeleter>;

// Takes pointers, not values: the report/error strings are written by
// the nh_* call evaluated in the same full expression.
int finish(nh_status status, char** report, char** err) {
    OwnedString rep(*report), e(*err);
    if (rep) std::cout << rep.get();
    if (e) std::cerr << "error: " << e.get() << "\n";
    return static_cast<int>(status);
}

OwnedAlgebra load_or_exit(const std::string& path) {
    nh_algebra* a = nullptr;
    char* err = nullptr;
    if (nh_algebra_load_file(path.c_str(), &a, &err) != NH_OK) {
        OwnedString e(err);
        std::cerr << "error: " << (e ? e.get() : "cannot load algebra") << "\n";
        std::exit(2);
    }
    return OwnedAlgebra(a);
}

std::vector<int> parse_degree(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact workbench for graded n-ary algebras with a twisting map"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(nh_version()));

    std::string file, space, degree_str, identity, out_path, lemmas = "all";
    int k = 0, kmax = 2;
    bool all_degrees = false, no_commute = false;

    auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "algebra file")->required();
    };

    CLI::App* validate = app.add_subcommand("validate", "check grading, signs and twisting");
    add_file(validate);

    CLI::App* solve = app.add_subcommand("solve", "compute an operator space");
    add_file(solve);
    solve->add_option("--space", space, "zder|der|qder|gder|c|qc")->required();
    solve->add_option("--k", k, "twisting power")->check(CLI::NonNegativeNumber);
    solve->add_option("--degree", degree_str, "residue tuple r1,r2,...");
    solve->add_flag("--all-degrees", all_degrees, "solve every degree (default)");
    solve->add_flag("--no-commute-alpha", no_commute, "drop the commute-with-alpha constraint");

    CLI::App* check = app.add_subcommand("check", "evaluate a polynomial identity");
    add_file(check);
    check->add_option("--identity", identity, "built-in name or @file")->required();

    CLI::App* ann = app.add_subcommand("ann", "annihilator");
    add_file(ann);

    CLI::App* derived = app.add_subcommand("derived", "span of all bracket values");
    add_file(derived);

    CLI::App* extend = app.add_subcommand("extend", "build the doubled algebra");
    add_file(extend);
    extend->add_option("-o,--output", out_path, "output file")->required();

    CLI::App* verify = app.add_subcommand("verify", "run the structural checks");
    add_file(verify);
    verify->add_option("--lemmas", lemmas, "all or comma-separated ids");
    verify->add_option("--kmax", kmax, "largest twisting power")->check(CLI::NonNegativeNumber);

    CLI::App* report = app.add_subcommand("report", "full atlas of spaces, checks, embedding");
    add_file(report);
    report->add_option("--kmax", kmax, "largest twisting power")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    OwnedAlgebra a = load_or_exit(file);
    char* rep = nullptr;
    char* err = nullptr;

    if (*validate) return finish(nh_validate(a.get(), &rep, &err), &rep, &err);

    if (*solve) {
        if (all_degrees && !degree_str.empty()) {
            std::cerr << "error: --degree and --all-degrees are mutually exclusive\n";
            return 2;
        }
        std::vector<int> degree;
        const int* dptr = nullptr;
        if (!degree_str.empty()) {
            try {
                degree = parse_degree(degree_str);
            } catch (const std::exception&) {
                std::cerr << "error: bad --degree tuple\n";
                return 2;
            }
            dptr = degree.data();
        }
        return finish(nh_solve(a.get(), space.c_str(), k, dptr,
                               static_cast<int>(degree.size()), no_commute ? 0 : 1, &rep, &err),
                      &rep, &err);
    }

    if (*check) {
        std::string spec = identity;
        int is_text = 0;
        if (!spec.empty() && spec[0] == '@') {
            std::ifstream in(spec.substr(1));
            if (!in) {
                std::cerr << "error: cannot open identity file " << spec.substr(1) << "\n";
                return 2;
            }
            std::ostringstream os;
            os << in.rdbuf();
            spec = os.str();
            is_text = 1;
        }
        return finish(nh_check(a.get(), spec.c_str(), is_text, &rep, &err), &rep, &err);
    }

    if (*ann) return finish(nh_annihilator(a.get(), &rep, &err), &rep, &err);
    if (*derived) return finish(nh_derived(a.get(), &rep, &err), &rep, &err);
    if (*extend) return finish(nh_extend(a.get(), out_path.c_str(), &rep, &err), &rep, &err);
    if (*verify) return finish(nh_verify(a.get(), lemmas.c_str(), kmax, &rep, &err), &rep, &err);
    if (*report) return finish(nh_report(a.get(), kmax, &rep, &err), &rep, &err);

    return 2;
}
