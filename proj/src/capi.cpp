#include "nhomega.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <sstream>

#include "report.hpp"

using namespace nhomega;

struct nh_algebra {
    Algebra alg;
    std::string input_bytes;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_err(char** err, const std::string& msg) {
    if (err) *err = dup_string(msg);
}

// Shared wrapper: FileError/ParseError and bad arguments map to
// NH_BAD_INPUT, anything else to a check failure is decided by the
// report itself.
template <typename Fn>
nh_status run_command(Fn&& fn, char** report, char** err) {
    try {
        CommandResult res = fn();
        if (report) *report = dup_string(res.json);
        return res.ok ? NH_OK : NH_CHECK_FAIL;
    } catch (const FileError& e) {
        set_err(err, e.what());
        return NH_BAD_INPUT;
    } catch (const ParseError& e) {
        set_err(err, e.what());
        return NH_BAD_INPUT;
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return NH_BAD_INPUT;
    }
}

}  // namespace

extern "C" {

const char* nh_version(void) { return kToolVersion; }

void nh_free_string(char* s) { std::free(s); }

void nh_algebra_free(nh_algebra* a) { delete a; }

nh_status nh_algebra_load_json(const char* text, nh_algebra** out, char** err) {
    if (!text || !out) {
        set_err(err, "null argument");
        return NH_BAD_INPUT;
    }
    try {
        auto* h = new nh_algebra{load_algebra_json(text), text};
        *out = h;
        return NH_OK;
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return NH_BAD_INPUT;
    }
}

nh_status nh_algebra_load_file(const char* path, nh_algebra** out, char** err) {
    if (!path || !out) {
        set_err(err, "null argument");
        return NH_BAD_INPUT;
    }
    try {
        std::string text = read_file(path);
        auto* h = new nh_algebra{load_algebra_json(text), std::move(text)};
        *out = h;
        return NH_OK;
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return NH_BAD_INPUT;
    }
}

char* nh_algebra_to_json(const nh_algebra* a) {
    if (!a) return nullptr;
    return dup_string(save_algebra_json(a->alg));
}

nh_status nh_validate(const nh_algebra* a, char** report, char** err) {
    if (!a) {
        set_err(err, "null algebra");
        return NH_BAD_INPUT;
    }
    return run_command([&] { return report_validate(a->alg, a->input_bytes); }, report, err);
}

nh_status nh_solve(const nh_algebra* a, const char* space, int k, const int* degree,
                   int degree_len, int commute_alpha, char** report, char** err) {
    if (!a || !space || k < 0) {
        set_err(err, "bad arguments");
        return NH_BAD_INPUT;
    }
    return run_command(
        [&] {
            SpaceKind kind = space_kind_from_string(space);
            std::optional<GroupElement> xi;
            if (degree) {
                GroupElement g(degree, degree + degree_len);
                if (!a->alg.group.contains(g)) throw FileError("degree tuple out of range");
                xi = std::move(g);
            }
            return report_solve(a->alg, a->input_bytes, kind, k, xi, commute_alpha != 0);
        },
        report, err);
}

nh_status nh_check(const nh_algebra* a, const char* identity, int identity_is_text,
                   char** report, char** err) {
    if (!a || !identity) {
        set_err(err, "bad arguments");
        return NH_BAD_INPUT;
    }
    return run_command(
        [&] { return report_check(a->alg, a->input_bytes, identity, identity_is_text != 0); },
        report, err);
}

nh_status nh_annihilator(const nh_algebra* a, char** report, char** err) {
    if (!a) {
        set_err(err, "null algebra");
        return NH_BAD_INPUT;
    }
    return run_command([&] { return report_annihilator(a->alg, a->input_bytes); }, report, err);
}

nh_status nh_derived(const nh_algebra* a, char** report, char** err) {
    if (!a) {
        set_err(err, "null algebra");
        return NH_BAD_INPUT;
    }
    return run_command([&] { return report_derived(a->alg, a->input_bytes); }, report, err);
}

nh_status nh_extend(const nh_algebra* a, const char* out_path, char** report, char** err) {
    if (!a || !out_path) {
        set_err(err, "bad arguments");
        return NH_BAD_INPUT;
    }
    return run_command([&] { return report_extend(a->alg, a->input_bytes, out_path); }, report,
                       err);
}

nh_status nh_verify(const nh_algebra* a, const char* lemmas, int kmax, char** report,
                    char** err) {
    if (!a || !lemmas || kmax < 0) {
        set_err(err, "bad arguments");
        return NH_BAD_INPUT;
    }
    return run_command(
        [&] {
            std::vector<std::string> which;
            std::string spec = lemmas;
            if (spec != "all" && !spec.empty()) {
                std::stringstream ss(spec);
                std::string item;
                std::vector<std::string> known = lemma_ids();
                while (std::getline(ss, item, ',')) {
                    if (std::find(known.begin(), known.end(), item) == known.end())
                        throw FileError("unknown lemma id: " + item);
                    which.push_back(item);
                }
            }
            return report_verify(a->alg, a->input_bytes, which, kmax);
        },
        report, err);
}

nh_status nh_report(const nh_algebra* a, int kmax, char** report, char** err) {
    if (!a || kmax < 0) {
        set_err(err, "bad arguments");
        return NH_BAD_INPUT;
    }
    return run_command([&] { return report_atlas(a->alg, a->input_bytes, kmax); }, report, err);
}

}  // extern "C"
