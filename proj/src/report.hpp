#pragma once

#include <optional>

#include "corpus.hpp"
#include "extension.hpp"
#include "identity.hpp"

namespace nhomega {

inline constexpr const char* kToolVersion = "0.1.0";

struct CommandResult {
    std::string json;  // full report, deterministic byte-for-byte
    bool ok = true;    // false when any check failed
};

// input_bytes: the raw file contents, hashed into every report.
CommandResult report_validate(const Algebra& a, const std::string& input_bytes);

// degree == nullopt means every group degree.
CommandResult report_solve(const Algebra& a, const std::string& input_bytes, SpaceKind kind,
                           int k, const std::optional<GroupElement>& degree, bool commute_alpha);

// is_text: identity_spec is DSL source; otherwise a built-in name.
CommandResult report_check(const Algebra& a, const std::string& input_bytes,
                           const std::string& identity_spec, bool is_text);

CommandResult report_annihilator(const Algebra& a, const std::string& input_bytes);
CommandResult report_derived(const Algebra& a, const std::string& input_bytes);

// Writes the doubled algebra to out_path and reports on it.
CommandResult report_extend(const Algebra& a, const std::string& input_bytes,
                            const std::string& out_path);

// lemmas: subset of lemma_ids(), empty = all.
CommandResult report_verify(const Algebra& a, const std::string& input_bytes,
                            const std::vector<std::string>& lemmas, int kmax);

// Full atlas: every operator space at k <= kmax, the inclusion chain,
// all lemmas, and the embedding checks.
CommandResult report_atlas(const Algebra& a, const std::string& input_bytes, int kmax);

}  // namespace nhomega
