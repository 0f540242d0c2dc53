#pragma once

#include <stdexcept>
#include <string>

#include "algebra.hpp"

namespace nhomega {

// Malformed input files; maps to CLI exit code 2.
struct FileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "p" or "p/q", exact; rejects zero denominators.
Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& r);

Algebra load_algebra_json(const std::string& text);
Algebra load_algebra_file(const std::string& path);
std::string save_algebra_json(const Algebra& a);
void save_algebra_file(const Algebra& a, const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// FNV-1a hash of the input bytes, as fixed-width hex.
std::string input_hash(const std::string& bytes);

// Tags carried by corpus files (ignored by load_algebra_json).
struct CorpusTags {
    std::vector<std::string> satisfies;
    bool ann_zero = false;
    std::string alpha_kind;
};
CorpusTags load_tags_json(const std::string& text);

}  // namespace nhomega
