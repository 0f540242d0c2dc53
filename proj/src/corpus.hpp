#pragma once

#include "io.hpp"

namespace nhomega {

struct CorpusEntry {
    std::string name;
    Algebra algebra;
    CorpusTags tags;
};

// Names of the bundled algebras, in catalog order.
const std::vector<std::string>& corpus_names();

// Directory the bundled files are read from: NHOMEGA_CORPUS_DIR if set,
// otherwise the install-time default.
std::string corpus_dir();

// Loads a bundled algebra by name; throws FileError for unknown names.
CorpusEntry load_corpus_entry(const std::string& name);

}  // namespace nhomega
