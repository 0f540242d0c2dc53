#include "corpus.hpp"

#include <algorithm>
#include <cstdlib>

namespace nhomega {

const std::vector<std::string>& corpus_names() {
    static const std::vector<std::string> names = {"trivial2", "heis3",     "sl2",
                                                   "hom-sl2",  "super-osc", "filippov4"};
    return names;
}

std::string corpus_dir() {
    if (const char* env = std::getenv("NHOMEGA_CORPUS_DIR")) return env;
#ifdef NHOMEGA_DEFAULT_CORPUS_DIR
    return NHOMEGA_DEFAULT_CORPUS_DIR;
#else
    return "corpus";
#endif
}

CorpusEntry load_corpus_entry(const std::string& name) {
    const auto& names = corpus_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
        throw FileError("unknown corpus algebra: " + name);
    std::string text = read_file(corpus_dir() + "/" + name + ".json");
    CorpusEntry entry;
    entry.name = name;
    entry.algebra = load_algebra_json(text);
    entry.tags = load_tags_json(text);
    return entry;
}

}  // namespace nhomega
