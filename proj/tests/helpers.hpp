#pragma once

#include <cstdlib>

#include "corpus.hpp"

namespace nhomega::testutil {

inline CorpusEntry corpus(const std::string& name) {
#ifdef NHOMEGA_CORPUS_PATH
    ::setenv("NHOMEGA_CORPUS_DIR", NHOMEGA_CORPUS_PATH, 0);
#endif
    return load_corpus_entry(name);
}

// Deterministic LCG; rationals with small numerators/denominators.
class Rng {
public:
    explicit Rng(unsigned long long seed) : state_(seed) {}
    unsigned long long next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_ >> 33;
    }
    int int_in(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }
    Rat rat() {
        Rat r(int_in(-9, 9), int_in(1, 7));
        r.canonicalize();
        return r;
    }

private:
    unsigned long long state_;
};

}  // namespace nhomega::testutil
