#pragma once

// Regression corpus: the three worked examples plus seeded random instances.

#include <cstdint>
#include <string>
#include <vector>

#include "chowq/io.hpp"

namespace chowq {

struct CorpusEntry {
    std::string name;     // file stem, e.g. "03_eight_weights"
    std::string command;  // CLI subcommand
    io::json input;       // input document for that subcommand
};

inline constexpr std::uint64_t kDefaultCorpusSeed = 1729;

/// Worked examples first, then `random_count` generated instances. Deterministic
/// for a given seed on every platform.
std::vector<CorpusEntry> regression_corpus(std::uint64_t seed = kDefaultCorpusSeed, std::size_t random_count = 20);

}  // namespace chowq
