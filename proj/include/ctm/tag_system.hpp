#pragma once

// Binary Post tag systems: each step reads the first symbol, appends its
// production and deletes the first `deletion` symbols.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ctm/distribution.hpp"
#include "ctm/turing_machine.hpp"

namespace ctm {

struct TagSystem {
    std::size_t deletion = 2;
    std::array<std::string, 2> productions; // indexed by symbol
    std::string initial = "10";
    std::uint64_t cutoff = 100;

    /// Throws std::invalid_argument on a malformed system. The initial word
    /// must be at least `deletion` symbols long.
    void validate() const;
};

/// Halts once the word is shorter than `deletion`. The output is the final
/// word, or the word just before the final deletion when that is empty.
RunOutcome run_tag(const TagSystem& system);

/// All binary words of length 0..max_length, shortest first, then
/// lexicographic.
std::vector<std::string> appendants(std::size_t max_length);

struct TagSpaceOptions {
    std::size_t deletion = 2;
    std::vector<std::string> initials = {"10"};
};

/// Runs every production pair with appendant lengths up to `max_length` on
/// each initial word. `enumerated` counts (system, initial) runs.
FrequencyDistribution tagspace_distribution(std::size_t max_length, std::uint64_t cutoff,
                                            const TagSpaceOptions& options = {});

} // namespace ctm
