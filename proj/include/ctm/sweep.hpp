#pragma once

// Turing-machine space sweeps: exhaustive (optionally sharded) and sampled
// runs that turn a machine space into a FrequencyDistribution.
//
// Every machine is run from both blank colours. The blank-1 run of a
// machine is the complement of the blank-0 run of its complement machine,
// so the resulting distribution is closed under bit complement.

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "ctm/bounds.hpp"
#include "ctm/distribution.hpp"

namespace ctm {

/// Shard i of m over a space of size C covers [floor(i*C/m), floor((i+1)*C/m)).
struct ShardSpec {
    std::uint64_t index = 0;
    std::uint64_t count = 1;

    /// Parses "i/m".
    static ShardSpec parse(std::string_view text);
    IndexInterval range(std::uint64_t space) const;
};

/// Called with (processed, total) as work completes; may be invoked from
/// worker threads but never concurrently.
using ProgressFn = std::function<void(std::uint64_t, std::uint64_t)>;

struct SweepOptions {
    /// Skip work using the complement and mirror bijections. Output is
    /// identical to the naive sweep once the whole space is merged.
    bool use_symmetry = false;
    unsigned workers = 0; // 0 = default_worker_count()
    ProgressFn progress;
};

struct SweepResult {
    FrequencyDistribution distribution;
    std::uint64_t max_steps = 0; // longest halting run observed
};

/// Exhaustive run of machines with indices in `range` under S(n).
SweepResult tm_sweep(int states, IndexInterval range, const SweepOptions& options = {});
SweepResult tm_sweep(int states, const ShardSpec& shard, const SweepOptions& options = {});

struct SampleSpec {
    std::uint64_t draws = 0;
    std::uint64_t seed = 0;
    /// Step cutoff. Required for n >= 5; when unset, n <= 4 uses S(n).
    std::optional<std::uint64_t> cutoff;
};

/// Index of the j-th sampled machine; uniform on [0, space).
std::uint64_t sample_index(std::uint64_t seed, std::uint64_t draw, std::uint64_t space);

/// Uniform sample with replacement over the n-state machine space.
SweepResult tm_sample(int states, const SampleSpec& spec, const SweepOptions& options = {});

} // namespace ctm
