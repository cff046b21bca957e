#include "ctm/sweep.hpp"

#include <charconv>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>

#include "ctm/parallel.hpp"

namespace ctm {

namespace {

constexpr std::uint64_t kChunkSize = 1 << 16;

struct Tally {
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t halting = 0;
    std::uint64_t undecided = 0;
    std::uint64_t max_steps = 0;

    void add(const std::string& s, std::uint64_t steps) {
        ++counts[s];
        ++halting;
        max_steps = std::max(max_steps, steps);
    }
};

class Progress {
public:
    Progress(const ProgressFn& fn, std::uint64_t total) : fn_(fn), total_(total) {}

    void advance(std::uint64_t amount) {
        if (!fn_) {
            return;
        }
        std::lock_guard lock(mutex_);
        done_ += amount;
        fn_(done_, total_);
    }

private:
    const ProgressFn& fn_;
    std::uint64_t total_;
    std::uint64_t done_ = 0;
    std::mutex mutex_;
};

// Tallies one run under the policy.
void tally_run(Tally& tally, const RunOutcome& out, const HaltingPolicy& policy) {
    switch (classify(out, policy)) {
    case HaltingVerdict::Halts:
        tally.add(out.output, out.steps);
        break;
    case HaltingVerdict::Undecided:
        ++tally.undecided;
        break;
    case HaltingVerdict::NeverHalts:
        break;
    }
}

void run_both_blanks(Tally& tally, Simulator& sim, const TransitionTable& table, const HaltingPolicy& policy) {
    for (Symbol blank : {Symbol{0}, Symbol{1}}) {
        tally_run(tally, sim.run(table, policy.bound(), blank), policy);
    }
}

// Accounts for `table` (blank 0 run, plus the blank-1 run of its
// complement machine) and, when `with_mirror`, for its mirror image too.
void run_symmetric(Tally& tally, Simulator& sim, const TransitionTable& table, const HaltingPolicy& policy,
                   bool with_mirror) {
    const RunOutcome out = sim.run(table, policy.bound(), 0);
    const std::uint64_t images = with_mirror ? 2 : 1;
    switch (classify(out, policy)) {
    case HaltingVerdict::Halts:
        tally.add(out.output, out.steps);
        tally.add(complement(out.output), out.steps);
        if (with_mirror) {
            const std::string rev = reversed(out.output);
            tally.add(rev, out.steps);
            tally.add(complement(rev), out.steps);
        }
        break;
    case HaltingVerdict::Undecided:
        tally.undecided += 2 * images;
        break;
    case HaltingVerdict::NeverHalts:
        break;
    }
}

Tally combine(std::vector<Tally> parts) {
    Tally total;
    for (Tally& part : parts) {
        for (auto& [s, c] : part.counts) {
            total.counts[s] += c;
        }
        total.halting += part.halting;
        total.undecided += part.undecided;
        total.max_steps = std::max(total.max_steps, part.max_steps);
    }
    return total;
}

SweepResult finish(Tally tally, DistributionMeta meta, std::uint64_t enumerated, ShardSet shards, bool cutoff_mode) {
    SweepResult result;
    FrequencyDistribution& d = result.distribution;
    d.counts = std::move(tally.counts);
    d.halting = tally.halting;
    d.enumerated = enumerated;
    d.meta = std::move(meta);
    d.shards = std::move(shards);
    if (cutoff_mode) {
        d.undecided = tally.undecided;
    }
    result.max_steps = tally.max_steps;
    d.validate();
    return result;
}

unsigned workers_for(const SweepOptions& options) {
    return options.workers ? options.workers : default_worker_count();
}

std::uint64_t mul_div(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b / c);
}

} // namespace

ShardSpec ShardSpec::parse(std::string_view text) {
    const std::size_t slash = text.find('/');
    ShardSpec spec;
    auto parse_part = [&](std::string_view part, std::uint64_t& out) {
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
        return !part.empty() && ec == std::errc{} && ptr == part.data() + part.size();
    };
    if (slash == std::string_view::npos || !parse_part(text.substr(0, slash), spec.index) ||
        !parse_part(text.substr(slash + 1), spec.count)) {
        throw std::invalid_argument("malformed shard '" + std::string(text) + "' (expected i/m)");
    }
    if (spec.count == 0 || spec.index >= spec.count) {
        throw std::invalid_argument("shard index must satisfy 0 <= i < m");
    }
    return spec;
}

IndexInterval ShardSpec::range(std::uint64_t space) const {
    if (count == 0 || index >= count) {
        throw std::invalid_argument("shard index must satisfy 0 <= i < m");
    }
    return {mul_div(index, space, count), mul_div(index + 1, space, count)};
}

SweepResult tm_sweep(int states, IndexInterval range, const SweepOptions& options) {
    const std::uint64_t space = machine_count(states);
    if (range.begin > range.end || range.end > space) {
        throw std::out_of_range("sweep range exceeds the n=" + std::to_string(states) + " machine space");
    }
    const HaltingPolicy policy = HaltingPolicy::exact(states);
    const std::uint64_t size = range.end - range.begin;
    const std::uint64_t chunks = (size + kChunkSize - 1) / kChunkSize;
    Progress progress(options.progress, size);

    const std::function<void(std::uint64_t, Tally&)> work = [&](std::uint64_t chunk, Tally& tally) {
        Simulator sim;
        const std::uint64_t lo = range.begin + chunk * kChunkSize;
        const std::uint64_t hi = std::min(range.end, lo + kChunkSize);
        for (std::uint64_t i = lo; i < hi; ++i) {
            const TransitionTable table = decode_machine({states, i});
            if (!options.use_symmetry) {
                run_both_blanks(tally, sim, table, policy);
                continue;
            }
            const std::uint64_t image = encode_machine(mirror_machine(table)).value;
            const bool image_in_range = image >= range.begin && image < range.end;
            if (image_in_range && image < i) {
                continue; // accounted for by the image
            }
            run_symmetric(tally, sim, table, policy, image_in_range && image != i);
        }
        progress.advance(hi - lo);
    };
    Tally tally = combine(parallel_fold<Tally>(chunks, workers_for(options), Tally{}, work));

    DistributionMeta meta;
    meta.formalism = Formalism::TuringMachine;
    meta.states = states;
    meta.bound = policy.bound();
    return finish(std::move(tally), std::move(meta), size, ShardSet::interval(range.begin, range.end), false);
}

SweepResult tm_sweep(int states, const ShardSpec& shard, const SweepOptions& options) {
    return tm_sweep(states, shard.range(machine_count(states)), options);
}

namespace {

std::vector<std::uint64_t> sample_block(std::uint64_t seed, std::uint64_t block, std::uint64_t space,
                                        std::uint64_t length) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
    std::mt19937_64 engine(seq);
    std::uniform_int_distribution<std::uint64_t> pick(0, space - 1);
    std::vector<std::uint64_t> out(length);
    for (auto& v : out) {
        v = pick(engine);
    }
    return out;
}

} // namespace

std::uint64_t sample_index(std::uint64_t seed, std::uint64_t draw, std::uint64_t space) {
    if (space == 0) {
        throw std::invalid_argument("cannot sample an empty space");
    }
    const std::uint64_t block = draw / kChunkSize;
    const std::uint64_t offset = draw % kChunkSize;
    return sample_block(seed, block, space, offset + 1).back();
}

SweepResult tm_sample(int states, const SampleSpec& spec, const SweepOptions& options) {
    const std::uint64_t space = machine_count(states);
    if (spec.draws == 0) {
        throw std::invalid_argument("sample size must be >= 1");
    }
    std::optional<HaltingPolicy> chosen;
    if (spec.cutoff) {
        chosen = HaltingPolicy::cutoff(states, *spec.cutoff);
    } else {
        chosen = HaltingPolicy::exact(states); // throws UnknownBusyBeaver for n >= 5
    }
    const HaltingPolicy policy = *chosen;
    const bool cutoff_mode = policy.mode() == HaltingPolicy::Mode::Cutoff;
    const std::uint64_t chunks = (spec.draws + kChunkSize - 1) / kChunkSize;
    Progress progress(options.progress, spec.draws);

    const std::function<void(std::uint64_t, Tally&)> work = [&](std::uint64_t chunk, Tally& tally) {
        Simulator sim;
        const std::uint64_t first = chunk * kChunkSize;
        const std::uint64_t length = std::min(kChunkSize, spec.draws - first);
        for (const std::uint64_t index : sample_block(spec.seed, chunk, space, length)) {
            run_both_blanks(tally, sim, decode_machine({states, index}), policy);
        }
        progress.advance(length);
    };
    Tally tally = combine(parallel_fold<Tally>(chunks, workers_for(options), Tally{}, work));

    DistributionMeta meta;
    meta.formalism = Formalism::TuringMachine;
    meta.states = states;
    meta.bound = policy.bound();
    meta.params = {{"sample", std::to_string(spec.draws)}, {"seed", std::to_string(spec.seed)}};
    return finish(std::move(tally), std::move(meta), spec.draws, ShardSet::token("sample"), cutoff_mode);
}

} // namespace ctm
