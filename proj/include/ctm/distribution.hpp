#pragma once

// Output-frequency distributions (the empirical SL), the coding-theorem
// conversion to complexity estimates, and the on-disk distribution format.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ctm/turing_machine.hpp"

namespace ctm {

enum class Formalism { TuringMachine, CellularAutomaton, TagSystem };

std::string_view formalism_id(Formalism f);
Formalism parse_formalism(std::string_view id);

/// Half-open index interval [begin, end).
struct IndexInterval {
    std::uint64_t begin = 0;
    std::uint64_t end = 0;

    friend bool operator==(const IndexInterval&, const IndexInterval&) = default;
    friend auto operator<=>(const IndexInterval&, const IndexInterval&) = default;
};

/// Which part of an enumerated space a distribution covers. Intervals are
/// kept sorted and coalesced, so the union of all shards of a space prints
/// the same as a monolithic run. Non-interval sources (e.g. samples) are
/// carried as opaque tokens.
class ShardSet {
public:
    ShardSet() = default;
    static ShardSet interval(std::uint64_t begin, std::uint64_t end);
    static ShardSet token(std::string name);
    static ShardSet parse(std::string_view text);

    bool empty() const { return intervals_.empty() && tokens_.empty(); }
    bool overlaps(const ShardSet& other) const;
    ShardSet united(const ShardSet& other) const;
    std::string to_string() const;

    const std::vector<IndexInterval>& intervals() const { return intervals_; }

    friend bool operator==(const ShardSet&, const ShardSet&) = default;

private:
    void normalize();

    std::vector<IndexInterval> intervals_;
    std::vector<std::string> tokens_;
};

struct DistributionMeta {
    Formalism formalism = Formalism::TuringMachine;
    std::optional<int> states;  // written as "# n=" when set
    std::string rulespace;      // written as "# rulespace=" when states is unset
    std::uint64_t bound = 0;
    /// Additional "# key=value" header lines, in output order.
    std::vector<std::pair<std::string, std::string>> params;
    std::string encoding = "v1";

    friend bool operator==(const DistributionMeta&, const DistributionMeta&) = default;
};

struct FrequencyDistribution {
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t enumerated = 0;
    std::uint64_t halting = 0;
    /// Runs whose halting could not be decided (cutoff mode only).
    std::optional<std::uint64_t> undecided;
    DistributionMeta meta;
    ShardSet shards;

    std::uint64_t count(std::string_view s) const;
    std::uint64_t total_count() const;
    bool empty() const { return counts.empty(); }

    /// Throws std::invalid_argument on broken invariants.
    void validate() const;

    friend bool operator==(const FrequencyDistribution&, const FrequencyDistribution&) = default;
};

/// Adds one halting output. Non-halting outcomes are rejected.
void accumulate(FrequencyDistribution& dist, const RunOutcome& outcome);

/// Adds `weight` occurrences of `s` and bumps `halting` by the same amount.
void record(FrequencyDistribution& dist, std::string_view s, std::uint64_t weight = 1);

/// Pointwise sum. Metadata must agree and shards must be disjoint.
FrequencyDistribution merge(const FrequencyDistribution& a, const FrequencyDistribution& b);

/// Records in file order: descending count, then ascending length, then
/// lexicographic.
std::vector<std::pair<std::string, std::uint64_t>> sorted_records(const FrequencyDistribution& dist);

void write_distribution(std::ostream& out, const FrequencyDistribution& dist);
std::string to_text(const FrequencyDistribution& dist);
FrequencyDistribution read_distribution(std::istream& in);
FrequencyDistribution parse_distribution(std::string_view text);
void save_distribution(const std::string& path, const FrequencyDistribution& dist);
FrequencyDistribution load_distribution(const std::string& path);

/// Raised when a string has no frequency and therefore no estimate.
class NoEstimate : public std::domain_error {
public:
    explicit NoEstimate(const std::string& s);
};

struct ComplexityEstimate {
    std::string string;
    std::uint64_t count = 0;
    double sl = 0.0;
    double k = 0.0;
    std::uint64_t program_length = 0;
};

/// count(s) / total count; 0 when absent. Empty distributions are rejected.
double sl(const FrequencyDistribution& dist, std::string_view s);

/// k = -log2(sl(s)), program_length = ceil(k).
ComplexityEstimate k_estimate(const FrequencyDistribution& dist, std::string_view s);

/// Binary entropy of the symbol frequencies of a nonempty bit string.
double shannon_entropy(std::string_view bits);

bool is_binary_string(std::string_view s);

} // namespace ctm
