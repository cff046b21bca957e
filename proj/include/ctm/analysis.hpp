#pragma once

// Ranked classifications of distributions and rank agreement between them.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ctm/distribution.hpp"

namespace ctm {

/// Inclusive string-length filter.
struct LengthScope {
    std::size_t min_length = 1;
    std::size_t max_length = std::numeric_limits<std::size_t>::max();

    static LengthScope exactly(std::size_t k) { return {k, k}; }
    static LengthScope up_to(std::size_t k) { return {1, k}; }
    bool contains(std::string_view s) const { return s.size() >= min_length && s.size() <= max_length; }
};

struct RankedEntry {
    std::string string;
    std::uint64_t count = 0;
    double rank = 0.0; // 1 = most frequent; ties share the average position
};

struct RankedClassification {
    /// Descending count, ties ordered by length then lexicographically.
    std::vector<RankedEntry> entries;
    std::optional<LengthScope> scope;

    std::size_t size() const { return entries.size(); }
    const RankedEntry* find(std::string_view s) const;
    /// Runs of equal count, in rank order.
    std::vector<std::vector<std::string>> tie_groups() const;
};

/// Throws std::invalid_argument when nothing survives the filter.
RankedClassification rank(const FrequencyDistribution& dist, std::optional<LengthScope> scope = std::nullopt);

/// Average (fractional) ranks of `values`, largest value ranked 1.
std::vector<double> average_ranks_descending(const std::vector<double>& values);

double pearson(const std::vector<double>& x, const std::vector<double>& y);

/// Spearman's rho over the strings both classifications contain. Ranks are
/// recomputed on that shared support with average ranks for ties.
double spearman(const RankedClassification& a, const RankedClassification& b);

/// Strings present in both, in `a`'s rank order.
std::vector<std::string> shared_support(const RankedClassification& a, const RankedClassification& b);

/// Tie groups among length-6 strings as published for the exhaustive
/// 3-state machine space, most frequent first.
const std::vector<std::vector<std::string>>& published_length6_groups();

struct GroupAgreement {
    std::vector<std::string> members;
    std::vector<std::uint64_t> counts_a;
    std::vector<std::uint64_t> counts_b;
    bool equal_in_a = false;
    bool equal_in_b = false;
};

struct PlotRow {
    std::string tuple;
    std::uint64_t count_a = 0;
    std::uint64_t count_b = 0;
    double freq_a = 0.0;
    double freq_b = 0.0;
};

struct ComparisonReport {
    std::size_t k = 0;
    std::size_t shared = 0;
    double rho = 0.0;
    std::size_t top_n = 10;
    std::size_t top_overlap = 0;
    std::uint64_t total_a = 0; // sum of length-k counts
    std::uint64_t total_b = 0;
    std::vector<GroupAgreement> groups; // only for k = 6
    std::vector<PlotRow> table;         // union of length-k tuples, lexicographic
};

ComparisonReport compare(const FrequencyDistribution& a, const FrequencyDistribution& b, std::size_t k);

// Serializations. TSV is a "# key=value" summary block followed by a
// tab-separated table with a header row.
void write_ranking_tsv(std::ostream& out, const RankedClassification& ranking);
std::string ranking_json(const RankedClassification& ranking);
void write_comparison_tsv(std::ostream& out, const ComparisonReport& report);
std::string comparison_json(const ComparisonReport& report);
void write_estimates_tsv(std::ostream& out, const FrequencyDistribution& dist, const std::vector<std::string>& strings);
std::string estimates_json(const FrequencyDistribution& dist, const std::vector<std::string>& strings);

/// Shortest round-trip decimal form.
std::string format_double(double x);

} // namespace ctm
