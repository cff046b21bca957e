#include "ctm/distribution.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace ctm {

namespace {

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
    std::uint64_t value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last) {
        throw std::invalid_argument("malformed " + std::string(what) + ": '" + std::string(text) + "'");
    }
    return value;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > UINT64_MAX - b) {
        throw std::overflow_error("count overflow");
    }
    return a + b;
}

bool counts_sum_to_halting(Formalism f) {
    return f != Formalism::CellularAutomaton;
}

} // namespace

std::string_view formalism_id(Formalism f) {
    switch (f) {
    case Formalism::TuringMachine:
        return "tm";
    case Formalism::CellularAutomaton:
        return "ca";
    case Formalism::TagSystem:
        return "tag";
    }
    return "?";
}

Formalism parse_formalism(std::string_view id) {
    if (id == "tm") return Formalism::TuringMachine;
    if (id == "ca") return Formalism::CellularAutomaton;
    if (id == "tag") return Formalism::TagSystem;
    throw std::invalid_argument("unknown formalism '" + std::string(id) + "'");
}

// ---------------------------------------------------------------- ShardSet

ShardSet ShardSet::interval(std::uint64_t begin, std::uint64_t end) {
    if (begin > end) {
        throw std::invalid_argument("shard interval begins after it ends");
    }
    ShardSet s;
    if (begin < end) {
        s.intervals_.push_back({begin, end});
    }
    return s;
}

ShardSet ShardSet::token(std::string name) {
    if (name.empty() || name.find_first_of(",\n") != std::string::npos) {
        throw std::invalid_argument("invalid shard token");
    }
    ShardSet s;
    s.tokens_.push_back(std::move(name));
    return s;
}

ShardSet ShardSet::parse(std::string_view text) {
    ShardSet s;
    if (text.empty()) {
        return s;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const std::string_view part = text.substr(start, comma - start);
        const std::size_t dash = part.find('-');
        const bool numeric = dash != std::string_view::npos && dash > 0 &&
                             part.find_first_not_of("0123456789-") == std::string_view::npos;
        if (numeric) {
            const auto begin = parse_u64(part.substr(0, dash), "shard interval");
            const auto end = parse_u64(part.substr(dash + 1), "shard interval");
            if (begin >= end) {
                throw std::invalid_argument("empty or reversed shard interval '" + std::string(part) + "'");
            }
            s.intervals_.push_back({begin, end});
        } else {
            if (part.empty()) {
                throw std::invalid_argument("empty shard descriptor element");
            }
            s.tokens_.emplace_back(part);
        }
        start = comma + 1;
    }
    // Parsing does not coalesce overlapping intervals silently.
    std::vector<IndexInterval> sorted = s.intervals_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i].begin < sorted[i - 1].end) {
            throw std::invalid_argument("overlapping shard intervals in descriptor");
        }
    }
    s.normalize();
    return s;
}

void ShardSet::normalize() {
    std::sort(intervals_.begin(), intervals_.end());
    std::vector<IndexInterval> merged;
    for (const IndexInterval& iv : intervals_) {
        if (!merged.empty() && merged.back().end >= iv.begin) {
            merged.back().end = std::max(merged.back().end, iv.end);
        } else {
            merged.push_back(iv);
        }
    }
    intervals_ = std::move(merged);
    std::sort(tokens_.begin(), tokens_.end());
}

bool ShardSet::overlaps(const ShardSet& other) const {
    for (const IndexInterval& a : intervals_) {
        for (const IndexInterval& b : other.intervals_) {
            if (a.begin < b.end && b.begin < a.end) {
                return true;
            }
        }
    }
    // Tokens describe non-partitioned sources; two of them can never be
    // proven disjoint.
    return !tokens_.empty() && !other.tokens_.empty();
}

ShardSet ShardSet::united(const ShardSet& other) const {
    ShardSet out = *this;
    out.intervals_.insert(out.intervals_.end(), other.intervals_.begin(), other.intervals_.end());
    out.tokens_.insert(out.tokens_.end(), other.tokens_.begin(), other.tokens_.end());
    out.normalize();
    return out;
}

std::string ShardSet::to_string() const {
    std::string out;
    for (const IndexInterval& iv : intervals_) {
        if (!out.empty()) out += ',';
        out += std::to_string(iv.begin) + "-" + std::to_string(iv.end);
    }
    for (const std::string& t : tokens_) {
        if (!out.empty()) out += ',';
        out += t;
    }
    return out;
}

// ------------------------------------------------------------ distribution

std::uint64_t FrequencyDistribution::count(std::string_view s) const {
    const auto it = counts.find(std::string(s));
    return it == counts.end() ? 0 : it->second;
}

std::uint64_t FrequencyDistribution::total_count() const {
    std::uint64_t total = 0;
    for (const auto& [s, c] : counts) {
        total = checked_add(total, c);
    }
    return total;
}

bool is_binary_string(std::string_view s) {
    return !s.empty() && s.find_first_not_of("01") == std::string_view::npos;
}

void FrequencyDistribution::validate() const {
    for (const auto& [s, c] : counts) {
        if (!is_binary_string(s)) {
            throw std::invalid_argument("distribution key '" + s + "' is not a nonempty binary string");
        }
        if (c == 0) {
            throw std::invalid_argument("distribution key '" + s + "' has zero count");
        }
    }
    if (counts_sum_to_halting(meta.formalism) && total_count() != halting) {
        throw std::invalid_argument("sum of counts (" + std::to_string(total_count()) +
                                    ") does not equal halting total (" + std::to_string(halting) + ")");
    }
    if (meta.formalism == Formalism::TagSystem && halting > enumerated) {
        throw std::invalid_argument("halting total exceeds enumerated total");
    }
    if (!meta.states && meta.rulespace.empty()) {
        throw std::invalid_argument("distribution metadata needs a state count or a rule-space id");
    }
}

void record(FrequencyDistribution& dist, std::string_view s, std::uint64_t weight) {
    if (!is_binary_string(s)) {
        throw std::invalid_argument("output '" + std::string(s) + "' is not a nonempty binary string");
    }
    if (weight == 0) {
        return;
    }
    auto& slot = dist.counts[std::string(s)];
    slot = checked_add(slot, weight);
    dist.halting = checked_add(dist.halting, weight);
}

void accumulate(FrequencyDistribution& dist, const RunOutcome& outcome) {
    if (!outcome.halted()) {
        throw std::invalid_argument("cannot accumulate a run that did not halt");
    }
    record(dist, outcome.output);
}

FrequencyDistribution merge(const FrequencyDistribution& a, const FrequencyDistribution& b) {
    if (!(a.meta == b.meta)) {
        throw std::invalid_argument("cannot merge distributions with different metadata");
    }
    if (a.undecided.has_value() != b.undecided.has_value()) {
        throw std::invalid_argument("cannot merge exact-mode and cutoff-mode distributions");
    }
    if (a.shards.overlaps(b.shards)) {
        throw std::invalid_argument("cannot merge overlapping shards " + a.shards.to_string() + " and " +
                                    b.shards.to_string());
    }
    FrequencyDistribution out = a;
    for (const auto& [s, c] : b.counts) {
        auto& slot = out.counts[s];
        slot = checked_add(slot, c);
    }
    out.enumerated = checked_add(a.enumerated, b.enumerated);
    out.halting = checked_add(a.halting, b.halting);
    if (out.undecided) {
        out.undecided = checked_add(*a.undecided, *b.undecided);
    }
    out.shards = a.shards.united(b.shards);
    return out;
}

std::vector<std::pair<std::string, std::uint64_t>> sorted_records(const FrequencyDistribution& dist) {
    std::vector<std::pair<std::string, std::uint64_t>> records(dist.counts.begin(), dist.counts.end());
    std::sort(records.begin(), records.end(), [](const auto& x, const auto& y) {
        if (x.second != y.second) return x.second > y.second;
        if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
        return x.first < y.first;
    });
    return records;
}

void write_distribution(std::ostream& out, const FrequencyDistribution& dist) {
    dist.validate();
    out << "# formalism=" << formalism_id(dist.meta.formalism) << '\n';
    if (dist.meta.states) {
        out << "# n=" << *dist.meta.states << '\n';
    } else {
        out << "# rulespace=" << dist.meta.rulespace << '\n';
    }
    out << "# bound=" << dist.meta.bound << '\n';
    out << "# enumerated=" << dist.enumerated << '\n';
    out << "# halting=" << dist.halting << '\n';
    out << "# shards=" << dist.shards.to_string() << '\n';
    if (dist.undecided) {
        out << "# undecided=" << *dist.undecided << '\n';
    }
    for (const auto& [key, value] : dist.meta.params) {
        out << "# " << key << '=' << value << '\n';
    }
    out << "# encoding=" << dist.meta.encoding << '\n';
    for (const auto& [s, c] : sorted_records(dist)) {
        out << s << '\t' << c << '\n';
    }
}

std::string to_text(const FrequencyDistribution& dist) {
    std::ostringstream out;
    write_distribution(out, dist);
    return out.str();
}

FrequencyDistribution read_distribution(std::istream& in) {
    FrequencyDistribution dist;
    bool seen_formalism = false, seen_bound = false, seen_enumerated = false, seen_halting = false,
         seen_shards = false, seen_encoding = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string where = "line " + std::to_string(line_no) + ": ";
        if (!line.empty() && line.back() == '\r') {
            throw std::invalid_argument(where + "CRLF line endings are not allowed");
        }
        if (line.empty()) {
            throw std::invalid_argument(where + "empty line");
        }
        if (line.rfind("# ", 0) == 0) {
            if (!dist.counts.empty()) {
                throw std::invalid_argument(where + "header line after records");
            }
            const std::size_t eq = line.find('=');
            if (eq == std::string::npos || eq == 2) {
                throw std::invalid_argument(where + "malformed header");
            }
            const std::string key = line.substr(2, eq - 2);
            const std::string value = line.substr(eq + 1);
            if (key == "formalism") {
                dist.meta.formalism = parse_formalism(value);
                seen_formalism = true;
            } else if (key == "n") {
                dist.meta.states = static_cast<int>(parse_u64(value, "state count"));
            } else if (key == "rulespace") {
                dist.meta.rulespace = value;
            } else if (key == "bound") {
                dist.meta.bound = parse_u64(value, "bound");
                seen_bound = true;
            } else if (key == "enumerated") {
                dist.enumerated = parse_u64(value, "enumerated total");
                seen_enumerated = true;
            } else if (key == "halting") {
                dist.halting = parse_u64(value, "halting total");
                seen_halting = true;
            } else if (key == "shards") {
                dist.shards = ShardSet::parse(value);
                seen_shards = true;
            } else if (key == "undecided") {
                dist.undecided = parse_u64(value, "undecided total");
            } else if (key == "encoding") {
                if (value != "v1") {
                    throw std::invalid_argument(where + "unsupported encoding '" + value + "'");
                }
                dist.meta.encoding = value;
                seen_encoding = true;
            } else {
                dist.meta.params.emplace_back(key, value);
            }
            continue;
        }
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos) {
            throw std::invalid_argument(where + "expected '<bits>\\t<count>'");
        }
        const std::string bits = line.substr(0, tab);
        if (!is_binary_string(bits)) {
            throw std::invalid_argument(where + "'" + bits + "' is not a binary string");
        }
        const std::uint64_t c = parse_u64(std::string_view(line).substr(tab + 1), "count");
        if (c == 0) {
            throw std::invalid_argument(where + "zero count");
        }
        if (!dist.counts.emplace(bits, c).second) {
            throw std::invalid_argument(where + "duplicate string '" + bits + "'");
        }
    }
    if (!(seen_formalism && seen_bound && seen_enumerated && seen_halting && seen_shards && seen_encoding)) {
        throw std::invalid_argument("distribution file is missing required header lines");
    }
    if (dist.meta.states.has_value() == !dist.meta.rulespace.empty()) {
        throw std::invalid_argument("distribution file needs exactly one of '# n=' and '# rulespace='");
    }
    dist.validate();
    return dist;
}

FrequencyDistribution parse_distribution(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_distribution(in);
}

void save_distribution(const std::string& path, const FrequencyDistribution& dist) {
    const std::string text = to_text(dist);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    out << text;
    if (!out) {
        throw std::runtime_error("failed writing '" + path + "'");
    }
}

FrequencyDistribution load_distribution(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    try {
        return read_distribution(in);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

// ------------------------------------------------------------- estimates

NoEstimate::NoEstimate(const std::string& s)
    : std::domain_error("no estimate for '" + s + "': string never produced") {}

double sl(const FrequencyDistribution& dist, std::string_view s) {
    const std::uint64_t total = dist.total_count();
    if (total == 0) {
        throw std::invalid_argument("sl of an empty distribution");
    }
    return static_cast<double>(dist.count(s)) / static_cast<double>(total);
}

ComplexityEstimate k_estimate(const FrequencyDistribution& dist, std::string_view s) {
    ComplexityEstimate e;
    e.string = std::string(s);
    e.count = dist.count(s);
    e.sl = sl(dist, s);
    if (e.count == 0) {
        throw NoEstimate(e.string);
    }
    e.k = e.sl >= 1.0 ? 0.0 : -std::log2(e.sl);
    e.program_length = static_cast<std::uint64_t>(std::ceil(e.k));
    return e;
}

double shannon_entropy(std::string_view bits) {
    if (!is_binary_string(bits)) {
        throw std::invalid_argument("entropy needs a nonempty binary string");
    }
    const auto ones = static_cast<double>(std::count(bits.begin(), bits.end(), '1'));
    const double p = ones / static_cast<double>(bits.size());
    double h = 0.0;
    for (const double q : {p, 1.0 - p}) {
        if (q > 0.0) {
            h -= q * std::log2(q);
        }
    }
    return h;
}

} // namespace ctm
