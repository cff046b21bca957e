#include "ctm/cellular_automaton.hpp"

#include <algorithm>
#include <stdexcept>

#include "ctm/parallel.hpp"

namespace ctm {

namespace {

constexpr std::size_t kMaxRuleSpaceTuple = 24;

DistributionMeta ca_meta(std::size_t k, std::uint32_t steps, TupleExtraction extraction, TupleRows rows,
                         bool both_seeds) {
    DistributionMeta meta;
    meta.formalism = Formalism::CellularAutomaton;
    meta.rulespace = std::string(kCARuleSpaceId);
    meta.bound = steps;
    meta.params = {{"k", std::to_string(k)},
                   {"extraction", std::string(extraction_id(extraction))},
                   {"rows", std::string(rows_id(rows))},
                   {"seeds", both_seeds ? "both" : "single"}};
    return meta;
}

// Visits every extracted tuple as a k-bit integer (first cell most significant).
template <typename Visit>
void for_each_tuple(const CAEvolution& evo, std::size_t k, TupleExtraction extraction, TupleRows rows,
                    Visit&& visit) {
    const std::size_t last = evo.rows.size() - 1;
    const std::size_t first = rows == TupleRows::Final ? last : 1;
    const std::size_t stride = extraction == TupleExtraction::Sliding ? 1 : k;
    for (std::size_t t = std::max<std::size_t>(first, 1); t <= last; ++t) {
        const CellSpan cone = evo.light_cone[t];
        const auto& row = evo.rows[t];
        for (std::size_t s = cone.left; s + k <= cone.right + 1; s += stride) {
            std::uint64_t v = 0;
            for (std::size_t j = 0; j < k; ++j) {
                v = v << 1 | row[s + j];
            }
            visit(v);
        }
    }
}

std::string bits_of(std::uint64_t v, std::size_t k) {
    std::string s(k, '0');
    for (std::size_t j = 0; j < k; ++j) {
        if ((v >> (k - 1 - j)) & 1u) {
            s[j] = '1';
        }
    }
    return s;
}

} // namespace

CARule::CARule(std::uint32_t number) : number_(number) {
    if (number >= kCARuleCount) {
        throw std::out_of_range("CA rule number " + std::to_string(number) + " out of range [0, 65536)");
    }
}

CARule CARule::conjugate() const {
    std::uint32_t out = 0;
    for (unsigned i = 0; i < 16; ++i) {
        if (apply(15 - i) == 0) {
            out |= 1u << i;
        }
    }
    return CARule(out);
}

std::string CAEvolution::row_string(std::size_t t) const {
    std::string s;
    s.reserve(rows.at(t).size());
    for (Symbol c : rows[t]) {
        s.push_back(static_cast<char>('0' + c));
    }
    return s;
}

CAEvolution evolve(const CARule& rule, std::uint32_t steps, CASeed seed, std::size_t margin) {
    if (steps < 1) {
        throw std::invalid_argument("CA evolution needs at least one step");
    }
    const std::size_t side = 2 * static_cast<std::size_t>(steps) + margin;
    const std::size_t width = 2 * side + 1;
    const Symbol bg0 = seed == CASeed::BlackOnWhite ? 0 : 1;

    CAEvolution evo;
    evo.origin = side;
    evo.rows.reserve(steps + 1);
    evo.rows.emplace_back(width, bg0);
    evo.rows[0][side] = static_cast<Symbol>(1 - bg0);
    evo.background.push_back(bg0);
    evo.light_cone.push_back({side, side});

    for (std::uint32_t t = 1; t <= steps; ++t) {
        const auto& prev = evo.rows.back();
        const Symbol bg = evo.background.back();
        auto at = [&](std::ptrdiff_t x) -> Symbol {
            return x < 0 || x >= static_cast<std::ptrdiff_t>(width) ? bg : prev[static_cast<std::size_t>(x)];
        };
        std::vector<Symbol> next(width);
        for (std::size_t x = 0; x < width; ++x) {
            const auto i = static_cast<std::ptrdiff_t>(x);
            next[x] = rule.apply(at(i - 2), at(i - 1), at(i), at(i + 1));
        }
        evo.rows.push_back(std::move(next));
        evo.background.push_back(rule.apply(bg, bg, bg, bg));
        // The seed reaches one cell further left and two further right per step.
        evo.light_cone.push_back({side - t, side + 2 * static_cast<std::size_t>(t)});
    }
    return evo;
}

std::string_view extraction_id(TupleExtraction e) {
    return e == TupleExtraction::Sliding ? "sliding" : "nonoverlapping";
}

std::string_view rows_id(TupleRows r) {
    return r == TupleRows::Final ? "final" : "all";
}

FrequencyDistribution extract_tuples(const CAEvolution& evo, std::size_t k, TupleExtraction extraction,
                                     TupleRows rows) {
    if (k < 1 || k > 64) {
        throw std::invalid_argument("tuple length must be in [1, 64]");
    }
    if (evo.rows.size() < 2 || evo.light_cone.size() != evo.rows.size()) {
        throw std::invalid_argument("evolution has no rows after the initial one");
    }
    FrequencyDistribution dist;
    dist.meta = ca_meta(k, static_cast<std::uint32_t>(evo.rows.size() - 1), extraction, rows, false);
    for_each_tuple(evo, k, extraction, rows, [&](std::uint64_t v) { ++dist.counts[bits_of(v, k)]; });
    if (dist.counts.empty()) {
        throw std::invalid_argument("tuple length " + std::to_string(k) + " exceeds every light-cone row");
    }
    dist.enumerated = 1;
    dist.halting = 1;
    return dist;
}

FrequencyDistribution rulespace_distribution(std::size_t k, std::uint32_t steps, std::uint32_t first,
                                             std::uint32_t last, const RuleSpaceOptions& options) {
    if (first >= last) {
        throw std::invalid_argument("empty CA rule range");
    }
    if (last > kCARuleCount) {
        throw std::out_of_range("CA rule range exceeds [0, 65536)");
    }
    if (k < 1 || k > kMaxRuleSpaceTuple) {
        throw std::invalid_argument("rule-space tuple length must be in [1, 24]");
    }
    if (steps < 1) {
        throw std::invalid_argument("CA evolution needs at least one step");
    }

    struct Partial {
        std::vector<std::uint64_t> counts;
        std::uint64_t contributing = 0;
    };
    const Partial init{std::vector<std::uint64_t>(std::size_t{1} << k, 0), 0};
    const std::uint32_t rules = last - first;
    constexpr std::uint32_t kRulesPerChunk = 256;
    const std::uint64_t chunks = (rules + kRulesPerChunk - 1) / kRulesPerChunk;

    const std::function<void(std::uint64_t, Partial&)> work = [&](std::uint64_t chunk, Partial& acc) {
        const std::uint32_t lo = first + static_cast<std::uint32_t>(chunk) * kRulesPerChunk;
        const std::uint32_t hi = std::min(last, lo + kRulesPerChunk);
        for (std::uint32_t r = lo; r < hi; ++r) {
            bool any = false;
            for (CASeed seed : {CASeed::BlackOnWhite, CASeed::WhiteOnBlack}) {
                if (seed == CASeed::WhiteOnBlack && !options.both_seeds) {
                    continue;
                }
                const CAEvolution evo = evolve(CARule(r), steps, seed);
                for_each_tuple(evo, k, options.extraction, options.rows, [&](std::uint64_t v) {
                    ++acc.counts[v];
                    any = true;
                });
            }
            acc.contributing += any ? 1 : 0;
        }
    };
    const unsigned workers = options.workers ? options.workers : default_worker_count();
    const std::vector<Partial> parts = parallel_fold<Partial>(chunks, workers, init, work);

    FrequencyDistribution dist;
    dist.meta = ca_meta(k, steps, options.extraction, options.rows, options.both_seeds);
    dist.enumerated = rules;
    dist.shards = ShardSet::interval(first, last);
    for (std::size_t v = 0; v < init.counts.size(); ++v) {
        std::uint64_t total = 0;
        for (const Partial& p : parts) {
            total += p.counts[v];
        }
        if (total > 0) {
            dist.counts.emplace(bits_of(v, k), total);
        }
    }
    for (const Partial& p : parts) {
        dist.halting += p.contributing;
    }
    if (dist.counts.empty()) {
        throw std::invalid_argument("tuple length " + std::to_string(k) + " exceeds every light-cone row");
    }
    return dist;
}

} // namespace ctm
