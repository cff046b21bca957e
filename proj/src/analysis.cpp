#include "ctm/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace ctm {

namespace {

using nlohmann::json;

bool rank_order(const RankedEntry& x, const RankedEntry& y) {
    if (x.count != y.count) return x.count > y.count;
    if (x.string.size() != y.string.size()) return x.string.size() < y.string.size();
    return x.string < y.string;
}

json estimate_json(const FrequencyDistribution& dist, const std::string& s) {
    json j{{"string", s}, {"count", dist.count(s)}, {"sl", sl(dist, s)}};
    try {
        const ComplexityEstimate e = k_estimate(dist, s);
        j["k"] = e.k;
        j["program_length"] = e.program_length;
    } catch (const NoEstimate&) {
        j["k"] = nullptr;
        j["program_length"] = nullptr;
    }
    return j;
}

} // namespace

std::string format_double(double x) {
    char buf[64];
    for (int precision = 15; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, x);
        if (std::strtod(buf, nullptr) == x) {
            break;
        }
    }
    return buf;
}

const RankedEntry* RankedClassification::find(std::string_view s) const {
    for (const RankedEntry& e : entries) {
        if (e.string == s) {
            return &e;
        }
    }
    return nullptr;
}

std::vector<std::vector<std::string>> RankedClassification::tie_groups() const {
    std::vector<std::vector<std::string>> groups;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i == 0 || entries[i].count != entries[i - 1].count) {
            groups.emplace_back();
        }
        groups.back().push_back(entries[i].string);
    }
    return groups;
}

RankedClassification rank(const FrequencyDistribution& dist, std::optional<LengthScope> scope) {
    RankedClassification out;
    out.scope = scope;
    for (const auto& [s, c] : dist.counts) {
        if (!scope || scope->contains(s)) {
            out.entries.push_back({s, c, 0.0});
        }
    }
    if (out.entries.empty()) {
        throw std::invalid_argument("nothing to rank: distribution is empty after filtering");
    }
    std::sort(out.entries.begin(), out.entries.end(), rank_order);
    for (std::size_t i = 0; i < out.entries.size();) {
        std::size_t j = i;
        while (j < out.entries.size() && out.entries[j].count == out.entries[i].count) {
            ++j;
        }
        // Positions i+1..j share their mean.
        const double average = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t t = i; t < j; ++t) {
            out.entries[t].rank = average;
        }
        i = j;
    }
    return out;
}

std::vector<double> average_ranks_descending(const std::vector<double>& values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    std::vector<double> ranks(values.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j < order.size() && values[order[j]] == values[order[i]]) {
            ++j;
        }
        const double average = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t t = i; t < j; ++t) {
            ranks[order[t]] = average;
        }
        i = j;
    }
    return ranks;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("pearson needs two equally sized samples of at least 2 values");
    }
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    // Constant samples: identical (all-tied) orderings agree perfectly,
    // otherwise there is no linear association to measure.
    if (sxx == 0.0 || syy == 0.0) {
        return sxx == syy ? 1.0 : 0.0;
    }
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<std::string> shared_support(const RankedClassification& a, const RankedClassification& b) {
    std::set<std::string_view> in_b;
    for (const RankedEntry& e : b.entries) {
        in_b.insert(e.string);
    }
    std::vector<std::string> out;
    for (const RankedEntry& e : a.entries) {
        if (in_b.count(e.string)) {
            out.push_back(e.string);
        }
    }
    return out;
}

double spearman(const RankedClassification& a, const RankedClassification& b) {
    std::unordered_map<std::string_view, double> rank_b;
    for (const RankedEntry& e : b.entries) {
        rank_b.emplace(e.string, e.rank);
    }
    // Negated ranks so that "larger is better" for average_ranks_descending.
    std::vector<double> xa, xb;
    for (const RankedEntry& e : a.entries) {
        const auto it = rank_b.find(e.string);
        if (it != rank_b.end()) {
            xa.push_back(-e.rank);
            xb.push_back(-it->second);
        }
    }
    if (xa.size() < 2) {
        throw std::invalid_argument("spearman needs at least 2 shared strings, got " + std::to_string(xa.size()));
    }
    return pearson(average_ranks_descending(xa), average_ranks_descending(xb));
}

const std::vector<std::vector<std::string>>& published_length6_groups() {
    static const std::vector<std::vector<std::string>> groups = {
        {"000000", "111111"},
        {"000001", "100000", "111110", "011111"},
        {"000100", "001000", "111011", "110111"},
        {"001001", "100100", "110110", "011011"},
        {"010110"},
        {"101001", "100101", "011010"},
    };
    return groups;
}

ComparisonReport compare(const FrequencyDistribution& a, const FrequencyDistribution& b, std::size_t k) {
    const LengthScope scope = LengthScope::exactly(k);
    const RankedClassification ra = rank(a, scope);
    const RankedClassification rb = rank(b, scope);

    ComparisonReport report;
    report.k = k;
    report.shared = shared_support(ra, rb).size();
    if (report.shared == 0) {
        throw std::invalid_argument("distributions share no length-" + std::to_string(k) + " strings");
    }
    report.rho = spearman(ra, rb);

    std::set<std::string> top_a, top_b;
    for (std::size_t i = 0; i < std::min(report.top_n, ra.size()); ++i) top_a.insert(ra.entries[i].string);
    for (std::size_t i = 0; i < std::min(report.top_n, rb.size()); ++i) top_b.insert(rb.entries[i].string);
    for (const std::string& s : top_a) {
        report.top_overlap += top_b.count(s);
    }

    std::map<std::string, PlotRow> rows;
    for (const RankedEntry& e : ra.entries) {
        rows[e.string].count_a = e.count;
        report.total_a += e.count;
    }
    for (const RankedEntry& e : rb.entries) {
        rows[e.string].count_b = e.count;
        report.total_b += e.count;
    }
    for (auto& [tuple, row] : rows) {
        row.tuple = tuple;
        row.freq_a = static_cast<double>(row.count_a) / static_cast<double>(report.total_a);
        row.freq_b = static_cast<double>(row.count_b) / static_cast<double>(report.total_b);
        report.table.push_back(row);
    }

    if (k == 6) {
        for (const auto& members : published_length6_groups()) {
            GroupAgreement g;
            g.members = members;
            for (const std::string& s : members) {
                g.counts_a.push_back(a.count(s));
                g.counts_b.push_back(b.count(s));
            }
            auto all_equal = [](const std::vector<std::uint64_t>& v) {
                return v.front() > 0 && std::all_of(v.begin(), v.end(), [&](auto c) { return c == v.front(); });
            };
            g.equal_in_a = all_equal(g.counts_a);
            g.equal_in_b = all_equal(g.counts_b);
            report.groups.push_back(std::move(g));
        }
    }
    return report;
}

// ------------------------------------------------------------ serializers

void write_ranking_tsv(std::ostream& out, const RankedClassification& ranking) {
    if (ranking.scope) {
        out << "# min_length=" << ranking.scope->min_length << '\n';
        if (ranking.scope->max_length != std::numeric_limits<std::size_t>::max()) {
            out << "# max_length=" << ranking.scope->max_length << '\n';
        }
    }
    out << "# entries=" << ranking.size() << '\n';
    out << "# groups=" << ranking.tie_groups().size() << '\n';
    out << "rank\tstring\tcount\tgroup\n";
    std::size_t group = 0;
    for (std::size_t i = 0; i < ranking.entries.size(); ++i) {
        const RankedEntry& e = ranking.entries[i];
        if (i == 0 || e.count != ranking.entries[i - 1].count) {
            ++group;
        }
        out << format_double(e.rank) << '\t' << e.string << '\t' << e.count << '\t' << group << '\n';
    }
}

std::string ranking_json(const RankedClassification& ranking) {
    json entries = json::array();
    for (const RankedEntry& e : ranking.entries) {
        entries.push_back({{"string", e.string}, {"count", e.count}, {"rank", e.rank}});
    }
    json j{{"entries", entries}, {"groups", ranking.tie_groups()}};
    if (ranking.scope) {
        j["min_length"] = ranking.scope->min_length;
        if (ranking.scope->max_length != std::numeric_limits<std::size_t>::max()) {
            j["max_length"] = ranking.scope->max_length;
        }
    }
    return j.dump(2) + "\n";
}

void write_comparison_tsv(std::ostream& out, const ComparisonReport& report) {
    out << "# k=" << report.k << '\n';
    out << "# shared=" << report.shared << '\n';
    out << "# rho=" << format_double(report.rho) << '\n';
    out << "# top" << report.top_n << "_overlap=" << report.top_overlap << '\n';
    out << "# total_a=" << report.total_a << '\n';
    out << "# total_b=" << report.total_b << '\n';
    for (std::size_t i = 0; i < report.groups.size(); ++i) {
        const GroupAgreement& g = report.groups[i];
        out << "# group" << i + 1 << '=';
        for (std::size_t m = 0; m < g.members.size(); ++m) {
            out << (m ? "," : "") << g.members[m];
        }
        out << " equal_a=" << g.equal_in_a << " equal_b=" << g.equal_in_b << '\n';
    }
    out << "tuple\tcount_a\tcount_b\tfreq_a\tfreq_b\n";
    for (const PlotRow& row : report.table) {
        out << row.tuple << '\t' << row.count_a << '\t' << row.count_b << '\t' << format_double(row.freq_a) << '\t'
            << format_double(row.freq_b) << '\n';
    }
}

std::string comparison_json(const ComparisonReport& report) {
    json groups = json::array();
    for (const GroupAgreement& g : report.groups) {
        groups.push_back({{"members", g.members},
                          {"counts_a", g.counts_a},
                          {"counts_b", g.counts_b},
                          {"equal_a", g.equal_in_a},
                          {"equal_b", g.equal_in_b}});
    }
    json table = json::array();
    for (const PlotRow& row : report.table) {
        table.push_back({{"tuple", row.tuple},
                         {"count_a", row.count_a},
                         {"count_b", row.count_b},
                         {"freq_a", row.freq_a},
                         {"freq_b", row.freq_b}});
    }
    json j{{"k", report.k},
           {"shared", report.shared},
           {"rho", report.rho},
           {"top_n", report.top_n},
           {"top_overlap", report.top_overlap},
           {"total_a", report.total_a},
           {"total_b", report.total_b},
           {"groups", groups},
           {"table", table}};
    return j.dump(2) + "\n";
}

void write_estimates_tsv(std::ostream& out, const FrequencyDistribution& dist, const std::vector<std::string>& strings) {
    out << "string\tcount\tsl\tk\tprogram_length\n";
    for (const std::string& s : strings) {
        out << s << '\t' << dist.count(s) << '\t' << format_double(sl(dist, s)) << '\t';
        try {
            const ComplexityEstimate e = k_estimate(dist, s);
            out << format_double(e.k) << '\t' << e.program_length << '\n';
        } catch (const NoEstimate&) {
            out << "NA\tNA\n";
        }
    }
}

std::string estimates_json(const FrequencyDistribution& dist, const std::vector<std::string>& strings) {
    json j = json::array();
    for (const std::string& s : strings) {
        j.push_back(estimate_json(dist, s));
    }
    return j.dump(2) + "\n";
}

} // namespace ctm
