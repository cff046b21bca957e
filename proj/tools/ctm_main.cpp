// ctm: command-line front end for complexity estimation by exhaustive
// machine enumeration and cross-formalism comparison.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ctm/analysis.hpp"
#include "ctm/bounds.hpp"
#include "ctm/cellular_automaton.hpp"
#include "ctm/distribution.hpp"
#include "ctm/sweep.hpp"
#include "ctm/tag_system.hpp"

namespace {

using namespace ctm;

// Writes `text` to `path`, or to stdout when path is empty or "-".
void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
}

void emit(const std::string& path, const FrequencyDistribution& dist) {
    emit(path, to_text(dist));
}

ProgressFn stderr_progress(const std::string& label) {
    auto last = std::make_shared<std::chrono::steady_clock::time_point>(std::chrono::steady_clock::now());
    return [label, last](std::uint64_t done, std::uint64_t total) {
        const auto now = std::chrono::steady_clock::now();
        if (done != total && now - *last < std::chrono::seconds(2)) {
            return;
        }
        *last = now;
        std::cerr << label << ": " << done << "/" << total << " ("
                  << (total ? 100.0 * static_cast<double>(done) / static_cast<double>(total) : 100.0) << "%)\n";
    };
}

IndexInterval parse_range(const std::string& text, std::uint64_t limit) {
    const std::size_t dash = text.find('-');
    try {
        if (dash == std::string::npos) {
            const std::uint64_t v = std::stoull(text);
            return {v, v + 1};
        }
        const IndexInterval iv{std::stoull(text.substr(0, dash)), std::stoull(text.substr(dash + 1))};
        if (iv.begin >= iv.end || iv.end > limit) {
            throw std::invalid_argument("");
        }
        return iv;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed range '" + text + "' (expected a-b with 0 <= a < b <= " +
                                    std::to_string(limit) + ")");
    }
}

std::vector<std::string> split_commas(const std::vector<std::string>& items) {
    std::vector<std::string> out;
    for (const std::string& item : items) {
        std::stringstream ss(item);
        std::string part;
        while (std::getline(ss, part, ',')) {
            if (!part.empty()) {
                out.push_back(part);
            }
        }
    }
    return out;
}

struct Options {
    // tm-run
    int states = 0;
    std::string shard = "0/1";
    std::optional<std::uint64_t> sample;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> cutoff;
    bool use_symmetry = false;
    unsigned threads = 0;
    std::string out;
    bool quiet = false;
    // merge
    std::vector<std::string> inputs;
    // estimate / rank / compare
    std::string dist;
    std::string dist_b;
    std::vector<std::string> strings;
    bool all = false;
    std::optional<std::size_t> length;
    std::optional<std::size_t> max_length;
    std::string format = "tsv";
    std::size_t k = 6;
    // ca-run
    std::uint32_t steps = 100;
    std::string rules = "0-65536";
    std::string extraction = "nonoverlapping";
    bool final_row = false;
    bool single_seed = false;
    std::uint32_t rule = 0;
    // tag-run
    std::size_t max_appendant = 3;
    std::uint64_t tag_cutoff = 100;
    std::size_t deletion = 2;
    std::vector<std::string> initials{"10"};
};

int cmd_tm_run(const Options& o) {
    SweepOptions sweep;
    sweep.use_symmetry = o.use_symmetry;
    sweep.workers = o.threads;
    if (!o.quiet) {
        sweep.progress = stderr_progress("tm-run n=" + std::to_string(o.states));
    }
    SweepResult result;
    if (o.sample) {
        if (o.shard != "0/1") {
            throw std::invalid_argument("--shard cannot be combined with --sample");
        }
        result = tm_sample(o.states, SampleSpec{*o.sample, o.seed, o.cutoff}, sweep);
    } else {
        if (o.cutoff) {
            throw std::invalid_argument("--cutoff only applies to sampled runs (--sample)");
        }
        if (!busy_beaver_record(o.states).max_steps) {
            throw UnknownBusyBeaver(o.states);
        }
        result = tm_sweep(o.states, ShardSpec::parse(o.shard), sweep);
    }
    const FrequencyDistribution& d = result.distribution;
    std::cerr << "tm-run: enumerated=" << d.enumerated << " halting_runs=" << d.halting
              << " distinct=" << d.counts.size() << " max_steps=" << result.max_steps;
    if (d.undecided) {
        std::cerr << " undecided=" << *d.undecided;
    }
    std::cerr << '\n';
    emit(o.out, d);
    return 0;
}

int cmd_merge(const Options& o) {
    if (o.inputs.empty()) {
        throw std::invalid_argument("merge needs at least one input");
    }
    FrequencyDistribution merged = load_distribution(o.inputs.front());
    for (std::size_t i = 1; i < o.inputs.size(); ++i) {
        merged = merge(merged, load_distribution(o.inputs[i]));
    }
    emit(o.out, merged);
    return 0;
}

int cmd_estimate(const Options& o) {
    const FrequencyDistribution d = load_distribution(o.dist);
    std::vector<std::string> strings = o.strings;
    if (o.all) {
        for (const auto& [s, c] : sorted_records(d)) {
            strings.push_back(s);
        }
    }
    if (strings.empty()) {
        throw std::invalid_argument("estimate needs strings or --all");
    }
    for (const std::string& s : strings) {
        if (!is_binary_string(s)) {
            throw std::invalid_argument("'" + s + "' is not a binary string");
        }
        if (d.count(s) == 0) {
            std::cerr << "estimate: no estimate for '" << s << "' (never produced)\n";
        }
    }
    if (o.format == "json") {
        emit(o.out, estimates_json(d, strings));
    } else {
        std::ostringstream out;
        write_estimates_tsv(out, d, strings);
        emit(o.out, out.str());
    }
    return 0;
}

int cmd_rank(const Options& o) {
    const FrequencyDistribution d = load_distribution(o.dist);
    if (o.length && o.max_length) {
        throw std::invalid_argument("--length and --max-length are exclusive");
    }
    std::optional<LengthScope> scope;
    if (o.length) scope = LengthScope::exactly(*o.length);
    if (o.max_length) scope = LengthScope::up_to(*o.max_length);
    const RankedClassification ranking = rank(d, scope);
    if (o.format == "json") {
        emit(o.out, ranking_json(ranking));
    } else {
        std::ostringstream out;
        write_ranking_tsv(out, ranking);
        emit(o.out, out.str());
    }
    return 0;
}

int cmd_ca_run(const Options& o) {
    const IndexInterval rules = parse_range(o.rules, kCARuleCount);
    RuleSpaceOptions options;
    options.extraction = o.extraction == "sliding" ? TupleExtraction::Sliding : TupleExtraction::NonOverlapping;
    options.rows = o.final_row ? TupleRows::Final : TupleRows::All;
    options.both_seeds = !o.single_seed;
    options.workers = o.threads;
    const auto start = std::chrono::steady_clock::now();
    const FrequencyDistribution d = rulespace_distribution(o.k, o.steps, static_cast<std::uint32_t>(rules.begin),
                                                           static_cast<std::uint32_t>(rules.end), options);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::cerr << "ca-run: rules=" << d.enumerated << " contributing=" << d.halting << " distinct=" << d.counts.size()
              << " seconds=" << elapsed.count() << '\n';
    emit(o.out, d);
    return 0;
}

int cmd_ca_evolve(const Options& o) {
    const CAEvolution evo = evolve(CARule(o.rule), o.steps);
    std::ostringstream out;
    for (std::size_t t = 0; t < evo.rows.size(); ++t) {
        const CellSpan cone = evo.light_cone[t];
        out << evo.row_string(t).substr(cone.left, cone.width()) << '\n';
    }
    emit(o.out, out.str());
    return 0;
}

int cmd_tag_run(const Options& o) {
    TagSpaceOptions options;
    options.deletion = o.deletion;
    options.initials = split_commas(o.initials);
    const FrequencyDistribution d = tagspace_distribution(o.max_appendant, o.tag_cutoff, options);
    std::cerr << "tag-run: runs=" << d.enumerated << " halting=" << d.halting << " distinct=" << d.counts.size()
              << '\n';
    emit(o.out, d);
    return 0;
}

int cmd_compare(const Options& o) {
    const ComparisonReport report = compare(load_distribution(o.dist), load_distribution(o.dist_b), o.k);
    std::cerr << "compare: k=" << report.k << " shared=" << report.shared << " rho=" << format_double(report.rho)
              << '\n';
    if (o.format == "json") {
        emit(o.out, comparison_json(report));
    } else {
        std::ostringstream out;
        write_comparison_tsv(out, report);
        emit(o.out, out.str());
    }
    return 0;
}

int cmd_entropy(const Options& o) {
    std::ostringstream out;
    out << "string\tentropy\n";
    for (const std::string& s : o.strings) {
        out << s << '\t' << format_double(shannon_entropy(s)) << '\n';
    }
    emit(o.out, out.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Algorithmic complexity of short strings by exhaustive machine enumeration"};
    app.require_subcommand(1);
    Options o;

    auto* tm = app.add_subcommand("tm-run", "Run (or sample) an n-state Turing machine space");
    tm->add_option("--states,-n", o.states, "Number of states")->required()->check(CLI::PositiveNumber);
    tm->add_option("--shard", o.shard, "Shard i/m of the index space")->capture_default_str();
    tm->add_option("--sample", o.sample, "Sample this many machines uniformly instead of enumerating");
    tm->add_option("--seed", o.seed, "Sampling seed")->capture_default_str();
    tm->add_option("--cutoff", o.cutoff, "Step cutoff for sampled runs (required for n >= 5)");
    tm->add_flag("--use-symmetry", o.use_symmetry, "Skip work via complement/mirror symmetry");
    tm->add_option("--threads", o.threads, "Worker threads (default: CTM_THREADS or all cores)");
    tm->add_option("--out,-o", o.out, "Output distribution file (default: stdout)");
    tm->add_flag("--quiet,-q", o.quiet, "No progress output");

    auto* mg = app.add_subcommand("merge", "Merge shard distribution files");
    mg->add_option("inputs", o.inputs, "Distribution files")->required()->check(CLI::ExistingFile);
    mg->add_option("--out,-o", o.out, "Output file (default: stdout)");

    const std::vector<std::string> formats{"tsv", "json"};

    auto* est = app.add_subcommand("estimate", "Complexity estimates k = -log2 SL(s)");
    est->add_option("dist", o.dist, "Distribution file")->required()->check(CLI::ExistingFile);
    est->add_option("strings", o.strings, "Binary strings");
    est->add_flag("--all", o.all, "Estimate every string in the distribution");
    est->add_option("--format", o.format)->check(CLI::IsMember(formats))->capture_default_str();
    est->add_option("--out,-o", o.out, "Output file (default: stdout)");

    auto* rk = app.add_subcommand("rank", "Ranked classification with tie groups");
    rk->add_option("dist", o.dist, "Distribution file")->required()->check(CLI::ExistingFile);
    rk->add_option("--length", o.length, "Only strings of this length")->check(CLI::PositiveNumber);
    rk->add_option("--max-length", o.max_length, "Only strings up to this length")->check(CLI::PositiveNumber);
    rk->add_option("--format", o.format)->check(CLI::IsMember(formats))->capture_default_str();
    rk->add_option("--out,-o", o.out, "Output file (default: stdout)");

    auto* ca = app.add_subcommand("ca-run", "k-tuple distribution over range-3/2 CA rules");
    ca->add_option("--k", o.k, "Tuple length")->capture_default_str()->check(CLI::Range(1, 24));
    ca->add_option("--steps", o.steps, "Evolution steps")->capture_default_str()->check(CLI::PositiveNumber);
    ca->add_option("--rules", o.rules, "Rule range a-b (half open) or a single rule")->capture_default_str();
    ca->add_option("--extraction", o.extraction)
        ->check(CLI::IsMember({"nonoverlapping", "sliding"}))
        ->capture_default_str();
    ca->add_flag("--final-row", o.final_row, "Extract tuples from the last row only");
    ca->add_flag("--single-seed", o.single_seed, "Only evolve the black-cell-on-white seed");
    ca->add_option("--threads", o.threads, "Worker threads (default: CTM_THREADS or all cores)");
    ca->add_option("--out,-o", o.out, "Output distribution file (default: stdout)");

    auto* cev = app.add_subcommand("ca-evolve", "Print the light cone of one CA evolution");
    cev->add_option("--rule", o.rule, "Rule number")->required()->check(CLI::Range(0, 65535));
    cev->add_option("--steps", o.steps, "Evolution steps")->capture_default_str()->check(CLI::PositiveNumber);
    cev->add_option("--out,-o", o.out, "Output file (default: stdout)");

    auto* tg = app.add_subcommand("tag-run", "Distribution over a space of binary tag systems");
    tg->add_option("--L", o.max_appendant, "Maximum appendant length")->capture_default_str()->check(CLI::Range(0, 16));
    tg->add_option("--cutoff", o.tag_cutoff, "Step cutoff")->capture_default_str()->check(CLI::PositiveNumber);
    tg->add_option("--initial", o.initials, "Initial word(s), comma separated or repeated")->capture_default_str();
    tg->add_option("--deletion", o.deletion, "Deletion number")->capture_default_str()->check(CLI::PositiveNumber);
    tg->add_option("--out,-o", o.out, "Output distribution file (default: stdout)");

    auto* cmp = app.add_subcommand("compare", "Spearman comparison of two distributions on length-k strings");
    cmp->add_option("a", o.dist, "First distribution")->required()->check(CLI::ExistingFile);
    cmp->add_option("b", o.dist_b, "Second distribution")->required()->check(CLI::ExistingFile);
    cmp->add_option("--k", o.k, "String length")->capture_default_str()->check(CLI::PositiveNumber);
    cmp->add_option("--format", o.format)->check(CLI::IsMember(formats))->capture_default_str();
    cmp->add_option("--out,-o", o.out, "Output file (default: stdout)");

    auto* ent = app.add_subcommand("entropy", "Shannon entropy of binary strings");
    ent->add_option("strings", o.strings, "Binary strings")->required();
    ent->add_option("--out,-o", o.out, "Output file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*tm) return cmd_tm_run(o);
        if (*mg) return cmd_merge(o);
        if (*est) return cmd_estimate(o);
        if (*rk) return cmd_rank(o);
        if (*ca) return cmd_ca_run(o);
        if (*cev) return cmd_ca_evolve(o);
        if (*tg) return cmd_tag_run(o);
        if (*cmp) return cmd_compare(o);
        if (*ent) return cmd_entropy(o);
    } catch (const std::exception& e) {
        std::cerr << "ctm: error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
