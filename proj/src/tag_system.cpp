#include "ctm/tag_system.hpp"

#include <stdexcept>

namespace ctm {

void TagSystem::validate() const {
    if (deletion < 1) {
        throw std::invalid_argument("tag deletion number must be >= 1");
    }
    if (cutoff < 1) {
        throw std::invalid_argument("tag cutoff must be >= 1");
    }
    for (const std::string& p : productions) {
        if (p.find_first_not_of("01") != std::string::npos) {
            throw std::invalid_argument("tag production '" + p + "' is not binary");
        }
    }
    if (!is_binary_string(initial)) {
        throw std::invalid_argument("tag initial word must be a nonempty binary string");
    }
    if (initial.size() < deletion) {
        throw std::invalid_argument("tag initial word '" + initial + "' is shorter than the deletion number");
    }
}

RunOutcome run_tag(const TagSystem& system) {
    system.validate();
    RunOutcome outcome;
    outcome.bound = system.cutoff;
    // The live word is word.substr(head); the prefix is reclaimed lazily.
    std::string word = system.initial;
    std::size_t head = 0;
    for (std::uint64_t step = 1; step <= system.cutoff; ++step) {
        word += system.productions[word[head] == '1' ? 1 : 0];
        const std::size_t previous = head;
        head += system.deletion;
        const std::size_t length = word.size() - head;
        if (length < system.deletion) {
            outcome.status = RunStatus::Halted;
            outcome.steps = step;
            outcome.output = word.substr(length > 0 ? head : previous);
            return outcome;
        }
        if (head > 4096) {
            word.erase(0, head);
            head = 0;
        }
    }
    outcome.status = RunStatus::BoundExceeded;
    return outcome;
}

std::vector<std::string> appendants(std::size_t max_length) {
    std::vector<std::string> out{""};
    for (std::size_t len = 1; len <= max_length; ++len) {
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
            std::string s(len, '0');
            for (std::size_t j = 0; j < len; ++j) {
                if ((v >> (len - 1 - j)) & 1u) {
                    s[j] = '1';
                }
            }
            out.push_back(std::move(s));
        }
    }
    return out;
}

FrequencyDistribution tagspace_distribution(std::size_t max_length, std::uint64_t cutoff,
                                            const TagSpaceOptions& options) {
    if (max_length > 16) {
        throw std::invalid_argument("appendant length must be <= 16");
    }
    if (options.initials.empty()) {
        throw std::invalid_argument("tag space needs at least one initial word");
    }
    const std::vector<std::string> words = appendants(max_length);

    FrequencyDistribution dist;
    dist.meta.formalism = Formalism::TagSystem;
    dist.meta.rulespace = "tag" + std::to_string(options.deletion) + "-L" + std::to_string(max_length);
    dist.meta.bound = cutoff;
    std::string initials;
    for (const std::string& w : options.initials) {
        initials += (initials.empty() ? "" : ",") + w;
    }
    dist.meta.params = {{"deletion", std::to_string(options.deletion)}, {"initials", initials}};

    TagSystem system;
    system.deletion = options.deletion;
    system.cutoff = cutoff;
    for (const std::string& p0 : words) {
        for (const std::string& p1 : words) {
            system.productions = {p0, p1};
            for (const std::string& init : options.initials) {
                system.initial = init;
                const RunOutcome out = run_tag(system);
                ++dist.enumerated;
                if (out.halted()) {
                    accumulate(dist, out);
                }
            }
        }
    }
    dist.shards = ShardSet::interval(0, static_cast<std::uint64_t>(words.size()) * words.size());
    return dist;
}

} // namespace ctm
