#include "ctm/bounds.hpp"

#include <array>
#include <string>

namespace ctm {

namespace {

constexpr std::array<std::uint64_t, 4> kKnownSteps = {1, 6, 21, 107};

} // namespace

UnknownBusyBeaver::UnknownBusyBeaver(int states)
    : std::domain_error("S(" + std::to_string(states) +
                        ") is unknown; use a cutoff policy for machines with more than 4 states") {}

BusyBeaverRecord busy_beaver_record(int states) {
    if (states < 1) {
        throw std::invalid_argument("invalid state count " + std::to_string(states));
    }
    BusyBeaverRecord record{states, std::nullopt};
    if (static_cast<std::size_t>(states) <= kKnownSteps.size()) {
        record.max_steps = kKnownSteps[static_cast<std::size_t>(states) - 1];
    }
    return record;
}

std::uint64_t step_bound(int states) {
    const BusyBeaverRecord record = busy_beaver_record(states);
    if (!record.max_steps) {
        throw UnknownBusyBeaver(states);
    }
    return *record.max_steps;
}

HaltingPolicy HaltingPolicy::exact(int states) {
    return HaltingPolicy(Mode::Exact, states, step_bound(states));
}

HaltingPolicy HaltingPolicy::cutoff(int states, std::uint64_t bound) {
    if (states < 1) {
        throw std::invalid_argument("invalid state count " + std::to_string(states));
    }
    if (bound < 1) {
        throw std::invalid_argument("cutoff must be >= 1");
    }
    return HaltingPolicy(Mode::Cutoff, states, bound);
}

HaltingVerdict classify(const RunOutcome& outcome, const HaltingPolicy& policy) {
    if (outcome.bound != policy.bound()) {
        throw std::invalid_argument("outcome bound " + std::to_string(outcome.bound) +
                                    " does not match policy bound " + std::to_string(policy.bound()));
    }
    if (outcome.halted()) {
        return HaltingVerdict::Halts;
    }
    return policy.mode() == HaltingPolicy::Mode::Exact ? HaltingVerdict::NeverHalts : HaltingVerdict::Undecided;
}

} // namespace ctm
