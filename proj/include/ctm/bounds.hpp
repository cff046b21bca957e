#pragma once

// Known busy-beaver step values and the halting policy derived from them.

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "ctm/turing_machine.hpp"

namespace ctm {

/// Raised when S(n) is requested for a state count with no known value.
class UnknownBusyBeaver : public std::domain_error {
public:
    explicit UnknownBusyBeaver(int states);
};

struct BusyBeaverRecord {
    int states = 1;
    std::optional<std::uint64_t> max_steps; // S(n); empty when unknown
};

BusyBeaverRecord busy_beaver_record(int states);

/// S(n) for n in 1..4. Throws UnknownBusyBeaver for n >= 5.
std::uint64_t step_bound(int states);

enum class HaltingVerdict { Halts, NeverHalts, Undecided };

class HaltingPolicy {
public:
    enum class Mode { Exact, Cutoff };

    /// Bound at S(n); only constructible for n <= 4.
    static HaltingPolicy exact(int states);
    static HaltingPolicy cutoff(int states, std::uint64_t bound);

    Mode mode() const { return mode_; }
    int states() const { return states_; }
    std::uint64_t bound() const { return bound_; }

private:
    HaltingPolicy(Mode mode, int states, std::uint64_t bound) : mode_(mode), states_(states), bound_(bound) {}

    Mode mode_;
    int states_;
    std::uint64_t bound_;
};

/// Rejects outcomes produced under a different bound than the policy's.
HaltingVerdict classify(const RunOutcome& outcome, const HaltingPolicy& policy);

} // namespace ctm
