#pragma once

// Two-symbol Turing machines on a blank two-way tape: canonical enumeration
// of transition tables and bounded simulation.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ctm {

using Symbol = std::uint8_t;

enum class Move : std::uint8_t { None, Left, Right };

/// State 0 denotes the halting state; regular states are 1..n.
inline constexpr int kHalt = 0;

struct Action {
    Symbol write = 0;
    Move move = Move::None;
    int next = kHalt;

    bool halts() const { return next == kHalt; }
    friend bool operator==(const Action&, const Action&) = default;
};

/// Complete (n-state, 2-symbol) program. Entry order is
/// (1,0), (1,1), (2,0), (2,1), ... Start state is 1.
class TransitionTable {
public:
    /// All entries halt writing 0.
    explicit TransitionTable(int states);

    int states() const { return states_; }
    const Action& at(int state, Symbol read) const;
    void set(int state, Symbol read, const Action& action);
    const std::vector<Action>& entries() const { return entries_; }

    /// Throws std::invalid_argument if any entry breaks the Action invariants.
    void validate() const;

    friend bool operator==(const TransitionTable&, const TransitionTable&) = default;

private:
    int states_;
    std::vector<Action> entries_;
};

struct MachineIndex {
    int states = 1;
    std::uint64_t value = 0;

    friend bool operator==(const MachineIndex&, const MachineIndex&) = default;
};

enum class RunStatus : std::uint8_t { Halted, BoundExceeded };

struct RunOutcome {
    RunStatus status = RunStatus::BoundExceeded;
    std::string output;      // nonempty iff Halted
    std::uint64_t steps = 0; // >= 1 iff Halted
    std::uint64_t bound = 0; // step bound the run was made under

    bool halted() const { return status == RunStatus::Halted; }
    friend bool operator==(const RunOutcome&, const RunOutcome&) = default;
};

/// (4n+2)^(2n). Throws std::invalid_argument for n < 1 and
/// std::overflow_error when the count does not fit in 64 bits (n >= 7).
std::uint64_t machine_count(int states);

TransitionTable decode_machine(const MachineIndex& index);
MachineIndex encode_machine(const TransitionTable& table);

/// Single base-(4n+2) digit for one table entry, and its inverse.
int encode_action(const Action& action, int states);
Action decode_action(int digit, int states);

/// Runs `table` from an all-`blank` tape, head at cell 0, state 1, for at
/// most `bound` steps. The output is the window of visited cells.
RunOutcome simulate(const TransitionTable& table, std::uint64_t bound, Symbol blank = 0);

/// Reusable simulator; keeps its tape storage between runs so that sweeps
/// over millions of machines do not allocate per run.
class Simulator {
public:
    RunOutcome run(const TransitionTable& table, std::uint64_t bound, Symbol blank = 0);

private:
    Symbol& cell(std::int64_t pos, Symbol blank);

    // Cells at positions >= 0 and < 0 respectively; left_[i] is position -1-i.
    std::vector<Symbol> right_;
    std::vector<Symbol> left_;
};

/// Exchanges the roles of symbols 0 and 1. Running the result from a
/// blank-1 tape yields the complement of running `table` from blank 0.
TransitionTable complement_machine(const TransitionTable& table);

/// Exchanges Left and Right.
TransitionTable mirror_machine(const TransitionTable& table);

std::string complement(std::string_view bits);
std::string reversed(std::string_view bits);

} // namespace ctm
