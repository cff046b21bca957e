#include "ctm/turing_machine.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ctm {

namespace {

void require_states(int states) {
    if (states < 1) {
        throw std::invalid_argument("invalid state count " + std::to_string(states) + " (must be >= 1)");
    }
}

std::size_t entry_slot(int state, Symbol read) {
    return static_cast<std::size_t>(state - 1) * 2 + read;
}

} // namespace

TransitionTable::TransitionTable(int states) : states_(states) {
    require_states(states);
    entries_.assign(static_cast<std::size_t>(states) * 2, Action{});
}

const Action& TransitionTable::at(int state, Symbol read) const {
    if (state < 1 || state > states_ || read > 1) {
        throw std::out_of_range("transition (" + std::to_string(state) + "," + std::to_string(read) + ") out of range");
    }
    return entries_[entry_slot(state, read)];
}

void TransitionTable::set(int state, Symbol read, const Action& action) {
    if (state < 1 || state > states_ || read > 1) {
        throw std::out_of_range("transition (" + std::to_string(state) + "," + std::to_string(read) + ") out of range");
    }
    entries_[entry_slot(state, read)] = action;
}

void TransitionTable::validate() const {
    if (entries_.size() != static_cast<std::size_t>(states_) * 2) {
        throw std::invalid_argument("transition table must have exactly 2n entries");
    }
    for (const Action& a : entries_) {
        if (a.write > 1) {
            throw std::invalid_argument("write symbol must be 0 or 1");
        }
        if (a.next < kHalt || a.next > states_) {
            throw std::invalid_argument("next state " + std::to_string(a.next) + " out of range");
        }
        if ((a.move == Move::None) != a.halts()) {
            throw std::invalid_argument("halting transitions must not move and moving transitions must not halt");
        }
    }
}

std::uint64_t machine_count(int states) {
    require_states(states);
    const std::uint64_t base = 4 * static_cast<std::uint64_t>(states) + 2;
    std::uint64_t count = 1;
    for (int i = 0; i < 2 * states; ++i) {
        if (count > std::numeric_limits<std::uint64_t>::max() / base) {
            throw std::overflow_error("machine count for n=" + std::to_string(states) + " exceeds 64 bits");
        }
        count *= base;
    }
    return count;
}

int encode_action(const Action& action, int states) {
    if (action.halts()) {
        return action.write;
    }
    const int e = action.write + (action.move == Move::Right ? 2 : 0) + 4 * (action.next - 1);
    if (e < 0 || e >= 4 * states) {
        throw std::invalid_argument("action does not fit an n=" + std::to_string(states) + " table");
    }
    return 2 + e;
}

Action decode_action(int digit, int states) {
    if (digit < 0 || digit >= 4 * states + 2) {
        throw std::out_of_range("action digit out of range");
    }
    if (digit < 2) {
        return Action{static_cast<Symbol>(digit), Move::None, kHalt};
    }
    const int e = digit - 2;
    return Action{static_cast<Symbol>(e % 2), (e / 2) % 2 == 0 ? Move::Left : Move::Right, 1 + e / 4};
}

TransitionTable decode_machine(const MachineIndex& index) {
    const std::uint64_t count = machine_count(index.states);
    if (index.value >= count) {
        throw std::out_of_range("machine index " + std::to_string(index.value) + " out of range for n=" +
                                std::to_string(index.states));
    }
    const std::uint64_t base = 4 * static_cast<std::uint64_t>(index.states) + 2;
    TransitionTable table(index.states);
    std::uint64_t rest = index.value;
    // Least significant digit is the last entry.
    for (int slot = 2 * index.states - 1; slot >= 0; --slot) {
        const int digit = static_cast<int>(rest % base);
        rest /= base;
        table.set(1 + slot / 2, static_cast<Symbol>(slot % 2), decode_action(digit, index.states));
    }
    return table;
}

MachineIndex encode_machine(const TransitionTable& table) {
    table.validate();
    const std::uint64_t base = 4 * static_cast<std::uint64_t>(table.states()) + 2;
    std::uint64_t value = 0;
    for (const Action& a : table.entries()) {
        value = value * base + static_cast<std::uint64_t>(encode_action(a, table.states()));
    }
    return MachineIndex{table.states(), value};
}

Symbol& Simulator::cell(std::int64_t pos, Symbol blank) {
    if (pos >= 0) {
        const auto i = static_cast<std::size_t>(pos);
        if (i >= right_.size()) {
            right_.resize(std::max(i + 1, right_.size() * 2), blank);
        }
        return right_[i];
    }
    const auto i = static_cast<std::size_t>(-pos - 1);
    if (i >= left_.size()) {
        left_.resize(std::max(i + 1, left_.size() * 2), blank);
    }
    return left_[i];
}

RunOutcome Simulator::run(const TransitionTable& table, std::uint64_t bound, Symbol blank) {
    if (bound < 1) {
        throw std::invalid_argument("step bound must be >= 1");
    }
    if (blank > 1) {
        throw std::invalid_argument("blank symbol must be 0 or 1");
    }
    std::fill(right_.begin(), right_.end(), blank);
    std::fill(left_.begin(), left_.end(), blank);

    RunOutcome outcome;
    outcome.bound = bound;
    std::int64_t pos = 0;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    int state = 1;
    for (std::uint64_t step = 1; step <= bound; ++step) {
        Symbol& c = cell(pos, blank);
        const Action& a = table.at(state, c);
        c = a.write;
        if (a.halts()) {
            outcome.status = RunStatus::Halted;
            outcome.steps = step;
            outcome.output.reserve(static_cast<std::size_t>(hi - lo + 1));
            for (std::int64_t p = lo; p <= hi; ++p) {
                outcome.output.push_back(static_cast<char>('0' + cell(p, blank)));
            }
            return outcome;
        }
        pos += a.move == Move::Right ? 1 : -1;
        lo = std::min(lo, pos);
        hi = std::max(hi, pos);
        state = a.next;
    }
    outcome.status = RunStatus::BoundExceeded;
    return outcome;
}

RunOutcome simulate(const TransitionTable& table, std::uint64_t bound, Symbol blank) {
    Simulator sim;
    return sim.run(table, bound, blank);
}

TransitionTable complement_machine(const TransitionTable& table) {
    TransitionTable out(table.states());
    for (int q = 1; q <= table.states(); ++q) {
        for (Symbol s = 0; s < 2; ++s) {
            Action a = table.at(q, static_cast<Symbol>(1 - s));
            a.write = static_cast<Symbol>(1 - a.write);
            out.set(q, s, a);
        }
    }
    return out;
}

TransitionTable mirror_machine(const TransitionTable& table) {
    TransitionTable out(table.states());
    for (int q = 1; q <= table.states(); ++q) {
        for (Symbol s = 0; s < 2; ++s) {
            Action a = table.at(q, s);
            if (a.move == Move::Left) {
                a.move = Move::Right;
            } else if (a.move == Move::Right) {
                a.move = Move::Left;
            }
            out.set(q, s, a);
        }
    }
    return out;
}

std::string complement(std::string_view bits) {
    std::string out(bits);
    for (char& c : out) {
        c = c == '0' ? '1' : '0';
    }
    return out;
}

std::string reversed(std::string_view bits) {
    return std::string(bits.rbegin(), bits.rend());
}

} // namespace ctm
