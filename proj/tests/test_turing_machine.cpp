#include "doctest.h"

#include <random>

#include "ctm/turing_machine.hpp"
#include "oracles.hpp"

using namespace ctm;

TEST_CASE("machine_count") {
    CHECK(machine_count(1) == 36);
    CHECK(machine_count(2) == 10000);
    CHECK(machine_count(3) == 7529536);
    CHECK(machine_count(4) == 11019960576ULL);
    CHECK(machine_count(6) == 95428956661682176ULL);
    CHECK_THROWS_AS(machine_count(0), std::invalid_argument);
    CHECK_THROWS_AS(machine_count(7), std::overflow_error);
}

TEST_CASE("decode_machine edge indices") {
    const TransitionTable zero = decode_machine({1, 0});
    for (const Action& a : zero.entries()) {
        CHECK(a == Action{0, Move::None, kHalt});
    }

    const TransitionTable last = decode_machine({1, 35});
    for (const Action& a : last.entries()) {
        CHECK(a == Action{1, Move::Right, 1});
    }

    CHECK_THROWS_AS(decode_machine({1, 36}), std::out_of_range);
    CHECK_THROWS_AS(decode_machine({0, 0}), std::invalid_argument);
}

TEST_CASE("decode_machine digit layout") {
    // n=2, digits (2, 3, 4, 9) in base 10: entry (1,0) most significant.
    const TransitionTable t = decode_machine({2, 2349});
    CHECK(t.at(1, 0) == Action{0, Move::Left, 1});
    CHECK(t.at(1, 1) == Action{1, Move::Left, 1});
    CHECK(t.at(2, 0) == Action{0, Move::Right, 1});
    CHECK(t.at(2, 1) == Action{1, Move::Right, 2});
}

TEST_CASE("encode_machine is the inverse of decode_machine") {
    for (int n = 1; n <= 2; ++n) {
        for (std::uint64_t i = 0; i < machine_count(n); ++i) {
            const TransitionTable t = decode_machine({n, i});
            REQUIRE(encode_machine(t) == MachineIndex{n, i});
        }
    }

    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> digit(0, 13);
    for (int trial = 0; trial < 1000; ++trial) {
        TransitionTable t(3);
        for (int q = 1; q <= 3; ++q) {
            for (Symbol s = 0; s < 2; ++s) {
                t.set(q, s, decode_action(digit(rng), 3));
            }
        }
        REQUIRE(decode_machine(encode_machine(t)) == t);
    }

    CHECK(encode_machine(TransitionTable(2)).value == 0);
    TransitionTable top(3);
    for (int q = 1; q <= 3; ++q) {
        for (Symbol s = 0; s < 2; ++s) top.set(q, s, Action{1, Move::Right, 3});
    }
    CHECK(encode_machine(top).value == machine_count(3) - 1);
}

TEST_CASE("encode_machine rejects malformed tables") {
    TransitionTable t(2);
    t.set(1, 0, Action{0, Move::Left, kHalt});
    CHECK_THROWS_AS(encode_machine(t), std::invalid_argument);
    t.set(1, 0, Action{0, Move::None, 1});
    CHECK_THROWS_AS(encode_machine(t), std::invalid_argument);
    t.set(1, 0, Action{0, Move::Left, 3});
    CHECK_THROWS_AS(encode_machine(t), std::invalid_argument);
    t.set(1, 0, Action{2, Move::None, kHalt});
    CHECK_THROWS_AS(encode_machine(t), std::invalid_argument);
}

TEST_CASE("simulate basic runs") {
    TransitionTable halt_one(1);
    halt_one.set(1, 0, Action{1, Move::None, kHalt});
    const RunOutcome r = simulate(halt_one, 6);
    CHECK(r.status == RunStatus::Halted);
    CHECK(r.output == "1");
    CHECK(r.steps == 1);
    CHECK(r.bound == 6);

    TransitionTable runner(1);
    runner.set(1, 0, Action{1, Move::Right, 1});
    CHECK(simulate(runner, 1).status == RunStatus::BoundExceeded);
    CHECK(simulate(runner, 1000).status == RunStatus::BoundExceeded);
    CHECK(simulate(runner, 1000).output.empty());

    CHECK_THROWS_AS(simulate(runner, 0), std::invalid_argument);
}

TEST_CASE("simulate agrees with the reference runner on every n=2 machine") {
    Simulator sim;
    std::uint64_t longest = 0;
    for (std::uint64_t i = 0; i < machine_count(2); ++i) {
        const TransitionTable t = decode_machine({2, i});
        const auto d = oracle::digits(2, i);
        for (Symbol blank : {Symbol{0}, Symbol{1}}) {
            const RunOutcome got = sim.run(t, 7, blank);
            const oracle::Run want = oracle::run(d, 7, blank);
            REQUIRE(got.halted() == want.halted);
            if (want.halted) {
                REQUIRE(got.output == want.output);
                REQUIRE(got.steps == want.steps);
                longest = std::max(longest, got.steps);
            }
        }
    }
    // Nothing halts between S(2) and the looser bound 7.
    CHECK(longest == 6);
}

TEST_CASE("simulate agrees with the reference runner on sampled n=3 and n=4 machines") {
    std::mt19937_64 rng(99);
    Simulator sim;
    for (int n : {3, 4}) {
        std::uniform_int_distribution<std::uint64_t> pick(0, machine_count(n) - 1);
        const int bound = n == 3 ? 21 : 107;
        for (int trial = 0; trial < 20000; ++trial) {
            const std::uint64_t i = pick(rng);
            const RunOutcome got = sim.run(decode_machine({n, i}), bound, 0);
            const oracle::Run want = oracle::run(oracle::digits(n, i), bound, 0);
            REQUIRE(got.halted() == want.halted);
            REQUIRE(got.output == want.output);
        }
    }
}

TEST_CASE("halting outcomes are stable under larger bounds") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> pick(0, machine_count(3) - 1);
    for (int trial = 0; trial < 5000; ++trial) {
        const TransitionTable t = decode_machine({3, pick(rng)});
        RunOutcome a = simulate(t, 21);
        if (!a.halted()) continue;
        for (std::uint64_t b : {22u, 50u, 500u}) {
            RunOutcome c = simulate(t, b);
            CHECK(c.output == a.output);
            CHECK(c.steps == a.steps);
        }
    }
}

TEST_CASE("complement_machine") {
    const TransitionTable zero(2);
    const TransitionTable one = complement_machine(zero);
    for (const Action& a : one.entries()) {
        CHECK(a == Action{1, Move::None, kHalt});
    }

    Simulator sim;
    for (std::uint64_t i = 0; i < machine_count(2); ++i) {
        const TransitionTable t = decode_machine({2, i});
        const TransitionTable c = complement_machine(t);
        REQUIRE(complement_machine(c) == t);
        // Running the complement machine from the complementary blank
        // complements the run.
        const RunOutcome a = sim.run(t, 6, 0);
        const RunOutcome b = sim.run(c, 6, 1);
        REQUIRE(a.halted() == b.halted());
        REQUIRE(b.output == complement(a.output));
        REQUIRE(a.steps == b.steps);
    }
}

TEST_CASE("mirror_machine reflects the tape") {
    Simulator sim;
    for (std::uint64_t i = 0; i < machine_count(2); ++i) {
        const TransitionTable t = decode_machine({2, i});
        const TransitionTable m = mirror_machine(t);
        REQUIRE(mirror_machine(m) == t);
        for (Symbol blank : {Symbol{0}, Symbol{1}}) {
            const RunOutcome a = sim.run(t, 6, blank);
            const RunOutcome b = sim.run(m, 6, blank);
            REQUIRE(a.halted() == b.halted());
            REQUIRE(b.output == reversed(a.output));
            REQUIRE(b.steps == a.steps);
        }
    }

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::uint64_t> pick(0, machine_count(3) - 1);
    for (int trial = 0; trial < 20000; ++trial) {
        const TransitionTable t = decode_machine({3, pick(rng)});
        const RunOutcome a = sim.run(t, 21);
        const RunOutcome b = sim.run(mirror_machine(t), 21);
        REQUIRE(b.output == reversed(a.output));
        REQUIRE(b.steps == a.steps);
    }
}

TEST_CASE("string helpers") {
    CHECK(complement("0011") == "1100");
    CHECK(reversed("0011") == "1100");
    CHECK(reversed("011") == "110");
}
