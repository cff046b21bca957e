#include "doctest.h"

#include "ctm/bounds.hpp"
#include "ctm/sweep.hpp"

using namespace ctm;

TEST_CASE("step_bound") {
    CHECK(step_bound(1) == 1);
    CHECK(step_bound(2) == 6);
    CHECK(step_bound(3) == 21);
    CHECK(step_bound(4) == 107);
    CHECK_THROWS_AS(step_bound(5), UnknownBusyBeaver);
    CHECK_THROWS_AS(step_bound(0), std::invalid_argument);
    CHECK_FALSE(busy_beaver_record(5).max_steps.has_value());
}

TEST_CASE("HaltingPolicy construction") {
    CHECK(HaltingPolicy::exact(4).bound() == 107);
    CHECK_THROWS_AS(HaltingPolicy::exact(5), UnknownBusyBeaver);
    const HaltingPolicy c = HaltingPolicy::cutoff(5, 500);
    CHECK(c.mode() == HaltingPolicy::Mode::Cutoff);
    CHECK(c.bound() == 500);
    CHECK_THROWS_AS(HaltingPolicy::cutoff(5, 0), std::invalid_argument);
}

TEST_CASE("classify") {
    RunOutcome exceeded;
    exceeded.status = RunStatus::BoundExceeded;
    exceeded.bound = 21;
    CHECK(classify(exceeded, HaltingPolicy::exact(3)) == HaltingVerdict::NeverHalts);

    RunOutcome halted{RunStatus::Halted, "01", 5, 6};
    CHECK(classify(halted, HaltingPolicy::exact(2)) == HaltingVerdict::Halts);

    exceeded.bound = 500;
    CHECK(classify(exceeded, HaltingPolicy::cutoff(5, 500)) == HaltingVerdict::Undecided);

    CHECK_THROWS_AS(classify(exceeded, HaltingPolicy::exact(3)), std::invalid_argument);
}

TEST_CASE("exact mode leaves nothing undecided and S(n) is attained") {
    for (int n = 1; n <= 3; ++n) {
        const SweepResult r = tm_sweep(n, ShardSpec{});
        CHECK(r.max_steps == step_bound(n));
        CHECK_FALSE(r.distribution.undecided.has_value());
    }
}
