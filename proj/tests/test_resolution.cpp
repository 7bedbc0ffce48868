#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "cftm/resolution.hpp"
#include "fixtures.hpp"

using namespace cftm;

namespace {

F1Strategy f1_of(const std::string& name) {
    F1Strategy s;
    REQUIRE(F1Strategy::parse(name, s));
    return s;
}

F2Strategy f2_of(const std::string& name) {
    F2Strategy s;
    REQUIRE(F2Strategy::parse(name, s));
    return s;
}

}  // namespace

TEST_CASE("eval_f1 worked values") {
    CHECK(eval_f1(f1_of("mean"), 1.0, 0.1, 0) == doctest::Approx(0.55).epsilon(1e-12));
    CHECK(eval_f1(f1_of("gmean"), 0.9, 0.4, 0) == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(eval_f1(f1_of("min"), 0.2, 0.8, 0) == 0.2);
    CHECK(eval_f1(f1_of("max"), 0.2, 0.8, 0) == 0.8);
    CHECK(eval_f1(f1_of("product"), 0.9, 0.4, 0) == doctest::Approx(0.36).epsilon(1e-12));
    CHECK(eval_f1(f1_of("weight"), 0.9, 0.4, 0) == 0.4);
}

TEST_CASE("eval_f1 yager clamps at 1") {
    auto y2 = f1_of("yager:2");
    CHECK(y2.eval(0.3, 0.4, 0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(y2.eval(0.9, 0.9, 0) == 1.0);
}

TEST_CASE("eval_f1 switched flips at the switch time") {
    auto s = f1_of("switched:3");
    CHECK(s.eval(0.2, 0.8, 2) == 0.8);  // max before t_i
    CHECK(s.eval(0.2, 0.8, 3) == 0.2);  // min from t_i on
}

TEST_CASE("eval_f1 rejects out-of-range inputs") {
    CHECK_THROWS_AS(eval_f1(f1_of("mean"), 1.2, 0.5, 0), std::domain_error);
    CHECK_THROWS_AS(eval_f1(f1_of("mean"), 0.5, -0.1, 0), std::domain_error);
}

TEST_CASE("F1 strategy names round-trip through parse") {
    for (const auto& s : F1Strategy::builtins()) {
        F1Strategy back;
        REQUIRE(F1Strategy::parse(s.name(), back));
        CHECK(back.kind == s.kind);
    }
    F1Strategy s;
    CHECK_FALSE(F1Strategy::parse("bogus", s));
    CHECK_FALSE(F1Strategy::parse("yager:-1", s));
}

TEST_CASE("resolve_f2 worked value") {
    std::vector<double> candidates = {std::sqrt(0.9 * 0.4), std::sqrt(0.5 * 0.3), 0.1};
    CHECK(resolve_f2(f2_of("amean"), candidates) == doctest::Approx(0.362).epsilon(5e-3));
}

TEST_CASE("resolve_f2 empty multiset is 0 for every strategy") {
    for (const auto& s : F2Strategy::builtins()) CHECK(s.resolve({}) == 0.0);
}

TEST_CASE("resolve_f2 all-equal multiset returns the value exactly") {
    std::vector<double> same = {0.7, 0.7, 0.7};
    for (const auto& s : F2Strategy::builtins()) CHECK(s.resolve(same) == 0.7);
}

TEST_CASE("resolve_f3 on the fan-in fragment") {
    auto m = fixtures::fan_in_fragment();
    auto cfg = fixtures::fan_in_config(m);
    auto active = active_transitions(m, cfg, f1_of("gmean"));
    REQUIRE(active.entries.size() == 3);
    // F1 values 0.6 / 0.387 / 0.1 writing a / b / c.
    CHECK(resolve_f3(F3Strategy{GroupScore::MaxWeight}, active, m) == "a");
    CHECK(resolve_f3(F3Strategy{GroupScore::SigmaCount}, active, m) == "a");
}

TEST_CASE("resolve_f4 on the fan-in fragment") {
    auto m = fixtures::fan_in_fragment();
    auto cfg = fixtures::fan_in_config(m);
    auto active = active_transitions(m, cfg, f1_of("gmean"));
    // Two of three suggest Right; sigma 0.6+0.1 vs 0.387.
    CHECK(resolve_f4(F4Strategy{GroupScore::Cardinality}, active) == Direction::Right);
    CHECK(resolve_f4(F4Strategy{GroupScore::SigmaCount}, active) == Direction::Right);
}

TEST_CASE("all suggestions identical resolve to that suggestion") {
    ActiveTransitionSet active;
    active.read = "0";
    MachineDefinition m;
    m.states = {"q0", "q1", "q2", "q3"};
    m.input_alphabet = {"0"};
    m.tape_alphabet = {"0", "1", "B"};
    m.blank = "B";
    m.start_states = {{"q0", 1.0}};
    active.entries = {
        {{"q0", "0", "q1", "0", Direction::Right, 0.2}, 0.6, 1.0},
        {{"q0", "0", "q3", "0", Direction::Left, 0.2}, 0.6, 1.0},
        {{"q0", "0", "q2", "0", Direction::Right, 0.5}, 0.75, 1.0},
    };
    for (auto kind : {GroupScore::MaxWeight, GroupScore::SigmaCount, GroupScore::Cardinality}) {
        CHECK(resolve_f3(F3Strategy{kind}, active, m) == "0");
    }
    // Direction is split 2:1 toward Right.
    CHECK(resolve_f4(F4Strategy{GroupScore::Cardinality}, active) == Direction::Right);
}

TEST_CASE("singleton active set: every strategy agrees") {
    auto m = fixtures::fan_in_fragment();
    ActiveTransitionSet active;
    active.read = "a";
    active.entries = {{{"q5", "a", "q2", "c", Direction::Left, 0.1}, 0.1, 0.5}};
    for (auto kind : {GroupScore::MaxWeight, GroupScore::SigmaCount, GroupScore::Cardinality}) {
        CHECK(resolve_f3(F3Strategy{kind}, active, m) == "c");
        CHECK(resolve_f4(F4Strategy{kind}, active) == Direction::Left);
    }
}

TEST_CASE("empty active set is a precondition error") {
    auto m = fixtures::fan_in_fragment();
    ActiveTransitionSet empty;
    CHECK_THROWS_AS(resolve_f3(F3Strategy{}, empty, m), std::invalid_argument);
    CHECK_THROWS_AS(resolve_f4(F4Strategy{}, empty), std::invalid_argument);
}

TEST_CASE("F3/F4 are invariant under entry permutation") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto m = fixtures::fan_in_fragment();
    for (int round = 0; round < 200; ++round) {
        ActiveTransitionSet active;
        active.read = "a";
        int n = 1 + static_cast<int>(unit(rng) * 5.0);
        for (int i = 0; i < n; ++i) {
            Transition tr;
            tr.source = m.states[static_cast<std::size_t>(unit(rng) * 3.99)];
            tr.read = "a";
            tr.target = "q2";
            tr.write = m.tape_alphabet[static_cast<std::size_t>(unit(rng) * 2.99)];
            double r = unit(rng);
            tr.dir = r < 0.4 ? Direction::Right : r < 0.7 ? Direction::Stay : Direction::Left;
            tr.weight = unit(rng);
            active.entries.push_back({tr, unit(rng), unit(rng)});
        }
        for (auto kind : {GroupScore::MaxWeight, GroupScore::SigmaCount, GroupScore::Cardinality}) {
            auto sym = resolve_f3(F3Strategy{kind}, active, m);
            auto dir = resolve_f4(F4Strategy{kind}, active);
            // The chosen suggestion is present in the set.
            bool sym_present = false, dir_present = false;
            for (const auto& e : active.entries) {
                sym_present |= e.transition.write == sym;
                dir_present |= e.transition.dir == dir;
            }
            CHECK(sym_present);
            CHECK(dir_present);
            auto shuffled = active;
            std::shuffle(shuffled.entries.begin(), shuffled.entries.end(), rng);
            CHECK(resolve_f3(F3Strategy{kind}, shuffled, m) == sym);
            CHECK(resolve_f4(F4Strategy{kind}, shuffled) == dir);
        }
    }
}

TEST_CASE("built-in F1 strategies stay in [0,1] on a 101x101 grid") {
    for (const auto& s : F1Strategy::builtins())
        CHECK(validate_strategy_axioms(s, 101).empty());
}

TEST_CASE("built-in F2 strategies satisfy axioms 3-5") {
    for (const auto& s : F2Strategy::builtins())
        CHECK(validate_strategy_axioms(s, 500).empty());
}

TEST_CASE("broken F1 fixture is caught at the corner") {
    auto report = validate_strategy_axioms(F1Strategy{F1Strategy::Kind::BrokenSum}, 11);
    CHECK_FALSE(report.empty());
    bool corner = false;
    for (const auto& v : report) corner |= v.code == "AXIOM2_ONE" || v.code == "AXIOM1_RANGE";
    CHECK(corner);
}

TEST_CASE("yager with fractional exponent passes the grid") {
    F1Strategy s;
    REQUIRE(F1Strategy::parse("yager:0.5", s));
    CHECK(validate_strategy_axioms(s, 101).empty());
}
