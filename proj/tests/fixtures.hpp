// Shared machine builders for the test suites: the worked-example machines
// from the docs/tests plus fixed-seed random machine generators.
#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "cftm/engine.hpp"
#include "cftm/machine.hpp"

namespace fixtures {

// Deterministic 6-state machine over {a,b,c} that rewrites abc to xyz,
// weights 0.1, 0.1, 0.4. Expected mv chain under f1=mean on "abc":
// 1, 0.55, 0.325, 0.3625.
inline cftm::MachineDefinition abc_rewriter() {
    cftm::MachineDefinition m;
    m.states = {"q0", "q1", "q2", "q3", "q4", "q5"};
    m.input_alphabet = {"a", "b", "c"};
    m.tape_alphabet = {"a", "b", "c", "x", "y", "z", "B"};
    m.blank = "B";
    m.start_states = {{"q0", 1.0}};
    m.final_states = {"q3"};
    m.transitions = {
        {"q0", "a", "q1", "x", cftm::Direction::Right, 0.1},
        {"q1", "b", "q2", "y", cftm::Direction::Right, 0.1},
        {"q2", "c", "q3", "z", cftm::Direction::Left, 0.4},
    };
    return m;
}

// Multi-membership fragment: three states feed q2 on 'a' with weights
// 0.4 / 0.3 / 0.1, writing a / b / c and moving R / L / R.
inline cftm::MachineDefinition fan_in_fragment() {
    cftm::MachineDefinition m;
    m.states = {"q0", "q1", "q5", "q2"};
    m.input_alphabet = {"a"};
    m.tape_alphabet = {"a", "b", "c", "B"};
    m.blank = "B";
    m.start_states = {{"q0", 1.0}};
    m.final_states = {"q2"};
    m.transitions = {
        {"q1", "a", "q2", "a", cftm::Direction::Right, 0.4},
        {"q0", "a", "q2", "b", cftm::Direction::Left, 0.3},
        {"q5", "a", "q2", "c", cftm::Direction::Right, 0.1},
    };
    return m;
}

// Configuration with hand-set mvs q1=0.9, q0=0.5, q5=0.1 reading 'a'.
inline cftm::Configuration fan_in_config(const cftm::MachineDefinition& m) {
    cftm::Configuration cfg;
    cfg.tape.cells = {"a"};
    cfg.tape.blank = m.blank;
    cfg.mv.assign(m.states.size(), 0.0);
    cfg.mv[static_cast<std::size_t>(m.state_index("q0"))] = 0.5;
    cfg.mv[static_cast<std::size_t>(m.state_index("q1"))] = 0.9;
    cfg.mv[static_cast<std::size_t>(m.state_index("q5"))] = 0.1;
    return cfg;
}

// Two transitions per read symbol, both back to the (final) single state,
// always moving right: the baseline tree doubles per input cell while the
// engine takes one step per cell.
inline cftm::MachineDefinition branching_machine() {
    cftm::MachineDefinition m;
    m.states = {"q0"};
    m.input_alphabet = {"0"};
    m.tape_alphabet = {"0", "1", "B"};
    m.blank = "B";
    m.start_states = {{"q0", 1.0}};
    m.final_states = {"q0"};
    m.transitions = {
        {"q0", "0", "q0", "0", cftm::Direction::Right, 0.9},
        {"q0", "0", "q0", "1", cftm::Direction::Right, 0.8},
    };
    return m;
}

inline cftm::MachineDefinition random_machine(std::mt19937& rng, bool deterministic) {
    std::uniform_int_distribution<int> nstates_dist(2, 6);
    std::uniform_int_distribution<int> nsyms_dist(1, 3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    cftm::MachineDefinition m;
    int nstates = nstates_dist(rng);
    for (int i = 0; i < nstates; ++i) m.states.push_back("q" + std::to_string(i));
    static const char* syms[] = {"a", "b", "c"};
    int nsyms = nsyms_dist(rng);
    for (int i = 0; i < nsyms; ++i) m.input_alphabet.emplace_back(syms[i]);
    m.tape_alphabet = m.input_alphabet;
    m.tape_alphabet.emplace_back("B");
    m.blank = "B";
    m.start_states = {{"q0", 1.0}};
    for (const auto& q : m.states)
        if (unit(rng) < 0.4) m.final_states.push_back(q);

    std::uniform_int_distribution<int> state_dist(0, nstates - 1);
    std::uniform_int_distribution<int> gamma_dist(0, static_cast<int>(m.tape_alphabet.size()) - 1);
    auto random_dir = [&]() {
        double r = unit(rng);
        return r < 0.6 ? cftm::Direction::Right : r < 0.7 ? cftm::Direction::Stay
                                                          : cftm::Direction::Left;
    };
    for (const auto& q : m.states) {
        for (const auto& sym : m.tape_alphabet) {
            int count = deterministic ? (unit(rng) < 0.8 ? 1 : 0)
                                      : static_cast<int>(unit(rng) * 3.0);  // 0..2
            for (int k = 0; k < count; ++k) {
                cftm::Transition tr;
                tr.source = q;
                tr.read = sym;
                tr.target = m.states[static_cast<std::size_t>(state_dist(rng))];
                tr.write = m.tape_alphabet[static_cast<std::size_t>(gamma_dist(rng))];
                tr.dir = random_dir();
                tr.weight = unit(rng);
                if (std::find(m.transitions.begin(), m.transitions.end(), tr) ==
                    m.transitions.end())
                    m.transitions.push_back(std::move(tr));
            }
        }
    }
    return m;
}

inline std::vector<std::string> random_input(std::mt19937& rng,
                                             const cftm::MachineDefinition& m, int max_len) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<int> sym_dist(
        0, static_cast<int>(m.input_alphabet.size()) - 1);
    std::vector<std::string> input(static_cast<std::size_t>(len_dist(rng)));
    for (auto& s : input) s = m.input_alphabet[static_cast<std::size_t>(sym_dist(rng))];
    return input;
}

}  // namespace fixtures
