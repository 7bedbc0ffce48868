#include "cftm/machine.hpp"

#include <algorithm>
#include <stdexcept>

namespace cftm {

char direction_char(Direction d) {
    switch (d) {
        case Direction::Left: return 'L';
        case Direction::Stay: return 'S';
        case Direction::Right: return 'R';
    }
    return '?';
}

int direction_offset(Direction d) { return static_cast<int>(d); }

bool parse_direction(char c, Direction& out) {
    switch (c) {
        case 'L': out = Direction::Left; return true;
        case 'S': out = Direction::Stay; return true;
        case 'R': out = Direction::Right; return true;
    }
    return false;
}

namespace {

bool contains(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

bool valid_token(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') return false;
    return true;
}

}  // namespace

int MachineDefinition::state_index(const std::string& id) const {
    auto it = std::find(states.begin(), states.end(), id);
    return it == states.end() ? -1 : static_cast<int>(it - states.begin());
}

int MachineDefinition::tape_symbol_index(const std::string& sym) const {
    auto it = std::find(tape_alphabet.begin(), tape_alphabet.end(), sym);
    return it == tape_alphabet.end() ? -1 : static_cast<int>(it - tape_alphabet.begin());
}

bool MachineDefinition::is_input_symbol(const std::string& sym) const {
    return contains(input_alphabet, sym);
}

bool MachineDefinition::is_final(const std::string& id) const {
    return contains(final_states, id);
}

std::vector<Violation> MachineDefinition::validate() const {
    using Item = Violation::Item;
    std::vector<Violation> out;
    auto add = [&](std::string code, std::string msg, Item item = Item::None, int index = -1) {
        out.push_back({std::move(code), std::move(msg), item, index});
    };

    if (states.empty()) add("NO_STATES", "machine declares no states");
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (!valid_token(states[i]))
            add("BAD_STATE_ID", "state id '" + states[i] + "' is empty or has whitespace",
                Item::State, static_cast<int>(i));
        for (std::size_t j = i + 1; j < states.size(); ++j)
            if (states[i] == states[j])
                add("DUPLICATE_STATE", "state '" + states[i] + "' declared twice", Item::State,
                    static_cast<int>(j));
    }

    for (std::size_t i = 0; i < tape_alphabet.size(); ++i) {
        if (!valid_token(tape_alphabet[i]))
            add("BAD_SYMBOL", "tape symbol '" + tape_alphabet[i] + "' is empty or has whitespace",
                Item::TapeSymbol, static_cast<int>(i));
        for (std::size_t j = i + 1; j < tape_alphabet.size(); ++j)
            if (tape_alphabet[i] == tape_alphabet[j])
                add("DUPLICATE_SYMBOL", "tape symbol '" + tape_alphabet[i] + "' declared twice",
                    Item::TapeSymbol, static_cast<int>(j));
    }

    for (std::size_t i = 0; i < input_alphabet.size(); ++i)
        if (!contains(tape_alphabet, input_alphabet[i]))
            add("INPUT_NOT_IN_TAPE",
                "input symbol '" + input_alphabet[i] + "' missing from tape alphabet",
                Item::InputSymbol, static_cast<int>(i));

    if (blank.empty()) {
        add("NO_BLANK", "blank symbol not declared");
    } else {
        if (!contains(tape_alphabet, blank))
            add("BLANK_NOT_IN_TAPE", "blank '" + blank + "' missing from tape alphabet");
        if (contains(input_alphabet, blank))
            add("BLANK_IN_INPUT", "blank '" + blank + "' must not be an input symbol");
    }

    if (start_states.empty()) add("NO_START", "machine declares no start states");
    for (std::size_t i = 0; i < start_states.size(); ++i) {
        const auto& [q, mv] = start_states[i];
        if (state_index(q) < 0)
            add("UNKNOWN_STATE", "start state '" + q + "' not declared", Item::StartState,
                static_cast<int>(i));
        if (!(mv > 0.0 && mv <= 1.0))
            add("START_MV_RANGE", "initial mv of '" + q + "' must be in (0,1]", Item::StartState,
                static_cast<int>(i));
    }
    for (std::size_t i = 0; i < final_states.size(); ++i)
        if (state_index(final_states[i]) < 0)
            add("UNKNOWN_STATE", "final state '" + final_states[i] + "' not declared",
                Item::FinalState, static_cast<int>(i));

    for (std::size_t i = 0; i < transitions.size(); ++i) {
        const auto& tr = transitions[i];
        int idx = static_cast<int>(i);
        if (state_index(tr.source) < 0)
            add("UNKNOWN_STATE", "transition source '" + tr.source + "' not declared",
                Item::Transition, idx);
        if (state_index(tr.target) < 0)
            add("UNKNOWN_STATE", "transition target '" + tr.target + "' not declared",
                Item::Transition, idx);
        if (tape_symbol_index(tr.read) < 0)
            add("UNKNOWN_SYMBOL", "read symbol '" + tr.read + "' not in tape alphabet",
                Item::Transition, idx);
        if (tape_symbol_index(tr.write) < 0)
            add("UNKNOWN_SYMBOL", "write symbol '" + tr.write + "' not in tape alphabet",
                Item::Transition, idx);
        if (!(tr.weight >= 0.0 && tr.weight <= 1.0))
            add("WEIGHT_RANGE",
                "transition " + tr.source + " " + tr.read + " -> " + tr.target +
                    " has weight outside [0,1]",
                Item::Transition, idx);
        for (std::size_t j = i + 1; j < transitions.size(); ++j)
            if (transitions[i] == transitions[j])
                add("DUPLICATE_TRANSITION",
                    "transition " + tr.source + " " + tr.read + " -> " + tr.target + " " +
                        tr.write + " " + direction_char(tr.dir) + " declared twice",
                    Item::Transition, static_cast<int>(j));
    }

    return out;
}

std::set<std::string> MachineDefinition::successor_set(const std::string& state,
                                                       const std::string& symbol) const {
    if (state_index(state) < 0) throw std::domain_error("unknown state '" + state + "'");
    if (tape_symbol_index(symbol) < 0) throw std::domain_error("unknown symbol '" + symbol + "'");
    std::set<std::string> out;
    for (const auto& tr : transitions)
        if (tr.source == state && tr.read == symbol) out.insert(tr.target);
    return out;
}

std::set<std::string> MachineDefinition::predecessor_set(const std::string& state,
                                                         const std::string& symbol) const {
    if (state_index(state) < 0) throw std::domain_error("unknown state '" + state + "'");
    if (tape_symbol_index(symbol) < 0) throw std::domain_error("unknown symbol '" + symbol + "'");
    std::set<std::string> out;
    for (const auto& tr : transitions)
        if (tr.target == state && tr.read == symbol) out.insert(tr.source);
    return out;
}

bool MachineDefinition::is_deterministic() const {
    for (std::size_t i = 0; i < transitions.size(); ++i)
        for (std::size_t j = i + 1; j < transitions.size(); ++j)
            if (transitions[i].source == transitions[j].source &&
                transitions[i].read == transitions[j].read)
                return false;
    return true;
}

}  // namespace cftm
