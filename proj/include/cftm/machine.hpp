#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cftm {

// Head movement. Integer encoding is part of the file format contract.
enum class Direction : int { Left = -1, Stay = 0, Right = 1 };

char direction_char(Direction d);          // 'L', 'S', 'R'
int direction_offset(Direction d);         // -1, 0, +1
bool parse_direction(char c, Direction& out);

// Weighted 5-tuple transition. Symbols and state ids are plain tokens;
// resolution against the declared alphabets happens in validate().
struct Transition {
    std::string source;
    std::string read;
    std::string target;
    std::string write;
    Direction dir = Direction::Right;
    double weight = 0.0;

    bool operator==(const Transition& o) const = default;
};

struct Violation {
    std::string code;     // stable machine-readable id, e.g. WEIGHT_RANGE
    std::string message;
    // Which declaration the violation points at, so file-level tooling can
    // attach a source line. Index is into the corresponding sequence.
    enum class Item { None, State, InputSymbol, TapeSymbol, Transition, StartState, FinalState };
    Item item = Item::None;
    int index = -1;
};

// Static machine description. Immutable by convention after construction:
// every member function is const and the engine never mutates it, so one
// instance can back any number of concurrent runs.
struct MachineDefinition {
    // Declaration order of `states` fixes the mv-vector indexing everywhere.
    std::vector<std::string> states;
    std::vector<std::string> input_alphabet;  // I
    std::vector<std::string> tape_alphabet;   // Gamma, declaration order used for tie-breaks
    std::string blank;                        // B, member of Gamma - I
    std::vector<Transition> transitions;
    std::vector<std::pair<std::string, double>> start_states;  // (state, initial mv]
    std::vector<std::string> final_states;

    bool operator==(const MachineDefinition&) const = default;

    // Returns every invariant violation; empty report means the machine is valid.
    std::vector<Violation> validate() const;

    int state_index(const std::string& id) const;        // -1 when unknown
    int tape_symbol_index(const std::string& sym) const; // -1 when unknown
    bool is_input_symbol(const std::string& sym) const;
    bool is_final(const std::string& id) const;

    // Targets of transitions (state, symbol, *, *, *). Throws std::domain_error
    // on an undeclared state or symbol.
    std::set<std::string> successor_set(const std::string& state,
                                        const std::string& symbol) const;
    // Sources of transitions (*, symbol, state, *, *).
    std::set<std::string> predecessor_set(const std::string& state,
                                          const std::string& symbol) const;

    // At most one transition per (state, read symbol).
    bool is_deterministic() const;
};

}  // namespace cftm
