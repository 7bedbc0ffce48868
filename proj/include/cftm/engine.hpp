#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cftm/machine.hpp"
#include "cftm/resolution.hpp"

namespace cftm {

enum class HaltMode { ConsumeInput, Quiescent };
enum class HaltReason { NoActiveTransitions, InputConsumed, StepBudget, HeadUnderflow };

// What happens to the mv of a state no active transition targets. Reset is
// the active-state-set semantics; Persist is kept for experimentation.
enum class IdleStatePolicy { Reset, Persist };

const char* halt_mode_name(HaltMode m);
const char* halt_reason_name(HaltReason r);
bool parse_halt_mode(const std::string& name, HaltMode& out);

// The F component of the machine: the chosen strategies plus run limits.
struct ResolutionConfig {
    F1Strategy f1{F1Strategy::Kind::GMean};
    F2Strategy f2{F2Strategy::Kind::GMean};
    F3Strategy f3{GroupScore::MaxWeight};
    F4Strategy f4{GroupScore::MaxWeight};
    std::optional<F2Strategy> acceptance_f2;  // defaults to f2
    HaltMode halt = HaltMode::ConsumeInput;
    long max_steps = 1'000'000;
    IdleStatePolicy idle = IdleStatePolicy::Reset;

    const F2Strategy& acceptance() const { return acceptance_f2 ? *acceptance_f2 : f2; }
};

// Leftmost cell at index 0, unbounded to the right. Cells past the written
// extent read as blank.
struct Tape {
    std::vector<std::string> cells;
    std::size_t head = 0;
    std::string blank;

    const std::string& read() const {
        return head < cells.size() ? cells[head] : blank;
    }
    void write(const std::string& sym) {
        if (head >= cells.size()) cells.resize(head + 1, blank);
        cells[head] = sym;
    }
};

// One CFTM instantaneous description.
struct Configuration {
    Tape tape;
    std::vector<double> mv;  // indexed by state declaration order
    long t = 0;
};

struct F2Event {
    std::string state;
    std::vector<double> candidates;
    double resolved = 0.0;
};

struct TraceRecord {
    long t = 0;                 // step index before the move
    std::size_t head = 0;
    std::string read;
    ActiveTransitionSet active;
    std::vector<F2Event> f2_events;
    std::string written;
    Direction moved = Direction::Right;
    std::vector<double> mv_after;
};

struct RunResult {
    Configuration final_config;
    HaltReason reason = HaltReason::NoActiveTransitions;
    double acceptance_degree = 0.0;
    bool accepted = false;
    long steps = 0;
    std::vector<TraceRecord> trace;
};

// Tape holds the input from cell 0, head at 0, mv from start_states, t = 0.
// Throws std::invalid_argument on a symbol outside the input alphabet.
Configuration initialize(const MachineDefinition& machine,
                         const std::vector<std::string>& input);

ActiveTransitionSet active_transitions(const MachineDefinition& machine,
                                       const Configuration& config,
                                       const F1Strategy& f1);

// One Algorithm-1 step. Empty active set or a Left move at cell 0 report a
// halt reason instead of a record; the underflow step still applies its
// write and mv update before halting.
struct StepOutcome {
    std::optional<TraceRecord> record;   // set when the step completed
    std::optional<HaltReason> halt;      // set on no-active-transitions / head-underflow
};
StepOutcome step(const MachineDefinition& machine, Configuration& config,
                 const ResolutionConfig& resolution);

double acceptance_degree(const MachineDefinition& machine, const Configuration& config,
                         const F2Strategy& f2);

RunResult run(const MachineDefinition& machine, const std::vector<std::string>& input,
              const ResolutionConfig& resolution);

}  // namespace cftm
