#include "cftm/engine.hpp"

#include <stdexcept>

namespace cftm {

const char* halt_mode_name(HaltMode m) {
    return m == HaltMode::ConsumeInput ? "consume-input" : "quiescent";
}

const char* halt_reason_name(HaltReason r) {
    switch (r) {
        case HaltReason::NoActiveTransitions: return "no-active-transitions";
        case HaltReason::InputConsumed: return "input-consumed";
        case HaltReason::StepBudget: return "step-budget";
        case HaltReason::HeadUnderflow: return "head-underflow";
    }
    return "?";
}

bool parse_halt_mode(const std::string& name, HaltMode& out) {
    if (name == "consume-input") { out = HaltMode::ConsumeInput; return true; }
    if (name == "quiescent") { out = HaltMode::Quiescent; return true; }
    return false;
}

Configuration initialize(const MachineDefinition& machine,
                         const std::vector<std::string>& input) {
    for (const auto& sym : input)
        if (!machine.is_input_symbol(sym))
            throw std::invalid_argument("input symbol '" + sym + "' not in input alphabet");

    Configuration cfg;
    cfg.tape.cells = input;
    cfg.tape.blank = machine.blank;
    cfg.tape.head = 0;
    cfg.mv.assign(machine.states.size(), 0.0);
    for (const auto& [q, mv] : machine.start_states) {
        int idx = machine.state_index(q);
        if (idx < 0) throw std::invalid_argument("start state '" + q + "' not declared");
        cfg.mv[static_cast<std::size_t>(idx)] = mv;
    }
    cfg.t = 0;
    return cfg;
}

ActiveTransitionSet active_transitions(const MachineDefinition& machine,
                                       const Configuration& config,
                                       const F1Strategy& f1) {
    ActiveTransitionSet active;
    active.read = config.tape.read();
    for (const auto& tr : machine.transitions) {
        if (tr.read != active.read) continue;
        int src = machine.state_index(tr.source);
        if (src < 0) continue;
        double mv = config.mv[static_cast<std::size_t>(src)];
        if (mv == 0.0) continue;
        active.entries.push_back({tr, f1.eval(mv, tr.weight, config.t), mv});
    }
    return active;
}

StepOutcome step(const MachineDefinition& machine, Configuration& config,
                 const ResolutionConfig& resolution) {
    StepOutcome out;
    ActiveTransitionSet active = active_transitions(machine, config, resolution.f1);
    if (active.empty()) {
        out.halt = HaltReason::NoActiveTransitions;
        return out;
    }

    TraceRecord rec;
    rec.t = config.t;
    rec.head = config.tape.head;
    rec.read = active.read;
    rec.active = active;

    // Membership assignment: one candidate per targeting entry, F2 when a
    // state collects more than one.
    std::vector<double> next_mv(machine.states.size(), 0.0);
    if (resolution.idle == IdleStatePolicy::Persist) next_mv = config.mv;
    for (std::size_t qi = 0; qi < machine.states.size(); ++qi) {
        std::vector<double> candidates;
        for (const auto& e : active.entries)
            if (e.transition.target == machine.states[qi]) candidates.push_back(e.f1_value);
        if (candidates.empty()) continue;
        if (candidates.size() == 1) {
            next_mv[qi] = candidates.front();
        } else {
            double resolved = resolution.f2.resolve(candidates);
            rec.f2_events.push_back({machine.states[qi], candidates, resolved});
            next_mv[qi] = resolved;
        }
    }

    std::string written = resolve_f3(resolution.f3, active, machine);
    Direction dir = resolve_f4(resolution.f4, active);

    config.tape.write(written);
    config.mv = next_mv;
    config.t += 1;
    rec.written = written;
    rec.moved = dir;
    rec.mv_after = config.mv;

    if (dir == Direction::Left && config.tape.head == 0) {
        // The write and mv update stand; the head cannot move.
        out.record = std::move(rec);
        out.halt = HaltReason::HeadUnderflow;
        return out;
    }
    config.tape.head = static_cast<std::size_t>(
        static_cast<long long>(config.tape.head) + direction_offset(dir));
    out.record = std::move(rec);
    return out;
}

double acceptance_degree(const MachineDefinition& machine, const Configuration& config,
                         const F2Strategy& f2) {
    std::vector<double> finals;
    for (const auto& q : machine.final_states) {
        int idx = machine.state_index(q);
        if (idx < 0) continue;
        double mv = config.mv[static_cast<std::size_t>(idx)];
        if (mv != 0.0) finals.push_back(mv);
    }
    return f2.resolve(finals);
}

RunResult run(const MachineDefinition& machine, const std::vector<std::string>& input,
              const ResolutionConfig& resolution) {
    if (resolution.max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");

    RunResult result;
    Configuration cfg = initialize(machine, input);
    for (;;) {
        if (resolution.halt == HaltMode::ConsumeInput && cfg.tape.read() == machine.blank) {
            result.reason = HaltReason::InputConsumed;
            break;
        }
        if (result.steps >= resolution.max_steps) {
            result.reason = HaltReason::StepBudget;
            break;
        }
        StepOutcome out = step(machine, cfg, resolution);
        if (out.record) {
            result.trace.push_back(std::move(*out.record));
            result.steps += 1;
        }
        if (out.halt) {
            result.reason = *out.halt;
            break;
        }
    }
    result.acceptance_degree = acceptance_degree(machine, cfg, resolution.acceptance());
    result.accepted = result.acceptance_degree > 0.0;
    result.final_config = std::move(cfg);
    return result;
}

}  // namespace cftm
