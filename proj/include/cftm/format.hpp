#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cftm/engine.hpp"
#include "cftm/machine.hpp"

namespace cftm {

struct Diagnostic {
    int line = 0;  // 1-based; 0 when not tied to a source line
    std::string code;
    std::string message;
};

struct ParseResult {
    std::optional<MachineDefinition> machine;  // set whenever the text was structurally readable
    ResolutionConfig config;
    std::vector<Diagnostic> syntax_errors;  // malformed directives; exit-code-2 class
    std::vector<Diagnostic> violations;     // machine invariant breaches; exit-code-1 class

    bool ok() const { return machine.has_value() && syntax_errors.empty() && violations.empty(); }
};

// Line-oriented machine description:
//   states: q0 q1 ...           input: a b c          tape: a b x B
//   blank: B                    start: q0@1 q1@0.5    final: q3
//   trans: <src> <read> -> <dst> <write> <L|S|R> @ <weight>
//   config: f1=gmean f2=gmean f3=max-weight f4=max-weight halt=consume-input max-steps=N
// '#' starts a comment; directives may appear in any order; state declaration
// order fixes the mv-vector indexing.
ParseResult parse_machine(const std::string& text);

// Canonical form: fixed directive order, one transition per line, shortest
// round-trip number formatting. parse(serialize(parse(doc))) == parse(doc).
std::string serialize_machine(const MachineDefinition& machine);
std::string serialize(const MachineDefinition& machine, const ResolutionConfig& config);

// FNV-1a over the canonical machine serialization, 16 hex digits. Traces
// carry it so a document identifies the machine it was produced from.
std::string machine_hash(const MachineDefinition& machine);

// Splits a CLI input string into tape symbols: on whitespace/commas when
// present, otherwise one symbol per character. Throws std::invalid_argument
// when a token is not an input symbol.
std::vector<std::string> tokenize_input(const MachineDefinition& machine,
                                        const std::string& text);

// Fixed-point with 6 fractional digits (display only; internal values are
// never rounded).
std::string format_degree(double v);

// Record-per-line run log. Deterministic: same machine/input/config gives a
// byte-identical document.
std::string trace_document(const MachineDefinition& machine,
                           const std::vector<std::string>& input,
                           const ResolutionConfig& config, const RunResult& result);

}  // namespace cftm
