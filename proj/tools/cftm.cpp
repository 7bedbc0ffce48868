#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cftm/baseline.hpp"
#include "cftm/engine.hpp"
#include "cftm/format.hpp"

namespace {

constexpr int kExitAccepted = 0;
constexpr int kExitRejected = 1;
constexpr int kExitUsage = 2;

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

void print_diagnostics(const cftm::ParseResult& parsed, const std::string& path) {
    for (const auto& d : parsed.syntax_errors)
        std::cerr << path << ":" << d.line << ": error: " << d.code << ": " << d.message << "\n";
    for (const auto& d : parsed.violations)
        std::cerr << path << ":" << d.line << ": violation: " << d.code << ": " << d.message
                  << "\n";
}

// Loads and fully validates a machine file; returns false after printing
// diagnostics (exit-code-2 class for run/compare).
bool load_machine(const std::string& path, cftm::ParseResult& parsed) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "cftm: cannot read '" << path << "'\n";
        return false;
    }
    parsed = cftm::parse_machine(text);
    if (!parsed.ok()) {
        print_diagnostics(parsed, path);
        return false;
    }
    return true;
}

struct ConfigOverrides {
    std::string f1, f2, f3, f4, halt;
    long max_steps = 0;

    bool apply(cftm::ResolutionConfig& config) const {
        if (!f1.empty() && (!cftm::F1Strategy::parse(f1, config.f1) ||
                            config.f1.kind == cftm::F1Strategy::Kind::BrokenSum)) {
            std::cerr << "cftm: unknown f1 strategy '" << f1 << "'\n";
            return false;
        }
        if (!f2.empty() && !cftm::F2Strategy::parse(f2, config.f2)) {
            std::cerr << "cftm: unknown f2 strategy '" << f2 << "'\n";
            return false;
        }
        if (!f3.empty() && !cftm::F3Strategy::parse(f3, config.f3)) {
            std::cerr << "cftm: unknown f3 strategy '" << f3 << "'\n";
            return false;
        }
        if (!f4.empty() && !cftm::F4Strategy::parse(f4, config.f4)) {
            std::cerr << "cftm: unknown f4 strategy '" << f4 << "'\n";
            return false;
        }
        if (!halt.empty() && !cftm::parse_halt_mode(halt, config.halt)) {
            std::cerr << "cftm: unknown halt mode '" << halt << "'\n";
            return false;
        }
        if (max_steps > 0) config.max_steps = max_steps;
        return true;
    }
};

int cmd_run(const std::string& path, const std::string& input_text, const ConfigOverrides& ov,
            bool quiet, const std::string& trace_path) {
    cftm::ParseResult parsed;
    if (!load_machine(path, parsed)) return kExitUsage;
    cftm::ResolutionConfig config = parsed.config;
    if (!ov.apply(config)) return kExitUsage;

    std::vector<std::string> input;
    try {
        input = cftm::tokenize_input(*parsed.machine, input_text);
    } catch (const std::invalid_argument& e) {
        std::cerr << "cftm: " << e.what() << "\n";
        return kExitUsage;
    }

    cftm::RunResult result = cftm::run(*parsed.machine, input, config);
    std::string doc = cftm::trace_document(*parsed.machine, input, config, result);
    if (!trace_path.empty()) {
        std::ofstream out(trace_path, std::ios::binary);
        if (!out) {
            std::cerr << "cftm: cannot write '" << trace_path << "'\n";
            return kExitUsage;
        }
        out << doc;
    }
    if (quiet)
        std::cout << cftm::format_degree(result.acceptance_degree) << "\n";
    else
        std::cout << doc;
    return result.accepted ? kExitAccepted : kExitRejected;
}

int cmd_compare(const std::string& path, const std::string& input_text, const ConfigOverrides& ov,
                int depth, long nodes, bool porcelain) {
    cftm::ParseResult parsed;
    if (!load_machine(path, parsed)) return kExitUsage;
    cftm::ResolutionConfig config = parsed.config;
    if (!ov.apply(config)) return kExitUsage;

    std::vector<std::string> input;
    try {
        input = cftm::tokenize_input(*parsed.machine, input_text);
    } catch (const std::invalid_argument& e) {
        std::cerr << "cftm: " << e.what() << "\n";
        return kExitUsage;
    }
    const cftm::MachineDefinition& machine = *parsed.machine;

    cftm::RunResult cr = cftm::run(machine, input, config);

    cftm::F1Strategy tnorm =
        config.f1.stationary() ? config.f1 : cftm::F1Strategy{cftm::F1Strategy::Kind::Min};
    if (depth <= 0) depth = static_cast<int>(10 * input.size() + 10);
    if (nodes <= 0) nodes = 100000;
    cftm::TreeResult br = cftm::evaluate(machine, input, tnorm, depth,
                                         static_cast<std::size_t>(nodes), config.halt);

    bool deterministic = machine.is_deterministic();
    bool verdict_applies = deterministic && config.f1.kind == cftm::F1Strategy::Kind::Min;
    bool match = cr.acceptance_degree == br.truth_degree;

    if (porcelain) {
        std::cout << "machine=" << cftm::machine_hash(machine) << "\n"
                  << "input-length=" << input.size() << "\n"
                  << "cftm-steps=" << cr.steps << "\n"
                  << "cftm-degree=" << cftm::format_degree(cr.acceptance_degree) << "\n"
                  << "cftm-halt=" << cftm::halt_reason_name(cr.reason) << "\n"
                  << "baseline-nodes=" << br.node_count << "\n"
                  << "baseline-degree=" << cftm::format_degree(br.truth_degree) << "\n"
                  << "baseline-budget-hit=" << (br.budget_hit ? "true" : "false") << "\n"
                  << "deterministic=" << (deterministic ? "true" : "false") << "\n";
        if (verdict_applies) std::cout << "verdict=" << (match ? "MATCH" : "MISMATCH") << "\n";
    } else {
        std::cout << "machine             " << cftm::machine_hash(machine) << "\n"
                  << "input length        " << input.size() << "\n"
                  << "cftm steps          " << cr.steps << "\n"
                  << "cftm degree         " << cftm::format_degree(cr.acceptance_degree) << "\n"
                  << "cftm halt           " << cftm::halt_reason_name(cr.reason) << "\n"
                  << "baseline nodes      " << br.node_count << "\n"
                  << "baseline degree     " << cftm::format_degree(br.truth_degree) << "\n"
                  << "baseline budget hit " << (br.budget_hit ? "yes" : "no") << "\n"
                  << "deterministic       " << (deterministic ? "yes" : "no") << "\n";
        if (verdict_applies) std::cout << "verdict             " << (match ? "MATCH" : "MISMATCH") << "\n";
    }
    return kExitAccepted;
}

int cmd_validate(const std::string& path) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "cftm: cannot read '" << path << "'\n";
        return kExitUsage;
    }
    cftm::ParseResult parsed = cftm::parse_machine(text);
    print_diagnostics(parsed, path);
    if (!parsed.syntax_errors.empty()) return kExitUsage;
    if (!parsed.violations.empty()) return kExitRejected;
    std::cout << "ok\n";
    return kExitAccepted;
}

int cmd_axioms(const std::string& name, int samples) {
    std::vector<cftm::Violation> report;
    cftm::F1Strategy f1;
    cftm::F2Strategy f2;
    std::string bare = name.starts_with("f2:") ? name.substr(3) : name;
    bool force_f2 = name.starts_with("f2:");
    if (!force_f2 && cftm::F1Strategy::parse(bare, f1)) {
        report = cftm::validate_strategy_axioms(f1, samples);
    } else if (cftm::F2Strategy::parse(bare, f2)) {
        report = cftm::validate_strategy_axioms(f2, samples);
    } else {
        std::cerr << "cftm: unknown strategy '" << name << "'\n";
        return kExitUsage;
    }
    for (const auto& v : report) std::cout << v.code << ": " << v.message << "\n";
    if (report.empty()) {
        std::cout << "ok: " << name << " satisfies the axioms (" << samples << " samples)\n";
        return kExitAccepted;
    }
    return kExitRejected;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Comprehensive fuzzy Turing machine runner"};
    app.require_subcommand(1);

    std::string file, input, trace_path, strategy;
    ConfigOverrides ov;
    bool quiet = false, porcelain = false;
    int depth = 0, samples = 101;
    long nodes = 0;

    auto add_overrides = [&](CLI::App* cmd) {
        cmd->add_option("--f1", ov.f1, "membership assignment strategy");
        cmd->add_option("--f2", ov.f2, "multi-membership resolution strategy");
        cmd->add_option("--f3", ov.f3, "multi-symbol resolution strategy");
        cmd->add_option("--f4", ov.f4, "multi-direction resolution strategy");
        cmd->add_option("--halt", ov.halt, "halting mode: consume-input or quiescent");
        cmd->add_option("--max-steps", ov.max_steps, "step budget");
    };

    CLI::App* run = app.add_subcommand("run", "run a machine on an input string");
    run->add_option("file", file)->required();
    run->add_option("input", input)->required();
    add_overrides(run);
    run->add_flag("--quiet", quiet, "print only the acceptance degree");
    run->add_option("--trace", trace_path, "also write the trace document to this path");

    CLI::App* compare = app.add_subcommand("compare", "CFTM run vs conventional ID-tree baseline");
    compare->add_option("file", file)->required();
    compare->add_option("input", input)->required();
    add_overrides(compare);
    compare->add_option("--depth", depth, "baseline depth bound (default 10*len+10)");
    compare->add_option("--nodes", nodes, "baseline node budget (default 100000)");
    compare->add_flag("--porcelain", porcelain, "key=value output");

    CLI::App* validate = app.add_subcommand("validate", "check a machine file");
    validate->add_option("file", file)->required();

    CLI::App* axioms = app.add_subcommand("axioms", "check F1/F2 axioms for a strategy");
    axioms->add_option("strategy", strategy, "e.g. mean, yager:0.5, f2:amean")->required();
    axioms->add_option("--samples", samples, "grid points per axis / multiset count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    if (run->parsed()) return cmd_run(file, input, ov, quiet, trace_path);
    if (compare->parsed()) return cmd_compare(file, input, ov, depth, nodes, porcelain);
    if (validate->parsed()) return cmd_validate(file);
    if (axioms->parsed()) return cmd_axioms(strategy, samples);
    return kExitUsage;
}
