#include "cftm/format.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace cftm {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

// Shortest decimal form that parses back to the same double.
std::string shortest_double(double v) {
    char buf[64];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) return buf;
    }
    return buf;
}

// Tracks which source line declared each item so validation violations can
// point back into the file.
struct LineMap {
    std::vector<int> states, input, tape, start, final_, trans;
    int blank = 0;

    int lookup(const Violation& v) const {
        using Item = Violation::Item;
        const std::vector<int>* seq = nullptr;
        switch (v.item) {
            case Item::State: seq = &states; break;
            case Item::InputSymbol: seq = &input; break;
            case Item::TapeSymbol: seq = &tape; break;
            case Item::StartState: seq = &start; break;
            case Item::FinalState: seq = &final_; break;
            case Item::Transition: seq = &trans; break;
            case Item::None: return blank;
        }
        if (v.index >= 0 && v.index < static_cast<int>(seq->size()))
            return (*seq)[static_cast<std::size_t>(v.index)];
        return 0;
    }
};

bool apply_config_entry(const std::string& key, const std::string& value,
                        ResolutionConfig& config, std::string& err) {
    if (key == "f1") {
        F1Strategy s;
        if (!F1Strategy::parse(value, s) || s.kind == F1Strategy::Kind::BrokenSum) {
            err = "unknown f1 strategy '" + value + "'";
            return false;
        }
        config.f1 = s;
        return true;
    }
    if (key == "f2" || key == "accept-f2") {
        F2Strategy s;
        if (!F2Strategy::parse(value, s)) {
            err = "unknown f2 strategy '" + value + "'";
            return false;
        }
        if (key == "f2") config.f2 = s; else config.acceptance_f2 = s;
        return true;
    }
    if (key == "f3") {
        if (!F3Strategy::parse(value, config.f3)) {
            err = "unknown f3 strategy '" + value + "'";
            return false;
        }
        return true;
    }
    if (key == "f4") {
        if (!F4Strategy::parse(value, config.f4)) {
            err = "unknown f4 strategy '" + value + "'";
            return false;
        }
        return true;
    }
    if (key == "halt") {
        if (!parse_halt_mode(value, config.halt)) {
            err = "unknown halt mode '" + value + "'";
            return false;
        }
        return true;
    }
    if (key == "max-steps") {
        try {
            std::size_t pos = 0;
            long n = std::stol(value, &pos);
            if (pos != value.size() || n < 1) throw std::invalid_argument("");
            config.max_steps = n;
            return true;
        } catch (...) {
            err = "max-steps must be a positive integer";
            return false;
        }
    }
    err = "unknown config key '" + key + "'";
    return false;
}

}  // namespace

ParseResult parse_machine(const std::string& text) {
    ParseResult result;
    MachineDefinition m;
    LineMap lines;
    bool blank_seen = false;

    auto syntax = [&](int line, std::string code, std::string msg) {
        result.syntax_errors.push_back({line, std::move(code), std::move(msg)});
    };

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
        line = trim(line);
        if (line.empty()) continue;

        auto colon = line.find(':');
        if (colon == std::string::npos) {
            syntax(lineno, "MALFORMED_LINE", "expected '<directive>: ...'");
            continue;
        }
        std::string directive = trim(line.substr(0, colon));
        std::string rest = trim(line.substr(colon + 1));
        std::vector<std::string> toks = split_ws(rest);

        if (directive == "states") {
            for (auto& t : toks) { m.states.push_back(t); lines.states.push_back(lineno); }
        } else if (directive == "input") {
            for (auto& t : toks) { m.input_alphabet.push_back(t); lines.input.push_back(lineno); }
        } else if (directive == "tape") {
            for (auto& t : toks) { m.tape_alphabet.push_back(t); lines.tape.push_back(lineno); }
        } else if (directive == "blank") {
            if (blank_seen) {
                syntax(lineno, "DUPLICATE_BLANK", "blank already declared");
            } else if (toks.size() != 1) {
                syntax(lineno, "MALFORMED_BLANK", "expected exactly one symbol");
            } else {
                m.blank = toks[0];
                lines.blank = lineno;
                blank_seen = true;
            }
        } else if (directive == "start") {
            for (auto& t : toks) {
                double mv = 1.0;
                std::string q = t;
                if (auto at = t.find('@'); at != std::string::npos) {
                    q = t.substr(0, at);
                    if (!parse_double(t.substr(at + 1), mv)) {
                        syntax(lineno, "MALFORMED_START", "bad mv in '" + t + "'");
                        continue;
                    }
                }
                m.start_states.emplace_back(q, mv);
                lines.start.push_back(lineno);
            }
        } else if (directive == "final") {
            for (auto& t : toks) { m.final_states.push_back(t); lines.final_.push_back(lineno); }
        } else if (directive == "trans") {
            // <src> <read> -> <dst> <write> <L|S|R> @ <weight>
            Transition tr;
            bool ok = toks.size() == 8 && toks[2] == "->" && toks[6] == "@" &&
                      toks[5].size() == 1 && parse_direction(toks[5][0], tr.dir) &&
                      parse_double(toks[7], tr.weight);
            if (!ok) {
                syntax(lineno, "MALFORMED_TRANS",
                       "expected 'trans: <src> <read> -> <dst> <write> <L|S|R> @ <weight>'");
                continue;
            }
            tr.source = toks[0];
            tr.read = toks[1];
            tr.target = toks[3];
            tr.write = toks[4];
            m.transitions.push_back(std::move(tr));
            lines.trans.push_back(lineno);
        } else if (directive == "config") {
            for (auto& t : toks) {
                auto eq = t.find('=');
                if (eq == std::string::npos) {
                    syntax(lineno, "MALFORMED_CONFIG", "expected key=value, got '" + t + "'");
                    continue;
                }
                std::string err;
                if (!apply_config_entry(t.substr(0, eq), t.substr(eq + 1), result.config, err))
                    syntax(lineno, "BAD_CONFIG_VALUE", err);
            }
        } else {
            syntax(lineno, "UNKNOWN_DIRECTIVE", "unknown directive '" + directive + "'");
        }
    }

    for (const auto& v : m.validate())
        result.violations.push_back({lines.lookup(v), v.code, v.message});
    result.machine = std::move(m);
    return result;
}

std::string serialize_machine(const MachineDefinition& m) {
    std::ostringstream out;
    auto list = [&](const char* directive, const std::vector<std::string>& items) {
        out << directive << ":";
        for (const auto& s : items) out << ' ' << s;
        out << '\n';
    };
    list("states", m.states);
    list("input", m.input_alphabet);
    list("tape", m.tape_alphabet);
    out << "blank: " << m.blank << '\n';
    out << "start:";
    for (const auto& [q, mv] : m.start_states) out << ' ' << q << '@' << shortest_double(mv);
    out << '\n';
    list("final", m.final_states);
    for (const auto& tr : m.transitions)
        out << "trans: " << tr.source << ' ' << tr.read << " -> " << tr.target << ' ' << tr.write
            << ' ' << direction_char(tr.dir) << " @ " << shortest_double(tr.weight) << '\n';
    return out.str();
}

std::string serialize(const MachineDefinition& m, const ResolutionConfig& c) {
    std::ostringstream out;
    out << serialize_machine(m);
    out << "config: f1=" << c.f1.name() << " f2=" << c.f2.name() << " f3=" << c.f3.name()
        << " f4=" << c.f4.name() << " halt=" << halt_mode_name(c.halt)
        << " max-steps=" << c.max_steps;
    if (c.acceptance_f2) out << " accept-f2=" << c.acceptance_f2->name();
    out << '\n';
    return out.str();
}

std::string machine_hash(const MachineDefinition& m) {
    std::string canon = serialize_machine(m);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<std::string> tokenize_input(const MachineDefinition& machine,
                                        const std::string& text) {
    std::vector<std::string> syms;
    if (text.find(' ') != std::string::npos || text.find(',') != std::string::npos) {
        std::string cur;
        for (char c : text) {
            if (c == ' ' || c == ',') {
                if (!cur.empty()) syms.push_back(std::move(cur));
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        if (!cur.empty()) syms.push_back(std::move(cur));
    } else {
        for (char c : text) syms.emplace_back(1, c);
    }
    for (const auto& s : syms)
        if (!machine.is_input_symbol(s))
            throw std::invalid_argument("input symbol '" + s + "' not in input alphabet");
    return syms;
}

std::string format_degree(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string trace_document(const MachineDefinition& machine,
                           const std::vector<std::string>& input,
                           const ResolutionConfig& config, const RunResult& result) {
    std::ostringstream out;
    out << "cftm-trace v1\n";
    out << "machine " << machine_hash(machine) << '\n';
    out << "input";
    for (const auto& s : input) out << ' ' << s;
    out << '\n';
    out << "config f1=" << config.f1.name() << " f2=" << config.f2.name()
        << " f3=" << config.f3.name() << " f4=" << config.f4.name()
        << " halt=" << halt_mode_name(config.halt) << " max-steps=" << config.max_steps;
    if (config.acceptance_f2) out << " accept-f2=" << config.acceptance_f2->name();
    out << '\n';

    for (const auto& rec : result.trace) {
        out << "step " << rec.t << " head=" << rec.head << " read=" << rec.read << '\n';
        for (const auto& e : rec.active.entries) {
            const Transition& tr = e.transition;
            out << "act " << tr.source << ' ' << tr.read << " -> " << tr.target << ' ' << tr.write
                << ' ' << direction_char(tr.dir) << " @ " << shortest_double(tr.weight)
                << " : mv=" << format_degree(e.predecessor_mv)
                << " f1=" << format_degree(e.f1_value) << '\n';
        }
        for (const auto& ev : rec.f2_events) {
            out << "f2 " << ev.state << " :";
            for (double c : ev.candidates) out << ' ' << format_degree(c);
            out << " -> " << format_degree(ev.resolved) << '\n';
        }
        out << "write " << rec.written << '\n';
        out << "move " << direction_char(rec.moved) << '\n';
        out << "mv";
        for (double v : rec.mv_after) out << ' ' << format_degree(v);
        out << '\n';
    }

    out << "halt " << halt_reason_name(result.reason) << '\n';
    for (const auto& q : machine.final_states) {
        int idx = machine.state_index(q);
        if (idx < 0) continue;
        double mv = result.final_config.mv[static_cast<std::size_t>(idx)];
        if (mv != 0.0) out << "final " << q << '=' << format_degree(mv) << '\n';
    }
    out << "degree " << format_degree(result.acceptance_degree) << '\n';
    out << "accepted " << (result.accepted ? "true" : "false") << '\n';
    out << "steps " << result.steps << '\n';
    out << "end cftm-trace\n";
    return out.str();
}

}  // namespace cftm
