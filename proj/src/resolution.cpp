#include "cftm/resolution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <stdexcept>

namespace cftm {

namespace {

void check_unit(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0))
        throw std::domain_error(std::string(what) + " outside [0,1]");
}

}  // namespace

double F1Strategy::eval(double mu, double delta, long t) const {
    check_unit(mu, "mu");
    check_unit(delta, "delta");
    switch (kind) {
        case Kind::Mean: return (mu + delta) / 2.0;
        case Kind::GMean: return std::sqrt(mu * delta);
        case Kind::Min: return std::min(mu, delta);
        case Kind::Max: return std::max(mu, delta);
        case Kind::Product: return mu * delta;
        case Kind::Yager:
            return std::min(1.0, std::pow(std::pow(mu, omega) + std::pow(delta, omega), 1.0 / omega));
        case Kind::Switched:
            return t < switch_time ? std::max(mu, delta) : std::min(mu, delta);
        case Kind::Weight: return delta;
        case Kind::BrokenSum: return mu + delta;  // axiom-violating fixture
    }
    throw std::logic_error("unhandled F1 kind");
}

std::string F1Strategy::name() const {
    switch (kind) {
        case Kind::Mean: return "mean";
        case Kind::GMean: return "gmean";
        case Kind::Min: return "min";
        case Kind::Max: return "max";
        case Kind::Product: return "product";
        case Kind::Yager: {
            char buf[40];
            std::snprintf(buf, sizeof buf, "yager:%g", omega);
            return buf;
        }
        case Kind::Switched: return "switched:" + std::to_string(switch_time);
        case Kind::Weight: return "weight";
        case Kind::BrokenSum: return "broken-sum";
    }
    return "?";
}

bool F1Strategy::parse(const std::string& name, F1Strategy& out) {
    if (name == "mean") { out = {Kind::Mean}; return true; }
    if (name == "gmean") { out = {Kind::GMean}; return true; }
    if (name == "min") { out = {Kind::Min}; return true; }
    if (name == "max") { out = {Kind::Max}; return true; }
    if (name == "product") { out = {Kind::Product}; return true; }
    if (name == "weight") { out = {Kind::Weight}; return true; }
    if (name == "broken-sum") { out = {Kind::BrokenSum}; return true; }
    if (name.starts_with("yager:")) {
        try {
            std::size_t pos = 0;
            double w = std::stod(name.substr(6), &pos);
            if (pos != name.size() - 6 || !(w > 0.0)) return false;
            out = {Kind::Yager, w};
            return true;
        } catch (...) { return false; }
    }
    if (name.starts_with("switched:")) {
        try {
            std::size_t pos = 0;
            long ti = std::stol(name.substr(9), &pos);
            if (pos != name.size() - 9 || ti < 0) return false;
            out = {Kind::Switched, 2.0, ti};
            return true;
        } catch (...) { return false; }
    }
    return false;
}

std::vector<F1Strategy> F1Strategy::builtins() {
    using K = Kind;
    return {{K::Mean}, {K::GMean}, {K::Min}, {K::Max}, {K::Product},
            {K::Yager, 2.0}, {K::Yager, 0.5}, {K::Switched, 2.0, 3}, {K::Weight}};
}

double F2Strategy::resolve(std::span<const double> candidates) const {
    if (candidates.empty()) return 0.0;
    // All-equal multisets must resolve to that exact value (Axiom 5); the
    // short-circuit keeps the means from drifting by an ulp.
    bool all_equal = true;
    for (double v : candidates)
        if (v != candidates.front()) { all_equal = false; break; }
    if (all_equal) return candidates.front();

    switch (kind) {
        case Kind::Max:
            return *std::max_element(candidates.begin(), candidates.end());
        case Kind::AMean: {
            double sum = 0.0;
            for (double v : candidates) sum += v;
            return sum / static_cast<double>(candidates.size());
        }
        case Kind::GMean: {
            double prod = 1.0;
            for (double v : candidates) prod *= v;
            return std::pow(prod, 1.0 / static_cast<double>(candidates.size()));
        }
    }
    throw std::logic_error("unhandled F2 kind");
}

std::string F2Strategy::name() const {
    switch (kind) {
        case Kind::Max: return "max";
        case Kind::AMean: return "amean";
        case Kind::GMean: return "gmean";
    }
    return "?";
}

bool F2Strategy::parse(const std::string& name, F2Strategy& out) {
    if (name == "max") { out = {Kind::Max}; return true; }
    if (name == "amean") { out = {Kind::AMean}; return true; }
    if (name == "gmean") { out = {Kind::GMean}; return true; }
    return false;
}

std::vector<F2Strategy> F2Strategy::builtins() {
    return {{Kind::Max}, {Kind::AMean}, {Kind::GMean}};
}

std::string F3Strategy::name() const {
    switch (kind) {
        case GroupScore::MaxWeight: return "max-weight";
        case GroupScore::SigmaCount: return "sigma-count";
        case GroupScore::Cardinality: return "cardinality";
    }
    return "?";
}

std::string F4Strategy::name() const { return F3Strategy{kind}.name(); }

namespace {

bool parse_group_score(const std::string& name, GroupScore& out) {
    if (name == "max-weight") { out = GroupScore::MaxWeight; return true; }
    if (name == "sigma-count") { out = GroupScore::SigmaCount; return true; }
    if (name == "cardinality") { out = GroupScore::Cardinality; return true; }
    return false;
}

}  // namespace

bool F3Strategy::parse(const std::string& name, F3Strategy& out) {
    return parse_group_score(name, out.kind);
}

bool F4Strategy::parse(const std::string& name, F4Strategy& out) {
    return parse_group_score(name, out.kind);
}

double eval_f1(const F1Strategy& s, double mu, double delta, long t) {
    return s.eval(mu, delta, t);
}

double resolve_f2(const F2Strategy& s, std::span<const double> candidates) {
    return s.resolve(candidates);
}

namespace {

struct GroupStats {
    double max_f1 = 0.0;
    double sigma = 0.0;       // sum of F1 values
    double card = 0.0;        // sum of ceil(F1)
    double max_pred_mv = 0.0;
};

// Groups are keyed by a fixed rank (Gamma declaration order for symbols,
// R < S < L for directions), which makes the choice independent of the
// enumeration order of the active set.
std::map<int, GroupStats> group_entries(const ActiveTransitionSet& active,
                                        bool by_direction,
                                        const MachineDefinition* machine) {
    std::map<int, GroupStats> groups;
    for (const auto& e : active.entries) {
        int rank;
        if (by_direction) {
            switch (e.transition.dir) {
                case Direction::Right: rank = 0; break;
                case Direction::Stay: rank = 1; break;
                default: rank = 2; break;
            }
        } else {
            rank = machine->tape_symbol_index(e.transition.write);
            if (rank < 0) throw std::domain_error("write symbol '" + e.transition.write +
                                                  "' not in tape alphabet");
        }
        auto& g = groups[rank];
        g.max_f1 = std::max(g.max_f1, e.f1_value);
        g.sigma += e.f1_value;
        g.card += std::ceil(e.f1_value);
        g.max_pred_mv = std::max(g.max_pred_mv, e.predecessor_mv);
    }
    return groups;
}

int pick_group(GroupScore kind, const std::map<int, GroupStats>& groups) {
    int best = -1;
    const GroupStats* bs = nullptr;
    for (const auto& [rank, g] : groups) {
        double score = kind == GroupScore::MaxWeight    ? g.max_f1
                       : kind == GroupScore::SigmaCount ? g.sigma
                                                        : g.card;
        if (bs) {
            double best_score = kind == GroupScore::MaxWeight    ? bs->max_f1
                                : kind == GroupScore::SigmaCount ? bs->sigma
                                                                 : bs->card;
            if (score < best_score) continue;
            if (score == best_score) {
                if (g.max_pred_mv < bs->max_pred_mv) continue;
                if (g.max_pred_mv == bs->max_pred_mv) {
                    if (g.sigma < bs->sigma) continue;
                    if (g.sigma == bs->sigma) continue;  // rank order: earlier wins
                }
            }
        }
        best = rank;
        bs = &g;
    }
    return best;
}

}  // namespace

std::string resolve_f3(const F3Strategy& s, const ActiveTransitionSet& active,
                       const MachineDefinition& machine) {
    if (active.empty()) throw std::invalid_argument("resolve_f3 on empty active set");
    int rank = pick_group(s.kind, group_entries(active, false, &machine));
    return machine.tape_alphabet.at(static_cast<std::size_t>(rank));
}

Direction resolve_f4(const F4Strategy& s, const ActiveTransitionSet& active) {
    if (active.empty()) throw std::invalid_argument("resolve_f4 on empty active set");
    int rank = pick_group(s.kind, group_entries(active, true, nullptr));
    return rank == 0 ? Direction::Right : rank == 1 ? Direction::Stay : Direction::Left;
}

std::vector<Violation> validate_strategy_axioms(const F1Strategy& s, int samples) {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    std::vector<Violation> out;
    char buf[128];

    int n = std::max(samples, 2);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double mu = static_cast<double>(i) / (n - 1);
            double delta = static_cast<double>(j) / (n - 1);
            double v = s.eval(mu, delta, 0);
            if (!(v >= 0.0 && v <= 1.0)) {
                std::snprintf(buf, sizeof buf, "F1(%g,%g) = %g outside [0,1]", mu, delta, v);
                out.push_back({"AXIOM1_RANGE", buf});
            }
        }
    }
    if (s.eval(0.0, 0.0, 0) != 0.0) out.push_back({"AXIOM2_ZERO", "F1(0,0) != 0"});
    if (s.eval(1.0, 1.0, 0) != 1.0) out.push_back({"AXIOM2_ONE", "F1(1,1) != 1"});
    // Time-dependent strategies get the same sweep past the switch point.
    if (!s.stationary()) {
        long after = s.switch_time + 1;
        for (int i = 0; i < n; ++i) {
            double mu = static_cast<double>(i) / (n - 1);
            double v = s.eval(mu, 1.0 - mu, after);
            if (!(v >= 0.0 && v <= 1.0)) {
                std::snprintf(buf, sizeof buf, "F1(%g,%g) at t=%ld outside [0,1]", mu, 1.0 - mu, after);
                out.push_back({"AXIOM1_RANGE", buf});
            }
        }
    }
    return out;
}

std::vector<Violation> validate_strategy_axioms(const F2Strategy& s, int samples) {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    std::vector<Violation> out;
    char buf[128];

    if (s.resolve({}) != 0.0) out.push_back({"AXIOM4_EMPTY", "F2(empty) != 0"});

    std::mt19937 rng(0x5eed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> size_dist(1, 8);
    for (int k = 0; k < samples; ++k) {
        std::vector<double> vals(static_cast<std::size_t>(size_dist(rng)));
        for (auto& v : vals) v = unit(rng);
        double r = s.resolve(vals);
        if (!(r >= 0.0 && r <= 1.0)) {
            std::snprintf(buf, sizeof buf, "F2 of %zu values = %g outside [0,1]", vals.size(), r);
            out.push_back({"AXIOM3_RANGE", buf});
        }
        // Axiom 5 on a matching all-equal multiset.
        std::vector<double> equal(vals.size(), vals.front());
        double re = s.resolve(equal);
        if (re != vals.front()) {
            std::snprintf(buf, sizeof buf, "F2 of %zu copies of %.17g = %.17g", equal.size(),
                          vals.front(), re);
            out.push_back({"AXIOM5_EQUAL", buf});
        }
    }
    return out;
}

}  // namespace cftm
