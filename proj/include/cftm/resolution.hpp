#pragma once

#include <span>
#include <string>
#include <vector>

#include "cftm/machine.hpp"

namespace cftm {

// F1: membership assignment. Combines the predecessor's mv with the
// transition weight into the successor's candidate mv. The step index is
// only consulted by the time-switched variant.
struct F1Strategy {
    enum class Kind { Mean, GMean, Min, Max, Product, Yager, Switched, Weight, BrokenSum };

    Kind kind = Kind::GMean;
    double omega = 2.0;      // Yager exponent
    long switch_time = 0;    // Switched: max before, min from switch_time on

    double eval(double mu, double delta, long t) const;
    bool stationary() const { return kind != Kind::Switched; }
    std::string name() const;

    // Accepts mean, gmean, min, max, product, weight, yager:w, switched:t.
    // "broken-sum" is a self-test fixture that violates the axioms on purpose.
    static bool parse(const std::string& name, F1Strategy& out);
    static std::vector<F1Strategy> builtins();
};

// F2: multi-membership resolution. Collapses the candidate mvs of one state
// into a single value. Empty input resolves to 0 for every strategy.
struct F2Strategy {
    enum class Kind { Max, AMean, GMean };

    Kind kind = Kind::GMean;

    double resolve(std::span<const double> candidates) const;
    std::string name() const;

    static bool parse(const std::string& name, F2Strategy& out);
    static std::vector<F2Strategy> builtins();
};

// One active transition together with the F1 value it contributes and the
// mv of its source state (needed for tie-breaking).
struct ActiveEntry {
    Transition transition;
    double f1_value = 0.0;
    double predecessor_mv = 0.0;
};

// Delta_Act at one step: every transition reading `read` whose source has
// nonzero mv.
struct ActiveTransitionSet {
    std::string read;
    std::vector<ActiveEntry> entries;

    bool empty() const { return entries.empty(); }
};

// Group scoring shared by F3 and F4:
//   MaxWeight   - suggestion of the entry with the largest F1 value
//   SigmaCount  - group with the largest sum of F1 values
//   Cardinality - group with the most entries of nonzero F1 (sum of ceil(F1))
enum class GroupScore { MaxWeight, SigmaCount, Cardinality };

struct F3Strategy {
    GroupScore kind = GroupScore::MaxWeight;
    std::string name() const;
    static bool parse(const std::string& name, F3Strategy& out);
};

struct F4Strategy {
    GroupScore kind = GroupScore::MaxWeight;
    std::string name() const;
    static bool parse(const std::string& name, F4Strategy& out);
};

double eval_f1(const F1Strategy& s, double mu, double delta, long t);
double resolve_f2(const F2Strategy& s, std::span<const double> candidates);

// Pick the symbol to write (resp. direction to move). Ties fall through a
// fixed chain: larger predecessor mv, then larger group sigma-count, then
// declaration order in Gamma (symbols) / Right > Stay > Left (directions).
// The result never depends on the enumeration order of `active`.
std::string resolve_f3(const F3Strategy& s, const ActiveTransitionSet& active,
                       const MachineDefinition& machine);
Direction resolve_f4(const F4Strategy& s, const ActiveTransitionSet& active);

// Axiom checks for F1 (bounds + corner identities, on a samples x samples
// grid) and F2 (bounds, empty set, all-equal; random multisets, fixed seed).
std::vector<Violation> validate_strategy_axioms(const F1Strategy& s, int samples);
std::vector<Violation> validate_strategy_axioms(const F2Strategy& s, int samples);

}  // namespace cftm
