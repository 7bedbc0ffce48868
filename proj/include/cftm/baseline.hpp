#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cftm/engine.hpp"
#include "cftm/machine.hpp"
#include "cftm/resolution.hpp"

namespace cftm {

// Conventional ID-tree evaluation: every nondeterministic choice forks a
// full machine snapshot, path degrees compose through a stationary t-norm,
// and the truth degree is the max over accepting leaves. Serves as the
// correctness oracle for deterministic machines and as the cost baseline.

struct IdNode {
    int state = -1;                 // index into machine.states
    std::vector<std::string> tape;  // private snapshot
    std::size_t head = 0;
    double degree = 1.0;
    int depth = 0;
    int parent = -1;                // index into the expansion order, -1 for roots
};

struct TreeResult {
    double truth_degree = 0.0;
    std::size_t accepting_leaves = 0;
    std::size_t node_count = 0;
    bool budget_hit = false;  // depth bound or node budget tripped; degree is a lower bound
};

// One child per transition matching (state, symbol under head), write-then-
// move on a copied tape. A Left move at cell 0 prunes the child. The t-norm
// must be stationary; Switched throws std::invalid_argument.
std::vector<IdNode> expand(const MachineDefinition& machine, const IdNode& node,
                           const F1Strategy& tnorm);

TreeResult evaluate(const MachineDefinition& machine, const std::vector<std::string>& input,
                    const F1Strategy& tnorm, int depth_bound, std::size_t node_budget,
                    HaltMode mode = HaltMode::ConsumeInput);

// Node counts per input, for the cost comparison against the CFTM engine.
std::vector<std::pair<std::size_t, std::size_t>> count_growth(
    const MachineDefinition& machine, const std::vector<std::vector<std::string>>& inputs,
    const F1Strategy& tnorm, int depth_bound, std::size_t node_budget,
    HaltMode mode = HaltMode::ConsumeInput);

}  // namespace cftm
