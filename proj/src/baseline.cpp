#include "cftm/baseline.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace cftm {

namespace {

const std::string& cell_at(const MachineDefinition& machine, const IdNode& node) {
    return node.head < node.tape.size() ? node.tape[node.head] : machine.blank;
}

}  // namespace

std::vector<IdNode> expand(const MachineDefinition& machine, const IdNode& node,
                           const F1Strategy& tnorm) {
    if (!tnorm.stationary())
        throw std::invalid_argument("baseline t-norm must be stationary");

    const std::string& symbol = cell_at(machine, node);
    const std::string& state = machine.states.at(static_cast<std::size_t>(node.state));

    std::vector<IdNode> children;
    for (const auto& tr : machine.transitions) {
        if (tr.source != state || tr.read != symbol) continue;
        if (tr.dir == Direction::Left && node.head == 0) continue;  // pruned

        IdNode child;
        child.state = machine.state_index(tr.target);
        child.tape = node.tape;
        if (node.head >= child.tape.size()) child.tape.resize(node.head + 1, machine.blank);
        child.tape[node.head] = tr.write;
        child.head = static_cast<std::size_t>(
            static_cast<long long>(node.head) + direction_offset(tr.dir));
        child.degree = tnorm.eval(node.degree, tr.weight, 0);
        child.depth = node.depth + 1;
        children.push_back(std::move(child));
    }
    return children;
}

TreeResult evaluate(const MachineDefinition& machine, const std::vector<std::string>& input,
                    const F1Strategy& tnorm, int depth_bound, std::size_t node_budget,
                    HaltMode mode) {
    if (depth_bound < 1) throw std::invalid_argument("depth bound must be >= 1");
    if (node_budget < 1) throw std::invalid_argument("node budget must be >= 1");

    TreeResult result;
    std::deque<IdNode> frontier;
    for (const auto& [q, mv] : machine.start_states) {
        IdNode root;
        root.state = machine.state_index(q);
        root.tape = input;
        root.degree = mv;
        frontier.push_back(std::move(root));
        result.node_count += 1;
    }

    auto accept_leaf = [&](const IdNode& node) {
        if (!machine.is_final(machine.states.at(static_cast<std::size_t>(node.state)))) return;
        result.accepting_leaves += 1;
        result.truth_degree = std::max(result.truth_degree, node.degree);
    };

    while (!frontier.empty()) {
        IdNode node = std::move(frontier.front());
        frontier.pop_front();

        if (mode == HaltMode::ConsumeInput && cell_at(machine, node) == machine.blank) {
            accept_leaf(node);
            continue;
        }
        if (node.depth >= depth_bound) {
            result.budget_hit = true;
            continue;
        }
        std::vector<IdNode> children = expand(machine, node, tnorm);
        if (children.empty()) {
            accept_leaf(node);
            continue;
        }
        for (auto& child : children) {
            if (result.node_count >= node_budget) {
                result.budget_hit = true;
                return result;
            }
            result.node_count += 1;
            frontier.push_back(std::move(child));
        }
    }
    return result;
}

std::vector<std::pair<std::size_t, std::size_t>> count_growth(
    const MachineDefinition& machine, const std::vector<std::vector<std::string>>& inputs,
    const F1Strategy& tnorm, int depth_bound, std::size_t node_budget, HaltMode mode) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& input : inputs) {
        TreeResult r = evaluate(machine, input, tnorm, depth_bound, node_budget, mode);
        out.emplace_back(input.size(), r.node_count);
    }
    return out;
}

}  // namespace cftm
