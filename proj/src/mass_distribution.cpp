#include "cubemap/mass_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cubemap {

namespace {

constexpr double kTol = 1e-12;

void require_positive_exponent(double s) {
    if (!(s > 0.0) || !std::isfinite(s))
        throw std::invalid_argument("mass exponent s must be positive and finite");
}

} // namespace

MassDistribution MassDistribution::explicit_masses(const DiamTree& tree, double s,
                                                   std::vector<double> node_mass) {
    require_positive_exponent(s);
    if (tree.is_self_similar())
        throw std::invalid_argument("explicit masses on a self-similar tree: shape mismatch");
    if (node_mass.size() != tree.nodes().size())
        throw std::invalid_argument("measure has " + std::to_string(node_mass.size()) +
                                    " node masses for a tree of " +
                                    std::to_string(tree.nodes().size()) + " nodes");
    MassDistribution m;
    m.s_ = s;
    m.total_ = node_mass.empty() ? 0.0 : node_mass[0];
    m.node_mass_ = std::move(node_mass);
    return m;
}

MassDistribution MassDistribution::rule_masses(const DiamTree& tree, double s, double total,
                                               std::vector<double> proportions) {
    require_positive_exponent(s);
    if (!tree.is_self_similar())
        throw std::invalid_argument("rule masses on an explicit tree: shape mismatch");
    if (static_cast<int>(proportions.size()) != tree.rule().branching())
        throw std::invalid_argument("proportion count != branching");
    MassDistribution m;
    m.s_ = s;
    m.total_ = total;
    m.proportions_ = std::move(proportions);
    return m;
}

double MassDistribution::mass_at(const DiamTree& tree, const TreeAddress& addr) const {
    if (is_rule()) {
        if (!tree.is_self_similar())
            throw std::invalid_argument("rule measure queried against an explicit tree");
        tree.diam_at(addr); // address validation
        double m = total_;
        for (int c : addr) m *= proportions_[static_cast<std::size_t>(c)];
        return m;
    }
    if (tree.is_self_similar())
        throw std::invalid_argument("explicit measure queried against a self-similar tree");
    return node_mass_[static_cast<std::size_t>(tree.node_index(addr))];
}

const std::vector<double>& MassDistribution::node_masses() const {
    if (is_rule()) throw std::logic_error("rule measure has no per-node mass vector");
    return node_mass_;
}

const std::vector<double>& MassDistribution::proportions() const {
    if (!is_rule()) throw std::logic_error("explicit measure has no proportions");
    return proportions_;
}

MassDistribution max_mass(const DiamTree& tree, double s) {
    require_positive_exponent(s);

    if (tree.is_self_similar()) {
        const SelfSimilarRule& rule = tree.rule();
        double S = 0.0;
        std::vector<double> rs(rule.ratios.size());
        for (std::size_t i = 0; i < rule.ratios.size(); ++i) {
            rs[i] = std::pow(rule.ratios[i], s);
            S += rs[i];
        }
        // cap(node of diameter D at height t above the frontier) = D^s * K_t,
        // K_0 = 1, K_{t+1} = min(1, S * K_t). Splitting proportional to child
        // caps makes the per-branch fraction r_i^s / S at every level.
        double K = 1.0;
        for (int t = 0; t < rule.depth; ++t) K = std::min(1.0, S * K);
        double total = std::pow(rule.root_diam, s) * K;
        std::vector<double> proportions(rs.size());
        for (std::size_t i = 0; i < rs.size(); ++i) proportions[i] = rs[i] / S;
        return MassDistribution::rule_masses(tree, s, total, std::move(proportions));
    }

    const std::vector<TreeNode>& arena = tree.nodes();
    std::vector<double> cap(arena.size(), 0.0);
    auto fold = [&](auto&& self, int idx) -> double {
        const TreeNode& node = arena[static_cast<std::size_t>(idx)];
        double c = std::pow(node.diam, s);
        if (!node.children.empty()) {
            double child_sum = 0.0;
            for (int ch : node.children) child_sum += self(self, ch);
            c = std::min(c, child_sum);
        }
        cap[static_cast<std::size_t>(idx)] = c;
        return c;
    };
    fold(fold, 0);

    std::vector<double> mass(arena.size(), 0.0);
    mass[0] = cap[0];
    auto push = [&](auto&& self, int idx) -> void {
        const TreeNode& node = arena[static_cast<std::size_t>(idx)];
        if (node.children.empty()) return;
        double child_caps = 0.0;
        for (int ch : node.children) child_caps += cap[static_cast<std::size_t>(ch)];
        for (int ch : node.children) {
            mass[static_cast<std::size_t>(ch)] =
                child_caps > 0.0
                    ? mass[static_cast<std::size_t>(idx)] * cap[static_cast<std::size_t>(ch)] /
                          child_caps
                    : 0.0;
            self(self, ch);
        }
    };
    push(push, 0);
    return MassDistribution::explicit_masses(tree, s, std::move(mass));
}

namespace {

MassCheck verify_explicit(const DiamTree& tree, const MassDistribution& measure, double s) {
    const std::vector<TreeNode>& arena = tree.nodes();
    const std::vector<double>& mass = measure.node_masses();

    MassCheck out;
    out.ok = true;
    out.slack = std::numeric_limits<double>::infinity();
    TreeAddress cur;
    auto walk = [&](auto&& self, int idx) -> void {
        const TreeNode& node = arena[static_cast<std::size_t>(idx)];
        double m = mass[static_cast<std::size_t>(idx)];
        double slack = std::pow(node.diam, s) - m;
        if (slack < out.slack) {
            out.slack = slack;
            out.worst_node = cur;
        }
        if (slack < -kTol) {
            out.ok = false;
            out.note = "cap exceeded";
        }
        if (m < 0.0) {
            out.ok = false;
            out.note = "negative mass";
        }
        if (!node.children.empty()) {
            double child_sum = 0.0;
            for (int ch : node.children) child_sum += mass[static_cast<std::size_t>(ch)];
            if (std::abs(child_sum - m) > kTol) {
                out.ok = false;
                out.note = "additivity fails";
                out.worst_node = cur;
            }
        }
        for (std::size_t c = 0; c < node.children.size(); ++c) {
            cur.push_back(static_cast<int>(c));
            self(self, node.children[c]);
            cur.pop_back();
        }
    };
    walk(walk, 0);
    return out;
}

MassCheck verify_rule(const DiamTree& tree, const MassDistribution& measure, double s) {
    const SelfSimilarRule& rule = tree.rule();
    const std::vector<double>& p = measure.proportions();

    MassCheck out;
    out.ok = true;
    out.slack = std::numeric_limits<double>::infinity();

    double psum = 0.0;
    for (double v : p) {
        psum += v;
        if (v < 0.0) {
            out.ok = false;
            out.note = "negative proportion";
        }
    }
    if (measure.total() > 0.0 && std::abs(psum - 1.0) > kTol) {
        out.ok = false;
        out.note = "additivity fails (proportions sum to " + std::to_string(psum) + ")";
        return out;
    }

    // At depth j every factor of mass/diam^s is chosen independently per
    // level, so the worst node follows the per-branch argmax of p_i / r_i^s.
    std::size_t worst_branch = 0;
    double worst_factor = -1.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        double f = p[i] / std::pow(rule.ratios[i], s);
        if (f > worst_factor) {
            worst_factor = f;
            worst_branch = i;
        }
    }
    double mass = measure.total();
    double diam = rule.root_diam;
    TreeAddress cur;
    for (int depth = 0; depth <= rule.depth; ++depth) {
        double slack = std::pow(diam, s) - mass;
        if (slack < out.slack) {
            out.slack = slack;
            out.worst_node = cur;
        }
        if (slack < -kTol) {
            out.ok = false;
            out.note = "cap exceeded";
        }
        mass *= p[worst_branch];
        diam *= rule.ratios[worst_branch];
        cur.push_back(static_cast<int>(worst_branch));
    }
    return out;
}

} // namespace

MassCheck verify_frostman(const DiamTree& tree, const MassDistribution& measure, double s) {
    if (measure.exponent() != s)
        throw std::invalid_argument("verification exponent differs from the measure's");
    if (tree.is_self_similar() != measure.is_rule())
        throw std::invalid_argument("measure/tree shape mismatch");
    if (tree.is_self_similar()) return verify_rule(tree, measure, s);
    return verify_explicit(tree, measure, s);
}

namespace {

// Every antichain cost of the subtree at idx: either the node itself or any
// combination of child cuts. Full enumeration, deliberately free of the
// min() folding that max_mass uses.
std::vector<double> cut_costs(const std::vector<TreeNode>& arena, int idx, double s) {
    const TreeNode& node = arena[static_cast<std::size_t>(idx)];
    std::vector<double> costs{std::pow(node.diam, s)};
    if (node.children.empty()) return costs;
    std::vector<double> combos{0.0};
    for (int ch : node.children) {
        std::vector<double> child = cut_costs(arena, ch, s);
        std::vector<double> next;
        next.reserve(combos.size() * child.size());
        for (double a : combos)
            for (double b : child) next.push_back(a + b);
        combos = std::move(next);
    }
    costs.insert(costs.end(), combos.begin(), combos.end());
    return costs;
}

} // namespace

double min_antichain_mass(const DiamTree& tree, double s) {
    require_positive_exponent(s);
    if (tree.node_count_capped(12) > 12)
        throw std::invalid_argument("antichain oracle is capped at 12 nodes");
    DiamTree expanded = tree.materialized(12);
    std::vector<double> costs = cut_costs(expanded.nodes(), 0, s);
    return *std::min_element(costs.begin(), costs.end());
}

} // namespace cubemap
