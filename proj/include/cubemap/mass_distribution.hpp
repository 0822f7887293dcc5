#pragma once

#include "cubemap/diam_tree.hpp"

#include <string>
#include <vector>

namespace cubemap {

/// A mass distribution on a DiamTree: additive across children, and intended
/// to satisfy the per-node bound mass(N) <= diam(N)^s. For explicit trees the
/// masses live in a vector parallel to the node arena; for self-similar rules
/// they are the closed form total * prod(proportions along the address), so
/// evaluation at depth-30 addresses stays O(depth).
class MassDistribution {
public:
    static MassDistribution explicit_masses(const DiamTree& tree, double s,
                                            std::vector<double> node_mass);
    static MassDistribution rule_masses(const DiamTree& tree, double s, double total,
                                        std::vector<double> proportions);

    double exponent() const { return s_; }
    double total() const { return total_; }
    bool is_rule() const { return !proportions_.empty(); }

    double mass_at(const DiamTree& tree, const TreeAddress& addr) const;
    const std::vector<double>& node_masses() const;     // explicit form
    const std::vector<double>& proportions() const;     // rule form

private:
    double s_ = 1.0;
    double total_ = 0.0;
    std::vector<double> node_mass_;
    std::vector<double> proportions_;
};

/// The measure maximizing total mass subject to additivity and the per-node
/// caps mass(N) <= diam(N)^s. Caps are folded bottom-up
/// (cap = min(diam^s, sum of child caps)) and mass is pushed top-down in
/// proportion to child caps.
MassDistribution max_mass(const DiamTree& tree, double s);

struct MassCheck {
    bool ok = false;
    TreeAddress worst_node;   // node with the least slack diam^s - mass
    double slack = 0.0;
    std::string note;
};

/// Re-checks the cap at every node and additivity at every internal node, to
/// absolute tolerance 1e-12. Trees too large to enumerate are certified
/// through the per-depth worst ratio, which is exact for rule measures.
MassCheck verify_frostman(const DiamTree& tree, const MassDistribution& measure, double s);

/// Minimum of sum(diam^s) over all antichains covering the leaves, by full
/// enumeration. Duality oracle for max_mass; rejects trees over 12 nodes.
double min_antichain_mass(const DiamTree& tree, double s);

} // namespace cubemap
