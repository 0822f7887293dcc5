#pragma once

#include "cubemap/metric_space.hpp"
#include "cubemap/monotone.hpp"

#include <optional>
#include <vector>

namespace cubemap {

/// Sequence of child indices from the root; the coding of a point.
using TreeAddress = std::vector<int>;

/// Uniformly branching tree given by a rule instead of materialized nodes:
/// the node at address w has diameter root_diam * prod(ratios[w_i]), and the
/// expansion stops at `depth`, leaving positive-diameter frontier leaves.
struct SelfSimilarRule {
    std::vector<double> ratios; // one contraction per branch, each in (0,1)
    double root_diam = 1.0;
    int depth = 1;

    int branching() const { return static_cast<int>(ratios.size()); }
    bool uniform() const;
};

struct TreeNode {
    double diam = 0.0;
    int point = -1;             // original point index for partition-tree leaves
    std::vector<int> children;  // arena indices
};

/// Diameter-labeled tree coding a compact ultrametric space. Either an
/// explicit node arena (root at index 0) or a self-similar rule; rule trees
/// are never materialized, every query walks an address in O(depth).
class DiamTree {
public:
    static DiamTree from_nodes(std::vector<TreeNode> arena);
    static DiamTree self_similar(SelfSimilarRule rule);
    static DiamTree uniform(int branching, double ratio, double root_diam, int depth);
    static DiamTree single_leaf(double diam = 0.0);

    bool is_self_similar() const { return rule_.has_value(); }
    const SelfSimilarRule& rule() const;
    const std::vector<TreeNode>& nodes() const;

    double root_diam() const;
    int depth_horizon() const;            // rule depth / deepest leaf

    std::size_t child_count(const TreeAddress& addr) const;
    double diam_at(const TreeAddress& addr) const;
    bool is_leaf(const TreeAddress& addr) const;
    /// Original point index at a leaf address, or -1 for frontier leaves.
    int point_at(const TreeAddress& addr) const;

    /// Diameter of the node at the longest common prefix; 0 iff identical.
    double distance(const TreeAddress& a, const TreeAddress& b) const;

    /// All leaf addresses in lexicographic order (explicit trees).
    std::vector<TreeAddress> leaf_addresses() const;
    /// Nodes at depth d plus any leaves above it, lexicographic; the cut the
    /// truncation semantics calls "precision d". Throws if more than max_count.
    std::vector<TreeAddress> antichain_at_depth(int d, std::size_t max_count) const;

    std::size_t node_count_capped(std::size_t cap) const;

    /// Explicit copy; expands a self-similar rule into a node arena. Throws
    /// when the expansion would exceed max_nodes.
    DiamTree materialized(std::size_t max_nodes) const;

private:
    std::vector<TreeNode> nodes_;
    std::optional<SelfSimilarRule> rule_;

    int node_index(const TreeAddress& addr) const;
    friend class MassDistribution;
};

struct PartitionResult {
    DiamTree tree;
    std::vector<TreeAddress> address_of_point;
};

/// Partition tree of a finite ultrametric space: children of a node of
/// diameter D are the equivalence classes of d(x,y) < D, ordered by
/// decreasing diameter (ties: smallest contained point index). Rejects
/// non-ultrametric inputs citing a witness triple.
PartitionResult build_partition_tree(const FiniteMetricSpace& space);

/// Leaf point indices in lexicographic address order.
std::vector<int> lex_leaf_order(const DiamTree& tree);

/// The lexicographic order pulled back to the original space, with its
/// monotonicity constant computed honestly from the distance matrix.
OrderAssignment lex_order(const FiniteMetricSpace& space, const PartitionResult& partition);

/// Metric space over the leaves of an explicit tree (pairwise tree distance).
FiniteMetricSpace leaf_metric(const DiamTree& tree);

} // namespace cubemap
