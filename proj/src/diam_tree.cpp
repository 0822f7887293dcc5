#include "cubemap/diam_tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cubemap {

namespace {

[[noreturn]] void bad_address(const TreeAddress& addr, std::size_t at, const char* why) {
    std::string s = "address (";
    for (std::size_t i = 0; i < addr.size(); ++i)
        s += (i ? "," : "") + std::to_string(addr[i]);
    s += ") invalid at position " + std::to_string(at) + ": " + why;
    throw std::invalid_argument(s);
}

} // namespace

bool SelfSimilarRule::uniform() const {
    return std::all_of(ratios.begin(), ratios.end(),
                       [&](double r) { return r == ratios.front(); });
}

DiamTree DiamTree::from_nodes(std::vector<TreeNode> arena) {
    if (arena.empty()) throw std::invalid_argument("tree arena is empty");
    std::vector<int> parent(arena.size(), -1);
    for (std::size_t i = 0; i < arena.size(); ++i) {
        const TreeNode& node = arena[i];
        if (!(node.diam >= 0.0) || !std::isfinite(node.diam))
            throw std::invalid_argument("node diameter must be finite and >= 0");
        if (node.children.size() == 1)
            throw std::invalid_argument("internal node with a single child at arena index " +
                                        std::to_string(i));
        for (int c : node.children) {
            if (c <= 0 || static_cast<std::size_t>(c) >= arena.size() ||
                parent[static_cast<std::size_t>(c)] != -1)
                throw std::invalid_argument("arena is not a tree (bad child index " +
                                            std::to_string(c) + ")");
            parent[static_cast<std::size_t>(c)] = static_cast<int>(i);
            if (!(arena[static_cast<std::size_t>(c)].diam < node.diam))
                throw std::invalid_argument("child diameter not strictly below parent at node " +
                                            std::to_string(i));
        }
    }
    std::vector<int> stack{0};
    std::size_t reached = 0;
    while (!stack.empty()) {
        int idx = stack.back();
        stack.pop_back();
        ++reached;
        for (int c : arena[static_cast<std::size_t>(idx)].children) stack.push_back(c);
    }
    if (reached != arena.size())
        throw std::invalid_argument("arena has nodes unreachable from the root");
    DiamTree t;
    t.nodes_ = std::move(arena);
    return t;
}

DiamTree DiamTree::self_similar(SelfSimilarRule rule) {
    if (rule.branching() < 2)
        throw std::invalid_argument("self-similar rule needs branching >= 2");
    for (double r : rule.ratios)
        if (!(r > 0.0) || !(r < 1.0))
            throw std::invalid_argument("self-similar ratios must lie in (0, 1)");
    if (!(rule.root_diam > 0.0) || !std::isfinite(rule.root_diam))
        throw std::invalid_argument("self-similar root diameter must be positive");
    if (rule.depth < 1) throw std::invalid_argument("self-similar depth horizon must be >= 1");
    DiamTree t;
    t.rule_ = std::move(rule);
    return t;
}

DiamTree DiamTree::uniform(int branching, double ratio, double root_diam, int depth) {
    SelfSimilarRule rule;
    rule.ratios.assign(static_cast<std::size_t>(branching), ratio);
    rule.root_diam = root_diam;
    rule.depth = depth;
    return self_similar(std::move(rule));
}

DiamTree DiamTree::single_leaf(double diam) {
    TreeNode leaf;
    leaf.diam = diam;
    std::vector<TreeNode> arena{leaf};
    return from_nodes(std::move(arena));
}

const SelfSimilarRule& DiamTree::rule() const {
    if (!rule_) throw std::logic_error("tree is explicit, no self-similar rule");
    return *rule_;
}

const std::vector<TreeNode>& DiamTree::nodes() const {
    if (rule_) throw std::logic_error("tree is self-similar, no explicit arena");
    return nodes_;
}

double DiamTree::root_diam() const { return rule_ ? rule_->root_diam : nodes_[0].diam; }

int DiamTree::depth_horizon() const {
    if (rule_) return rule_->depth;
    int deepest = 0;
    // Arena is in preorder-compatible layout only by construction of the
    // builders, so walk addresses properly.
    std::vector<std::pair<int, int>> stack{{0, 0}};
    while (!stack.empty()) {
        auto [idx, depth] = stack.back();
        stack.pop_back();
        deepest = std::max(deepest, depth);
        for (int c : nodes_[static_cast<std::size_t>(idx)].children)
            stack.push_back({c, depth + 1});
    }
    return deepest;
}

int DiamTree::node_index(const TreeAddress& addr) const {
    int idx = 0;
    for (std::size_t i = 0; i < addr.size(); ++i) {
        const TreeNode& node = nodes_[static_cast<std::size_t>(idx)];
        if (addr[i] < 0 || static_cast<std::size_t>(addr[i]) >= node.children.size())
            bad_address(addr, i, "child index out of range");
        idx = node.children[static_cast<std::size_t>(addr[i])];
    }
    return idx;
}

std::size_t DiamTree::child_count(const TreeAddress& addr) const {
    if (rule_) {
        if (static_cast<int>(addr.size()) > rule_->depth)
            bad_address(addr, addr.size(), "below the expansion horizon");
        for (std::size_t i = 0; i < addr.size(); ++i)
            if (addr[i] < 0 || addr[i] >= rule_->branching())
                bad_address(addr, i, "child index out of range");
        return static_cast<int>(addr.size()) == rule_->depth
                   ? 0u
                   : static_cast<std::size_t>(rule_->branching());
    }
    return nodes_[static_cast<std::size_t>(node_index(addr))].children.size();
}

double DiamTree::diam_at(const TreeAddress& addr) const {
    if (rule_) {
        if (static_cast<int>(addr.size()) > rule_->depth)
            bad_address(addr, addr.size(), "below the expansion horizon");
        double d = rule_->root_diam;
        for (std::size_t i = 0; i < addr.size(); ++i) {
            if (addr[i] < 0 || addr[i] >= rule_->branching())
                bad_address(addr, i, "child index out of range");
            d *= rule_->ratios[static_cast<std::size_t>(addr[i])];
        }
        return d;
    }
    return nodes_[static_cast<std::size_t>(node_index(addr))].diam;
}

bool DiamTree::is_leaf(const TreeAddress& addr) const { return child_count(addr) == 0; }

int DiamTree::point_at(const TreeAddress& addr) const {
    if (rule_) {
        child_count(addr); // range validation
        return -1;
    }
    return nodes_[static_cast<std::size_t>(node_index(addr))].point;
}

double DiamTree::distance(const TreeAddress& a, const TreeAddress& b) const {
    child_count(a); // validate both addresses up front
    child_count(b);
    std::size_t shared = std::min(a.size(), b.size());
    std::size_t split = 0;
    while (split < shared && a[split] == b[split]) ++split;
    if (split == a.size() && split == b.size()) return 0.0;
    TreeAddress prefix(a.begin(), a.begin() + static_cast<long>(split));
    // If one address is a proper prefix of the other the common-prefix node is
    // that address itself; its diameter is the stated distance.
    return diam_at(prefix);
}

std::vector<TreeAddress> DiamTree::leaf_addresses() const {
    if (rule_) return antichain_at_depth(rule_->depth, std::size_t(1) << 20);
    std::vector<TreeAddress> out;
    TreeAddress cur;
    auto walk = [&](auto&& self, int idx) -> void {
        const TreeNode& node = nodes_[static_cast<std::size_t>(idx)];
        if (node.children.empty()) {
            out.push_back(cur);
            return;
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

std::vector<TreeAddress> DiamTree::antichain_at_depth(int d, std::size_t max_count) const {
    if (d < 0) throw std::invalid_argument("antichain depth must be >= 0");
    std::vector<TreeAddress> out;
    if (rule_) {
        int depth = std::min(d, rule_->depth);
        std::size_t b = static_cast<std::size_t>(rule_->branching());
        double approx = std::pow(static_cast<double>(b), depth);
        if (approx > static_cast<double>(max_count))
            throw std::invalid_argument("antichain of ~" + std::to_string(approx) +
                                        " nodes exceeds the enumeration budget");
        TreeAddress cur(static_cast<std::size_t>(depth), 0);
        out.push_back(cur);
        while (true) {
            int i = depth - 1;
            while (i >= 0 && cur[static_cast<std::size_t>(i)] == static_cast<int>(b) - 1) {
                cur[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++cur[static_cast<std::size_t>(i)];
            out.push_back(cur);
        }
        return out;
    }
    TreeAddress cur;
    auto walk = [&](auto&& self, int idx, int depth) -> void {
        const TreeNode& node = nodes_[static_cast<std::size_t>(idx)];
        if (depth == d || node.children.empty()) {
            if (out.size() >= max_count)
                throw std::invalid_argument("antichain exceeds the enumeration budget");
            out.push_back(cur);
            return;
        }
        for (std::size_t c = 0; c < node.children.size(); ++c) {
            cur.push_back(static_cast<int>(c));
            self(self, node.children[c], depth + 1);
            cur.pop_back();
        }
    };
    walk(walk, 0, 0);
    return out;
}

DiamTree DiamTree::materialized(std::size_t max_nodes) const {
    if (!rule_) return *this;
    if (node_count_capped(max_nodes) > max_nodes)
        throw std::invalid_argument("self-similar expansion exceeds " +
                                    std::to_string(max_nodes) + " nodes");
    std::vector<TreeNode> arena;
    auto expand = [&](auto&& self, double diam, int depth) -> int {
        int idx = static_cast<int>(arena.size());
        arena.emplace_back();
        arena[static_cast<std::size_t>(idx)].diam = diam;
        if (depth == rule_->depth) return idx;
        for (double r : rule_->ratios) {
            int child = self(self, diam * r, depth + 1);
            arena[static_cast<std::size_t>(idx)].children.push_back(child);
        }
        return idx;
    };
    expand(expand, rule_->root_diam, 0);
    return from_nodes(std::move(arena));
}

std::size_t DiamTree::node_count_capped(std::size_t cap) const {
    if (!rule_) return std::min(nodes_.size(), cap + 1);
    double count = 1.0, level = 1.0;
    for (int d = 1; d <= rule_->depth; ++d) {
        level *= rule_->branching();
        count += level;
        if (count > static_cast<double>(cap)) return cap + 1;
    }
    return static_cast<std::size_t>(count);
}

// ---------------------------------------------------------------------------
// Partition tree of a finite ultrametric space
// ---------------------------------------------------------------------------

namespace {

struct PartitionBuilder {
    const FiniteMetricSpace& space;
    std::vector<TreeNode> arena;
    std::vector<TreeAddress> address_of_point;
    TreeAddress cur;

    explicit PartitionBuilder(const FiniteMetricSpace& s)
        : space(s), address_of_point(s.size()) {}

    double diameter(const std::vector<int>& pts) const {
        double d = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                d = std::max(d, space.dist(pts[i], pts[j]));
        return d;
    }

    int build(const std::vector<int>& pts) {
        int idx = static_cast<int>(arena.size());
        arena.emplace_back();
        if (pts.size() == 1) {
            arena[static_cast<std::size_t>(idx)].point = pts[0];
            address_of_point[static_cast<std::size_t>(pts[0])] = cur;
            return idx;
        }
        double D = diameter(pts);
        arena[static_cast<std::size_t>(idx)].diam = D;

        // d(x,y) < D is an equivalence relation on an ultrametric space;
        // classes via single-link closure (exact comparisons on input values).
        std::vector<int> cls(pts.size());
        std::iota(cls.begin(), cls.end(), 0);
        auto root_of = [&](int a) {
            while (cls[static_cast<std::size_t>(a)] != a) a = cls[static_cast<std::size_t>(a)];
            return a;
        };
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                if (space.dist(pts[i], pts[j]) < D) {
                    int ri = root_of(static_cast<int>(i)), rj = root_of(static_cast<int>(j));
                    if (ri != rj) cls[static_cast<std::size_t>(std::max(ri, rj))] = std::min(ri, rj);
                }

        std::vector<std::vector<int>> groups;
        std::vector<int> group_of(pts.size(), -1);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            int r = root_of(static_cast<int>(i));
            if (group_of[static_cast<std::size_t>(r)] == -1) {
                group_of[static_cast<std::size_t>(r)] = static_cast<int>(groups.size());
                groups.emplace_back();
            }
            groups[static_cast<std::size_t>(group_of[static_cast<std::size_t>(r)])].push_back(
                pts[i]);
        }

        // Canonical child ordering: decreasing diameter, ties by smallest
        // contained original point index.
        std::vector<std::pair<double, int>> keyed(groups.size());
        for (std::size_t g = 0; g < groups.size(); ++g)
            keyed[g] = {diameter(groups[g]), *std::min_element(groups[g].begin(), groups[g].end())};
        std::vector<std::size_t> perm(groups.size());
        std::iota(perm.begin(), perm.end(), 0u);
        std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
            if (keyed[x].first != keyed[y].first) return keyed[x].first > keyed[y].first;
            return keyed[x].second < keyed[y].second;
        });

        for (std::size_t c = 0; c < perm.size(); ++c) {
            cur.push_back(static_cast<int>(c));
            int child = build(groups[perm[c]]);
            arena[static_cast<std::size_t>(idx)].children.push_back(child);
            cur.pop_back();
        }
        return idx;
    }
};

} // namespace

PartitionResult build_partition_tree(const FiniteMetricSpace& space) {
    if (space.size() == 0) throw std::invalid_argument("empty space has no partition tree");
    MetricCheck check = validate_metric(space);
    if (!check.is_ultrametric) {
        std::string msg = "space is not ultrametric";
        if (check.witness) {
            const auto& w = *check.witness;
            msg += " (witness triple " + std::to_string(w[0]) + "," + std::to_string(w[1]) +
                   "," + std::to_string(w[2]) + ": " + check.note + ")";
        }
        throw std::invalid_argument(msg);
    }

    PartitionBuilder builder(space);
    std::vector<int> all(space.size());
    std::iota(all.begin(), all.end(), 0);
    builder.build(all);

    PartitionResult out{DiamTree::from_nodes(std::move(builder.arena)),
                        std::move(builder.address_of_point)};
    return out;
}

std::vector<int> lex_leaf_order(const DiamTree& tree) {
    std::vector<int> order;
    int ordinal = 0;
    for (const TreeAddress& addr : tree.leaf_addresses()) {
        int p = tree.point_at(addr);
        order.push_back(p >= 0 ? p : ordinal);
        ++ordinal;
    }
    return order;
}

OrderAssignment lex_order(const FiniteMetricSpace& space, const PartitionResult& partition) {
    return monotonicity_constant(space, lex_leaf_order(partition.tree));
}

FiniteMetricSpace leaf_metric(const DiamTree& tree) {
    std::vector<TreeAddress> leaves = tree.leaf_addresses();
    std::size_t n = leaves.size();
    std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            rows[i][j] = rows[j][i] = tree.distance(leaves[i], leaves[j]);
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        int p = tree.point_at(leaves[i]);
        labels[i] = p >= 0 ? "p" + std::to_string(p) : "leaf" + std::to_string(i);
    }
    return FiniteMetricSpace(std::move(labels),
                             [&] {
                                 std::vector<double> flat(n * n);
                                 for (std::size_t i = 0; i < n; ++i)
                                     for (std::size_t j = 0; j < n; ++j)
                                         flat[i * n + j] = rows[i][j];
                                 return flat;
                             }());
}

} // namespace cubemap
