#pragma once

#include "partlab/partition.hpp"
#include "partlab/statistics.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace partlab {

struct TreeNode;
using TreePtr = std::shared_ptr<const TreeNode>;

struct TreeNode {
  TreePtr left;
  TreePtr middle;
  TreePtr right;
};

/// An unlabeled rooted plane tree whose vertices have optional left, middle
/// and right children. Binary trees never use the middle slot. Subtrees are
/// shared and immutable.
class PlaneTree {
 public:
  PlaneTree() : root_(std::make_shared<TreeNode>()) {}
  explicit PlaneTree(TreePtr root) : root_(std::move(root)) {}

  static PlaneTree leaf() { return PlaneTree(); }

  static PlaneTree node(const PlaneTree* left, const PlaneTree* middle, const PlaneTree* right) {
    if (middle && (left || right)) throw DomainError("a middle child excludes left and right children");
    auto n = std::make_shared<TreeNode>();
    if (left) n->left = left->root_;
    if (middle) n->middle = middle->root_;
    if (right) n->right = right->root_;
    return PlaneTree(std::move(n));
  }

  static PlaneTree with_left(const PlaneTree& t) { return node(&t, nullptr, nullptr); }
  static PlaneTree with_middle(const PlaneTree& t) { return node(nullptr, &t, nullptr); }
  static PlaneTree with_right(const PlaneTree& t) { return node(nullptr, nullptr, &t); }
  static PlaneTree with_both(const PlaneTree& l, const PlaneTree& r) { return node(&l, nullptr, &r); }

  [[nodiscard]] const TreePtr& root() const noexcept { return root_; }

  [[nodiscard]] bool has_left() const { return root_->left != nullptr; }
  [[nodiscard]] bool has_middle() const { return root_->middle != nullptr; }
  [[nodiscard]] bool has_right() const { return root_->right != nullptr; }
  [[nodiscard]] bool is_leaf() const { return !has_left() && !has_middle() && !has_right(); }
  [[nodiscard]] bool is_fulfilled() const { return has_left() && has_right(); }

  [[nodiscard]] PlaneTree left() const { return child(root_->left); }
  [[nodiscard]] PlaneTree middle() const { return child(root_->middle); }
  [[nodiscard]] PlaneTree right() const { return child(root_->right); }

  [[nodiscard]] int vertex_count() const { return count(root_.get()); }

  /// "(" left ";" middle ";" right ")" with "_" for an absent child.
  [[nodiscard]] std::string to_string() const {
    std::string out;
    write(root_.get(), out);
    return out;
  }

  static PlaneTree parse(std::string_view text);

  friend bool operator==(const PlaneTree& a, const PlaneTree& b) { return same(a.root_.get(), b.root_.get()); }

 private:
  static PlaneTree child(const TreePtr& p) {
    if (!p) throw DomainError("tree vertex has no such child");
    return PlaneTree(p);
  }

  static int count(const TreeNode* n) {
    if (!n) return 0;
    return 1 + count(n->left.get()) + count(n->middle.get()) + count(n->right.get());
  }

  static bool same(const TreeNode* a, const TreeNode* b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return same(a->left.get(), b->left.get()) && same(a->middle.get(), b->middle.get()) &&
           same(a->right.get(), b->right.get());
  }

  static void write(const TreeNode* n, std::string& out) {
    if (!n) {
      out += '_';
      return;
    }
    out += '(';
    write(n->left.get(), out);
    out += ';';
    write(n->middle.get(), out);
    out += ';';
    write(n->right.get(), out);
    out += ')';
  }

  TreePtr root_;
};

namespace detail {

struct TreeParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip() {
    while (pos < text.size() && is_space(text[pos])) ++pos;
  }

  void expect(char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos);
    }
    ++pos;
  }

  TreePtr slot() {
    skip();
    if (pos < text.size() && text[pos] == '_') {
      ++pos;
      return nullptr;
    }
    return node();
  }

  TreePtr node() {
    expect('(');
    auto n = std::make_shared<TreeNode>();
    n->left = slot();
    expect(';');
    n->middle = slot();
    expect(';');
    n->right = slot();
    if (n->middle && (n->left || n->right)) {
      throw ParseError("a middle child excludes left and right children", pos);
    }
    expect(')');
    return n;
  }
};

}  // namespace detail

inline PlaneTree PlaneTree::parse(std::string_view text) {
  detail::TreeParser parser{text};
  TreePtr root = parser.node();
  parser.skip();
  if (parser.pos != text.size()) throw ParseError("trailing input after tree", parser.pos);
  return PlaneTree(std::move(root));
}

using UnaryBinaryTree = PlaneTree;
using BinaryTree = PlaneTree;

struct TreeStats {
  int vertices = 0;
  int leaves = 0;
  int middle_children = 0;       // vertices having a middle child
  int fulfilled = 0;             // vertices with both left and right children
  int left_only = 0;             // vertices whose only child is a left child
  int fulfilled_left_pairs = 0;  // fulfilled u whose left child is fulfilled
  int right_over_branching = 0;  // right-only vertices whose child has a left or right child

  [[nodiscard]] int unfulfilled() const { return vertices - fulfilled; }

  friend bool operator==(const TreeStats&, const TreeStats&) = default;
};

inline TreeStats tree_stats(const PlaneTree& t) {
  TreeStats s;
  std::function<void(const TreeNode*)> walk = [&](const TreeNode* n) {
    ++s.vertices;
    const bool l = n->left != nullptr;
    const bool m = n->middle != nullptr;
    const bool r = n->right != nullptr;
    if (!l && !m && !r) ++s.leaves;
    if (m) ++s.middle_children;
    if (l && !m && !r) ++s.left_only;
    if (r && !l && (n->right->left || n->right->right)) ++s.right_over_branching;
    if (l && r) {
      ++s.fulfilled;
      if (n->left->left && n->left->right) ++s.fulfilled_left_pairs;
    }
    if (l) walk(n->left.get());
    if (m) walk(n->middle.get());
    if (r) walk(n->right.get());
  };
  walk(t.root().get());
  return s;
}

namespace detail {

inline bool all_nodes(const TreeNode* n, const std::function<bool(const TreeNode*)>& ok) {
  if (!n) return true;
  return ok(n) && all_nodes(n->left.get(), ok) && all_nodes(n->middle.get(), ok) &&
         all_nodes(n->right.get(), ok);
}

// Disjoint union: q's elements shifted past p, in order.
inline std::vector<int> concat_words(std::span<const int> p, std::span<const int> q) {
  std::vector<int> w(p.begin(), p.end());
  const int top = w.empty() ? 0 : *std::max_element(w.begin(), w.end());
  for (int a : q) w.push_back(a + top);
  return w;
}

// Appends a new last element to the block of `element` (a fresh block when 0).
inline SetPartition append_to_block(const SetPartition& p, int element) {
  std::vector<int> w(p.word().begin(), p.word().end());
  w.push_back(element == 0 ? p.block_count() + 1 : p.block_of(element));
  return SetPartition::from_word(std::move(w));
}

// Canonical word of an arbitrary labelling (labels renumbered by first use).
inline SetPartition word_partition(const std::vector<int>& labels) {
  std::vector<int> w;
  std::vector<std::pair<int, int>> seen;
  for (int a : labels) {
    auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& s) { return s.first == a; });
    if (it == seen.end()) {
      seen.emplace_back(a, static_cast<int>(seen.size()) + 1);
      w.push_back(static_cast<int>(seen.size()));
    } else {
      w.push_back(it->second);
    }
  }
  return SetPartition::from_word(std::move(w));
}

// Largest element of the block of n that is smaller than n, or 0.
inline int predecessor_in_block(const SetPartition& p, int element) {
  for (int e = element - 1; e >= 1; --e) {
    if (p.block_of(e) == p.block_of(element)) return e;
  }
  return 0;
}

}  // namespace detail

/// Every left child has a left or a right child.
inline bool is_phi_tree(const PlaneTree& t) {
  return detail::all_nodes(t.root().get(), [](const TreeNode* n) {
    if (n->middle && (n->left || n->right)) return false;
    if (n->left && !n->left->left && !n->left->right) return false;
    return true;
  });
}

/// No middle children, and the left child of a fulfilled vertex has a left child.
inline bool is_psi_tree(const PlaneTree& t) {
  return detail::all_nodes(t.root().get(), [](const TreeNode* n) {
    if (n->middle) return false;
    if (n->left && n->right && !n->left->left) return false;
    return true;
  });
}

// --- phi ----------------------------------------------------------------------

/// Plane unary-binary tree of a noncrossing partition of [n], n >= 1.
inline UnaryBinaryTree phi(const SetPartition& p) {
  const int n = p.size();
  if (n < 1) throw DomainError("phi needs n >= 1");
  if (chain_max(p, ChainKind::CR) > 1) {
    throw DomainError("phi needs a noncrossing partition, got " + to_word_string(p));
  }
  if (n == 1) return PlaneTree::leaf();
  if (p.is_singleton(n)) return PlaneTree::with_middle(phi(remove_element(p, n)));
  const int j = p.head_of(n);
  const int i = detail::predecessor_in_block(p, n);
  if (i == j) {
    // Block {j, n}: drop j and n, then let n-1 join the block of the new j.
    std::vector<int> keep;
    for (int e = 1; e <= n - 1; ++e) {
      if (e != j) keep.push_back(e);
    }
    const SetPartition reduced = restrict_to(p, keep);
    const SetPartition prime = detail::append_to_block(reduced, j <= n - 2 ? j : 0);
    return PlaneTree::with_right(phi(prime));
  }
  if (i == n - 1) return PlaneTree::with_left(phi(restrict_to_range(p, 1, n - 1)));
  return PlaneTree::with_both(phi(restrict_to_range(p, 1, i)), phi(restrict_to_range(p, i + 1, n - 1)));
}

inline SetPartition phi_inverse(const UnaryBinaryTree& t) {
  if (!is_phi_tree(t)) throw DomainError("tree violates the left-child rule: " + t.to_string());
  std::function<SetPartition(const PlaneTree&)> inv = [&](const PlaneTree& u) -> SetPartition {
    if (u.is_leaf()) return SetPartition::from_word({1});
    if (u.has_middle()) return detail::append_to_block(inv(u.middle()), 0);
    if (u.is_fulfilled()) {
      const SetPartition left = inv(u.left());
      const SetPartition right = inv(u.right());
      const int i = left.size();
      auto w = detail::concat_words(left.word(), right.word());
      w.push_back(left.block_of(i));
      return detail::word_partition(std::move(w));
    }
    if (u.has_left()) {
      const SetPartition left = inv(u.left());
      return detail::append_to_block(left, left.size());
    }
    // Right child only: j is the head of the block holding the last element.
    const SetPartition prime = inv(u.right());
    const int m = prime.size();
    const int j = prime.head_of(m);
    std::vector<int> w;
    for (int e = 1; e < j; ++e) w.push_back(prime.block_of(e));
    const int fresh = prime.block_count() + 1;
    w.push_back(fresh);
    for (int e = j; e < m; ++e) w.push_back(prime.block_of(e));
    w.push_back(fresh);
    return detail::word_partition(std::move(w));
  };
  return inv(t);
}

// --- psi ----------------------------------------------------------------------

/// Plane binary tree of a 2-distant noncrossing partition of [n], n >= 1.
inline BinaryTree psi(const SetPartition& p) {
  const int n = p.size();
  if (n < 1) throw DomainError("psi needs n >= 1");
  if (dcr(p, 2) != 0) {
    throw DomainError("psi needs a 2-distant noncrossing partition, got " + to_word_string(p));
  }
  if (n == 1) return PlaneTree::leaf();
  const int prev = detail::predecessor_in_block(p, n);
  if (prev == 0) return PlaneTree::with_left(psi(remove_element(p, n)));
  if (prev == n - 1) return PlaneTree::with_right(psi(remove_element(p, n)));
  const int i = prev + 1;
  return PlaneTree::with_both(psi(restrict_to_range(p, 1, i)), psi(restrict_to_range(p, i, n - 1)));
}

inline SetPartition psi_inverse(const BinaryTree& t) {
  if (!is_psi_tree(t)) throw DomainError("tree violates the fulfilled-vertex rule: " + t.to_string());
  std::function<SetPartition(const PlaneTree&)> inv = [&](const PlaneTree& u) -> SetPartition {
    if (u.is_leaf()) return SetPartition::from_word({1});
    if (u.is_fulfilled()) {
      const SetPartition left = inv(u.left());
      const SetPartition right = inv(u.right());
      const int i = left.size();
      // Element i is shared: right's element 1 is identified with left's i.
      std::vector<int> w(left.word().begin(), left.word().end());
      const int top = left.block_count();
      auto label = [&](int b) { return b == 1 ? left.block_of(i) : top + b - 1; };
      for (int e = 2; e <= right.size(); ++e) w.push_back(label(right.block_of(e)));
      w.push_back(left.block_of(i - 1));
      return detail::word_partition(std::move(w));
    }
    if (u.has_left()) return detail::append_to_block(inv(u.left()), 0);
    const SetPartition prev = inv(u.right());
    return detail::append_to_block(prev, prev.size());
  };
  return inv(t);
}

// --- tree enumeration ---------------------------------------------------------

/// All plane unary-binary trees with n vertices obeying the left-child rule.
inline std::vector<UnaryBinaryTree> phi_trees(int n) {
  // all[m] are the valid trees of size m; branching[m] those whose root has a
  // left or right child (the ones allowed as left children).
  std::vector<std::vector<PlaneTree>> all(n + 1), branching(n + 1);
  for (int m = 1; m <= n; ++m) {
    if (m == 1) {
      all[1].push_back(PlaneTree::leaf());
      continue;
    }
    for (const auto& t : all[m - 1]) all[m].push_back(PlaneTree::with_middle(t));
    for (const auto& t : branching[m - 1]) branching[m].push_back(PlaneTree::with_left(t));
    for (const auto& t : all[m - 1]) branching[m].push_back(PlaneTree::with_right(t));
    for (int a = 1; a <= m - 2; ++a) {
      for (const auto& l : branching[a])
        for (const auto& r : all[m - 1 - a]) branching[m].push_back(PlaneTree::with_both(l, r));
    }
    all[m].insert(all[m].end(), branching[m].begin(), branching[m].end());
  }
  return n >= 1 ? all[n] : std::vector<PlaneTree>{};
}

/// All plane binary trees with n unfulfilled vertices in which the left
/// child of every fulfilled vertex has a left child.
inline std::vector<BinaryTree> psi_trees(int n) {
  // all[u]: valid trees with u unfulfilled vertices; lefty[u]: those whose
  // root has a left child.
  std::vector<std::vector<PlaneTree>> all(n + 1), lefty(n + 1);
  for (int u = 1; u <= n; ++u) {
    if (u == 1) {
      all[1].push_back(PlaneTree::leaf());
      continue;
    }
    for (const auto& t : all[u - 1]) lefty[u].push_back(PlaneTree::with_left(t));
    for (int a = 1; a <= u - 1; ++a) {
      for (const auto& l : lefty[a])
        for (const auto& r : all[u - a]) lefty[u].push_back(PlaneTree::with_both(l, r));
    }
    all[u] = lefty[u];
    for (const auto& t : all[u - 1]) all[u].push_back(PlaneTree::with_right(t));
  }
  return n >= 1 ? all[n] : std::vector<PlaneTree>{};
}

// --- front involution ---------------------------------------------------------

/// The diagram T_i: the front representation restricted to vertices >= i,
/// with a half edge on every j >= i whose head lies below i.
struct HalfEdgeDiagram {
  int from = 1;
  std::vector<Edge> edges;
  std::vector<int> half_edges;

  friend bool operator==(const HalfEdgeDiagram&, const HalfEdgeDiagram&) = default;
};

inline HalfEdgeDiagram half_edge_diagram(const SetPartition& p, int i) {
  if (i < 1 || i > p.size() + 1) throw DomainError("diagram index outside [n+1]");
  HalfEdgeDiagram d;
  d.from = i;
  for (const Edge& e : front_edges(p)) {
    if (e.i >= i) {
      d.edges.push_back(e);
    } else if (e.j >= i) {
      d.half_edges.push_back(e.j);
    }
  }
  std::sort(d.half_edges.begin(), d.half_edges.end());
  return d;
}

/// Involution on Π_n exchanging fcr_k and fne_k. Vertices are processed from
/// n down to 1. Open half edges of the image are tracked alongside those of
/// p; at a head i they split into the vertices with fewer than k-2 heads
/// strictly between i and them (kept as in p) and the rest, where the
/// claimed positions are mirrored.
inline SetPartition front_involution(const SetPartition& p, int k) {
  detail::require_at_least(k, 2, "front_involution");
  const int n = p.size();
  const auto below = detail::head_prefix_counts(p);
  auto heads_between = [&](int i, int v) { return below[v] - below[i + 1]; };

  std::vector<int> owner(n + 1, 0);  // head of each element in the image
  std::set<int> open_image;          // half edges of T'_{i+1}
  for (int i = n; i >= 1; --i) {
    if (!p.is_head(i)) {
      open_image.insert(i);
      continue;
    }
    owner[i] = i;
    if (p.is_singleton(i)) continue;

    std::vector<int> near, far, near_image, far_image;
    for (int v = i + 1; v <= n; ++v) {
      if (!p.is_head(v) && p.head_of(v) <= i) {
        (heads_between(i, v) < k - 2 ? near : far).push_back(v);
      }
    }
    for (int v : open_image) (heads_between(i, v) < k - 2 ? near_image : far_image).push_back(v);
    if (near != near_image || far.size() != far_image.size()) {
      throw DomainError("half-edge bookkeeping diverged at vertex " + std::to_string(i));
    }

    const int s = static_cast<int>(far.size());
    for (int v : near) {
      if (p.head_of(v) == i) {
        owner[v] = i;
        open_image.erase(v);
      }
    }
    for (int a = 1; a <= s; ++a) {
      if (p.head_of(far[a - 1]) != i) continue;
      const int target = far_image[s - a];
      owner[target] = i;
      open_image.erase(target);
    }
  }
  std::vector<std::vector<int>> blocks;
  std::vector<int> index(n + 1, -1);
  for (int e = 1; e <= n; ++e) {
    const int h = owner[e];
    if (index[h] < 0) {
      index[h] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[index[h]].push_back(e);
  }
  return SetPartition::from_blocks(blocks, n);
}

}  // namespace partlab
