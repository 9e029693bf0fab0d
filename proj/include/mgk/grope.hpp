#pragma once

// Rooted paired trees encoding gropes.
//
// A Leaf is a circle (class 1). A Surface node is a surface stage whose
// symplectic basis pairs (alpha_i, beta_i) carry the subtrees glued to them.
// Text form:  GROPE := "*" | "(" PAIR+ ")" ;  PAIR := "{" GROPE GROPE "}".

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mgk/word.hpp"

namespace mgk {

class GropeTree;

/// Symplectic pair of a surface stage.
struct GropePair;

class GropeTree {
 public:
  /// A single circle.
  GropeTree() = default;
  static GropeTree leaf() { return {}; }
  /// Throws InvalidArgument on an empty pair list.
  static GropeTree surface(std::vector<GropePair> pairs);

  bool is_leaf() const;
  std::span<const GropePair> pairs() const;
  int genus() const;

  /// Leaf -> 1; Surface -> min over pairs of class(left) + class(right).
  int grope_class() const;
  int leaf_count() const;
  /// Leaves plus surface nodes.
  int vertex_count() const;
  /// True when every surface node has genus 1.
  bool all_genus_one() const;

  /// Canonical text, e.g. "({({* *}) *})".
  std::string to_string() const;
  /// Isomorphism-invariant text: pair members and pairs sorted by (class, text).
  std::string canonical_string() const;
  bool isomorphic(const GropeTree& other) const {
    return canonical_string() == other.canonical_string();
  }

  bool operator==(const GropeTree& other) const;

 private:
  std::vector<GropePair> pairs_;
};

struct GropePair {
  GropeTree left;
  GropeTree right;

  bool operator==(const GropePair& other) const = default;
};

inline bool GropeTree::is_leaf() const { return pairs_.empty(); }
inline std::span<const GropePair> GropeTree::pairs() const { return pairs_; }
inline int GropeTree::genus() const { return static_cast<int>(pairs_.size()); }
inline bool GropeTree::operator==(const GropeTree& other) const { return pairs_ == other.pairs_; }

/// A closed (sphere-like) grope: the tree of its bottom stage with a disk
/// removed, plus the edge standing for that disk. The body is always a Surface.
class ClosedGropeTree {
 public:
  explicit ClosedGropeTree(GropeTree body);

  const GropeTree& body() const { return body_; }
  int grope_class() const { return body_.grope_class(); }
  /// Tree vertices including the root vertex of the extra edge.
  int vertex_count() const { return body_.vertex_count() + 1; }
  std::string to_string() const { return body_.to_string(); }

  bool operator==(const ClosedGropeTree& other) const = default;

 private:
  GropeTree body_;
};

enum class Side { Left, Right };

/// Address of a Leaf: the (pair index, side) choices from the top surface.
/// Text form "0L/1R".
class TipPath {
 public:
  struct Step {
    std::size_t pair = 0;
    Side side = Side::Left;
    bool operator==(const Step&) const = default;
  };

  TipPath() = default;
  explicit TipPath(std::vector<Step> steps) : steps_(std::move(steps)) {}

  static TipPath parse(const std::string& text);

  std::span<const Step> steps() const { return steps_; }
  std::size_t depth() const { return steps_.size(); }
  std::string to_string() const;

  bool operator==(const TipPath&) const = default;

 private:
  std::vector<Step> steps_;
};

GropeTree parse_tree(const std::string& text);
/// Parses and wraps; a Leaf body is rejected.
ClosedGropeTree parse_closed_tree(const std::string& text);

/// Every Leaf, depth first, left member before right member.
std::vector<TipPath> free_tips(const GropeTree& tree);
std::vector<TipPath> free_tips(const ClosedGropeTree& tree);

/// The subtree at `path`; throws InvalidArgument when a step does not exist.
const GropeTree& subtree_at(const GropeTree& tree, const TipPath& path);

/// Leaf -> its name; Surface -> product over pairs of [w(left), w(right)].
/// Names are given in free_tips order and must be distinct.
WordExpr boundary_word(const GropeTree& tree, const std::vector<std::string>& tip_names);

/// Tree of the grope Alexander-dual to the tip. Along the path from the tip
/// down to the bottom stage only the traversed edge and its partner survive;
/// the result is re-rooted at the tip. Each path vertex becomes a genus-1
/// surface whose left member continues the path (the innermost one ends in
/// the leaf left by the old root) and whose right member is the partner.
ClosedGropeTree dual_tree(const ClosedGropeTree& tree, const TipPath& tip);

/// 1 + sum of the classes of the partner subtrees along the tip's path.
int dual_class(const ClosedGropeTree& tree, const TipPath& tip);

/// Graphviz digraph; pair edges of one surface share a style.
std::string export_dot(const GropeTree& tree);
std::string export_dot(const ClosedGropeTree& tree);

}  // namespace mgk
