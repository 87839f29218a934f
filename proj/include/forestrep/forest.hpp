#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "forestrep/numeric.hpp"
#include "forestrep/transformation.hpp"

namespace forestrep {

/// A rooted forest on the labels 1..n given by its parent map; parent 0
/// marks a root. Construction rejects cycles.
class LabeledForest {
 public:
  explicit LabeledForest(std::vector<int> parent);

  int n() const { return static_cast<int>(parent_.size()); }
  int parent(int v) const { return parent_[static_cast<std::size_t>(v - 1)]; }
  std::span<const int> parents() const { return parent_; }

  std::vector<int> roots() const;
  int component_count() const;
  /// children()[v] lists the children of v in increasing label order; index 0 holds the roots.
  std::vector<std::vector<int>> children() const;

  friend bool operator==(const LabeledForest&, const LabeledForest&) = default;

 private:
  std::vector<int> parent_;
};

/// Edge i -> f(i) for each i in dom(f). Throws std::invalid_argument if f has a cycle.
LabeledForest forest_of(const PartialTransformation& f);
PartialTransformation transformation_of(const LabeledForest& forest);

/// Canonical unlabeled rooted forest.
///
/// Encoding: a tree is "(" + concatenation of its children's encodings,
/// sorted in descending string order, + ")". A forest is the descending
/// concatenation of its tree encodings. Cherry = "(()())", chain-3 = "((()))".
/// Two oduns compare equal iff the underlying forests are isomorphic.
class Odun {
 public:
  Odun() = default;

  /// Accepts any balanced parenthesization and canonicalizes it.
  static Odun parse(std::string_view text);
  /// Builds from tree encodings (canonicalized and sorted here).
  static Odun from_trees(std::vector<std::string> trees);
  static Odun chain(int length);
  /// A forest of chains, one per part of `lengths`.
  static Odun chains(const Partition& lengths);

  const std::vector<std::string>& trees() const { return trees_; }
  /// Distinct component trees with multiplicities, in canonical order.
  std::vector<std::pair<std::string, int>> groups() const;

  int vertex_count() const { return vertices_; }
  int component_count() const { return static_cast<int>(trees_.size()); }
  bool is_tree() const { return trees_.size() == 1; }
  bool empty() const { return trees_.empty(); }
  const std::string& repr() const { return repr_; }

  /// The tree obtained by attaching every root to one new root.
  Odun with_root() const;
  /// The forest left after deleting the root of a tree. Throws unless is_tree().
  Odun without_root() const;
  /// Disjoint union.
  Odun joined(const Odun& other) const;

  friend bool operator==(const Odun& a, const Odun& b) { return a.repr_ == b.repr_; }
  friend auto operator<=>(const Odun& a, const Odun& b) { return a.repr_ <=> b.repr_; }

 private:
  std::vector<std::string> trees_;
  std::string repr_;
  int vertices_ = 0;
};

/// Splits a concatenation of balanced encodings into its top-level pieces.
/// Throws std::invalid_argument on unbalanced input or stray characters.
std::vector<std::string_view> split_top_level(std::string_view text);

/// Canonical encoding of a single tree given in any balanced form.
std::string canonical_tree(std::string_view tree);

/// Vertex count of an encoding (number of '(').
int encoding_size(std::string_view text);

/// Length of the encoding as a chain, or 0 if it is not a chain.
int chain_length(std::string_view tree);

Odun odun_of(const LabeledForest& forest);

/// All canonical trees on m vertices, in descending encoding order.
const std::vector<std::string>& canonical_trees(int m);

/// Every isomorphism class of rooted forests on n vertices once, optionally
/// restricted to a component count. Ordered by component count, then by
/// descending encoding.
std::vector<Odun> enumerate_oduns(int n, std::optional<int> components = std::nullopt);

/// Unlabeled rooted trees on n vertices by the divisor-sum recurrence
/// t_{m+1} = (1/m) sum_{k=1}^{m} (sum_{d|k} d t_d) t_{m-k+1}, t_1 = 1.
Integer count_rooted_trees(int n);

struct TerminalBranch {
  /// Preorder id (root = 0) of the vertex the branch hangs from, or -1 when
  /// the whole tree is a chain.
  int attachment = -1;
  int length = 0;
  friend bool operator==(const TerminalBranch&, const TerminalBranch&) = default;
};

/// Maximal hanging chains of a tree. Preorder ids follow the canonical encoding.
/// Throws std::invalid_argument unless `tree` has exactly one component.
std::vector<TerminalBranch> maximal_terminal_branches(const Odun& tree);

/// A forest is blossoming when, after attaching all roots to a new root, no
/// vertex carries two maximal terminal branches of the same odd length.
bool is_blossoming(const Odun& forest);

Integer count_blossoming(int n);

/// a_n: blossoming forests on n vertices without an isolated vertex;
/// b_n: those with one. a_n + b_n = count_blossoming(n).
struct BlossomingSplit {
  Integer without_isolated;
  Integer with_isolated;
};
BlossomingSplit blossoming_split(int n);

/// Labelings g with g(a) > g(b) whenever a lies strictly below b, counted by brute force.
Integer natural_labelings_count(const Odun& tree);
/// n! / prod over vertices of subtree sizes.
Integer hook_length_value(const Odun& tree);

/// Parent array (preorder ids, -1 for roots) of an encoding. Shared by
/// routines that need explicit vertices.
std::vector<int> shape_parents(std::string_view encoding);

}  // namespace forestrep
