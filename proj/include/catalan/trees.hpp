#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catalan/parallel.hpp"

namespace catalan {

/// Complete binary tree shape, stored as its preorder code: 'I' for an
/// internal node (always followed by its two subtrees), 'L' for a leaf.
class BinaryTree {
 public:
  static BinaryTree leaf() { return BinaryTree("L"); }
  static BinaryTree node(const BinaryTree& left, const BinaryTree& right);
  /// Validates a preorder code; UsageError if it is not a complete binary tree.
  static BinaryTree from_code(std::string code);

  bool is_leaf() const { return code_ == "L"; }
  BinaryTree left() const;
  BinaryTree right() const;
  std::size_t leaf_count() const;
  const std::string& code() const { return code_; }

  /// "(·,(·,·))"; a lone leaf prints as "·".
  std::string to_string() const;
  /// Accepts "·" or "." for leaves.
  static BinaryTree parse(std::string_view text);

  friend bool operator==(const BinaryTree&, const BinaryTree&) = default;
  friend auto operator<=>(const BinaryTree&, const BinaryTree&) = default;

 private:
  explicit BinaryTree(std::string code) : code_(std::move(code)) {}
  std::string code_;
};

/// All shapes with `n_leaves` leaves: left-subtree leaf count ascending, then
/// left subtree, then right subtree, recursively. Count is C_{n-1}.
std::vector<BinaryTree> enumerate_trees(long n_leaves);

/// A "creature": a shape with a label from {1, 2} on each leaf, left to right.
struct LabeledTree {
  BinaryTree shape;
  std::vector<int> labels;

  LabeledTree(BinaryTree shape, std::vector<int> labels);
  long weight() const;
  std::size_t leaf_count() const { return labels.size(); }
  /// Nested parentheses with labels at the leaves, e.g. "((1,1),2)".
  std::string to_string() const;
  static LabeledTree parse(std::string_view text);
  friend bool operator==(const LabeledTree&, const LabeledTree&) = default;
};

enum class Rewrite {
  Expand,    // a leaf labeled 2 becomes a cherry labeled (1, 1)
  Contract,  // a cherry labeled (1, 1) becomes a leaf labeled 2
};

struct InvolutionStep {
  LabeledTree image;
  Rewrite rule;
  std::size_t leaf;  // index of the leaf that triggered the rule
};

/// One scan of the leaves, left to right; the first leaf that is labeled 2, or
/// labeled 1 with a sibling leaf also labeled 1, is rewritten. nullopt means
/// no leaf triggers (a fixed point; only the single leaf labeled 1).
std::optional<InvolutionStep> involution1(const LabeledTree& tree);

/// Largest s accepted by the exhaustive creature enumerators.
inline constexpr long kMaxCreatureSum = 12;

/// All creatures of weight s + 1 (SizeError beyond kMaxCreatureSum).
std::vector<LabeledTree> enumerate_creatures1(long s);

/// A shape together with a {1,2}-word whose prefix labels its leaves.
struct CreaturePair {
  BinaryTree shape;
  std::vector<int> word;
  long l = 0;
  long m = 0;

  CreaturePair(BinaryTree shape, std::vector<int> word, long l, long m);
  LabeledTree labeled_prefix() const;
  std::string to_string() const;  // "(·,·) 1121"
  friend bool operator==(const CreaturePair&, const CreaturePair&) = default;
};

/// Parses a word such as "1121".
std::vector<int> parse_word(std::string_view text);

inline constexpr long kMaxPairLength = 20;

/// All pairs (T, w) with T having n <= m + 1 leaves and w of length
/// n + (l - m - 1) summing to l. Requires m >= 0 and l >= m + 1.
std::vector<CreaturePair> enumerate_creatures3(long l, long m);

/// involution1 applied to the labeled prefix, with the word rewritten to
/// match. nullopt marks a survivor: the single leaf with the word starting at 1.
std::optional<CreaturePair> involution3(const CreaturePair& pair);

/// Number of {1,2}-words of length l - m - 1 with sum l - 1, by direct count.
long survivor_count(long l, long m);

struct Census {
  std::size_t total = 0;
  std::size_t odd_leaves = 0;
  std::size_t even_leaves = 0;
  std::size_t fixed_points = 0;
  bool weight_preserving = true;
  bool flips_parity = true;
  bool involutive = true;
  bool fixed_points_are_survivors = true;  // identity 3 only

  long signed_count() const { return static_cast<long>(odd_leaves) - static_cast<long>(even_leaves); }
};

/// Applies involution1 to every creature of weight s + 1 and tallies.
Census census_identity1(long s, Execution execution);
/// Applies involution3 to every pair for (l, m) and tallies.
Census census_identity3(long l, long m, Execution execution);

/// Orbit of a creature under involution1: the start, then its image (if any).
std::vector<std::string> trace_orbit1(const LabeledTree& start);
std::vector<std::string> trace_orbit3(const CreaturePair& start);

}  // namespace catalan
