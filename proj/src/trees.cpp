#include "catalan/trees.hpp"

#include <algorithm>
#include <numeric>

#include "catalan/errors.hpp"

namespace catalan {

namespace {

constexpr std::string_view kDot = "\xC2\xB7";  // "·"
constexpr long kMaxTreeLeaves = 14;

std::size_t subtree_end(const std::string& code, std::size_t start) {
  std::size_t open = 1;
  std::size_t i = start;
  while (open > 0) {
    open += code.at(i) == 'I' ? 1 : 0;
    open -= code.at(i) == 'I' ? 0 : 1;
    ++i;
  }
  return i;
}

void render(const std::string& code, std::size_t& pos, const std::vector<int>* labels, std::size_t& leaf,
            std::string& out) {
  if (code[pos++] == 'L') {
    if (labels != nullptr)
      out += static_cast<char>('0' + (*labels)[leaf]);
    else
      out += kDot;
    ++leaf;
    return;
  }
  out += '(';
  render(code, pos, labels, leaf, out);
  out += ',';
  render(code, pos, labels, leaf, out);
  out += ')';
}

// Recursive-descent reader shared by the shape and the labeled syntax.
class TreeReader {
 public:
  TreeReader(std::string_view text, bool labeled) : text_(text), labeled_(labeled) {}

  void read(std::string& code, std::vector<int>& labels) {
    parse_node(code, labels);
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw UsageError("tree syntax error at position " + std::to_string(pos_) + ": " + what + " in \"" +
                     std::string(text_) + "\"");
  }
  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void parse_node(std::string& code, std::vector<int>& labels) {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    if (text_[pos_] == '(') {
      ++pos_;
      code += 'I';
      parse_node(code, labels);
      expect(',');
      parse_node(code, labels);
      expect(')');
      return;
    }
    if (labeled_) {
      if (text_[pos_] != '1' && text_[pos_] != '2') fail("expected leaf label 1 or 2");
      labels.push_back(text_[pos_] - '0');
      ++pos_;
    } else if (text_.substr(pos_, kDot.size()) == kDot) {
      pos_ += kDot.size();
    } else if (text_[pos_] == '.') {
      ++pos_;
    } else {
      fail("expected leaf");
    }
    code += 'L';
  }

  std::string_view text_;
  bool labeled_;
  std::size_t pos_ = 0;
};

// Words over {1,2} of the given length with exactly `twos` letters 2, lexicographic.
template <class Fn>
void for_each_word(std::size_t length, std::size_t twos, Fn&& fn) {
  if (twos > length) return;
  std::vector<int> word(length, 1);
  std::fill(word.end() - static_cast<std::ptrdiff_t>(twos), word.end(), 2);
  do {
    fn(word);
  } while (std::next_permutation(word.begin(), word.end()));
}

}  // namespace

std::vector<int> parse_word(std::string_view text) {
  std::vector<int> word;
  for (char c : text) {
    if (c != '1' && c != '2') throw UsageError("word letters must be 1 or 2");
    word.push_back(c - '0');
  }
  return word;
}

BinaryTree BinaryTree::node(const BinaryTree& left, const BinaryTree& right) {
  return BinaryTree("I" + left.code_ + right.code_);
}

BinaryTree BinaryTree::from_code(std::string code) {
  std::size_t slots = 1;
  for (char c : code) {
    if (slots == 0 || (c != 'I' && c != 'L')) throw UsageError("invalid preorder tree code: " + code);
    slots = c == 'I' ? slots + 1 : slots - 1;
  }
  if (slots != 0) throw UsageError("invalid preorder tree code: " + code);
  return BinaryTree(std::move(code));
}

BinaryTree BinaryTree::left() const {
  if (is_leaf()) throw UsageError("a leaf has no children");
  return BinaryTree(code_.substr(1, subtree_end(code_, 1) - 1));
}

BinaryTree BinaryTree::right() const {
  if (is_leaf()) throw UsageError("a leaf has no children");
  return BinaryTree(code_.substr(subtree_end(code_, 1)));
}

std::size_t BinaryTree::leaf_count() const {
  return static_cast<std::size_t>(std::count(code_.begin(), code_.end(), 'L'));
}

std::string BinaryTree::to_string() const {
  std::string out;
  std::size_t pos = 0;
  std::size_t leaf = 0;
  render(code_, pos, nullptr, leaf, out);
  return out;
}

BinaryTree BinaryTree::parse(std::string_view text) {
  std::string code;
  std::vector<int> unused;
  TreeReader(text, false).read(code, unused);
  return BinaryTree(std::move(code));
}

std::vector<BinaryTree> enumerate_trees(long n_leaves) {
  if (n_leaves < 1) throw UsageError("enumerate_trees: need at least one leaf");
  if (n_leaves > kMaxTreeLeaves) throw SizeError("enumerate_trees: more than 14 leaves");
  std::vector<std::vector<BinaryTree>> by_size(static_cast<std::size_t>(n_leaves) + 1);
  by_size[1] = {BinaryTree::leaf()};
  for (std::size_t n = 2; n <= static_cast<std::size_t>(n_leaves); ++n)
    for (std::size_t a = 1; a < n; ++a)
      for (const auto& left : by_size[a])
        for (const auto& right : by_size[n - a]) by_size[n].push_back(BinaryTree::node(left, right));
  return std::move(by_size.back());
}

LabeledTree::LabeledTree(BinaryTree shape_in, std::vector<int> labels_in)
    : shape(std::move(shape_in)), labels(std::move(labels_in)) {
  if (labels.size() != shape.leaf_count()) throw UsageError("label count differs from leaf count");
  for (int label : labels)
    if (label != 1 && label != 2) throw UsageError("leaf labels must be 1 or 2");
}

long LabeledTree::weight() const { return std::accumulate(labels.begin(), labels.end(), 0L); }

std::string LabeledTree::to_string() const {
  std::string out;
  std::size_t pos = 0;
  std::size_t leaf = 0;
  render(shape.code(), pos, &labels, leaf, out);
  return out;
}

LabeledTree LabeledTree::parse(std::string_view text) {
  std::string code;
  std::vector<int> labels;
  TreeReader(text, true).read(code, labels);
  return LabeledTree(BinaryTree::from_code(std::move(code)), std::move(labels));
}

std::optional<InvolutionStep> involution1(const LabeledTree& tree) {
  const std::string& code = tree.shape.code();
  std::size_t leaf = 0;
  for (std::size_t pos = 0; pos < code.size(); ++pos) {
    if (code[pos] != 'L') continue;
    const int label = tree.labels[leaf];
    if (label == 2) {
      std::string next = code;
      next.replace(pos, 1, "ILL");
      std::vector<int> labels = tree.labels;
      labels[leaf] = 1;
      labels.insert(labels.begin() + static_cast<std::ptrdiff_t>(leaf), 1);
      return InvolutionStep{LabeledTree(BinaryTree::from_code(std::move(next)), std::move(labels)), Rewrite::Expand,
                            leaf};
    }
    // Sibling must itself be a leaf labeled 1. As a left child the sibling
    // leaf sits right after us in preorder; as a right child, right before.
    const bool left_of_cherry = pos >= 1 && code[pos - 1] == 'I' && pos + 1 < code.size() && code[pos + 1] == 'L';
    const bool right_of_cherry = pos >= 2 && code[pos - 2] == 'I' && code[pos - 1] == 'L';
    std::size_t first = 0;
    bool fire = false;
    if (left_of_cherry && tree.labels[leaf + 1] == 1) {
      first = leaf;
      fire = true;
    } else if (right_of_cherry && tree.labels[leaf - 1] == 1) {
      first = leaf - 1;
      fire = true;
    }
    if (fire) {
      const std::size_t cherry = left_of_cherry ? pos - 1 : pos - 2;
      std::string next = code;
      next.replace(cherry, 3, "L");
      std::vector<int> labels = tree.labels;
      labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(first));
      labels[first] = 2;
      return InvolutionStep{LabeledTree(BinaryTree::from_code(std::move(next)), std::move(labels)), Rewrite::Contract,
                            leaf};
    }
    ++leaf;
  }
  return std::nullopt;
}

std::vector<LabeledTree> enumerate_creatures1(long s) {
  if (s < 0) throw UsageError("creatures: s must be nonnegative");
  if (s > kMaxCreatureSum) throw SizeError("creatures: s beyond exhaustive enumeration limit");
  std::vector<LabeledTree> out;
  const long weight = s + 1;
  for (long n = (weight + 1) / 2; n <= weight; ++n) {
    const auto twos = static_cast<std::size_t>(weight - n);
    for (const auto& shape : enumerate_trees(n))
      for_each_word(static_cast<std::size_t>(n), twos, [&](const std::vector<int>& w) { out.emplace_back(shape, w); });
  }
  return out;
}

CreaturePair::CreaturePair(BinaryTree shape_in, std::vector<int> word_in, long l_in, long m_in)
    : shape(std::move(shape_in)), word(std::move(word_in)), l(l_in), m(m_in) {
  if (l - m - 1 < 0) throw UsageError("creature pair needs l >= m + 1");
  if (word.size() != shape.leaf_count() + static_cast<std::size_t>(l - m - 1))
    throw UsageError("word length must be leaf count + l - m - 1");
  for (int letter : word)
    if (letter != 1 && letter != 2) throw UsageError("word letters must be 1 or 2");
  if (std::accumulate(word.begin(), word.end(), 0L) != l) throw UsageError("word must sum to l");
}

LabeledTree CreaturePair::labeled_prefix() const {
  return LabeledTree(shape, std::vector<int>(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(shape.leaf_count())));
}

std::string CreaturePair::to_string() const {
  std::string out = shape.to_string() + ' ';
  for (int letter : word) out += static_cast<char>('0' + letter);
  return out;
}

std::vector<CreaturePair> enumerate_creatures3(long l, long m) {
  if (m < 0 || l < m + 1) throw UsageError("pairs need m >= 0 and l >= m + 1");
  if (l > kMaxPairLength) throw SizeError("pairs: l beyond exhaustive enumeration limit");
  std::vector<CreaturePair> out;
  const long extra = l - m - 1;
  for (long n = 1; n <= m + 1; ++n) {
    const long length = n + extra;
    const long twos = l - length;  // = m + 1 - n
    for (const auto& shape : enumerate_trees(n))
      for_each_word(static_cast<std::size_t>(length), static_cast<std::size_t>(twos),
                    [&](const std::vector<int>& w) { out.emplace_back(shape, w, l, m); });
  }
  return out;
}

std::optional<CreaturePair> involution3(const CreaturePair& pair) {
  const auto step = involution1(pair.labeled_prefix());
  if (!step) return std::nullopt;
  std::vector<int> word = step->image.labels;
  word.insert(word.end(), pair.word.begin() + static_cast<std::ptrdiff_t>(pair.shape.leaf_count()), pair.word.end());
  return CreaturePair(step->image.shape, std::move(word), pair.l, pair.m);
}

long survivor_count(long l, long m) {
  if (m < 0 || l < m + 1) throw UsageError("survivor_count needs m >= 0 and l >= m + 1");
  const long length = l - m - 1;
  const long target = l - 1;
  // ways[s] = number of words of the current length with letter sum s.
  std::vector<long> ways(static_cast<std::size_t>(target) + 1, 0);
  ways[0] = 1;
  for (long len = 0; len < length; ++len) {
    std::vector<long> next(ways.size(), 0);
    for (std::size_t s = 0; s < ways.size(); ++s) {
      if (ways[s] == 0) continue;
      if (s + 1 < next.size()) next[s + 1] += ways[s];
      if (s + 2 < next.size()) next[s + 2] += ways[s];
    }
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(target)];
}

namespace {

struct Tally {
  bool fixed = false;
  bool weight_ok = true;
  bool parity_ok = true;
  bool involutive = true;
  bool survivor_ok = true;
};

template <class Item>
Census reduce(const std::vector<Item>& items, const std::vector<Tally>& tallies) {
  Census census;
  census.total = items.size();
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::size_t leaves = items[i].shape.leaf_count();
    (leaves % 2 == 1 ? census.odd_leaves : census.even_leaves) += 1;
    census.fixed_points += tallies[i].fixed ? 1 : 0;
    census.weight_preserving = census.weight_preserving && tallies[i].weight_ok;
    census.flips_parity = census.flips_parity && tallies[i].parity_ok;
    census.involutive = census.involutive && tallies[i].involutive;
    census.fixed_points_are_survivors = census.fixed_points_are_survivors && tallies[i].survivor_ok;
  }
  return census;
}

long word_sum(const std::vector<int>& w) { return std::accumulate(w.begin(), w.end(), 0L); }

}  // namespace

Census census_identity1(long s, Execution execution) {
  const auto creatures = enumerate_creatures1(s);
  std::vector<Tally> tallies(creatures.size());
  for_each_index(creatures.size(), execution, [&](std::size_t i) {
    const auto& c = creatures[i];
    auto& t = tallies[i];
    const auto step = involution1(c);
    if (!step) {
      t.fixed = true;
      return;
    }
    const auto& image = step->image;
    t.weight_ok = image.weight() == c.weight();
    const auto delta = static_cast<long>(image.leaf_count()) - static_cast<long>(c.leaf_count());
    t.parity_ok = delta == 1 || delta == -1;
    const auto back = involution1(image);
    t.involutive = back.has_value() && back->image == c;
  });
  return reduce(creatures, tallies);
}

Census census_identity3(long l, long m, Execution execution) {
  const auto pairs = enumerate_creatures3(l, m);
  std::vector<Tally> tallies(pairs.size());
  for_each_index(pairs.size(), execution, [&](std::size_t i) {
    const auto& p = pairs[i];
    auto& t = tallies[i];
    const bool survivor_shape = p.shape.is_leaf() && p.word.front() == 1;
    const auto image = involution3(p);
    if (!image) {
      t.fixed = true;
      t.survivor_ok = survivor_shape;
      return;
    }
    t.survivor_ok = !survivor_shape;
    t.weight_ok = word_sum(image->word) == word_sum(p.word);
    const auto delta = static_cast<long>(image->shape.leaf_count()) - static_cast<long>(p.shape.leaf_count());
    t.parity_ok = delta == 1 || delta == -1;
    const auto back = involution3(*image);
    t.involutive = back.has_value() && *back == p;
  });
  return reduce(pairs, tallies);
}

std::vector<std::string> trace_orbit1(const LabeledTree& start) {
  std::vector<std::string> lines{start.to_string()};
  if (const auto step = involution1(start)) lines.push_back(step->image.to_string());
  return lines;
}

std::vector<std::string> trace_orbit3(const CreaturePair& start) {
  std::vector<std::string> lines{start.to_string()};
  if (const auto image = involution3(start)) lines.push_back(image->to_string());
  return lines;
}

}  // namespace catalan
