#include "forestrep/forest.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace forestrep {

LabeledForest::LabeledForest(std::vector<int> parent) : parent_(std::move(parent)) {
  if (!is_nilpotent(std::span<const int>(parent_)))
    throw std::invalid_argument("parent map is not a forest");
}

std::vector<int> LabeledForest::roots() const {
  std::vector<int> r;
  for (int v = 1; v <= n(); ++v)
    if (parent(v) == 0) r.push_back(v);
  return r;
}

int LabeledForest::component_count() const { return static_cast<int>(roots().size()); }

std::vector<std::vector<int>> LabeledForest::children() const {
  std::vector<std::vector<int>> ch(parent_.size() + 1);
  for (int v = 1; v <= n(); ++v) ch[static_cast<std::size_t>(parent(v))].push_back(v);
  return ch;
}

LabeledForest forest_of(const PartialTransformation& f) {
  if (!is_nilpotent(f)) throw std::invalid_argument("forest_of: " + f.str() + " is not nilpotent");
  return LabeledForest(std::vector<int>(f.image().begin(), f.image().end()));
}

PartialTransformation transformation_of(const LabeledForest& forest) {
  return PartialTransformation(std::vector<int>(forest.parents().begin(), forest.parents().end()));
}

std::vector<std::string_view> split_top_level(std::string_view text) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(') {
      if (depth++ == 0) start = i;
    } else if (c == ')') {
      if (--depth < 0) throw std::invalid_argument("unbalanced encoding: " + std::string(text));
      if (depth == 0) out.push_back(text.substr(start, i - start + 1));
    } else {
      throw std::invalid_argument("unexpected character in encoding: " + std::string(text));
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced encoding: " + std::string(text));
  return out;
}

int encoding_size(std::string_view text) {
  return static_cast<int>(std::count(text.begin(), text.end(), '('));
}

int chain_length(std::string_view tree) {
  const std::size_t half = tree.size() / 2;
  if (tree.size() % 2 != 0 || half == 0) return 0;
  for (std::size_t i = 0; i < half; ++i)
    if (tree[i] != '(' || tree[half + i] != ')') return 0;
  return static_cast<int>(half);
}

namespace {

std::string join_descending(std::vector<std::string>& parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  std::string s;
  for (const auto& p : parts) s += p;
  return s;
}

std::string canonical_labeled(int v, const std::vector<std::vector<int>>& ch) {
  std::vector<std::string> kids;
  for (int c : ch[static_cast<std::size_t>(v)]) kids.push_back(canonical_labeled(c, ch));
  return "(" + join_descending(kids) + ")";
}

}  // namespace

std::string canonical_tree(std::string_view tree) {
  auto pieces = split_top_level(tree);
  if (pieces.size() != 1) throw std::invalid_argument("expected a single tree: " + std::string(tree));
  std::vector<std::string> kids;
  for (auto c : split_top_level(tree.substr(1, tree.size() - 2))) kids.push_back(canonical_tree(c));
  return "(" + join_descending(kids) + ")";
}

Odun Odun::from_trees(std::vector<std::string> trees) {
  Odun o;
  for (auto& t : trees) t = canonical_tree(t);
  std::sort(trees.begin(), trees.end(), std::greater<>());
  o.trees_ = std::move(trees);
  for (const auto& t : o.trees_) {
    o.repr_ += t;
    o.vertices_ += encoding_size(t);
  }
  return o;
}

Odun Odun::parse(std::string_view text) {
  std::string cleaned;
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '\n') cleaned += c;
  std::vector<std::string> trees;
  for (auto t : split_top_level(cleaned)) trees.emplace_back(t);
  return from_trees(std::move(trees));
}

Odun Odun::chain(int length) {
  if (length < 1) throw std::invalid_argument("chain length must be positive");
  return from_trees({std::string(static_cast<std::size_t>(length), '(') + std::string(static_cast<std::size_t>(length), ')')});
}

Odun Odun::chains(const Partition& lengths) {
  std::vector<std::string> trees;
  for (int l : lengths.parts())
    trees.push_back(std::string(static_cast<std::size_t>(l), '(') + std::string(static_cast<std::size_t>(l), ')'));
  return from_trees(std::move(trees));
}

std::vector<std::pair<std::string, int>> Odun::groups() const {
  std::vector<std::pair<std::string, int>> g;
  for (const auto& t : trees_) {
    if (!g.empty() && g.back().first == t)
      ++g.back().second;
    else
      g.emplace_back(t, 1);
  }
  return g;
}

Odun Odun::with_root() const { return from_trees({"(" + repr_ + ")"}); }

Odun Odun::without_root() const {
  if (!is_tree()) throw std::invalid_argument("without_root: not a tree: " + repr_);
  return parse(std::string_view(repr_).substr(1, repr_.size() - 2));
}

Odun Odun::joined(const Odun& other) const {
  auto t = trees_;
  t.insert(t.end(), other.trees_.begin(), other.trees_.end());
  return from_trees(std::move(t));
}

Odun odun_of(const LabeledForest& forest) {
  const auto ch = forest.children();
  std::vector<std::string> trees;
  for (int r : ch[0]) trees.push_back(canonical_labeled(r, ch));
  return Odun::from_trees(std::move(trees));
}

namespace {

struct ShapeCatalog {
  std::mutex mu;
  // Deques keep references handed out by canonical_trees() valid while growing.
  std::deque<std::vector<std::string>> trees;  // by vertex count
  std::deque<std::vector<Odun>> forests;

  ShapeCatalog() {
    trees.emplace_back();
    forests.push_back({Odun{}});
  }

  void grow(int m) {
    while (static_cast<int>(trees.size()) <= m) {
      const std::size_t size = trees.size();
      std::vector<std::string> next;
      for (const auto& f : forests[size - 1]) next.push_back("(" + f.repr() + ")");
      std::sort(next.begin(), next.end(), std::greater<>());
      trees.push_back(std::move(next));
      forests.push_back(build_forests(static_cast<int>(size)));
    }
  }

  std::vector<Odun> build_forests(int s) {
    // Pool of trees by increasing size; a forest is a non-decreasing index sequence.
    std::vector<const std::string*> pool;
    std::vector<int> sizes;
    for (int m = 1; m <= s; ++m)
      for (const auto& t : trees[static_cast<std::size_t>(m)]) {
        pool.push_back(&t);
        sizes.push_back(m);
      }
    std::vector<Odun> out;
    std::vector<std::string> cur;
    std::function<void(int, std::size_t)> rec = [&](int remaining, std::size_t start) {
      if (remaining == 0) {
        out.push_back(Odun::from_trees(cur));
        return;
      }
      for (std::size_t i = start; i < pool.size() && sizes[i] <= remaining; ++i) {
        cur.push_back(*pool[i]);
        rec(remaining - sizes[i], i);
        cur.pop_back();
      }
    };
    rec(s, 0);
    return out;
  }
};

ShapeCatalog& catalog() {
  static ShapeCatalog c;
  return c;
}

}  // namespace

const std::vector<std::string>& canonical_trees(int m) {
  if (m < 1) throw std::invalid_argument("canonical_trees: m must be positive");
  auto& c = catalog();
  std::lock_guard lock(c.mu);
  c.grow(m);
  return c.trees[static_cast<std::size_t>(m)];
}

std::vector<Odun> enumerate_oduns(int n, std::optional<int> components) {
  if (n < 1) throw std::invalid_argument("enumerate_oduns: n must be positive");
  std::vector<Odun> all;
  {
    auto& c = catalog();
    std::lock_guard lock(c.mu);
    c.grow(n);
    all = c.forests[static_cast<std::size_t>(n)];
  }
  if (components)
    std::erase_if(all, [&](const Odun& o) { return o.component_count() != *components; });
  std::stable_sort(all.begin(), all.end(), [](const Odun& a, const Odun& b) {
    if (a.component_count() != b.component_count()) return a.component_count() < b.component_count();
    return a.repr() > b.repr();
  });
  return all;
}

Integer count_rooted_trees(int n) {
  if (n < 1) throw std::invalid_argument("count_rooted_trees: n must be positive");
  std::vector<Integer> t(static_cast<std::size_t>(n) + 1, 0);
  t[1] = 1;
  for (int m = 1; m < n; ++m) {
    Integer sum = 0;
    for (int k = 1; k <= m; ++k) {
      Integer inner = 0;
      for (int d = 1; d <= k; ++d)
        if (k % d == 0) inner += d * t[static_cast<std::size_t>(d)];
      sum += inner * t[static_cast<std::size_t>(m - k + 1)];
    }
    if (sum % m != 0) throw IntegrityError("rooted tree recurrence produced a non-integer");
    t[static_cast<std::size_t>(m + 1)] = sum / m;
  }
  return t[static_cast<std::size_t>(n)];
}

std::vector<int> shape_parents(std::string_view encoding) {
  std::vector<int> parent;
  std::vector<int> stack;
  for (char c : encoding) {
    if (c == '(') {
      parent.push_back(stack.empty() ? -1 : stack.back());
      stack.push_back(static_cast<int>(parent.size()) - 1);
    } else if (c == ')') {
      if (stack.empty()) throw std::invalid_argument("unbalanced encoding");
      stack.pop_back();
    }
  }
  if (!stack.empty()) throw std::invalid_argument("unbalanced encoding");
  return parent;
}

std::vector<TerminalBranch> maximal_terminal_branches(const Odun& tree) {
  if (!tree.is_tree()) throw std::invalid_argument("maximal_terminal_branches: expected a single tree");
  const auto parent = shape_parents(tree.repr());
  const std::size_t n = parent.size();
  std::vector<int> child_count(n, 0), size(n, 1);
  std::vector<bool> chain(n, true);
  for (std::size_t v = 0; v < n; ++v)
    if (parent[v] >= 0) ++child_count[static_cast<std::size_t>(parent[v])];
  // Preorder: children have larger ids than parents, so a reverse sweep is bottom-up.
  for (std::size_t v = n; v-- > 0;) {
    if (child_count[v] > 1) chain[v] = false;
    if (parent[v] >= 0) {
      auto p = static_cast<std::size_t>(parent[v]);
      size[p] += size[v];
      if (!chain[v]) chain[p] = false;
    }
  }
  std::vector<TerminalBranch> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (!chain[v]) continue;
    if (parent[v] < 0)
      out.push_back({-1, size[v]});
    else if (child_count[static_cast<std::size_t>(parent[v])] >= 2)
      out.push_back({parent[v], size[v]});
  }
  return out;
}

namespace {

bool tree_blossoming(std::string_view tree) {
  std::map<int, int> chain_children;
  for (auto c : split_top_level(tree.substr(1, tree.size() - 2))) {
    if (int len = chain_length(c); len > 0) {
      if (len % 2 == 1 && ++chain_children[len] >= 2) return false;
    } else if (!tree_blossoming(c)) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool is_blossoming(const Odun& forest) { return tree_blossoming("(" + forest.repr() + ")"); }

Integer count_blossoming(int n) {
  Integer c = 0;
  for (const auto& o : enumerate_oduns(n))
    if (is_blossoming(o)) ++c;
  return c;
}

BlossomingSplit blossoming_split(int n) {
  BlossomingSplit s{0, 0};
  for (const auto& o : enumerate_oduns(n)) {
    if (!is_blossoming(o)) continue;
    const bool isolated = std::find(o.trees().begin(), o.trees().end(), "()") != o.trees().end();
    ++(isolated ? s.with_isolated : s.without_isolated);
  }
  return s;
}

Integer natural_labelings_count(const Odun& tree) {
  const auto parent = shape_parents(tree.repr());
  std::vector<int> label(parent.size());
  std::iota(label.begin(), label.end(), 1);
  Integer count = 0;
  do {
    bool ok = true;
    for (std::size_t v = 0; v < parent.size() && ok; ++v)
      if (parent[v] >= 0 && label[v] <= label[static_cast<std::size_t>(parent[v])]) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(label.begin(), label.end()));
  return count;
}

Integer hook_length_value(const Odun& tree) {
  const auto parent = shape_parents(tree.repr());
  std::vector<int> size(parent.size(), 1);
  for (std::size_t v = parent.size(); v-- > 0;)
    if (parent[v] >= 0) size[static_cast<std::size_t>(parent[v])] += size[v];
  Integer denom = 1;
  for (int s : size) denom *= s;
  return factorial(static_cast<unsigned>(parent.size())) / denom;
}

}  // namespace forestrep
