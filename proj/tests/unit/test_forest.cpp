#include <doctest.h>

#include <random>
#include <set>

#include "../support/oracles.hpp"
#include "forestrep/forest.hpp"

using namespace forestrep;

namespace {

Odun odun_of_map(std::vector<int> image) { return odun_of(forest_of(PartialTransformation(std::move(image)))); }

}  // namespace

TEST_CASE("forests of maps") {
  const auto isolated = forest_of(PartialTransformation::zero(4));
  CHECK(isolated.component_count() == 4);
  CHECK(isolated.roots() == std::vector<int>{1, 2, 3, 4});

  const auto cherry = forest_of(PartialTransformation({0, 1, 1}));
  CHECK(cherry.roots() == std::vector<int>{1});
  CHECK(cherry.children()[1] == std::vector<int>{2, 3});

  const auto chain = forest_of(PartialTransformation({0, 1, 2}));
  CHECK(chain.roots() == std::vector<int>{1});
  CHECK(chain.children()[1] == std::vector<int>{2});
  CHECK(chain.children()[2] == std::vector<int>{3});

  CHECK_THROWS_AS(forest_of(PartialTransformation({2, 1, 0})), std::invalid_argument);
  for (const auto& image : {std::vector<int>{0, 0, 0, 0}, {0, 1, 1}, {0, 1, 2}}) {
    const auto back = transformation_of(forest_of(PartialTransformation(image)));
    CHECK(std::vector<int>(back.image().begin(), back.image().end()) == image);
  }
}

TEST_CASE("canonical strings") {
  CHECK(odun_of_map({0, 1, 1}).repr() == "(()())");
  CHECK(odun_of_map({0, 1, 2}).repr() == "((()))");
  CHECK(odun_of_map({0, 1, 1}) == odun_of_map({2, 0, 2}));
  CHECK(odun_of_map({0, 1, 1}) != odun_of_map({0, 1, 2}));
  CHECK(odun_of_map({0, 1, 1}) == odun_of_map({3, 3, 0}));
  CHECK(Odun::parse("(())()") == Odun::parse("()(())"));
  CHECK(Odun::parse("((()())())").repr() == Odun::parse("(()(()()))").repr());
  CHECK(Odun::chain(3).repr() == "((()))");
  CHECK(Odun::chains({2, 1}).repr() == "()(())");
  CHECK_THROWS_AS(Odun::parse("(()"), std::invalid_argument);
  CHECK_THROWS_AS(Odun::parse("(x)"), std::invalid_argument);

  // Every relabeling of a shape yields the same string, and it agrees with
  // an independent AHU computation.
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    std::vector<int> parent(static_cast<std::size_t>(n), 0);
    for (int v = 2; v <= n; ++v)
      parent[static_cast<std::size_t>(v - 1)] = std::uniform_int_distribution<int>(0, v - 1)(rng);
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::shuffle(w.begin(), w.end(), rng);
    const auto relabeled = oracle::conjugate(w, parent);
    CHECK(odun_of_map(parent) == odun_of_map(relabeled));
    CHECK(odun_of_map(parent).repr() == oracle::canonical(parent));
  }
}

TEST_CASE("odun structure") {
  const Odun o = Odun::parse("(())(())()");
  CHECK(o.vertex_count() == 5);
  CHECK(o.component_count() == 3);
  CHECK(o.groups() == std::vector<std::pair<std::string, int>>{{"()", 1}, {"(())", 2}});
  CHECK(o.with_root().repr() == "(()(())(()))");
  CHECK(o.with_root().without_root() == o);
  CHECK_THROWS(o.without_root());
  CHECK(Odun::parse("()").joined(Odun::parse("(())")).repr() == "()(())");
}

TEST_CASE("odun census") {
  CHECK(enumerate_oduns(1).size() == 1);
  const auto trees3 = enumerate_oduns(3, 1);
  CHECK(std::set<std::string>{trees3[0].repr(), trees3[1].repr()} == std::set<std::string>{"((()))", "(()())"});
  std::set<std::string> two_components;
  for (const auto& o : enumerate_oduns(4, 2)) two_components.insert(o.repr());
  CHECK(two_components == std::set<std::string>{"()((()))", "()(()())", "(())(())"});

  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> lib;
    for (const auto& o : enumerate_oduns(n)) lib.insert(o.repr());
    CHECK(lib.size() == enumerate_oduns(n).size());
    CHECK(lib == oracle::forests_by_enumeration(n));
  }
}

TEST_CASE("rooted tree counts") {
  CHECK(count_rooted_trees(1) == 1);
  CHECK(count_rooted_trees(2) == 1);
  CHECK(count_rooted_trees(3) == 2);
  CHECK(count_rooted_trees(4) == 4);
  CHECK(count_rooted_trees(9) == 286);
  for (int n = 1; n <= 10; ++n) {
    CHECK(count_rooted_trees(n) == oracle::trees(n).size());
    CHECK(canonical_trees(n).size() == oracle::trees(n).size());
    if (n >= 2) CHECK(enumerate_oduns(n - 1).size() == oracle::trees(n).size());
  }
}

TEST_CASE("maximal terminal branches") {
  auto lengths_at = [](const char* tree) {
    std::multiset<std::pair<int, int>> out;
    for (const auto& b : maximal_terminal_branches(Odun::parse(tree))) out.insert({b.attachment, b.length});
    return out;
  };
  CHECK(maximal_terminal_branches(Odun::chain(4)) == std::vector<TerminalBranch>{{-1, 4}});
  CHECK(lengths_at("(()())") == std::multiset<std::pair<int, int>>{{0, 1}, {0, 1}});
  // A root carrying a chain of two and a leaf.
  CHECK(lengths_at("((())())") == std::multiset<std::pair<int, int>>{{0, 2}, {0, 1}});
  // The same pair one level down: both hang from vertex 1.
  CHECK(lengths_at("(((())()))") == std::multiset<std::pair<int, int>>{{1, 2}, {1, 1}});
  CHECK_THROWS_AS(maximal_terminal_branches(Odun::parse("()()")), std::invalid_argument);
}

TEST_CASE("blossoming") {
  CHECK(is_blossoming(Odun::chain(3)));
  CHECK(!is_blossoming(Odun::parse("(()())")));
  CHECK(is_blossoming(Odun::parse("(())(())")));
  CHECK(!is_blossoming(Odun::parse("()()")));
  CHECK(is_blossoming(Odun::parse("((())(()))")));
  CHECK(count_blossoming(3) == 2);
  CHECK(count_blossoming(5) == 8);
  for (int n = 1; n <= 10; ++n) {
    const auto s = blossoming_split(n);
    CHECK(s.without_isolated + s.with_isolated == count_blossoming(n));
  }
}

TEST_CASE("blossoming agrees with the automorphism parity test up to nine vertices") {
  for (int n = 1; n <= 9; ++n)
    for (const auto& f : oracle::forests(n)) CHECK(is_blossoming(Odun::parse(f)) == oracle::even_automorphisms(f));
}

TEST_CASE("blossoming departs from the parity test at ten vertices") {
  // Two copies of a five-vertex tree whose branches are even chains: the
  // branch test sees no odd pair, but swapping the copies is odd.
  const std::string f = "((())(()))((())(()))";
  CHECK(is_blossoming(Odun::parse(f)));
  CHECK(!oracle::even_automorphisms(f));
}

TEST_CASE("natural labelings and hook lengths") {
  for (int n = 1; n <= 6; ++n) CHECK(natural_labelings_count(Odun::chain(n)) == 1);
  CHECK(natural_labelings_count(Odun::parse("(()())")) == 2);
  CHECK(hook_length_value(Odun::parse("(()())")) == 2);
  const Odun joined = Odun::parse("((())((())))");
  CHECK(natural_labelings_count(joined) == hook_length_value(joined));
  for (int n = 1; n <= 7; ++n)
    for (const auto& t : canonical_trees(n)) CHECK(natural_labelings_count(Odun::parse(t)) == hook_length_value(Odun::parse(t)));
}
