#pragma once

// Slow, independent re-implementations used as test oracles. Nothing here
// calls the enumeration, canonical-form, character or plethysm code of the
// library; only the value types (Partition, Rational, SymFunc terms) are shared.

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "forestrep/numeric.hpp"
#include "forestrep/partition.hpp"
#include "forestrep/symfunc.hpp"

namespace oracle {

using forestrep::Integer;
using forestrep::Rational;
using Map = std::vector<int>;  // one-line notation, 0 = undefined

inline bool nilpotent(const Map& f) {
  const int n = static_cast<int>(f.size());
  for (int start = 1; start <= n; ++start) {
    int x = start;
    for (int step = 0; step <= n && x != 0; ++step) x = f[static_cast<std::size_t>(x - 1)];
    if (x != 0) return false;
  }
  return true;
}

inline int rank(const Map& f) {
  return static_cast<int>(std::count_if(f.begin(), f.end(), [](int v) { return v != 0; }));
}

/// Odometer over all (n+1)^n partial maps.
inline void for_each_partial_map(int n, const std::function<void(const Map&)>& visit) {
  Map f(static_cast<std::size_t>(n), 0);
  while (true) {
    visit(f);
    std::size_t i = 0;
    while (i < f.size() && f[i] == n) f[i++] = 0;
    if (i == f.size()) return;
    ++f[i];
  }
}

inline std::vector<Map> nilpotent_maps(int n, int k) {
  std::vector<Map> out;
  for_each_partial_map(n, [&](const Map& f) {
    if (rank(f) == k && nilpotent(f)) out.push_back(f);
  });
  return out;
}

/// w f w^{-1}: sends w(i) to w(f(i)).
inline Map conjugate(const Map& w, const Map& f) {
  Map g(f.size(), 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    g[static_cast<std::size_t>(w[i] - 1)] = f[i] == 0 ? 0 : w[static_cast<std::size_t>(f[i] - 1)];
  return g;
}

inline std::vector<Map> all_permutations(int n) {
  Map w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Map> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline std::vector<int> cycle_type(const Map& w) {
  std::vector<int> lengths;
  std::vector<bool> seen(w.size(), false);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(w[j] - 1)) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

inline int sign(const Map& w) {
  const auto c = cycle_type(w);
  int even_cycles = 0;
  for (int len : c) even_cycles += (len % 2 == 0);
  return even_cycles % 2 ? -1 : 1;
}

/// Orbit of f under conjugation, by breadth-first search with the
/// generators (1 2) and (1 2 ... n).
inline std::size_t orbit_size(const Map& f) {
  const int n = static_cast<int>(f.size());
  if (n == 1) return 1;
  Map swap(static_cast<std::size_t>(n)), cycle(static_cast<std::size_t>(n));
  std::iota(swap.begin(), swap.end(), 1);
  std::swap(swap[0], swap[1]);
  for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = i + 2 > n ? 1 : i + 2;
  std::set<Map> seen{f};
  std::deque<Map> queue{f};
  while (!queue.empty()) {
    Map g = queue.front();
    queue.pop_front();
    for (const Map* w : {&swap, &cycle}) {
      Map h = conjugate(*w, g);
      if (seen.insert(h).second) queue.push_back(h);
    }
  }
  return seen.size();
}

/// A parent map realizing a parenthesized forest: vertices numbered in
/// order of their opening parenthesis, roots map to 0.
inline Map realize(const std::string& encoding) {
  Map f;
  std::vector<int> stack;
  for (char c : encoding) {
    if (c == '(') {
      f.push_back(stack.empty() ? 0 : stack.back());
      stack.push_back(static_cast<int>(f.size()));
    } else {
      stack.pop_back();
    }
  }
  return f;
}

/// Canonical string of the forest with parent map f, computed by sorting
/// child strings at every vertex (AHU), independent of the library's Odun.
inline std::string canonical(const Map& f) {
  const int n = static_cast<int>(f.size());
  std::vector<std::vector<int>> children(static_cast<std::size_t>(n + 1));
  for (int v = 1; v <= n; ++v) children[static_cast<std::size_t>(f[static_cast<std::size_t>(v - 1)])].push_back(v);
  std::function<std::string(int)> enc = [&](int v) {
    std::vector<std::string> parts;
    for (int c : children[static_cast<std::size_t>(v)]) parts.push_back(enc(c));
    std::sort(parts.rbegin(), parts.rend());
    std::string s;
    for (const auto& p : parts) s += p;
    return v == 0 ? s : "(" + s + ")";
  };
  return enc(0);
}

/// Canonical forests on n vertices, from all nilpotent maps (n <= 7).
inline std::set<std::string> forests_by_enumeration(int n) {
  std::set<std::string> out;
  for_each_partial_map(n, [&](const Map& f) {
    if (nilpotent(f)) out.insert(canonical(f));
  });
  return out;
}

/// Unlabeled rooted trees on n vertices: a root over every multiset of
/// smaller trees of total size n - 1.
inline const std::vector<std::string>& trees(int n);

inline std::vector<std::string> forests(int n) {
  std::set<std::string> out;
  std::function<void(int, int, std::size_t, std::vector<std::string>&)> rec =
      [&](int remaining, int max_size, std::size_t min_index, std::vector<std::string>& acc) {
        if (remaining == 0) {
          auto sorted = acc;
          std::sort(sorted.rbegin(), sorted.rend());
          std::string s;
          for (const auto& t : sorted) s += t;
          out.insert(s);
          return;
        }
        for (int size = std::min(remaining, max_size); size >= 1; --size) {
          const auto& ts = trees(size);
          for (std::size_t i = size == max_size ? min_index : 0; i < ts.size(); ++i) {
            acc.push_back(ts[i]);
            rec(remaining - size, size, i, acc);
            acc.pop_back();
          }
        }
      };
  std::vector<std::string> acc;
  rec(n, n, 0, acc);
  return {out.begin(), out.end()};
}

inline const std::vector<std::string>& trees(int n) {
  static std::map<int, std::vector<std::string>> memo;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  std::vector<std::string> out;
  if (n >= 1)
    for (const auto& f : forests(n - 1)) out.push_back("(" + f + ")");
  return memo.emplace(n, std::move(out)).first->second;
}

inline std::vector<std::string> split(const std::string& forest) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < forest.size(); ++i) {
    depth += forest[i] == '(' ? 1 : -1;
    if (depth == 0) {
      out.push_back(forest.substr(start, i + 1 - start));
      start = i + 1;
    }
  }
  return out;
}

/// True iff every automorphism of the forest is an even permutation. The
/// automorphism group is generated by exchanges of identical sibling
/// subtrees (the roots count as siblings); exchanging two copies of a
/// subtree on s vertices is a product of s transpositions.
inline bool even_automorphisms(const std::string& forest) {
  std::map<std::string, int> count;
  for (const auto& t : split(forest)) ++count[t];
  for (const auto& [t, m] : count) {
    const auto size = std::count(t.begin(), t.end(), '(');
    if (m >= 2 && size % 2 == 1) return false;
    if (!even_automorphisms(t.substr(1, t.size() - 2))) return false;
  }
  return true;
}

/// Sign multiplicity of the permutation module C_{k,n}, from fixed points
/// of every permutation: (1/n!) sum_w sign(w) |Fix(w)|.
inline Rational sign_multiplicity_by_fixed_points(int n, int k) {
  const auto maps = nilpotent_maps(n, k);
  Rational total = 0;
  long group = 0;
  for (const auto& w : all_permutations(n)) {
    ++group;
    long fixed = 0;
    for (const auto& f : maps)
      if (conjugate(w, f) == f) ++fixed;
    total += sign(w) * fixed;
  }
  return total / group;
}

/// Explicit polynomials in N variables.
using Exponent = std::vector<int>;
using Poly = std::map<Exponent, Rational>;

inline void add_to(Poly& p, const Exponent& e, const Rational& c) {
  Rational& slot = p[e];
  slot += c;
  if (slot == 0) p.erase(e);
}

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      add_to(out, e, ca * cb);
    }
  return out;
}

inline Poly one(int vars) { return Poly{{Exponent(static_cast<std::size_t>(vars), 0), Rational(1)}}; }

/// p_k o q: every monomial of q raised to the k-th power, coefficient kept.
inline Poly dilate(const Poly& q, int k) {
  Poly out;
  for (const auto& [e, c] : q) {
    Exponent s = e;
    for (auto& x : s) x *= k;
    add_to(out, s, c);
  }
  return out;
}

/// The polynomial x_1 + ... + x_N.
inline Poly variables(int vars) {
  Poly out;
  for (int i = 0; i < vars; ++i) {
    Exponent e(static_cast<std::size_t>(vars), 0);
    e[static_cast<std::size_t>(i)] = 1;
    out[e] = 1;
  }
  return out;
}

/// f(q) where f is given by power-sum coefficients: p_rho -> prod_i p_{rho_i} o q.
inline Poly substitute(const forestrep::SymFunc& f, const Poly& q, int vars) {
  Poly out;
  for (const auto& [rho, c] : f.terms()) {
    Poly term = one(vars);
    for (int part : rho.parts()) term = multiply(term, dilate(q, part));
    for (const auto& [e, v] : term) add_to(out, e, c * v);
  }
  return out;
}

/// f o g evaluated on N explicit variables.
inline Poly plethysm(const forestrep::SymFunc& f, const forestrep::SymFunc& g, int vars) {
  return substitute(f, substitute(g, variables(vars), vars), vars);
}

inline Poly expand(const forestrep::SymFunc& f, int vars) { return substitute(f, variables(vars), vars); }

}  // namespace oracle
