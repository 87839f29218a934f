#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "forestrep/numeric.hpp"
#include "forestrep/partition.hpp"

namespace forestrep {

/// A partial map f : A -> [n], A a subset of [n], in one-line notation.
/// Entry i (1-based) is f(i), with 0 meaning f is undefined at i.
class PartialTransformation {
 public:
  /// Throws std::invalid_argument unless every entry lies in 0..size.
  explicit PartialTransformation(std::vector<int> image);

  static PartialTransformation zero(int n);
  static PartialTransformation identity(int n);
  static PartialTransformation parse(const std::string& text);

  int n() const { return static_cast<int>(image_.size()); }
  /// f(i) for 1 <= i <= n; 0 when undefined. f(0) = 0.
  int operator()(int i) const { return i == 0 ? 0 : image_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> image() const { return image_; }

  /// Size of the domain (number of nonzero entries).
  int rank() const;
  /// |f(A)|.
  int image_size() const;

  /// "[3,3,5,0,5,0,1]"
  std::string str() const;

  friend bool operator==(const PartialTransformation&, const PartialTransformation&) = default;
  friend auto operator<=>(const PartialTransformation& a, const PartialTransformation& b) {
    return a.image_ <=> b.image_;
  }

 private:
  std::vector<int> image_;
};

/// A permutation of [n] in one-line notation (entry i is w(i), 1-based).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, int i, int j);
  /// Cycles of lengths rho_1 >= rho_2 >= ... filled with consecutive
  /// integers: (3,1) gives (1 2 3)(4).
  static Permutation representative(const Partition& cycle_type);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return i == 0 ? 0 : images_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;
  Partition cycle_type() const;

  /// (v * w)(i) = v(w(i)).
  friend Permutation operator*(const Permutation& v, const Permutation& w);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// (f o g)(i) = f(g(i)) where defined. Throws on mismatched n.
PartialTransformation compose(const PartialTransformation& f, const PartialTransformation& g);

/// True iff iterating f from every point reaches "undefined"; O(n).
bool is_nilpotent(const PartialTransformation& f);
bool is_nilpotent(std::span<const int> image);

/// w f w^{-1}: the result sends w(i) to w(f(i)).
PartialTransformation conjugate_action(const Permutation& w, const PartialTransformation& f);

/// True iff w f w^{-1} = f, i.e. f(w(i)) = w(f(i)) for every i.
inline bool is_fixed_by(std::span<const int> w, std::span<const int> f) {
  const std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i) {
    const int fi = f[i];
    const int lhs = f[static_cast<std::size_t>(w[i] - 1)];
    const int rhs = fi == 0 ? 0 : w[static_cast<std::size_t>(fi - 1)];
    if (lhs != rhs) return false;
  }
  return true;
}

namespace detail {

template <class Visitor>
struct NilpotentWalker {
  int n;
  int k;
  Visitor& visit;
  std::vector<int> f;

  // Would setting f(pos) = value close a cycle? Positions < pos are assigned.
  bool closes_cycle(int pos, int value) const {
    int x = value;
    while (x != 0 && x < pos) x = f[static_cast<std::size_t>(x - 1)];
    return x == pos;
  }

  void run(int pos, int used) {
    if (pos > n) {
      if (used == k) visit(std::span<const int>(f));
      return;
    }
    const int remaining = n - pos + 1;
    auto& slot = f[static_cast<std::size_t>(pos - 1)];
    if (k - used < remaining) {
      slot = 0;
      run(pos + 1, used);
    }
    if (used < k) {
      for (int v = 1; v <= n; ++v) {
        if (v == pos || closes_cycle(pos, v)) continue;
        slot = v;
        run(pos + 1, used + 1);
      }
      slot = 0;
    }
  }
};

}  // namespace detail

/// Calls visit(image) for every nilpotent partial transformation of rank k
/// on [n] whose one-line notation starts with `prefix`, in lexicographic
/// order. The span passed to the visitor is only valid during the call.
/// Disjoint prefixes cover disjoint parts of the search space.
template <class Visitor>
void for_each_nilpotent(int n, int k, Visitor&& visit, std::span<const int> prefix = {}) {
  if (n < 1 || k < 0 || k >= n || static_cast<int>(prefix.size()) > n) return;
  detail::NilpotentWalker<std::remove_reference_t<Visitor>> walker{n, k, visit,
                                                                    std::vector<int>(static_cast<std::size_t>(n), 0)};
  int used = 0;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    const int pos = static_cast<int>(i) + 1;
    const int v = prefix[i];
    if (v < 0 || v > n || v == pos) return;
    if (v != 0) {
      if (walker.closes_cycle(pos, v)) return;
      ++used;
    }
    walker.f[i] = v;
  }
  if (used > k || k - used > n - static_cast<int>(prefix.size())) return;
  walker.run(static_cast<int>(prefix.size()) + 1, used);
}

/// The possible first entries f(1) of a nilpotent map on [n]: 0, 2, ..., n.
/// Used to split enumeration across workers.
std::vector<std::vector<int>> enumeration_prefixes(int n);

/// Materialized C_{k,n}, lexicographic; empty for k >= n. `limit` caps
/// the number of elements returned (0 = no cap).
std::vector<PartialTransformation> enumerate_nilpotent(int n, int k, std::size_t limit = 0);

/// C(n-1, k) n^k.
Integer count_nilpotent(int n, int k);

/// Closed form C(n, r) S(n, r+1) r! for maps with |f(A)| = r.
Integer count_by_image_size(int n, int r);

struct ImageSizeCount {
  int n = 0;
  int r = 0;
  Integer closed_form;
  Integer all_maps;        ///< brute force over all (n+1)^n partial maps
  Integer nilpotent_maps;  ///< brute force restricted to nilpotent maps
};

/// Brute-force image-size census over all partial maps on [n], r = 0..n.
std::vector<ImageSizeCount> image_size_census(int n);

}  // namespace forestrep
