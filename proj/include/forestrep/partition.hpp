#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "forestrep/numeric.hpp"

namespace forestrep {

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// Ordering: by weight first, then reverse-lexicographic on the parts, so
/// that within one weight (n) sorts before (n-1,1) before ... before (1^n).
/// Ordered containers keyed by Partition therefore iterate in the table
/// order used everywhere in the library.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  /// Sorts the input; throws std::invalid_argument on a non-positive part.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  /// Number of parts equal to `size`.
  int multiplicity(int size) const;
  /// m_1, m_2, ... indexed by part size; index 0 unused.
  const std::vector<int>& multiplicities() const { return mult_; }

  /// Parts scaled by a positive factor: (2,1) -> (2k,k).
  Partition scaled(int factor) const;
  /// Multiset union of parts.
  Partition joined(const Partition& other) const;

  /// "[3,1,1]"; the empty partition prints "[]".
  std::string str() const;
  static Partition parse(const std::string& text);

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  void finish();

  std::vector<int> parts_;
  std::vector<int> mult_{0};
  int weight_ = 0;
};

/// All partitions of n, reverse-lexicographic, each exactly once.
std::vector<Partition> partitions_of(int n);

/// Partitions of n with exactly k parts; empty when k > n.
std::vector<Partition> partitions_with_parts(int n, int k);

/// z_rho = prod_i i^{m_i} m_i!.
Integer z_of(const Partition& rho);

/// Size of the conjugacy class of cycle type rho: |rho|! / z_rho.
Integer class_size(const Partition& rho);

/// Transpose of the Young diagram.
Partition conjugate(const Partition& lambda);

/// (n) and (1^n).
Partition row_partition(int n);
Partition column_partition(int n);

/// True if every part occurring at least twice is even.
bool repeated_parts_even(const Partition& lambda);

}  // namespace forestrep
