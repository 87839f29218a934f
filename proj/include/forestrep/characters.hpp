#pragma once

#include <map>
#include <string>
#include <vector>

#include "forestrep/numeric.hpp"
#include "forestrep/partition.hpp"

namespace forestrep {

/// A class function on S_n, keyed by cycle type. Every partition of n is
/// present exactly once.
class ClassFunction {
 public:
  /// The zero class function on S_n.
  explicit ClassFunction(int n);
  /// Throws std::invalid_argument unless the keys are exactly the partitions of n.
  ClassFunction(int n, std::map<Partition, Rational> values);

  int n() const { return n_; }
  const std::map<Partition, Rational>& values() const { return values_; }
  const Rational& at(const Partition& rho) const;
  void set(const Partition& rho, Rational value);

  bool is_zero() const;

  ClassFunction& operator+=(const ClassFunction& other);
  ClassFunction& operator-=(const ClassFunction& other);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  /// Pointwise product (the inner tensor product of representations).
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator*(const Rational& c, ClassFunction a);
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

 private:
  int n_;
  std::map<Partition, Rational> values_;
};

/// Multiplicities of irreducibles V_lambda, nonzero entries only.
struct IrredDecomposition {
  int n = 0;
  std::map<Partition, Integer> multiplicities;

  /// sum mult(lambda) * dim V_lambda.
  Integer degree() const;
  Integer multiplicity(const Partition& lambda) const;
  /// "V[3]^2 + V[2,1]^3 + V[1,1,1]"; "0" when empty.
  std::string str() const;
  static IrredDecomposition parse(int n, const std::string& text);

  friend bool operator==(const IrredDecomposition&, const IrredDecomposition&) = default;
};

/// chi^lambda at cycle type rho via Murnaghan-Nakayama (memoized).
Integer character_value(const Partition& lambda, const Partition& rho);

/// Rows indexed by lambda, columns by rho, both in partitions_of(n) order.
struct CharacterTable {
  int n = 0;
  std::vector<Partition> partitions;
  std::vector<std::vector<Integer>> values;
};
const CharacterTable& character_table(int n);

ClassFunction irreducible_character(const Partition& lambda);
Integer irreducible_dimension(const Partition& lambda);

/// The sign character (-1)^{n - length(rho)}.
ClassFunction sign_character(int n);

/// Number of f in C_{k,n} fixed under conjugation by a representative of
/// each cycle type. `threads` > 1 splits the enumeration by prefix.
ClassFunction fixed_point_character(int n, int k, int threads = 1);

/// (1/n!) sum_g alpha(g) beta(g); characters here are real.
Rational inner_product(const ClassFunction& alpha, const ClassFunction& beta);

/// Multiplicities <chi^lambda, alpha>. Throws IntegrityError on a
/// non-integral multiplicity, or on a negative one when `permutation_character`.
IrredDecomposition decompose(const ClassFunction& alpha, bool permutation_character = false);

/// Ind_{S_a x S_b}^{S_{a+b}} of alpha x beta, computed on the class-function side.
ClassFunction induction_product(const ClassFunction& alpha, const ClassFunction& beta);

}  // namespace forestrep
