#pragma once

#include <map>
#include <vector>

#include "forestrep/numeric.hpp"
#include "forestrep/partition.hpp"
#include "forestrep/symfunc.hpp"

namespace forestrep {

/// A polynomial in a fixed number of variables, exponent vector -> coefficient.
/// Used as an independent check on the power-sum machinery: everything here
/// works on explicit monomials.
class Polynomial {
 public:
  using Exponent = std::vector<int>;

  explicit Polynomial(int variables) : vars_(variables) {}
  static Polynomial constant(int variables, const Rational& c);
  /// x_1^k + ... + x_N^k.
  static Polynomial power_sum(int variables, int k);
  /// f(x_1, ..., x_N) for f given in the power-sum basis.
  static Polynomial of(const SymFunc& f, int variables);

  int variables() const { return vars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  Rational coefficient(const Exponent& e) const;
  void add(const Exponent& e, const Rational& c);

  /// Every exponent scaled by k: p_k applied to the polynomial plethystically.
  Polynomial dilated(int k) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  int vars_;
  std::map<Exponent, Rational> terms_;
};

/// f o g computed by substituting the monomials of g (in N variables) into
/// the power sums of f: p_k o (sum c_j x^{a_j}) = sum c_j x^{k a_j}.
Polynomial plethysm_by_substitution(const SymFunc& f, const SymFunc& g, int variables);

}  // namespace forestrep
