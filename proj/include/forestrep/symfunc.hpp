#pragma once

#include <map>
#include <set>
#include <string>

#include "forestrep/characters.hpp"
#include "forestrep/numeric.hpp"
#include "forestrep/partition.hpp"

namespace forestrep {

/// An element of the ring of symmetric functions over Q, stored in the
/// power-sum basis: sum c_rho p_rho. Zero coefficients are never stored.
/// Mixed degrees are allowed; degree-specific queries split by degree.
class SymFunc {
 public:
  using Terms = std::map<Partition, Rational>;

  SymFunc() = default;
  explicit SymFunc(Terms power_sum_terms);
  static SymFunc constant(const Rational& c);

  const Terms& terms() const { return terms_; }
  Rational coefficient(const Partition& rho) const;
  Rational constant_term() const { return coefficient(Partition{}); }

  bool is_zero() const { return terms_.empty(); }
  std::set<int> degrees() const;
  bool is_homogeneous() const { return degrees().size() <= 1; }
  /// Throws std::logic_error if zero or of mixed degree.
  int degree() const;
  SymFunc homogeneous_part(int d) const;

  SymFunc& operator+=(const SymFunc& other);
  SymFunc& operator-=(const SymFunc& other);
  SymFunc& operator*=(const Rational& c);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator-(SymFunc a) { return a *= Rational(-1); }
  friend SymFunc operator*(const Rational& c, SymFunc a) { return a *= c; }
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
  friend bool operator==(const SymFunc&, const SymFunc&) = default;

 private:
  Terms terms_;
};

SymFunc power_sum(const Partition& rho);
SymFunc power_sum(int k);
/// s_lambda = sum_rho z_rho^{-1} chi^lambda_rho p_rho.
SymFunc schur(const Partition& lambda);
/// h_n = s_(n); h_0 = 1.
SymFunc complete(int n);
/// e_n = s_(1^n); e_0 = 1.
SymFunc elementary(int n);
SymFunc monomial(const Partition& lambda);

inline SymFunc multiply(const SymFunc& f, const SymFunc& g) { return f * g; }
SymFunc pow(const SymFunc& f, int exponent);

/// f o g, determined by p_m o p_n = p_{mn} and the homomorphism axioms.
/// Throws std::invalid_argument if g has a nonzero constant term.
SymFunc plethysm(const SymFunc& f, const SymFunc& g);

/// Coefficients in the Schur basis, every degree present in f.
std::map<Partition, Rational> to_schur(const SymFunc& f);
/// Coefficients in the monomial basis (coefficient of x^mu).
std::map<Partition, Rational> to_monomial(const SymFunc& f);
SymFunc from_schur(const std::map<Partition, Rational>& coefficients);
SymFunc from_monomial(const std::map<Partition, Rational>& coefficients);

/// Coefficient of x^mu in p_rho.
Integer power_sum_monomial_coefficient(const Partition& rho, const Partition& mu);

/// K_{lambda mu}: coefficient of m_mu in s_lambda.
Integer kostka(const Partition& lambda, const Partition& mu);

/// Hall inner product: <p_rho, p_sigma> = z_rho delta.
Rational hall_inner_product(const SymFunc& f, const SymFunc& g);
/// <f, s_(1^n)> for the degree-n part of f.
Rational sign_coefficient(const SymFunc& f, int n);
/// <f, p_1^n> for the degree-n part of f.
Rational dimension_pairing(const SymFunc& f, int n);

SymFunc frobenius_ch(const ClassFunction& chi);
/// Throws std::invalid_argument if f has terms outside degree n.
ClassFunction inverse_frobenius(const SymFunc& f, int n);

/// c^lambda_{mu nu}: coefficient of s_lambda in s_mu s_nu.
Rational littlewood_richardson(const Partition& lambda, const Partition& mu, const Partition& nu);
/// gamma^lambda_{mu nu} = <chi^lambda, chi^mu chi^nu>.
Rational kronecker_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// s_lambda o (g + h) = sum c^lambda_{mu nu} (s_mu o g)(s_nu o h).
SymFunc plethysm_sum_rule(const Partition& lambda, const SymFunc& g, const SymFunc& h);
/// s_lambda o (g h) = sum_{mu, nu |- |lambda|} gamma^lambda_{mu nu} (s_mu o g)(s_nu o h).
SymFunc plethysm_product_rule(const Partition& lambda, const SymFunc& g, const SymFunc& h);
/// s_(n) o (g h) = sum_{lambda |- n} (s_lambda o g)(s_lambda o h).
SymFunc complete_product_rule(int n, const SymFunc& g, const SymFunc& h);
/// s_(1^n) o (g h) = sum_{lambda |- n} (s_lambda o g)(s_lambda' o h).
SymFunc elementary_product_rule(int n, const SymFunc& g, const SymFunc& h);

enum class Basis { power_sum, schur, monomial };

/// "s[3] + 2*s[2,1] + s[1,1,1]"; "0" for zero.
std::string format(const SymFunc& f, Basis basis = Basis::schur);
std::string format_terms(const std::map<Partition, Rational>& terms, char letter);

}  // namespace forestrep
