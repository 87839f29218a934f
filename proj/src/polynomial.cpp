#include "forestrep/polynomial.hpp"

namespace forestrep {

Polynomial Polynomial::constant(int variables, const Rational& c) {
  Polynomial p(variables);
  p.add(Exponent(static_cast<std::size_t>(variables), 0), c);
  return p;
}

Polynomial Polynomial::power_sum(int variables, int k) {
  Polynomial p(variables);
  for (int i = 0; i < variables; ++i) {
    Exponent e(static_cast<std::size_t>(variables), 0);
    e[static_cast<std::size_t>(i)] = k;
    p.add(e, 1);
  }
  return p;
}

Polynomial Polynomial::of(const SymFunc& f, int variables) {
  Polynomial out(variables);
  for (const auto& [rho, c] : f.terms()) {
    Polynomial term = constant(variables, c);
    for (int part : rho.parts()) term = term * power_sum(variables, part);
    out = out + term;
  }
  return out;
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::dilated(int k) const {
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent scaled = e;
    for (auto& x : scaled) x *= k;
    out.add(scaled, c);
  }
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  for (const auto& [e, c] : b.terms_) out.add(e, c);
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out(a.vars_);
  Polynomial::Exponent e(static_cast<std::size_t>(a.vars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add(e, ca * cb);
    }
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  Polynomial out(a.vars_);
  for (const auto& [e, v] : a.terms_) out.add(e, c * v);
  return out;
}

Polynomial plethysm_by_substitution(const SymFunc& f, const SymFunc& g, int variables) {
  const Polynomial inner = Polynomial::of(g, variables);
  std::map<int, Polynomial> dilations;
  Polynomial out(variables);
  for (const auto& [rho, c] : f.terms()) {
    Polynomial term = Polynomial::constant(variables, c);
    for (int part : rho.parts()) {
      auto it = dilations.find(part);
      if (it == dilations.end()) it = dilations.emplace(part, inner.dilated(part)).first;
      term = term * it->second;
    }
    out = out + term;
  }
  return out;
}

}  // namespace forestrep
