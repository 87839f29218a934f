#include "forestrep/symfunc.hpp"

#include <functional>
#include <stdexcept>

#include "forestrep/memo.hpp"

namespace forestrep {

SymFunc::SymFunc(Terms power_sum_terms) : terms_(std::move(power_sum_terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

SymFunc SymFunc::constant(const Rational& c) { return SymFunc(Terms{{Partition{}, c}}); }

Rational SymFunc::coefficient(const Partition& rho) const {
  auto it = terms_.find(rho);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<int> SymFunc::degrees() const {
  std::set<int> d;
  for (const auto& [rho, c] : terms_) d.insert(rho.weight());
  return d;
}

int SymFunc::degree() const {
  auto d = degrees();
  if (d.size() != 1) throw std::logic_error("symmetric function is zero or not homogeneous");
  return *d.begin();
}

SymFunc SymFunc::homogeneous_part(int d) const {
  Terms t;
  for (const auto& [rho, c] : terms_)
    if (rho.weight() == d) t.emplace(rho, c);
  return SymFunc(std::move(t));
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
  for (const auto& [rho, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(rho, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) {
  for (const auto& [rho, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(rho, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

SymFunc& SymFunc::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [rho, v] : terms_) v *= c;
  return *this;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
  SymFunc::Terms out;
  for (const auto& [r1, c1] : a.terms_)
    for (const auto& [r2, c2] : b.terms_) out[r1.joined(r2)] += c1 * c2;
  return SymFunc(std::move(out));
}

SymFunc power_sum(const Partition& rho) { return SymFunc(SymFunc::Terms{{rho, 1}}); }

SymFunc power_sum(int k) { return power_sum(Partition{k}); }

SymFunc schur(const Partition& lambda) {
  static ConcurrentMemo<Partition, SymFunc> memo;
  return memo.get_or_compute(lambda, [&] {
    SymFunc::Terms t;
    for (const auto& rho : partitions_of(lambda.weight()))
      t.emplace(rho, Rational(character_value(lambda, rho)) / Rational(z_of(rho)));
    return SymFunc(std::move(t));
  });
}

SymFunc complete(int n) { return schur(row_partition(n)); }

SymFunc elementary(int n) { return schur(column_partition(n)); }

SymFunc pow(const SymFunc& f, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  SymFunc r = SymFunc::constant(1);
  for (int i = 0; i < exponent; ++i) r = r * f;
  return r;
}

SymFunc plethysm(const SymFunc& f, const SymFunc& g) {
  if (g.constant_term() != 0) throw std::invalid_argument("plethysm: inner argument has a constant term");
  // p_m o g dilates every power-sum index of g by m.
  std::map<int, SymFunc> dilated;
  auto p_m_of_g = [&](int m) -> const SymFunc& {
    auto it = dilated.find(m);
    if (it != dilated.end()) return it->second;
    SymFunc::Terms t;
    for (const auto& [mu, c] : g.terms()) t.emplace(mu.scaled(m), c);
    return dilated.emplace(m, SymFunc(std::move(t))).first->second;
  };
  SymFunc result;
  for (const auto& [rho, c] : f.terms()) {
    SymFunc term = SymFunc::constant(c);
    for (int part : rho.parts()) term = term * p_m_of_g(part);
    result += term;
  }
  return result;
}

std::map<Partition, Rational> to_schur(const SymFunc& f) {
  std::map<Partition, Rational> out;
  for (int d : f.degrees()) {
    const auto& table = character_table(d);
    for (std::size_t i = 0; i < table.partitions.size(); ++i) {
      Rational c = 0;
      for (std::size_t j = 0; j < table.partitions.size(); ++j) {
        const Rational coeff = f.coefficient(table.partitions[j]);
        if (coeff != 0) c += coeff * Rational(table.values[i][j]);
      }
      if (c != 0) out.emplace(table.partitions[i], c);
    }
  }
  return out;
}

SymFunc from_schur(const std::map<Partition, Rational>& coefficients) {
  SymFunc f;
  for (const auto& [lambda, c] : coefficients) f += c * schur(lambda);
  return f;
}

namespace {

Integer count_placements(const std::vector<int>& parts, std::size_t index, std::vector<int>& room) {
  if (index == parts.size()) {
    for (int r : room)
      if (r != 0) return 0;
    return 1;
  }
  Integer total = 0;
  for (auto& r : room) {
    if (r < parts[index]) continue;
    r -= parts[index];
    total += count_placements(parts, index + 1, room);
    r += parts[index];
  }
  return total;
}

}  // namespace

Integer power_sum_monomial_coefficient(const Partition& rho, const Partition& mu) {
  if (rho.weight() != mu.weight()) return 0;
  static ConcurrentMemo<std::pair<Partition, Partition>, Integer> memo;
  return memo.get_or_compute({rho, mu}, [&] {
    std::vector<int> room(mu.parts());
    return count_placements(rho.parts(), 0, room);
  });
}

std::map<Partition, Rational> to_monomial(const SymFunc& f) {
  std::map<Partition, Rational> out;
  for (int d : f.degrees()) {
    for (const auto& mu : partitions_of(d)) {
      Rational c = 0;
      for (const auto& [rho, coeff] : f.terms())
        if (rho.weight() == d) c += coeff * Rational(power_sum_monomial_coefficient(rho, mu));
      if (c != 0) out.emplace(mu, c);
    }
  }
  return out;
}

SymFunc from_monomial(const std::map<Partition, Rational>& coefficients) {
  std::map<int, std::map<Partition, Rational>> by_degree;
  for (const auto& [mu, c] : coefficients) by_degree[mu.weight()][mu] = c;

  SymFunc result;
  for (const auto& [d, target] : by_degree) {
    const auto parts = partitions_of(d);
    const std::size_t size = parts.size();
    // Rows: monomials mu; columns: power sums rho; augmented with the target.
    std::vector<std::vector<Rational>> a(size, std::vector<Rational>(size + 1, 0));
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) a[i][j] = Rational(power_sum_monomial_coefficient(parts[j], parts[i]));
      auto it = target.find(parts[i]);
      a[i][size] = it == target.end() ? Rational(0) : it->second;
    }
    for (std::size_t col = 0; col < size; ++col) {
      std::size_t pivot = col;
      while (pivot < size && a[pivot][col] == 0) ++pivot;
      if (pivot == size) throw IntegrityError("power-sum to monomial transition matrix is singular");
      std::swap(a[pivot], a[col]);
      for (std::size_t r = 0; r < size; ++r) {
        if (r == col || a[r][col] == 0) continue;
        const Rational factor = a[r][col] / a[col][col];
        for (std::size_t c = col; c <= size; ++c) a[r][c] -= factor * a[col][c];
      }
    }
    SymFunc::Terms t;
    for (std::size_t j = 0; j < size; ++j) t.emplace(parts[j], a[j][size] / a[j][j]);
    result += SymFunc(std::move(t));
  }
  return result;
}

SymFunc monomial(const Partition& lambda) { return from_monomial({{lambda, 1}}); }

Integer kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) return 0;
  auto m = to_monomial(schur(lambda));
  auto it = m.find(mu);
  if (it == m.end()) return 0;
  if (it->second.get_den() != 1) throw IntegrityError("non-integral Kostka number");
  return it->second.get_num();
}

Rational hall_inner_product(const SymFunc& f, const SymFunc& g) {
  Rational sum = 0;
  for (const auto& [rho, c] : f.terms()) {
    const Rational d = g.coefficient(rho);
    if (d != 0) sum += c * d * Rational(z_of(rho));
  }
  return sum;
}

Rational sign_coefficient(const SymFunc& f, int n) {
  // <p_rho, s_(1^n)> = sign of the class rho.
  Rational sum = 0;
  for (const auto& [rho, c] : f.terms())
    if (rho.weight() == n) sum += (n - static_cast<int>(rho.length())) % 2 == 0 ? c : -c;
  return sum;
}

Rational dimension_pairing(const SymFunc& f, int n) {
  const Partition ones = column_partition(n);
  return f.coefficient(ones) * Rational(z_of(ones));
}

SymFunc frobenius_ch(const ClassFunction& chi) {
  SymFunc::Terms t;
  for (const auto& [rho, v] : chi.values())
    if (v != 0) t.emplace(rho, v / Rational(z_of(rho)));
  return SymFunc(std::move(t));
}

ClassFunction inverse_frobenius(const SymFunc& f, int n) {
  ClassFunction chi(n);
  for (const auto& [rho, c] : f.terms()) {
    if (rho.weight() != n)
      throw std::invalid_argument("inverse_frobenius: term of degree " + std::to_string(rho.weight()) +
                                  " in a degree-" + std::to_string(n) + " request");
    chi.set(rho, c * Rational(z_of(rho)));
  }
  return chi;
}

Rational littlewood_richardson(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.weight() != mu.weight() + nu.weight()) return 0;
  auto s = to_schur(schur(mu) * schur(nu));
  auto it = s.find(lambda);
  return it == s.end() ? Rational(0) : it->second;
}

Rational kronecker_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.weight() != mu.weight() || mu.weight() != nu.weight()) return 0;
  return inner_product(irreducible_character(lambda), irreducible_character(mu) * irreducible_character(nu));
}

SymFunc plethysm_sum_rule(const Partition& lambda, const SymFunc& g, const SymFunc& h) {
  const int k = lambda.weight();
  SymFunc result;
  for (int i = 0; i <= k; ++i)
    for (const auto& mu : partitions_of(i))
      for (const auto& nu : partitions_of(k - i)) {
        const Rational c = littlewood_richardson(lambda, mu, nu);
        if (c != 0) result += c * (plethysm(schur(mu), g) * plethysm(schur(nu), h));
      }
  return result;
}

SymFunc plethysm_product_rule(const Partition& lambda, const SymFunc& g, const SymFunc& h) {
  const int k = lambda.weight();
  SymFunc result;
  for (const auto& mu : partitions_of(k))
    for (const auto& nu : partitions_of(k)) {
      const Rational c = kronecker_coefficient(lambda, mu, nu);
      if (c != 0) result += c * (plethysm(schur(mu), g) * plethysm(schur(nu), h));
    }
  return result;
}

SymFunc complete_product_rule(int n, const SymFunc& g, const SymFunc& h) {
  SymFunc result;
  for (const auto& lambda : partitions_of(n)) result += plethysm(schur(lambda), g) * plethysm(schur(lambda), h);
  return result;
}

SymFunc elementary_product_rule(int n, const SymFunc& g, const SymFunc& h) {
  SymFunc result;
  for (const auto& lambda : partitions_of(n))
    result += plethysm(schur(lambda), g) * plethysm(schur(conjugate(lambda)), h);
  return result;
}

std::string format_terms(const std::map<Partition, Rational>& terms, char letter) {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [lambda, c] : terms) {
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (s.empty())
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    if (mag != 1) s += mag.get_str() + "*";
    s += letter;
    s += lambda.str();
  }
  return s.empty() ? "0" : s;
}

std::string format(const SymFunc& f, Basis basis) {
  switch (basis) {
    case Basis::power_sum:
      return format_terms(f.terms(), 'p');
    case Basis::schur:
      return format_terms(to_schur(f), 's');
    case Basis::monomial:
      return format_terms(to_monomial(f), 'm');
  }
  return "0";
}

}  // namespace forestrep
