#include "forestrep/characters.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "forestrep/memo.hpp"
#include "forestrep/transformation.hpp"

namespace forestrep {

ClassFunction::ClassFunction(int n) : n_(n) {
  for (auto& rho : partitions_of(n)) values_.emplace(std::move(rho), 0);
}

ClassFunction::ClassFunction(int n, std::map<Partition, Rational> values) : n_(n), values_(std::move(values)) {
  auto expected = partitions_of(n);
  if (expected.size() != values_.size())
    throw std::invalid_argument("class function must have one value per cycle type of S_" + std::to_string(n));
  for (const auto& rho : expected)
    if (!values_.count(rho)) throw std::invalid_argument("class function is missing cycle type " + rho.str());
}

const Rational& ClassFunction::at(const Partition& rho) const {
  auto it = values_.find(rho);
  if (it == values_.end()) throw std::out_of_range("not a cycle type of S_" + std::to_string(n_) + ": " + rho.str());
  return it->second;
}

void ClassFunction::set(const Partition& rho, Rational value) {
  auto it = values_.find(rho);
  if (it == values_.end()) throw std::out_of_range("not a cycle type of S_" + std::to_string(n_) + ": " + rho.str());
  it->second = std::move(value);
}

bool ClassFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const auto& kv) { return kv.second == 0; });
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
  if (other.n_ != n_) throw std::invalid_argument("class functions on different groups");
  for (auto& [rho, v] : values_) v += other.values_.at(rho);
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other) {
  if (other.n_ != n_) throw std::invalid_argument("class functions on different groups");
  for (auto& [rho, v] : values_) v -= other.values_.at(rho);
  return *this;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("class functions on different groups");
  ClassFunction r = a;
  for (auto& [rho, v] : r.values_) v *= b.values_.at(rho);
  return r;
}

ClassFunction operator*(const Rational& c, ClassFunction a) {
  for (auto& [rho, v] : a.values_) v *= c;
  return a;
}

Integer IrredDecomposition::degree() const {
  Integer d = 0;
  for (const auto& [lambda, m] : multiplicities) d += m * irreducible_dimension(lambda);
  return d;
}

Integer IrredDecomposition::multiplicity(const Partition& lambda) const {
  auto it = multiplicities.find(lambda);
  return it == multiplicities.end() ? Integer(0) : it->second;
}

std::string IrredDecomposition::str() const {
  if (multiplicities.empty()) return "0";
  std::string s;
  for (const auto& [lambda, m] : multiplicities) {
    if (!s.empty()) s += " + ";
    s += "V" + lambda.str();
    if (m != 1) s += "^" + m.get_str();
  }
  return s;
}

IrredDecomposition IrredDecomposition::parse(int n, const std::string& text) {
  IrredDecomposition d;
  d.n = n;
  std::string body = text;
  if (body == "0") return d;
  std::size_t pos = 0;
  while (pos < body.size()) {
    auto v = body.find('V', pos);
    if (v == std::string::npos) break;
    auto close = body.find(']', v);
    if (close == std::string::npos) throw std::invalid_argument("bad decomposition: " + text);
    Partition lambda = Partition::parse(body.substr(v + 1, close - v));
    if (lambda.weight() != n) throw std::invalid_argument("partition " + lambda.str() + " is not of " + std::to_string(n));
    Integer m = 1;
    pos = close + 1;
    if (pos < body.size() && body[pos] == '^') {
      auto end = body.find_first_not_of("0123456789", pos + 1);
      m = Integer(body.substr(pos + 1, end == std::string::npos ? std::string::npos : end - pos - 1));
      pos = end == std::string::npos ? body.size() : end;
    }
    d.multiplicities[lambda] += m;
  }
  return d;
}

namespace {

// Beta numbers lambda_i + (l - 1 - i).
std::vector<int> beta_set(const Partition& lambda) {
  const int l = static_cast<int>(lambda.length());
  std::vector<int> beta(lambda.length());
  for (int i = 0; i < l; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (l - 1 - i);
  return beta;
}

Partition from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int l = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < l; ++i) {
    int p = beta[static_cast<std::size_t>(i)] - (l - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return Partition(std::move(parts));
}

ConcurrentMemo<std::pair<Partition, Partition>, Integer>& mn_memo() {
  static ConcurrentMemo<std::pair<Partition, Partition>, Integer> memo;
  return memo;
}

Integer murnaghan_nakayama(const Partition& lambda, const Partition& rho) {
  if (rho.empty()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, rho);
  if (auto hit = mn_memo().find(key)) return *hit;

  const int r = rho[0];
  Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
  auto beta = beta_set(lambda);
  Integer total = 0;
  // Removing a rim hook of length r moves one bead from b to b - r.
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    const int target = b - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int c : beta)
      if (c > target && c < b) ++between;
    auto moved = beta;
    moved[i] = target;
    Integer v = murnaghan_nakayama(from_beta(moved), rest);
    if (between % 2) total -= v;
    else total += v;
  }
  return mn_memo().insert(key, total);
}

}  // namespace

Integer character_value(const Partition& lambda, const Partition& rho) {
  if (lambda.weight() != rho.weight())
    throw std::invalid_argument("character_value: " + lambda.str() + " and " + rho.str() + " differ in weight");
  return murnaghan_nakayama(lambda, rho);
}

const CharacterTable& character_table(int n) {
  static std::mutex mu;
  static std::map<int, CharacterTable> tables;
  {
    std::lock_guard lock(mu);
    if (auto it = tables.find(n); it != tables.end()) return it->second;
  }
  CharacterTable t;
  t.n = n;
  t.partitions = partitions_of(n);
  for (const auto& lambda : t.partitions) {
    std::vector<Integer> row;
    for (const auto& rho : t.partitions) row.push_back(character_value(lambda, rho));
    t.values.push_back(std::move(row));
  }
  std::lock_guard lock(mu);
  return tables.try_emplace(n, std::move(t)).first->second;
}

ClassFunction irreducible_character(const Partition& lambda) {
  const int n = lambda.weight();
  ClassFunction chi(n);
  for (const auto& rho : partitions_of(n)) chi.set(rho, Rational(character_value(lambda, rho)));
  return chi;
}

Integer irreducible_dimension(const Partition& lambda) {
  return character_value(lambda, column_partition(lambda.weight()));
}

ClassFunction sign_character(int n) {
  ClassFunction eps(n);
  for (const auto& rho : partitions_of(n))
    eps.set(rho, (n - static_cast<int>(rho.length())) % 2 == 0 ? 1 : -1);
  return eps;
}

ClassFunction fixed_point_character(int n, int k, int threads) {
  const auto classes = partitions_of(n);
  ClassFunction chi(n);
  if (k < 0 || k >= n) return chi;

  std::vector<std::vector<int>> reps;
  for (const auto& rho : classes) {
    auto w = Permutation::representative(rho);
    reps.emplace_back(w.images().begin(), w.images().end());
  }

  auto count_with_prefix = [&](std::span<const int> prefix, std::vector<long long>& counts) {
    for_each_nilpotent(
        n, k,
        [&](std::span<const int> f) {
          for (std::size_t c = 0; c < reps.size(); ++c)
            if (is_fixed_by(reps[c], f)) ++counts[c];
        },
        prefix);
  };

  std::vector<long long> totals(classes.size(), 0);
  const auto prefixes = enumeration_prefixes(n);
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(prefixes.size())));
  if (workers == 1) {
    count_with_prefix({}, totals);
  } else {
    std::vector<std::vector<long long>> partial(static_cast<std::size_t>(workers),
                                                std::vector<long long>(classes.size(), 0));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t p = static_cast<std::size_t>(w); p < prefixes.size(); p += static_cast<std::size_t>(workers))
          count_with_prefix(prefixes[p], partial[static_cast<std::size_t>(w)]);
      });
    for (auto& t : pool) t.join();
    for (const auto& part : partial)
      for (std::size_t c = 0; c < totals.size(); ++c) totals[c] += part[c];
  }
  for (std::size_t c = 0; c < classes.size(); ++c) chi.set(classes[c], Rational(Integer(static_cast<long>(totals[c]))));
  return chi;
}

Rational inner_product(const ClassFunction& alpha, const ClassFunction& beta) {
  if (alpha.n() != beta.n()) throw std::invalid_argument("inner_product: mismatched n");
  Rational sum = 0;
  for (const auto& [rho, a] : alpha.values()) sum += a * beta.at(rho) / Rational(z_of(rho));
  return sum;
}

IrredDecomposition decompose(const ClassFunction& alpha, bool permutation_character) {
  IrredDecomposition d;
  d.n = alpha.n();
  for (const auto& lambda : partitions_of(alpha.n())) {
    Rational a = inner_product(irreducible_character(lambda), alpha);
    if (a.get_den() != 1)
      throw IntegrityError("non-integral multiplicity " + a.get_str() + " of V" + lambda.str());
    if (permutation_character && a < 0)
      throw IntegrityError("negative multiplicity " + a.get_str() + " of V" + lambda.str() +
                           " in a permutation character");
    if (a != 0) d.multiplicities.emplace(lambda, a.get_num());
  }
  return d;
}

ClassFunction induction_product(const ClassFunction& alpha, const ClassFunction& beta) {
  const int n = alpha.n() + beta.n();
  ClassFunction out(n);
  std::map<Partition, Rational> acc;
  for (const auto& [r1, a] : alpha.values()) {
    if (a == 0) continue;
    for (const auto& [r2, b] : beta.values()) {
      if (b == 0) continue;
      Partition rho = r1.joined(r2);
      acc[rho] += Rational(z_of(rho)) / Rational(z_of(r1) * z_of(r2)) * a * b;
    }
  }
  for (auto& [rho, v] : acc) out.set(rho, v);
  return out;
}

}  // namespace forestrep
