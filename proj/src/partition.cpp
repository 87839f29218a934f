#include "forestrep/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace forestrep {

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer stirling2(unsigned n, unsigned k) {
  // S(i, j) = j S(i-1, j) + S(i-1, j-1), rolled over i.
  std::vector<Integer> row(k + 1, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = std::min(i, k); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

Integer power(unsigned base, unsigned exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  finish();
}

void Partition::finish() {
  weight_ = 0;
  mult_.assign(static_cast<std::size_t>(largest()) + 1, 0);
  for (int p : parts_) {
    weight_ += p;
    ++mult_[static_cast<std::size_t>(p)];
  }
}

int Partition::multiplicity(int size) const {
  if (size <= 0 || size >= static_cast<int>(mult_.size())) return 0;
  return mult_[static_cast<std::size_t>(size)];
}

Partition Partition::scaled(int factor) const {
  if (factor <= 0) throw std::invalid_argument("scale factor must be positive");
  Partition r = *this;
  for (int& p : r.parts_) p *= factor;
  r.finish();
  return r;
}

Partition Partition::joined(const Partition& other) const {
  Partition r;
  r.parts_.resize(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(), r.parts_.begin(),
             std::greater<>());
  r.finish();
  return r;
}

std::string Partition::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

Partition Partition::parse(const std::string& text) {
  std::string body = text;
  auto strip = [](std::string& s) {
    s.erase(0, s.find_first_not_of(" \t"));
    s.erase(s.find_last_not_of(" \t") + 1);
  };
  strip(body);
  if (body.size() >= 2 && ((body.front() == '[' && body.back() == ']') ||
                           (body.front() == '(' && body.back() == ')')))
    body = body.substr(1, body.size() - 2);
  std::vector<int> parts;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    strip(item);
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition: " + text);
    }
    if (used != item.size()) throw std::invalid_argument("bad partition: " + text);
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
  return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(), a.parts_.begin(),
                                                a.parts_.end());
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Partition> partitions_with_parts(int n, int k) {
  std::vector<Partition> out;
  if (k < 0 || k > n) return out;
  for (auto& p : partitions_of(n))
    if (static_cast<int>(p.length()) == k) out.push_back(std::move(p));
  return out;
}

Integer z_of(const Partition& rho) {
  Integer z = 1;
  const auto& m = rho.multiplicities();
  for (std::size_t i = 1; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    z *= power(static_cast<unsigned>(i), static_cast<unsigned>(m[i]));
    z *= factorial(static_cast<unsigned>(m[i]));
  }
  return z;
}

Integer class_size(const Partition& rho) {
  return factorial(static_cast<unsigned>(rho.weight())) / z_of(rho);
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols;
  for (int j = 1; j <= lambda.largest(); ++j) {
    int c = 0;
    for (int p : lambda.parts())
      if (p >= j) ++c;
    cols.push_back(c);
  }
  return Partition(std::move(cols));
}

Partition row_partition(int n) { return n == 0 ? Partition{} : Partition{n}; }

Partition column_partition(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

bool repeated_parts_even(const Partition& lambda) {
  const auto& m = lambda.multiplicities();
  for (std::size_t i = 1; i < m.size(); ++i)
    if (m[i] >= 2 && i % 2 == 1) return false;
  return true;
}

}  // namespace forestrep
