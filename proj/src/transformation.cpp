#include "forestrep/transformation.hpp"

#include <algorithm>
#include <stdexcept>

namespace forestrep {

PartialTransformation::PartialTransformation(std::vector<int> image) : image_(std::move(image)) {
  const int n = static_cast<int>(image_.size());
  for (int v : image_)
    if (v < 0 || v > n)
      throw std::invalid_argument("partial transformation entry out of range 0.." + std::to_string(n));
}

PartialTransformation PartialTransformation::zero(int n) {
  return PartialTransformation(std::vector<int>(static_cast<std::size_t>(n), 0));
}

PartialTransformation PartialTransformation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return PartialTransformation(std::move(v));
}

PartialTransformation PartialTransformation::parse(const std::string& text) {
  // Same bracketed comma list as partitions, but zeros are allowed and order is kept.
  std::string body;
  for (char c : text)
    if (c != '[' && c != ']' && c != ' ') body += c;
  std::vector<int> v;
  std::size_t start = 0;
  while (start <= body.size() && !body.empty()) {
    auto comma = body.find(',', start);
    auto item = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partial transformation: " + text);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return PartialTransformation(std::move(v));
}

int PartialTransformation::rank() const {
  return static_cast<int>(std::count_if(image_.begin(), image_.end(), [](int v) { return v != 0; }));
}

int PartialTransformation::image_size() const {
  std::vector<bool> seen(image_.size() + 1, false);
  int count = 0;
  for (int v : image_)
    if (v != 0 && !seen[static_cast<std::size_t>(v)]) {
      seen[static_cast<std::size_t>(v)] = true;
      ++count;
    }
  return count;
}

std::string PartialTransformation::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(image_[i]);
  }
  return s + "]";
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation of [" + std::to_string(n) + "]");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(int n, int i, int j) {
  auto w = identity(n);
  std::swap(w.images_[static_cast<std::size_t>(i - 1)], w.images_[static_cast<std::size_t>(j - 1)]);
  return w;
}

Permutation Permutation::representative(const Partition& cycle_type) {
  std::vector<int> v(static_cast<std::size_t>(cycle_type.weight()));
  int start = 1;
  for (int len : cycle_type.parts()) {
    for (int j = 0; j < len; ++j) v[static_cast<std::size_t>(start + j - 1)] = start + (j + 1) % len;
    start += len;
  }
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Partition Permutation::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j] - 1)) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition(std::move(lengths));
}

Permutation operator*(const Permutation& v, const Permutation& w) {
  if (v.n() != w.n()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> r(w.images_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = v(w.images_[i]);
  return Permutation(std::move(r));
}

PartialTransformation compose(const PartialTransformation& f, const PartialTransformation& g) {
  if (f.n() != g.n()) throw std::invalid_argument("compose: mismatched n");
  std::vector<int> r(static_cast<std::size_t>(f.n()));
  for (int i = 1; i <= f.n(); ++i) r[static_cast<std::size_t>(i - 1)] = f(g(i));
  return PartialTransformation(std::move(r));
}

bool is_nilpotent(std::span<const int> image) {
  // 0 = unvisited, 1 = on the current path, 2 = known to reach 0.
  const std::size_t n = image.size();
  std::vector<unsigned char> state(n + 1, 0);
  std::vector<std::size_t> path;
  for (std::size_t s = 1; s <= n; ++s) {
    std::size_t x = s;
    path.clear();
    while (x != 0 && state[x] == 0) {
      state[x] = 1;
      path.push_back(x);
      x = static_cast<std::size_t>(image[x - 1]);
    }
    if (x != 0 && state[x] == 1) return false;
    for (auto p : path) state[p] = 2;
  }
  return true;
}

bool is_nilpotent(const PartialTransformation& f) { return is_nilpotent(f.image()); }

PartialTransformation conjugate_action(const Permutation& w, const PartialTransformation& f) {
  if (w.n() != f.n()) throw std::invalid_argument("conjugate_action: mismatched n");
  std::vector<int> r(static_cast<std::size_t>(f.n()), 0);
  for (int i = 1; i <= f.n(); ++i) r[static_cast<std::size_t>(w(i) - 1)] = w(f(i));
  return PartialTransformation(std::move(r));
}

std::vector<std::vector<int>> enumeration_prefixes(int n) {
  std::vector<std::vector<int>> out{{0}};
  for (int v = 2; v <= n; ++v) out.push_back({v});
  return out;
}

std::vector<PartialTransformation> enumerate_nilpotent(int n, int k, std::size_t limit) {
  std::vector<PartialTransformation> out;
  // The visitor cannot stop the walk early; a full walk is cheap at the sizes this is used for.
  for_each_nilpotent(n, k, [&](std::span<const int> f) {
    if (limit == 0 || out.size() < limit) out.emplace_back(std::vector<int>(f.begin(), f.end()));
  });
  return out;
}

Integer count_nilpotent(int n, int k) {
  if (n < 1 || k < 0 || k > n) return 0;
  if (k == n) return 0;
  return binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(k)) *
         power(static_cast<unsigned>(n), static_cast<unsigned>(k));
}

Integer count_by_image_size(int n, int r) {
  if (n < 0 || r < 0 || r > n) return 0;
  return binomial(static_cast<unsigned>(n), static_cast<unsigned>(r)) *
         stirling2(static_cast<unsigned>(n), static_cast<unsigned>(r + 1)) * factorial(static_cast<unsigned>(r));
}

std::vector<ImageSizeCount> image_size_census(int n) {
  std::vector<long long> all(static_cast<std::size_t>(n) + 1, 0), nil(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> f(static_cast<std::size_t>(n), 0);
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  int stamp = 0;
  // Odometer over {0..n}^n.
  while (true) {
    ++stamp;
    int img = 0;
    for (int v : f)
      if (v != 0 && seen[static_cast<std::size_t>(v)] != stamp) {
        seen[static_cast<std::size_t>(v)] = stamp;
        ++img;
      }
    ++all[static_cast<std::size_t>(img)];
    if (is_nilpotent(std::span<const int>(f))) ++nil[static_cast<std::size_t>(img)];
    int i = 0;
    while (i < n && f[static_cast<std::size_t>(i)] == n) f[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
    ++f[static_cast<std::size_t>(i)];
  }
  std::vector<ImageSizeCount> out;
  for (int r = 0; r <= n; ++r)
    out.push_back({n, r, count_by_image_size(n, r), Integer(static_cast<long>(all[static_cast<std::size_t>(r)])),
                   Integer(static_cast<long>(nil[static_cast<std::size_t>(r)]))});
  return out;
}

}  // namespace forestrep
