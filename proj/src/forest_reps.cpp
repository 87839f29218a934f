#include "forestrep/forest_reps.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "forestrep/json_io.hpp"
#include "forestrep/memo.hpp"

namespace forestrep {

namespace {

ConcurrentMemo<std::string, SymFunc>& frobenius_memo() {
  static ConcurrentMemo<std::string, SymFunc> memo;
  return memo;
}

std::string_view children_of(std::string_view tree) { return tree.substr(1, tree.size() - 2); }

SymFunc forest_frobenius(const Odun& forest);

SymFunc tree_frobenius(const std::string& tree) {
  if (auto hit = frobenius_memo().find(tree)) return *hit;
  SymFunc f = power_sum(1) * forest_frobenius(Odun::parse(children_of(tree)));
  return frobenius_memo().insert(tree, std::move(f));
}

SymFunc forest_frobenius(const Odun& forest) {
  if (forest.empty()) return SymFunc::constant(1);
  if (auto hit = frobenius_memo().find(forest.repr())) return *hit;
  SymFunc f = SymFunc::constant(1);
  for (const auto& [tree, mult] : forest.groups()) f = f * plethysm(complete(mult), tree_frobenius(tree));
  return frobenius_memo().insert(forest.repr(), std::move(f));
}

template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, int threads, Fn&& fn) {
  std::vector<T> out(count);
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = static_cast<std::size_t>(w); i < count; i += static_cast<std::size_t>(workers)) out[i] = fn(i);
    });
  for (auto& t : pool) t.join();
  return out;
}

Integer symmetry_factor(const Odun& forest) {
  Integer d = 1;
  for (const auto& [tree, mult] : forest.groups()) {
    d *= factorial(static_cast<unsigned>(mult));
    const Integer inner = symmetry_factor(Odun::parse(children_of(tree)));
    for (int i = 0; i < mult; ++i) d *= inner;
  }
  return d;
}

Integer as_integer(const Rational& q, const std::string& what) {
  if (q.get_den() != 1) throw IntegrityError(what + " is not an integer: " + q.get_str());
  return q.get_num();
}

}  // namespace

SymFunc frobenius_of_odun(const Odun& o) { return forest_frobenius(o); }

std::size_t frobenius_cache_size() { return frobenius_memo().size(); }

void load_frobenius_cache(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return;
  const Json j = Json::parse(in);
  for (const auto& [key, value] : j.items()) {
    Odun o = Odun::parse(key);
    SymFunc f = symfunc_from_json(value);
    if (f.degree() != o.vertex_count())
      throw IntegrityError("cached Frobenius characteristic of " + key + " has the wrong degree");
    frobenius_memo().insert(o.repr(), std::move(f));
  }
}

void save_frobenius_cache(const std::filesystem::path& file) {
  Json j = Json::object();
  for (const auto& [key, f] : frobenius_memo().snapshot()) j[key] = to_json(f, Basis::power_sum);
  std::filesystem::create_directories(file.parent_path());
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << j.dump(1) << '\n';
}

OdunRepresentation represent(const Odun& o) {
  OdunRepresentation r{o, frobenius_of_odun(o), {}, dimension_of_odun(o)};
  const int n = o.vertex_count();
  r.decomposition.n = n;
  for (const auto& [lambda, c] : to_schur(r.frobenius)) {
    if (c.get_den() != 1 || c < 0)
      throw IntegrityError("odun " + o.repr() + " has multiplicity " + c.get_str() + " at V" + lambda.str());
    r.decomposition.multiplicities.emplace(lambda, c.get_num());
  }
  if (r.decomposition.degree() != r.dimension)
    throw IntegrityError("odun " + o.repr() + ": degree of decomposition differs from the dimension formula");
  return r;
}

SymFunc stratum_frobenius(int n, int k, int threads) {
  if (n < 1 || k < 0 || k >= n) return SymFunc();
  const auto oduns = enumerate_oduns(n, n - k);
  auto parts = parallel_map<SymFunc>(oduns.size(), threads, [&](std::size_t i) { return frobenius_of_odun(oduns[i]); });
  SymFunc total;
  for (const auto& f : parts) total += f;
  return total;
}

ClassFunction character_of_Ckn(int n, int k, int threads) {
  if (k < 0 || k >= n) return ClassFunction(n);
  return inverse_frobenius(stratum_frobenius(n, k, threads), n);
}

IrredDecomposition decompose_Ckn(int n, int k, Method method, int threads) {
  const ClassFunction chi =
      method == Method::fixed_point ? fixed_point_character(n, k, threads) : character_of_Ckn(n, k, threads);
  return decompose(chi, true);
}

int sign_multiplicity(const Odun& o) { return is_blossoming(o) ? 1 : 0; }

Integer sign_multiplicity_by_coefficient(const Odun& o) {
  return as_integer(sign_coefficient(frobenius_of_odun(o), o.vertex_count()), "sign multiplicity of " + o.repr());
}

SignCount sign_in_stratum(int n, int k) {
  SignCount c{0, 0};
  if (k < 0 || k >= n) return c;
  for (const auto& o : enumerate_oduns(n, n - k)) c.blossoming += sign_multiplicity(o);
  c.coefficient = as_integer(sign_coefficient(stratum_frobenius(n, k), n), "sign multiplicity");
  return c;
}

Integer total_sign_multiplicity(int n) {
  if (n < 2) throw std::invalid_argument("total_sign_multiplicity needs n >= 2");
  Integer total = 0;
  for (const auto& o : enumerate_oduns(n)) total += sign_multiplicity(o);
  return total;
}

Integer sign_in_top_stratum(int n) {
  if (n < 3) throw std::invalid_argument("sign_in_top_stratum needs n >= 3");
  // Trees on n vertices correspond to forests on n - 1 vertices by deleting the root.
  Integer total = 0;
  for (const auto& forest : enumerate_oduns(n - 1)) total += sign_multiplicity(forest.with_root());
  return total;
}

Integer dimension_of_odun(const Odun& o) {
  return factorial(static_cast<unsigned>(o.vertex_count())) / symmetry_factor(o);
}

Integer dimension_by_pairing(const Odun& o) {
  return as_integer(dimension_pairing(frobenius_of_odun(o), o.vertex_count()), "dimension of " + o.repr());
}

SymFunc rook_term(const Partition& lambda) {
  SymFunc f = SymFunc::constant(1);
  const auto& m = lambda.multiplicities();
  for (std::size_t i = 1; i < m.size(); ++i)
    if (m[i] > 0) f = f * plethysm(complete(m[i]), pow(power_sum(1), static_cast<int>(i)));
  return f;
}

SymFunc rook_frobenius(int n, int parts) {
  if (parts < 1 || parts > n) throw std::invalid_argument("rook_frobenius needs 1 <= parts <= n");
  SymFunc total;
  for (const auto& lambda : partitions_with_parts(n, parts)) total += rook_term(lambda);
  return total;
}

Integer rook_sign_count(int n, int parts) {
  if (parts < 1 || parts > n) throw std::invalid_argument("rook_sign_count needs 1 <= parts <= n");
  Integer count = 0;
  for (const auto& lambda : partitions_with_parts(n, parts))
    if (repeated_parts_even(lambda)) ++count;
  return count;
}

Integer rook_sign_count_by_coefficient(int n, int parts) {
  return as_integer(sign_coefficient(rook_frobenius(n, parts), n), "rook sign multiplicity");
}

IrredDecomposition c1n_closed_form(int n) {
  if (n < 4) throw std::invalid_argument("the closed form for C_{1,n} needs n >= 4");
  IrredDecomposition d;
  d.n = n;
  d.multiplicities[Partition{n}] = 1;
  d.multiplicities[Partition{n - 1, 1}] = 2;
  d.multiplicities[Partition{n - 2, 2}] = 1;
  d.multiplicities[Partition{n - 2, 1, 1}] = 1;
  return d;
}

IrredDecomposition proposition_check_C1n(int n) {
  const IrredDecomposition expected = c1n_closed_form(n);
  const IrredDecomposition computed = decompose_Ckn(n, 1, Method::plethysm);
  if (computed != expected)
    throw IntegrityError("C(1," + std::to_string(n) + "): computed " + computed.str() + ", closed form " + expected.str());
  return computed;
}

SymFunc c2n_from_parts(int n, const SymFunc& cherry) {
  if (n < 4) throw std::invalid_argument("c2n_from_parts needs n >= 4");
  const SymFunc p1 = power_sum(1);
  return (pow(p1, 3) + cherry) * complete(n - 3) + plethysm(complete(2), pow(p1, 2)) * complete(n - 4);
}

std::string table_line(int n, int k, const IrredDecomposition& d) {
  return "C(" + std::to_string(k) + "," + std::to_string(n) + ") = " + d.str();
}

std::vector<std::string> render_table(int n, Method method, int threads) {
  std::vector<std::string> lines;
  for (int k = 0; k < n; ++k) lines.push_back(table_line(n, k, decompose_Ckn(n, k, method, threads)));
  return lines;
}

}  // namespace forestrep
