#include <doctest.h>

#include <cstdlib>
#include <filesystem>

#include "../support/oracles.hpp"
#include "forestrep/forest_reps.hpp"

using namespace forestrep;

namespace {

std::map<Partition, Rational> schur_of(const Odun& o) { return to_schur(frobenius_of_odun(o)); }

std::map<Partition, Rational> coefficients(std::initializer_list<std::pair<Partition, int>> items) {
  std::map<Partition, Rational> out;
  for (const auto& [lambda, c] : items) out[lambda] = c;
  return out;
}

// Fixed-point character of a single orbit, from the orbit itself.
ClassFunction orbit_character(const std::string& encoding) {
  const oracle::Map f = oracle::realize(encoding);
  const int n = static_cast<int>(f.size());
  std::set<oracle::Map> orbit;
  for (const auto& w : oracle::all_permutations(n)) orbit.insert(oracle::conjugate(w, f));
  ClassFunction chi(n);
  for (const auto& rho : partitions_of(n)) {
    std::vector<int> w(static_cast<std::size_t>(n));
    auto rep = Permutation::representative(rho);
    std::copy(rep.images().begin(), rep.images().end(), w.begin());
    long fixed = 0;
    for (const auto& g : orbit) fixed += oracle::conjugate(w, g) == g;
    chi.set(rho, fixed);
  }
  return chi;
}

}  // namespace

TEST_CASE("Frobenius characteristics of small oduns") {
  CHECK(frobenius_of_odun(Odun::parse("()")) == schur({1}));
  CHECK(frobenius_of_odun(Odun::chain(3)) == pow(power_sum(1), 3));
  CHECK(schur_of(Odun::parse("(())(())")) ==
        coefficients({{{4}, 1}, {{3, 1}, 1}, {{2, 2}, 2}, {{2, 1, 1}, 1}, {{1, 1, 1, 1}, 1}}));
  CHECK(schur_of(Odun::parse("(()())")) == coefficients({{{3}, 1}, {{2, 1}, 1}}));
}

TEST_CASE("F_o is the Frobenius image of the orbit character") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& o : enumerate_oduns(n))
      CHECK(inverse_frobenius(frobenius_of_odun(o), n) == orbit_character(o.repr()));
}

TEST_CASE("strata") {
  CHECK(character_of_Ckn(3, 2).at({1, 1, 1}) == 9);
  CHECK(character_of_Ckn(3, 2).at({2, 1}) == 1);
  CHECK(character_of_Ckn(3, 2).at({3}) == 0);
  CHECK(decompose_Ckn(4, 2, Method::plethysm).str() == "V[4]^3 + V[3,1]^6 + V[2,2]^5 + V[2,1,1]^5 + V[1,1,1,1]^2");
  for (int n = 1; n <= 6; ++n) {
    CHECK(character_of_Ckn(n, 0) == irreducible_character(row_partition(n)));
    CHECK(character_of_Ckn(n, n).is_zero());
    for (int k = 0; k < n; ++k) {
      CHECK(character_of_Ckn(n, k) == fixed_point_character(n, k));
      CHECK(stratum_frobenius(n, k, 2) == stratum_frobenius(n, k, 1));
    }
  }
}

TEST_CASE("adding a vertex: s_1 times all of C_{n-1} is the top stratum of C_n") {
  for (int n = 2; n <= 6; ++n) {
    SymFunc below;
    for (int k = 0; k < n - 1; ++k) below += stratum_frobenius(n - 1, k);
    CHECK(schur({1}) * below == stratum_frobenius(n, n - 1));
  }
}

TEST_CASE("disjoint unions of distinct trees multiply") {
  const std::vector<Odun> trees = {Odun::chain(2), Odun::parse("(()())"), Odun::chain(3), Odun::parse("((())())")};
  for (std::size_t i = 0; i < trees.size(); ++i)
    for (std::size_t j = i + 1; j < trees.size(); ++j)
      CHECK(frobenius_of_odun(trees[i].joined(trees[j])) == frobenius_of_odun(trees[i]) * frobenius_of_odun(trees[j]));
}

TEST_CASE("sign multiplicity") {
  CHECK(sign_multiplicity(Odun::parse("(())(())")) == 1);
  CHECK(sign_multiplicity(Odun::parse("(()())")) == 0);
  CHECK(sign_multiplicity(Odun::parse("((())(()))")) == 1);
  CHECK(sign_multiplicity_by_coefficient(Odun::parse("((())(()))")) == 1);
  for (int n = 1; n <= 7; ++n)
    for (const auto& o : enumerate_oduns(n)) {
      CHECK(sign_multiplicity_by_coefficient(o) == (oracle::even_automorphisms(o.repr()) ? 1 : 0));
      CHECK(sign_multiplicity(o) == sign_multiplicity_by_coefficient(o));
    }
  for (int n = 2; n <= 5; ++n)
    for (int k = 0; k < n; ++k) {
      const SignCount c = sign_in_stratum(n, k);
      CHECK(c.blossoming == c.coefficient);
      CHECK(Rational(c.coefficient) == oracle::sign_multiplicity_by_fixed_points(n, k));
    }
  CHECK(total_sign_multiplicity(3) == 2);
  CHECK(total_sign_multiplicity(5) == 8);
  CHECK(sign_in_top_stratum(6) == 8);
}

TEST_CASE("dimensions") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(dimension_of_odun(Odun::chain(n)) == factorial(static_cast<unsigned>(n)));
    CHECK(dimension_by_pairing(Odun::chain(n)) == factorial(static_cast<unsigned>(n)));
  }
  CHECK(dimension_of_odun(Odun::parse("(())()")) == 6);
  CHECK(dimension_of_odun(Odun::parse("(())(())")) == 12);
  for (int n = 1; n <= 6; ++n)
    for (const auto& o : enumerate_oduns(n)) {
      CHECK(dimension_of_odun(o) == dimension_by_pairing(o));
      CHECK(dimension_of_odun(o) == static_cast<long>(oracle::orbit_size(oracle::realize(o.repr()))));
    }
}

TEST_CASE("representation record") {
  const OdunRepresentation r = represent(Odun::parse("(())(())"));
  CHECK(r.dimension == 12);
  CHECK(r.decomposition.degree() == 12);
  CHECK(r.decomposition.multiplicity({2, 2}) == 2);
}

TEST_CASE("rook specialization") {
  CHECK(rook_frobenius(3, 1) == pow(power_sum(1), 3));
  CHECK(rook_term({2, 2}) == plethysm(complete(2), pow(power_sum(1), 2)));
  CHECK(to_schur(rook_term({2, 2})) ==
        coefficients({{{4}, 1}, {{3, 1}, 1}, {{2, 2}, 2}, {{2, 1, 1}, 1}, {{1, 1, 1, 1}, 1}}));
  CHECK(rook_sign_count(4, 2) == 2);
  CHECK(rook_sign_count(2, 2) == 0);
  for (int n = 1; n <= 8; ++n)
    for (int parts = 1; parts <= n; ++parts) {
      CHECK(rook_sign_count(n, parts) == rook_sign_count_by_coefficient(n, parts));
      SymFunc chains;
      for (const auto& lambda : partitions_with_parts(n, parts)) chains += frobenius_of_odun(Odun::chains(lambda));
      CHECK(rook_frobenius(n, parts) == chains);
    }
}

TEST_CASE("C_{1,n} closed form") {
  CHECK(proposition_check_C1n(4).str() == "V[4] + V[3,1]^2 + V[2,2] + V[2,1,1]");
  CHECK(proposition_check_C1n(5).str() == "V[5] + V[4,1]^2 + V[3,2] + V[3,1,1]");
  CHECK(proposition_check_C1n(7) == c1n_closed_form(7));
  CHECK_THROWS_AS(proposition_check_C1n(3), std::invalid_argument);
}

TEST_CASE("C_{2,n} from its parts") {
  const SymFunc cherry = frobenius_of_odun(Odun::parse("(()())"));
  for (int n = 4; n <= 7; ++n) CHECK(c2n_from_parts(n, cherry) == stratum_frobenius(n, 2));
}

TEST_CASE("table rendering") {
  CHECK(table_line(3, 1, decompose_Ckn(3, 1, Method::plethysm)) == "C(1,3) = V[3] + V[2,1]^2 + V[1,1,1]");
  CHECK(render_table(4, Method::plethysm) == render_table(4, Method::fixed_point));
}

TEST_CASE("Frobenius cache round trip") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& o : enumerate_oduns(n)) frobenius_of_odun(o);
  const auto dir = std::filesystem::temp_directory_path() / ("forestrep-cache-" + std::to_string(std::rand()));
  std::filesystem::create_directories(dir);
  const auto file = dir / "frobenius.json";
  save_frobenius_cache(file);
  CHECK(std::filesystem::file_size(file) > 0);
  const std::size_t before = frobenius_cache_size();
  load_frobenius_cache(file);
  CHECK(frobenius_cache_size() == before);
  load_frobenius_cache(dir / "missing.json");
  CHECK(frobenius_of_odun(Odun::chain(3)) == pow(power_sum(1), 3));
  std::filesystem::remove_all(dir);
}
