#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "forestrep/characters.hpp"
#include "forestrep/forest.hpp"
#include "forestrep/symfunc.hpp"

namespace forestrep {

/// F_o for an odun o. A tree is s_(1) times F of the forest below its root;
/// a forest is the product over distinct component trees t, occurring i
/// times, of s_(i) o F_t. Memoized on canonical strings, safe to call from
/// several threads.
SymFunc frobenius_of_odun(const Odun& o);

std::size_t frobenius_cache_size();
/// The cache file is a JSON object mapping canonical strings to symmetric
/// functions in the power-sum basis. Loading merges; unknown files are ignored.
void load_frobenius_cache(const std::filesystem::path& file);
void save_frobenius_cache(const std::filesystem::path& file);

struct OdunRepresentation {
  Odun odun;
  SymFunc frobenius;
  IrredDecomposition decomposition;
  Integer dimension;
};
OdunRepresentation represent(const Odun& o);

/// Sum of F_o over the oduns of C_{k,n} (forests with n - k components).
SymFunc stratum_frobenius(int n, int k, int threads = 1);
/// inverse Frobenius of stratum_frobenius; zero character when k >= n.
ClassFunction character_of_Ckn(int n, int k, int threads = 1);

enum class Method { fixed_point, plethysm };
IrredDecomposition decompose_Ckn(int n, int k, Method method, int threads = 1);

/// 1 if o is blossoming, else 0.
int sign_multiplicity(const Odun& o);
/// <F_o, s_(1^n)> computed from the symmetric function.
Integer sign_multiplicity_by_coefficient(const Odun& o);

struct SignCount {
  Integer blossoming;   ///< number of blossoming oduns
  Integer coefficient;  ///< sum of <F_o, s_(1^n)>
};
/// Sign multiplicity in C_{k,n} by both routes.
SignCount sign_in_stratum(int n, int k);
/// Sum over all strata of C_n; n >= 2.
Integer total_sign_multiplicity(int n);
/// Sign multiplicity in C_{n-1,n}; n >= 3.
Integer sign_in_top_stratum(int n);

/// n! divided, at every vertex and at the virtual root joining the
/// components, by m! for each class of m identical child subtrees.
Integer dimension_of_odun(const Odun& o);
/// <F_o, p_1^n>.
Integer dimension_by_pairing(const Odun& o);

/// prod_i s_(m_i) o p_1^i for lambda = (1^{m_1} 2^{m_2} ...).
SymFunc rook_term(const Partition& lambda);
/// Sum of rook_term over partitions of n with `parts` parts.
SymFunc rook_frobenius(int n, int parts);
/// Partitions of n with `parts` parts whose repeated parts are all even.
Integer rook_sign_count(int n, int parts);
Integer rook_sign_count_by_coefficient(int n, int parts);

/// V_(n) + V_(n-1,1)^2 + V_(n-2,2) + V_(n-2,1,1) for n >= 4.
IrredDecomposition c1n_closed_form(int n);
/// Decomposition of C_{1,n} via oduns; throws IntegrityError if it differs
/// from c1n_closed_form(n), std::invalid_argument if n < 4.
IrredDecomposition proposition_check_C1n(int n);

/// C_{2,n} = (p_1^3 + F_cherry) h_{n-3} + (s_(2) o p_1^2) h_{n-4}, with the
/// cherry term supplied by the caller so that alternative values can be
/// tested against the tables. n >= 4.
SymFunc c2n_from_parts(int n, const SymFunc& cherry);

/// One line per k: "C(k,n) = V[...]^m + ...".
std::vector<std::string> render_table(int n, Method method, int threads = 1);
std::string table_line(int n, int k, const IrredDecomposition& d);

}  // namespace forestrep
