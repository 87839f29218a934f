#pragma once

#include <map>
#include <string>
#include <vector>

namespace forestrep {

/// Tabulated decompositions of C_{k,n}, k = 0..n-1, for 3 <= n <= 6, in the
/// format of table_line(). Throws std::out_of_range for other n.
const std::vector<std::string>& reference_table(int n);

/// The cherry character as it appears in the tabulated examples,
/// V[2,1] + V[1,1,1]. Inconsistent with the C_{2,3} line; kept so that the
/// inconsistency can be demonstrated rather than assumed.
const std::string& printed_cherry_decomposition();

/// The middle summand of the printed C_{2,n} expansion, before the
/// induction product with V_(n-3): V[2,1]^2 + V[1,1,1].
const std::string& printed_c2n_cherry_summand();

}  // namespace forestrep
