#include "forestrep/golden_tables.hpp"

#include <stdexcept>

namespace forestrep {

const std::vector<std::string>& reference_table(int n) {
  static const std::map<int, std::vector<std::string>> tables = {
      {3,
       {
           "C(0,3) = V[3]",
           "C(1,3) = V[3] + V[2,1]^2 + V[1,1,1]",
           "C(2,3) = V[3]^2 + V[2,1]^3 + V[1,1,1]",
       }},
      {4,
       {
           "C(0,4) = V[4]",
           "C(1,4) = V[4] + V[3,1]^2 + V[2,2] + V[2,1,1]",
           "C(2,4) = V[4]^3 + V[3,1]^6 + V[2,2]^5 + V[2,1,1]^5 + V[1,1,1,1]^2",
           "C(3,4) = V[4]^4 + V[3,1]^9 + V[2,2]^5 + V[2,1,1]^7 + V[1,1,1,1]^2",
       }},
      {5,
       {
           "C(0,5) = V[5]",
           "C(1,5) = V[5] + V[4,1]^2 + V[3,2] + V[3,1,1]",
           "C(2,5) = V[5]^3 + V[4,1]^7 + V[3,2]^8 + V[3,1,1]^6 + V[2,2,1]^6 + V[2,1,1,1]^3 + V[1,1,1,1,1]",
           "C(3,5) = V[5]^6 + V[4,1]^20 + V[3,2]^22 + V[3,1,1]^25 + V[2,2,1]^19 + V[2,1,1,1]^14 + V[1,1,1,1,1]^3",
           "C(4,5) = V[5]^9 + V[4,1]^26 + V[3,2]^28 + V[3,1,1]^30 + V[2,2,1]^24 + V[2,1,1,1]^17 + V[1,1,1,1,1]^4",
       }},
      {6,
       {
           "C(0,6) = V[6]",
           "C(1,6) = V[6] + V[5,1]^2 + V[4,2] + V[4,1,1]",
           "C(2,6) = V[6]^3 + V[5,1]^7 + V[4,2]^9 + V[4,1,1]^6 + V[3,3]^3 + V[3,2,1]^7 + V[3,1,1,1]^3 + V[2,2,2]^2 + V[2,2,1,1] + V[2,1,1,1,1]",
           "C(3,6) = V[6]^7 + V[5,1]^23 + V[4,2]^35 + V[4,1,1]^33 + V[3,3]^19 + V[3,2,1]^47 + V[3,1,1,1]^24 + V[2,2,2]^14 + V[2,2,1,1]^21 + V[2,1,1,1,1]^9 + V[1,1,1,1,1,1]^2",
           "C(4,6) = V[6]^16 + V[5,1]^59 + V[4,2]^96 + V[4,1,1]^96 + V[3,3]^46 + V[3,2,1]^142 + V[3,1,1,1]^83 + V[2,2,2]^43 + V[2,2,1,1]^68 + V[2,1,1,1,1]^36 + V[1,1,1,1,1,1]^6",
           "C(5,6) = V[6]^20 + V[5,1]^75 + V[4,2]^114 + V[4,1,1]^117 + V[3,3]^59 + V[3,2,1]^170 + V[3,1,1,1]^96 + V[2,2,2]^49 + V[2,2,1,1]^83 + V[2,1,1,1,1]^42 + V[1,1,1,1,1,1]^8",
       }},
  };
  auto it = tables.find(n);
  if (it == tables.end()) throw std::out_of_range("no published table for n = " + std::to_string(n));
  return it->second;
}
const std::string& printed_cherry_decomposition() {
  static const std::string s = "V[2,1] + V[1,1,1]";
  return s;
}

const std::string& printed_c2n_cherry_summand() {
  static const std::string s = "V[2,1]^2 + V[1,1,1]";
  return s;
}

}  // namespace forestrep
