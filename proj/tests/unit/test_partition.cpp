#include <doctest.h>

#include "forestrep/partition.hpp"

using namespace forestrep;

TEST_CASE("partitions_of lists each partition once, in table order") {
  CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
  CHECK(partitions_of(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
  CHECK(partitions_of(6).size() == 11);
  // 1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42
  const std::vector<std::size_t> p = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == p[static_cast<std::size_t>(n)]);
  for (int n = 1; n <= 8; ++n) {
    auto parts = partitions_of(n);
    for (std::size_t i = 1; i < parts.size(); ++i) CHECK(parts[i - 1] < parts[i]);
  }
}

TEST_CASE("partitions_with_parts") {
  CHECK(partitions_with_parts(4, 2) == std::vector<Partition>{{3, 1}, {2, 2}});
  CHECK(partitions_with_parts(5, 2) == std::vector<Partition>{{4, 1}, {3, 2}});
  for (int n = 1; n <= 7; ++n) {
    CHECK(partitions_with_parts(n, n) == std::vector<Partition>{column_partition(n)});
    std::size_t total = 0;
    for (int k = 1; k <= n; ++k) total += partitions_with_parts(n, k).size();
    CHECK(total == partitions_of(n).size());
  }
  CHECK(partitions_with_parts(3, 4).empty());
}

TEST_CASE("z and class sizes") {
  CHECK(z_of({1, 1, 1}) == 6);
  CHECK(z_of({2, 1}) == 2);
  CHECK(class_size({2, 1}) == 3);
  CHECK(z_of({3}) == 3);
  CHECK(class_size({3}) == 2);
  for (int n = 1; n <= 8; ++n) {
    Integer total = 0;
    for (const auto& rho : partitions_of(n)) total += class_size(rho);
    CHECK(total == factorial(static_cast<unsigned>(n)));
  }
}

TEST_CASE("conjugate") {
  CHECK(conjugate(row_partition(5)) == column_partition(5));
  CHECK(conjugate({2, 1}) == Partition{2, 1});
  CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
  for (const auto& lambda : partitions_of(7)) CHECK(conjugate(conjugate(lambda)) == lambda);
}

TEST_CASE("integer helpers") {
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(4, 3) == 6);
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(5, 0) == 0);
  for (unsigned n = 1; n <= 9; ++n) CHECK(binomial(n - 1, n - 1) == 1);
  CHECK(binomial(7, 4) == 35);
  CHECK(power(8, 4) == 4096);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("partition text form and construction") {
  CHECK(Partition{1, 3, 1}.str() == "[3,1,1]");
  CHECK(Partition{}.str() == "[]");
  CHECK(Partition::parse("[2,2,1]") == Partition{2, 2, 1});
  CHECK(Partition::parse("(4,1)") == Partition{4, 1});
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("[2,x]"), std::invalid_argument);
  const Partition p{3, 1, 1};
  CHECK(p.weight() == 5);
  CHECK(p.multiplicity(1) == 2);
  CHECK(p.multiplicity(2) == 0);
  CHECK(p.scaled(2) == Partition{6, 2, 2});
  CHECK(p.joined({2}) == Partition{3, 2, 1, 1});
  CHECK(repeated_parts_even({2, 2}));
  CHECK(!repeated_parts_even({1, 1}));
  CHECK(repeated_parts_even({3, 1}));
}
