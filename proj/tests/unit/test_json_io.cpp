#include <doctest.h>

#include "forestrep/forest_reps.hpp"
#include "forestrep/json_io.hpp"

using namespace forestrep;

TEST_CASE("value types survive a JSON round trip") {
  const Partition lambda{4, 2, 2, 1};
  CHECK(partition_from_json(to_json(lambda)) == lambda);
  CHECK(to_json(lambda).dump() == "[4,2,2,1]");

  const PartialTransformation f({0, 1, 2});
  CHECK(transformation_from_json(to_json(f)) == f);
  CHECK(to_json(f).dump() == R"({"n":3,"image":[0,1,2]})");

  const Odun o = Odun::parse("(())(())()");
  CHECK(odun_from_json(to_json(o)) == o);

  const auto d = decompose_Ckn(5, 3, Method::plethysm);
  CHECK(decomposition_from_json(5, to_json(d)) == d);

  const ClassFunction chi = fixed_point_character(4, 2);
  CHECK(class_function_from_json(4, to_json(chi)) == chi);

  const SymFunc s = schur({2, 1}) + ratio(-3, 7) * power_sum(Partition{3});
  for (Basis b : {Basis::power_sum, Basis::schur, Basis::monomial}) CHECK(symfunc_from_json(to_json(s, b)) == s);
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS(partition_from_json(Json::parse("[2,0]")));
  CHECK(partition_from_json(Json::parse("[1,2]")) == Partition{2, 1});
  CHECK_THROWS(symfunc_from_json(Json::parse(R"({"basis":"q","terms":[]})")));
  CHECK_THROWS(transformation_from_json(Json::parse(R"({"n":2,"image":[0]})")));
}
