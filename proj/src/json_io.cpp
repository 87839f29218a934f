#include "forestrep/json_io.hpp"

#include <stdexcept>

namespace forestrep {

Json to_json(const Partition& lambda) { return Json(lambda.parts()); }

Partition partition_from_json(const Json& j) { return Partition(j.get<std::vector<int>>()); }

Json to_json(const PartialTransformation& f) {
  return Json{{"n", f.n()}, {"image", std::vector<int>(f.image().begin(), f.image().end())}};
}

PartialTransformation transformation_from_json(const Json& j) {
  PartialTransformation f(j.at("image").get<std::vector<int>>());
  if (j.contains("n") && j.at("n").get<int>() != f.n()) throw std::invalid_argument("transformation: n disagrees with image");
  return f;
}

Json to_json(const Odun& o) {
  Json trees = Json::array();
  for (const auto& [repr, mult] : o.groups()) trees.push_back(Json{{"repr", repr}, {"mult", mult}});
  return Json{{"trees", trees}};
}

Odun odun_from_json(const Json& j) {
  std::vector<std::string> trees;
  for (const auto& t : j.at("trees")) {
    const int mult = t.value("mult", 1);
    if (mult < 0) throw std::invalid_argument("odun: negative multiplicity");
    for (int i = 0; i < mult; ++i) trees.push_back(t.at("repr").get<std::string>());
  }
  return Odun::from_trees(std::move(trees));
}

namespace {

// Multiplicities may exceed 64 bits in principle; small ones stay numbers.
Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<long>());
}

}  // namespace

Json to_json(const IrredDecomposition& d) {
  Json out = Json::array();
  for (const auto& [lambda, m] : d.multiplicities)
    out.push_back(Json{{"partition", to_json(lambda)}, {"mult", integer_json(m)}});
  return out;
}

IrredDecomposition decomposition_from_json(int n, const Json& j) {
  IrredDecomposition d;
  d.n = n;
  for (const auto& entry : j) {
    Partition lambda = partition_from_json(entry.at("partition"));
    if (lambda.weight() != n) throw std::invalid_argument("decomposition: " + lambda.str() + " is not a partition of " + std::to_string(n));
    Integer m = integer_from_json(entry.at("mult"));
    if (m != 0) d.multiplicities[lambda] += m;
  }
  return d;
}

Json to_json(const ClassFunction& chi) {
  Json out = Json::array();
  for (const auto& [rho, v] : chi.values()) out.push_back(Json{{"cycle_type", to_json(rho)}, {"value", v.get_str()}});
  return out;
}

ClassFunction class_function_from_json(int n, const Json& j) {
  ClassFunction chi(n);
  for (const auto& entry : j)
    chi.set(partition_from_json(entry.at("cycle_type")), parse_rational(entry.at("value").get<std::string>()));
  return chi;
}

Json to_json(const SymFunc& f, Basis basis) {
  std::map<Partition, Rational> terms;
  std::string name;
  switch (basis) {
    case Basis::power_sum:
      terms = f.terms();
      name = "p";
      break;
    case Basis::schur:
      terms = to_schur(f);
      name = "s";
      break;
    case Basis::monomial:
      terms = to_monomial(f);
      name = "m";
      break;
  }
  Json list = Json::array();
  for (const auto& [lambda, c] : terms) list.push_back(Json{{"partition", to_json(lambda)}, {"coeff", c.get_str()}});
  return Json{{"basis", name}, {"terms", list}};
}

SymFunc symfunc_from_json(const Json& j) {
  std::map<Partition, Rational> terms;
  for (const auto& t : j.at("terms"))
    terms[partition_from_json(t.at("partition"))] += parse_rational(t.at("coeff").get<std::string>());
  const auto basis = j.at("basis").get<std::string>();
  if (basis == "p") return SymFunc(std::move(terms));
  if (basis == "s") return from_schur(terms);
  if (basis == "m") return from_monomial(terms);
  throw std::invalid_argument("unknown basis \"" + basis + "\"");
}

}  // namespace forestrep
