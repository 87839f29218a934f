// forestrep: command-line front end for the forest representation library.
//
// Exit status: 0 on success, 1 when a computed invariant fails, 2 on a usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "forestrep/forest_reps.hpp"
#include "forestrep/json_io.hpp"
#include "forestrep/verify.hpp"

using namespace forestrep;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "text";
  int threads = 1;
  unsigned seed = 20240601;
  bool force = false;
  std::size_t limit = 0;

  bool json() const { return format == "json"; }
};

constexpr int kEnumerationCap = 8;

void require_n(int n) {
  if (n < 1) throw UsageError("--n must be at least 1");
}

void require_k(int n, int k) {
  if (k < 0 || k > n - 1) throw UsageError("--k must lie in 0.." + std::to_string(n - 1));
}

void require_enumerable(const Globals& g, int n) {
  if (n > kEnumerationCap && !g.force)
    throw UsageError("n = " + std::to_string(n) + " exceeds the enumeration cap of " + std::to_string(kEnumerationCap) +
                     "; pass --force to run anyway");
}

Method parse_method(const std::string& s) {
  if (s == "fixed-point") return Method::fixed_point;
  if (s == "plethysm") return Method::plethysm;
  throw UsageError("--method must be fixed-point or plethysm");
}

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

int cmd_count(const Globals& g, int n, std::optional<int> k, bool brute) {
  require_n(n);
  if (brute) require_enumerable(g, n);
  auto count = [&](int kk) -> Integer {
    if (!brute) return count_nilpotent(n, kk);
    long c = 0;
    for_each_nilpotent(n, kk, [&](std::span<const int>) { ++c; });
    return c;
  };
  if (k) {
    require_k(n, *k);
    const Integer c = count(*k);
    if (g.json())
      std::cout << Json{{"n", n}, {"k", *k}, {"count", integer_json(c)}}.dump() << '\n';
    else
      std::cout << c << '\n';
    return 0;
  }
  Json rows = Json::array();
  Integer total = 0;
  for (int kk = 0; kk < n; ++kk) {
    const Integer c = count(kk);
    total += c;
    if (g.json())
      rows.push_back(Json{{"k", kk}, {"count", integer_json(c)}});
    else
      std::cout << "C(" << kk << "," << n << ") " << c << '\n';
  }
  if (g.json())
    std::cout << Json{{"n", n}, {"strata", rows}, {"total", integer_json(total)}}.dump() << '\n';
  else
    std::cout << "total " << total << '\n';
  return 0;
}

int cmd_enumerate(const Globals& g, int n, int k) {
  require_n(n);
  require_k(n, k);
  require_enumerable(g, n);
  std::size_t emitted = 0;
  // The walker has no early exit; past the limit the visitor does nothing.
  for_each_nilpotent(n, k, [&](std::span<const int> f) {
    if (g.limit && emitted >= g.limit) return;
    ++emitted;
    PartialTransformation t(std::vector<int>(f.begin(), f.end()));
    if (g.json())
      std::cout << to_json(t).dump() << '\n';
    else
      std::cout << t.str() << '\n';
  });
  return 0;
}

int cmd_oduns(const Globals& g, int n, std::optional<int> components, bool blossoming_only) {
  require_n(n);
  if (components && (*components < 1 || *components > n)) throw UsageError("--components must lie in 1..n");
  std::size_t emitted = 0;
  for (const auto& o : enumerate_oduns(n, components)) {
    if (blossoming_only && !is_blossoming(o)) continue;
    if (g.limit && emitted >= g.limit) break;
    ++emitted;
    if (g.json())
      std::cout << to_json(o).dump() << '\n';
    else
      std::cout << o.repr() << '\n';
  }
  return 0;
}

ClassFunction stratum_character(const Globals& g, int n, int k, Method method) {
  if (method == Method::fixed_point) {
    require_enumerable(g, n);
    return fixed_point_character(n, k, g.threads);
  }
  return character_of_Ckn(n, k, g.threads);
}

int cmd_character(const Globals& g, int n, int k, const std::string& method) {
  require_n(n);
  require_k(n, k);
  const ClassFunction chi = stratum_character(g, n, k, parse_method(method));
  if (g.json()) {
    std::cout << to_json(chi).dump() << '\n';
    return 0;
  }
  for (const auto& [rho, v] : chi.values()) std::cout << rho.str() << " " << v << '\n';
  return 0;
}

int cmd_decompose(const Globals& g, int n, int k, const std::string& method) {
  require_n(n);
  require_k(n, k);
  const IrredDecomposition d = decompose(stratum_character(g, n, k, parse_method(method)), true);
  if (g.json())
    std::cout << to_json(d).dump() << '\n';
  else
    std::cout << d.str() << '\n';
  return 0;
}

int cmd_decompose_odun(const Globals& g, const std::string& text) {
  Odun o;
  try {
    o = Odun::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (o.empty()) throw UsageError("--odun must describe at least one vertex");
  const OdunRepresentation r = represent(o);
  const Integer pairing = dimension_by_pairing(o);
  if (pairing != r.dimension)
    throw IntegrityError("dimension of " + o.repr() + ": formula " + r.dimension.get_str() + ", <F, p_1^n> " +
                         pairing.get_str());
  const Integer sign = sign_multiplicity_by_coefficient(o);
  if (g.json()) {
    std::cout << Json{{"odun", to_json(o)},
                      {"frobenius", to_json(r.frobenius)},
                      {"decomposition", to_json(r.decomposition)},
                      {"dimension", integer_json(r.dimension)},
                      {"sign", integer_json(sign)},
                      {"blossoming", is_blossoming(o)}}
                     .dump()
              << '\n';
    return 0;
  }
  std::cout << "odun " << o.repr() << '\n'
            << "frobenius " << format(r.frobenius) << '\n'
            << "decomposition " << r.decomposition.str() << '\n'
            << "dimension " << r.dimension << '\n'
            << "sign " << sign << '\n'
            << "blossoming " << (is_blossoming(o) ? "yes" : "no") << '\n';
  return 0;
}

int cmd_table(const Globals& g, int n, const std::string& method) {
  require_n(n);
  const Method m = parse_method(method);
  if (m == Method::fixed_point) require_enumerable(g, n);
  if (g.json()) {
    Json rows = Json::array();
    for (int k = 0; k < n; ++k)
      rows.push_back(Json{{"k", k}, {"decomposition", to_json(decompose_Ckn(n, k, m, g.threads))}});
    std::cout << Json{{"n", n}, {"strata", rows}}.dump() << '\n';
    return 0;
  }
  for (const auto& line : render_table(n, m, g.threads)) std::cout << line << '\n';
  return 0;
}

SignCount checked_sign(int n, int k) {
  const SignCount c = sign_in_stratum(n, k);
  if (c.blossoming != c.coefficient)
    throw IntegrityError("sign multiplicity in C(" + std::to_string(k) + "," + std::to_string(n) +
                         "): blossoming census " + c.blossoming.get_str() + ", Schur coefficient " +
                         c.coefficient.get_str());
  return c;
}

int cmd_sign(const Globals& g, int n, bool per_stratum, bool top) {
  require_n(n);
  if (per_stratum) {
    Json rows = Json::array();
    for (int k = 0; k < n; ++k) {
      const SignCount c = checked_sign(n, k);
      if (g.json())
        rows.push_back(Json{{"k", k}, {"sign", integer_json(c.coefficient)}});
      else
        std::cout << "C(" << k << "," << n << ") " << c.coefficient << '\n';
    }
    if (g.json()) std::cout << Json{{"n", n}, {"strata", rows}}.dump() << '\n';
    return 0;
  }
  Integer value = 0;
  if (top) {
    if (n < 2) throw UsageError("--top needs n >= 2");
    value = checked_sign(n, n - 1).coefficient;
  } else {
    for (int k = 0; k < n; ++k) value += checked_sign(n, k).coefficient;
  }
  if (g.json())
    std::cout << Json{{"n", n}, {top ? "top" : "total", integer_json(value)}}.dump() << '\n';
  else
    std::cout << value << '\n';
  return 0;
}

int cmd_blossoming(const Globals& g, int n, bool split) {
  require_n(n);
  const Integer total = count_blossoming(n);
  if (!split) {
    if (g.json())
      std::cout << Json{{"n", n}, {"count", integer_json(total)}}.dump() << '\n';
    else
      std::cout << total << '\n';
    return 0;
  }
  const BlossomingSplit s = blossoming_split(n);
  if (g.json()) {
    std::cout << Json{{"n", n},
                      {"without_isolated", integer_json(s.without_isolated)},
                      {"with_isolated", integer_json(s.with_isolated)},
                      {"count", integer_json(total)}}
                     .dump()
              << '\n';
    return 0;
  }
  std::cout << "without isolated vertex " << s.without_isolated << '\n'
            << "with isolated vertex " << s.with_isolated << '\n'
            << "total " << total << '\n';
  return 0;
}

int cmd_rooks(const Globals& g, int n, int parts) {
  require_n(n);
  if (parts < 1 || parts > n) throw UsageError("--parts must lie in 1..n");
  Json rows = Json::array();
  for (const auto& lambda : partitions_with_parts(n, parts)) {
    const SymFunc f = rook_term(lambda);
    const Integer sign = sign_multiplicity_by_coefficient(Odun::chains(lambda));
    if (g.json())
      rows.push_back(Json{{"partition", to_json(lambda)}, {"frobenius", to_json(f)}, {"sign", integer_json(sign)}});
    else
      std::cout << lambda.str() << " " << format(f) << " | sign " << sign << '\n';
  }
  const Integer count = rook_sign_count(n, parts);
  const Integer by_coefficient = rook_sign_count_by_coefficient(n, parts);
  if (count != by_coefficient)
    throw IntegrityError("rook sign count " + count.get_str() + " differs from the Schur coefficient " +
                         by_coefficient.get_str());
  if (g.json())
    std::cout << Json{{"n", n}, {"parts", parts}, {"terms", rows}, {"sign_count", integer_json(count)}}.dump() << '\n';
  else
    std::cout << "sign count " << count << '\n';
  return 0;
}

int cmd_verify(const Globals& g, int max_n) {
  if (max_n < 1) throw UsageError("--max-n must be at least 1");
  const VerifyReport report = run_verification({max_n, g.seed, g.threads});
  std::cout << (g.json() ? report.json() + "\n" : report.text());
  return report.all_passed() ? 0 : 1;
}

std::optional<std::filesystem::path> cache_file() {
  const char* dir = std::getenv("FORESTREP_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  return std::filesystem::path(dir) / "frobenius.json";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjugation representations on nilpotent partial transformations"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for randomized checks");
  app.add_flag("--force", g.force, "Lift the enumeration cap of n = 8");
  app.add_option("--limit", g.limit, "Stop a stream after this many items (0 = no limit)");

  int n = 0, k = 0, parts = 0, max_n = 10;
  std::optional<int> k_opt, components;
  std::string method = "plethysm", odun;
  bool brute = false, blossoming_only = false, total = false, per_stratum = false, top = false, split = false;

  auto* count = app.add_subcommand("count", "Size of C(k,n), or of every stratum");
  count->add_option("--n", n)->required();
  count->add_option("--k", k_opt);
  count->add_flag("--enumerate", brute, "Count by enumeration instead of the closed form");

  auto* enumerate = app.add_subcommand("enumerate", "List C(k,n) in lexicographic order");
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--k", k)->required();

  auto* oduns = app.add_subcommand("oduns", "List unlabeled rooted forests on n vertices");
  oduns->add_option("--n", n)->required();
  oduns->add_option("--components", components);
  oduns->add_flag("--blossoming-only", blossoming_only);

  auto* character = app.add_subcommand("character", "Character of C(k,n) by cycle type");
  character->add_option("--n", n)->required();
  character->add_option("--k", k)->required();
  character->add_option("--method", method)->check(CLI::IsMember({"fixed-point", "plethysm"}));

  auto* decompose_cmd = app.add_subcommand("decompose", "Irreducible decomposition of C(k,n)");
  decompose_cmd->add_option("--n", n)->required();
  decompose_cmd->add_option("--k", k)->required();
  decompose_cmd->add_option("--method", method)->check(CLI::IsMember({"fixed-point", "plethysm"}));

  auto* decompose_odun = app.add_subcommand("decompose-odun", "Frobenius characteristic and decomposition of one odun");
  decompose_odun->add_option("--odun", odun, "Parenthesized forest, e.g. \"(()())\"")->required();

  auto* table = app.add_subcommand("table", "Decompositions of C(k,n) for every k");
  table->add_option("--n", n)->required();
  table->add_option("--method", method)->check(CLI::IsMember({"fixed-point", "plethysm"}));

  auto* sign = app.add_subcommand("sign", "Multiplicity of the sign representation");
  sign->add_option("--n", n)->required();
  auto* total_flag = sign->add_flag("--total", total, "Over all of C_n (default)");
  auto* per_flag = sign->add_flag("--per-stratum", per_stratum, "One line per C(k,n)");
  auto* top_flag = sign->add_flag("--top", top, "In C(n-1,n) only");
  total_flag->excludes(per_flag)->excludes(top_flag);
  per_flag->excludes(top_flag);

  auto* blossoming = app.add_subcommand("blossoming", "Number of blossoming forests on n vertices");
  blossoming->add_option("--n", n)->required();
  blossoming->add_flag("--split", split, "Separate forests with and without an isolated vertex");

  auto* rooks = app.add_subcommand("rooks", "Nilpotent non-attacking rook placements by chain type");
  rooks->add_option("--n", n)->required();
  rooks->add_option("--parts", parts)->required();

  auto* verify = app.add_subcommand("verify", "Run the cross-check suite");
  verify->add_option("--max-n", max_n, "Truncate every range at this n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto cache = cache_file();
  try {
    if (cache) load_frobenius_cache(*cache);
    const std::size_t cached = frobenius_cache_size();

    int status = 0;
    if (*count) status = cmd_count(g, n, k_opt, brute);
    else if (*enumerate) status = cmd_enumerate(g, n, k);
    else if (*oduns) status = cmd_oduns(g, n, components, blossoming_only);
    else if (*character) status = cmd_character(g, n, k, method);
    else if (*decompose_cmd) status = cmd_decompose(g, n, k, method);
    else if (*decompose_odun) status = cmd_decompose_odun(g, odun);
    else if (*table) status = cmd_table(g, n, method);
    else if (*sign) status = cmd_sign(g, n, per_stratum, top);
    else if (*blossoming) status = cmd_blossoming(g, n, split);
    else if (*rooks) status = cmd_rooks(g, n, parts);
    else if (*verify) status = cmd_verify(g, max_n);

    if (cache && frobenius_cache_size() != cached) save_frobenius_cache(*cache);
    return status;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const IntegrityError& e) {
    std::cerr << "integrity failure: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
