// hopfgen: command-line front end.  Exit codes: 0 success, 1 failed check,
// 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hopfgen/hopfgen.hpp"

using namespace hopfgen;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FamilyOptions {
  std::string family;
  int n = 0;
  std::string group;
  std::string x;
  std::string chi;
  std::string cocycle;
};

void add_family_options(CLI::App* cmd, FamilyOptions& f) {
  cmd->add_option("--family", f.family, "taft | e | monomial | group")->required();
  cmd->add_option("--n", f.n, "Taft / E(n) parameter");
  cmd->add_option("--group", f.group, "group spec, e.g. sym:3 or product:cyclic:2,cyclic:2");
  cmd->add_option("--x", f.x, "monomial: label of the central element x");
  cmd->add_option("--chi", f.chi, "monomial: exponents e_g with chi(g) = q^e_g, comma separated");
  cmd->add_option("--cocycle", f.cocycle, "JSON file with a two-cocycle (default: trivial)");
}

std::vector<long> parse_exponents(const std::string& s) {
  std::vector<long> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stol(item));
    } catch (const std::exception&) {
      throw UsageError("bad exponent '" + item + "' in --chi");
    }
  }
  return out;
}

HopfAlgebra build_family(const FamilyOptions& f) {
  if (f.family == "taft") {
    if (f.n < 2) throw UsageError("taft needs --n >= 2");
    return taft(f.n);
  }
  if (f.family == "e") {
    if (f.n < 1) throw UsageError("e needs --n >= 1");
    return e_algebra(f.n);
  }
  if (f.family == "group") {
    if (f.group.empty()) throw UsageError("group needs --group");
    return group_algebra(parse_group_spec(f.group));
  }
  if (f.family == "monomial") {
    if (f.group.empty() || f.x.empty() || f.chi.empty()) throw UsageError("monomial needs --group, --x and --chi");
    auto g = parse_group_spec(f.group);
    int x = g.index_of(f.x);
    auto field = make_field(g.element_order(x));
    return monomial_type_I(g, x, character_from_exponents(parse_exponents(f.chi), field), field);
  }
  throw UsageError("unknown family '" + f.family + "'");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

TwoCocycle load_cocycle(const HopfAlgebra& h, const FamilyOptions& f) {
  return f.cocycle.empty() ? trivial_cocycle(h) : cocycle_from_json(h, read_json_file(f.cocycle));
}

Json envelope() { return Json{{"schema", json_schema}}; }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_describe(const FamilyOptions& f, const std::string& format) {
  auto h = build_family(f);
  if (format == "json") {
    emit(hopf_to_json(h));
    return 0;
  }
  std::cout << h.family_name() << ", dimension " << h.dim << "\n";
  for (int b = 0; b < h.dim; ++b) {
    std::cout << "  Delta(" << h.labels[b] << ") =";
    bool first = true;
    for (const auto& t : h.comult[b]) {
      std::cout << (first ? " " : " + ") << "(" << t.coef.to_string() << ") " << h.labels[t.left] << " (x) "
                << h.labels[t.right];
      first = false;
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_axioms(const FamilyOptions& f, const std::string& input) {
  HopfAlgebra h = input.empty() ? build_family(f) : hopf_from_json(read_json_file(input));
  auto rep = verify_hopf_axioms(h);
  auto j = envelope();
  j["dim"] = h.dim;
  j["checks"] = report_to_json(rep);
  j["pass"] = rep.ok();
  emit(j);
  return rep.ok() ? 0 : 1;
}

int cmd_identity(const FamilyOptions& f, const std::string& poly) {
  auto h = build_family(f);
  auto alpha = load_cocycle(h, f);
  UniversalMap m(h, alpha);
  auto c = classify(m, parse_ncpoly(poly, h));
  auto j = envelope();
  j["identity"] = c.identity;
  j["coinvariant"] = c.coinvariant;
  j["central"] = c.central;
  j["image"] = to_string(c.image, h.labels);
  emit(j);
  return c.identity ? 0 : 1;
}

int cmd_base(const FamilyOptions& f, const std::string& check, std::uint64_t seed) {
  static const std::vector<std::string> all{"sigma", "jacobian", "quotient", "nice", "uprime"};
  if (check != "all" && std::find(all.begin(), all.end(), check) == all.end())
    throw UsageError("unknown check '" + check + "'");
  auto h = build_family(f);
  TRing ring(h);
  auto pres = gamma_generators(h);
  auto j = envelope();
  j["family"] = h.family_name();
  Json gens = Json::array();
  for (const auto& g : generator_set(pres)) gens.push_back(to_string(g, h.labels));
  j["generators"] = gens;
  Report rep;
  auto want = [&](const std::string& c) { return check == "all" || check == c; };
  rep.merge(gamma_degree_check(h, pres), "gamma.");
  if (want("sigma")) rep.merge(verify_sigma(ring, load_cocycle(h, f)), "sigma.");
  if (want("jacobian")) {
    try {
      auto r = jacobian_check(ring, seed);
      rep.merge(r.report, "jacobian.");
      if (h.family.kind == FamilyKind::Taft) j["jacobian_minor"] = to_string(r.minor, h.labels);
    } catch (const SingularJacobian& e) {
      rep.add("jacobian.independent", false, e.what());
    }
  }
  if (want("quotient")) rep.merge(quotient_presentation_check(ring), "quotient.");
  if (want("nice")) {
    try {
      auto ws = niceness_witnesses(h);
      Json wj = Json::array();
      for (const auto& w : ws)
        wj.push_back(Json{{"generator", to_string(w.gamma, h.labels)},
                          {"word", to_string(w.poly, h.labels)},
                          {"denominators", w.denominators}});
      j["witnesses"] = wj;
      rep.add("nice.witnesses", true, std::to_string(ws.size()));
    } catch (const WitnessFailure& e) {
      rep.add("nice.witnesses", false, e.what());
    }
  }
  if (want("uprime")) rep.merge(uprime_relations_check(h), "uprime.");
  j["checks"] = report_to_json(rep);
  j["pass"] = rep.ok();
  emit(j);
  return rep.ok() ? 0 : 1;
}

std::string named_kind(const std::string& group) {
  if (group.rfind("cyclic:", 0) == 0) return group;
  if (group.rfind("sym:", 0) == 0) return "symmetric:" + group.substr(4);
  const std::string prefix = "product:cyclic:";
  auto mid = group.find(",cyclic:");
  if (group.rfind(prefix, 0) == 0 && mid != std::string::npos)
    return "product:" + group.substr(prefix.size(), mid - prefix.size()) + "," + group.substr(mid + 8);
  throw UsageError("no named basis for group '" + group + "'");
}

int cmd_ygroup(const std::string& group, const std::string& basis, bool pq) {
  auto g = parse_group_spec(group);
  auto ab = abelianization(g);
  Report rep;
  IntMatrix rows;
  Integer index;
  if (basis == "named") {
    auto nb = named_basis(named_kind(group));
    rep.merge(nb.report, "named.");
    rows = nb.lattice.basis;
    index = nb.lattice.index;
  } else if (basis == "auto") {
    auto y = y_group(g);
    rows = y.basis;
    index = y.index;
  } else {
    throw UsageError("--basis must be auto or named");
  }
  if (pq) rep.merge(pq_generation_check(g), "pq.");
  auto j = envelope();
  Json b = Json::array();
  for (const auto& r : rows) b.push_back(lattice_monomial_string(g, r));
  j["basis"] = b;
  j["index"] = index.get_si();
  j["abelianization_order"] = ab.group.order();
  j["checks"] = report_to_json(rep);
  j["pass"] = rep.ok() && index == ab.group.order();
  emit(j);
  return j["pass"].get<bool>() ? 0 : 1;
}

int cmd_sigma(const FamilyOptions& f, const std::string& left, const std::string& right) {
  auto h = build_family(f);
  auto alpha = load_cocycle(h, f);
  TRing ring(h);
  auto j = envelope();
  if (!left.empty() || !right.empty()) {
    if (left.empty() || right.empty()) throw UsageError("--left and --right go together");
    GenericCocycle s(ring, alpha);
    int a = h.index_of(left), b = h.index_of(right);
    j["sigma"] = telement_to_json(s(a, b), h.labels);
    j["sigma_inverse"] = telement_to_json(s.inverse(a, b), h.labels);
    emit(j);
    return 0;
  }
  auto rep = verify_sigma(ring, alpha);
  j["checks"] = report_to_json(rep);
  j["pass"] = rep.ok();
  emit(j);
  return rep.ok() ? 0 : 1;
}

int cmd_selftest(std::uint64_t seed) {
  bool all = true;
  for (const auto& r : run_acceptance(seed)) {
    std::cout << format_criterion(r) << std::endl;
    all = all && r.pass;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generic base algebras and polynomial identities of finite-dimensional Hopf algebras"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  int workers = 1;
  app.add_option("--seed", seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--workers", workers, "worker threads for verification loops")->check(CLI::PositiveNumber);

  FamilyOptions fam;
  std::string format = "json", input, poly, check = "all", group, basis = "auto", left, right;

  auto* describe = app.add_subcommand("describe", "dump structure constants");
  add_family_options(describe, fam);
  describe->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));

  auto* axioms = app.add_subcommand("axioms", "verify the Hopf axioms");
  axioms->add_option("--family", fam.family, "taft | e | monomial | group");
  axioms->add_option("--n", fam.n);
  axioms->add_option("--group", fam.group);
  axioms->add_option("--x", fam.x);
  axioms->add_option("--chi", fam.chi);
  axioms->add_option("--input", input, "Hopf JSON dump to re-ingest");

  auto* identity = app.add_subcommand("identity", "classify a noncommutative polynomial");
  add_family_options(identity, fam);
  identity->add_option("--poly", poly, "polynomial in the X[label]")->required();

  auto* base = app.add_subcommand("base", "generic base algebra checks");
  add_family_options(base, fam);
  base->add_option("--check", check, "sigma | jacobian | quotient | nice | uprime | all");

  auto* ygroup = app.add_subcommand("ygroup", "the lattice Y_G");
  ygroup->add_option("--group", group, "group spec")->required();
  ygroup->add_option("--basis", basis, "auto | named");
  std::string ycheck;
  ygroup->add_option("--check", ycheck, "pq: check P_g, Q_{g,h} generation")->check(CLI::IsMember({"pq"}));

  auto* sigma = app.add_subcommand("sigma", "generic cocycle values and checks");
  add_family_options(sigma, fam);
  sigma->add_option("--left", left, "basis label");
  sigma->add_option("--right", right, "basis label");

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  worker_count() = workers;

  try {
    if (*describe) return cmd_describe(fam, format);
    if (*axioms) {
      if (input.empty() && fam.family.empty()) throw UsageError("axioms needs --family or --input");
      return cmd_axioms(fam, input);
    }
    if (*identity) return cmd_identity(fam, poly);
    if (*base) return cmd_base(fam, check, seed);
    if (*ygroup) return cmd_ygroup(group, basis, ycheck == "pq");
    if (*sigma) return cmd_sigma(fam, left, right);
    if (*selftest) return cmd_selftest(seed);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const hopfgen::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
