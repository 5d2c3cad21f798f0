#pragma once

// The acceptance suite: fourteen exact checks over the standard instances,
// shared by the acceptance test binary and `hopfgen selftest`.

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hopfgen/cocycle.hpp"
#include "hopfgen/generic_base.hpp"
#include "hopfgen/group.hpp"
#include "hopfgen/hopf.hpp"
#include "hopfgen/identities.hpp"
#include "hopfgen/lattice.hpp"
#include "hopfgen/tring.hpp"

namespace hopfgen {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

namespace acceptance {

inline std::vector<std::pair<std::string, FiniteGroup>> groups() {
  std::vector<std::pair<std::string, FiniteGroup>> gs;
  for (int n = 1; n <= 12; ++n) gs.emplace_back("Z/" + std::to_string(n), cyclic_group(n));
  gs.emplace_back("Z/2xZ/2", direct_product(cyclic_group(2), cyclic_group(2)));
  gs.emplace_back("S3", symmetric_group(3));
  gs.emplace_back("S4", symmetric_group(4));
  gs.emplace_back("D4", dihedral_group(4));
  gs.emplace_back("A4", alternating_group(4));
  return gs;
}

/// G = Z/2 x Z/2, x = (a,e), chi = q^{(0,0,1,1)}, n = 2.
inline HopfAlgebra monomial_instance() {
  auto v4 = direct_product(cyclic_group(2), cyclic_group(2));
  auto f2 = make_field(2);
  return monomial_type_I(v4, v4.index_of("(a,e)"), character_from_exponents({0, 0, 1, 1}, f2), f2);
}

inline std::vector<HopfAlgebra> hopf_instances() {
  std::vector<HopfAlgebra> hs;
  for (int n = 2; n <= 5; ++n) hs.push_back(taft(n));
  for (int n = 1; n <= 4; ++n) hs.push_back(e_algebra(n));
  for (const auto& [name, g] : groups()) hs.push_back(group_algebra(g));
  hs.push_back(monomial_instance());
  return hs;
}

inline std::vector<HopfAlgebra> base_instances() {
  std::vector<HopfAlgebra> hs;
  for (int n = 2; n <= 4; ++n) hs.push_back(taft(n));
  for (int n = 1; n <= 3; ++n) hs.push_back(e_algebra(n));
  hs.push_back(monomial_instance());
  return hs;
}

inline std::string label(const HopfAlgebra& h) { return h.family_name(); }

/// First failing check of a report, prefixed by the instance.
inline std::string first_failure(const Report& r, const std::string& where) {
  for (const auto& c : r.checks)
    if (!c.pass) return where + ": " + c.name + (c.detail.empty() ? "" : " " + c.detail);
  return {};
}

struct Tally {
  std::string failure;
  int count = 0;
  void check(bool ok, const std::string& what) {
    ++count;
    if (!ok && failure.empty()) failure = what;
  }
  void report(const Report& r, const std::string& where) {
    ++count;
    auto f = first_failure(r, where);
    if (!f.empty() && failure.empty()) failure = f;
  }
  std::pair<bool, std::string> result(const std::string& what) const {
    return {failure.empty(), failure.empty() ? std::to_string(count) + " " + what : failure};
  }
};

using Outcome = std::pair<bool, std::string>;

inline Outcome hopf_axioms() {
  Tally t;
  for (const auto& h : hopf_instances()) t.report(verify_hopf_axioms(h), label(h));
  return t.result("instances");
}

inline Outcome t_inverse() {
  Tally t;
  for (const auto& h : hopf_instances()) t.report(TRing(h).verify_t_inverse(), label(h));
  return t.result("instances");
}

inline Outcome sigma_suite() {
  Tally t;
  for (auto h : {taft(2), taft(3), e_algebra(1), e_algebra(2), group_algebra(symmetric_group(3))}) {
    TRing ring(h);
    t.report(verify_sigma(ring, trivial_cocycle(h)), label(h));
  }
  return t.result("instances");
}

inline Outcome sweedler_presentation() {
  auto h = taft(2);
  auto got = generator_set(gamma_generators(h));
  int one = h.index_of("1"), x = h.index_of("x"), y = h.index_of("y"), xy = h.index_of("xy");
  std::vector<TElement> want{TElement::var(one),     TElement::var(one, -1), TElement::var(x, 2),
                             TElement::var(x, -2),   TElement::var(x) * TElement::var(y),
                             TElement::var(xy)};
  auto key = [&](const std::vector<TElement>& v) {
    std::set<std::string> s;
    for (const auto& e : v) s.insert(to_string(e, h.labels));
    return s;
  };
  bool ok = key(got) == key(want) && got.size() == want.size();
  std::string shown;
  for (const auto& s : key(got)) shown += (shown.empty() ? "" : ", ") + s;
  return {ok, "{" + shown + "}"};
}

inline Outcome jacobian(std::uint64_t seed) {
  Tally t;
  // symbolic minors against the stated closed values
  for (auto [n, c, e] : {std::tuple{3, 3L, 2}, std::tuple{4, -2L, 5}}) {
    auto h = taft(n);
    TRing ring(h);
    auto r = jacobian_check(ring, seed);
    TElement want(TMonomial::from({{h.lookup(n - 1, 0), 1}, {h.lookup(1, 0), -e}}), Scalar(c));
    t.check(r.symbolic && (r.minor == want || r.minor == -want),
            label(h) + ": J = " + to_string(r.minor, h.labels) + ", expected +-(" + to_string(want, h.labels) + ")");
  }
  for (auto h : {taft(5), e_algebra(3)}) {
    TRing ring(h);
    auto r = jacobian_check(ring, seed, 0);
    t.check(r.rank_at_point == static_cast<std::size_t>(h.dim),
            label(h) + ": rank " + std::to_string(r.rank_at_point) + " of " + std::to_string(h.dim));
  }
  return t.result("checks");
}

inline Outcome decomposition(std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng(seed);
  for (const auto& h : base_instances()) {
    TRing ring(h);
    Decomposer dec(ring, gamma_generators(h));
    auto gr = hab_grading(h);
    std::uniform_int_distribution<int> pick(0, h.dim - 1), e(0, 3), ge(-4, 4), len(1, 5);
    auto random_monomial = [&] {
      std::vector<std::pair<int, int>> f;
      for (int k = len(rng); k > 0; --k) {
        int b = pick(rng);
        f.emplace_back(b, ring.grouplike(b) ? ge(rng) : e(rng));
      }
      return TMonomial::from(f);
    };
    int ok = 0;
    for (int i = 0; i < 200; ++i) {
      TMonomial m = random_monomial();
      auto deg = hab_degree(gr, m);
      for (std::size_t k = 0; k < dec.lifts().size(); ++k)
        m = m * TMonomial::var(dec.lifts()[k], static_cast<int>(-deg[k]));
      ok += dec.recompose(dec.decompose(m)) == m;
    }
    t.check(ok == 200, label(h) + ": " + std::to_string(ok) + "/200 degree-zero round trips");
    ok = 0;
    for (int i = 0; i < 50; ++i) {
      TMonomial m = random_monomial();
      auto w = dec.decompose_with_residue(m);
      bool bounded = true;
      for (std::size_t k = 0; k < w.residue.size(); ++k)
        bounded = bounded && w.residue[k] >= 0 && w.residue[k] < gr.group.factors()[k];
      ok += bounded && dec.recompose(w) == m;
    }
    t.check(ok == 50, label(h) + ": " + std::to_string(ok) + "/50 residue decompositions");
  }
  return t.result("checks");
}

inline Outcome quotient() {
  Tally t;
  auto hs = base_instances();
  for (const auto& [name, g] : groups()) hs.push_back(group_algebra(g));
  for (const auto& h : hs) {
    TRing ring(h);
    t.report(quotient_presentation_check(ring), label(h));
  }
  return t.result("instances");
}

inline Outcome niceness() {
  Tally t;
  std::size_t total = 0;
  for (const auto& h : base_instances()) {
    try {
      auto ws = niceness_witnesses(h);
      total += ws.size();
      auto p = gamma_generators(h);
      std::size_t want = p.plain.size() + (h.family.kind == FamilyKind::Monomial ? 0 : 2 * p.invertible.size());
      t.check(ws.size() == want, label(h) + ": " + std::to_string(ws.size()) + " witnesses, expected " +
                                     std::to_string(want));
    } catch (const WitnessFailure& e) {
      t.check(false, label(h) + ": " + e.what());
    }
  }
  auto [ok, detail] = t.result("");
  return {ok, ok ? std::to_string(total) + " witnesses verified" : detail};
}

inline Outcome uprime() {
  Tally t;
  for (const auto& h : base_instances()) t.report(uprime_relations_check(h), label(h));
  return t.result("instances");
}

inline Outcome center_dimensions() {
  Tally t;
  for (int n = 1; n <= 4; ++n) {
    auto h = e_algebra(n);
    auto z = center(h);
    bool even_central = true;
    for (int b = 0; b < h.dim; ++b) {
      if (h.gpart[b] != h.unit || __builtin_popcount(static_cast<unsigned>(h.ypart[b])) % 2) continue;
      for (int c = 0; c < h.dim && even_central; ++c)
        even_central = h.product(b, c) == h.product(c, b);
    }
    std::size_t want = std::size_t{1} << (n - 1);
    t.check(z.size() == want && even_central,
            label(h) + ": center has dimension " + std::to_string(z.size()) + ", expected " + std::to_string(want));
  }
  for (int n = 2; n <= 4; ++n) {
    auto h = taft(n);
    auto z = center(h);
    t.check(z.size() == 1, label(h) + ": center has dimension " + std::to_string(z.size()));
  }
  return t.result("checks");
}

inline Outcome lattice() {
  Tally t;
  for (const auto& [name, g] : groups()) {
    auto y = y_group(g);
    t.check(y.index == abelianization(g).group.order(), name + ": index " + y.index.get_str());
    t.report(pq_generation_check(g), name);
  }
  for (int n = 2; n <= 12; ++n) t.report(cyclic_named_basis(n).report, "cyclic:" + std::to_string(n));
  t.report(product_named_basis(2, 3).report, "product:2,3");
  t.report(product_named_basis(2, 2).report, "product:2,2");
  for (int n = 3; n <= 4; ++n) t.report(symmetric_named_basis(n).report, "symmetric:" + std::to_string(n));
  return t.result("checks");
}

inline Outcome identity_detection() {
  Tally t;
  auto t3 = taft(3);
  UniversalMap m3(t3);
  t.check(m3(parse_ncpoly("X[1]*X[x]-X[x]*X[1]", t3)).empty(), "taft(3): X_1X_x - X_xX_1");
  auto z6 = group_algebra(cyclic_group(6));
  UniversalMap m6(z6);
  for (int g = 0; g < 6; ++g)
    for (int h = 0; h < 6; ++h)
      t.check(m6(NCPoly::word({g, h}) - NCPoly::word({h, g})).empty(), "Z/6 commutator");
  int one = t3.unit, x = t3.index_of("x"), xy = t3.index_of("xy");
  auto img = m3(parse_ncpoly("X[y]*X[x]-X[x]*X[y]", t3));
  TTensorH want{{{TMonomial::from({{one, 1}, {x, 1}}), xy}, Scalar::q(t3.field) - Scalar(1)}};
  t.check(img == want, "taft(3): image " + to_string(img, t3.labels));
  return t.result("checks");
}

inline Outcome cotwist(std::uint64_t seed) {
  Tally t;
  for (const auto& h : hopf_instances())
    t.check(same_structure(cotwist_hopf(h, trivial_cocycle(h)), h), label(h));
  auto g = group_algebra(symmetric_group(3));
  auto a = random_group_cocycle(g, seed);
  t.check(is_lazy(g, a.values), "S3 cocycle is lazy");
  auto key = [&](const GammaPresentation& p) {
    std::set<std::string> s;
    for (const auto& e : generator_set(p)) s.insert(to_string(e, g.labels));
    return s;
  };
  t.check(key(gamma_generators(g, a)) == key(gamma_generators(g)), "S3: lazy Gamma set differs");
  return t.result("checks");
}

inline Outcome splitting(std::uint64_t seed) {
  auto h = monomial_instance();
  auto [iota, pi] = monomial_splitting(h);
  std::mt19937_64 rng(seed);
  const int d = iota.src->dim;
  std::uniform_int_distribution<int> sym(0, d - 1), len(0, 4), coef(-3, 3), nterms(1, 3);
  int ok = 0;
  for (int i = 0; i < 50; ++i) {
    NCPoly p;
    for (int k = nterms(rng); k > 0; --k) {
      Word w;
      for (int l = len(rng); l > 0; --l) w.push_back(sym(rng));
      p.add_term(w, Scalar(coef(rng)));
    }
    ok += push_forward(pi, push_forward(iota, p)) == p;
  }
  return {ok == 50, std::to_string(ok) + "/50 polynomials"};
}

}  // namespace acceptance

/// Runs the fourteen criteria in order; exceptions count as failures.
inline std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 1) {
  using namespace acceptance;
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"hopf_axioms", hopf_axioms},
      {"t_inverse", t_inverse},
      {"sigma", sigma_suite},
      {"sweedler_presentation", sweedler_presentation},
      {"jacobian", [seed] { return jacobian(seed); }},
      {"decomposition", [seed] { return decomposition(seed); }},
      {"quotient_presentation", quotient},
      {"niceness", niceness},
      {"uprime", uprime},
      {"center", center_dimensions},
      {"lattice", lattice},
      {"identity_detection", identity_detection},
      {"cotwist", [seed] { return cotwist(seed); }},
      {"splitting", [seed] { return splitting(seed); }},
  };
  std::vector<CriterionResult> out;
  int id = 0;
  for (auto& [name, fn] : criteria) {
    CriterionResult r;
    r.id = ++id;
    r.name = name;
    auto start = std::chrono::steady_clock::now();
    try {
      std::tie(r.pass, r.detail) = fn();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

inline std::string format_criterion(const CriterionResult& r) {
  char time[32];
  std::snprintf(time, sizeof time, "%.2fs", r.seconds);
  return std::string(r.pass ? "PASS" : "FAIL") + " " + std::to_string(r.id) + " " + r.name + " (" + time +
         "): " + r.detail;
}

}  // namespace hopfgen
