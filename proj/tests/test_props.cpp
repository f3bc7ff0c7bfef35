#include <catch2/catch_amalgamated.hpp>

#include "semicat/completion.hpp"
#include "semicat/props.hpp"
#include "support/fuzz.hpp"
#include "support/stock.hpp"

using namespace semicat;

TEST_CASE("faithful / full basics") {
  REQUIRE(is_faithful(gallery::monoid_fe()));
  REQUIRE_FALSE(is_full(gallery::monoid_fe()));
  Semifunctor k = constant_semifunctor(stock::w(), stock::w()->require_morphism("u"),
                                       stock::m3());
  REQUIRE_FALSE(is_faithful(k));
  Semifunctor id = identity_semifunctor(stock::m3());
  REQUIRE(is_faithful(id));
  REQUIRE(is_full(id));
  REQUIRE(is_fully_faithful(id));
}

TEST_CASE("semifullness with witnesses") {
  SECTION("f_e is not semifull; the failing cell survives framing") {
    Semifunctor fe = gallery::monoid_fe();
    SemifullReport report = semifull_report(fe);
    REQUIRE_FALSE(report.semifull);
    // e·x·e = x, so (x,·) cells frame to (x,·) and miss the image {(e,b)}.
    REQUIRE(fe.target->morphism_name(report.failing_mor).substr(0, 3) == "(x,");
  }
  SECTION("the matrix unit semifunctor is semifull") {
    Semifunctor f = gallery::matrix_e11();
    SemifullReport report = semifull_report(f);
    REQUIRE(report.semifull);
    // E11·A·E11 = a11·E11 = f(a11): witness at cell A is a11
    CellTable cells(f);
    const FinCategory& mat = *f.target;
    for (int i = 0; i < cells.size(); ++i) {
      const std::string& name = mat.morphism_name(cells.cell_mor(i));  // "mabcd"
      int a11 = name[1] - '0';
      REQUIRE(report.witness[i] == a11);
    }
  }
  SECTION("full semifunctors are semifull") {
    for (const auto& [name, f] : gallery::all_semifunctors()) {
      CAPTURE(name);
      if (is_full(f)) REQUIRE(is_semifull(f));
      REQUIRE(is_full(f) == (is_semifull(f) && is_functor(f)));
    }
  }
}

TEST_CASE("solve_P on the monoid example pins the projection") {
  Semifunctor fe = gallery::monoid_fe();
  auto p = solve_P(fe, PMode::Separable);
  REQUIRE(p);
  REQUIRE(verify_p_solution(*p));
  CellTable cells(fe);
  const FinCategory& sq = *fe.target;
  const FinCategory& m3 = *fe.source;
  for (int i = 0; i < cells.size(); ++i) {
    // P((m,n)) = n
    std::string name = sq.morphism_name(cells.cell_mor(i));
    std::string second = name.substr(name.find(',') + 1);
    second.pop_back();
    REQUIRE(p->assignment[i] == m3.require_morphism(second));
  }
}

TEST_CASE("solve_P mode examples") {
  SECTION("identity semifunctor solves in every mode with the identity family") {
    Semifunctor id = identity_semifunctor(stock::m3());
    for (PMode mode : {PMode::Separable, PMode::NaturallySemifull, PMode::Semiseparable}) {
      auto p = solve_P(id, mode);
      REQUIRE(p);
      CellTable cells(id);
      for (int i = 0; i < cells.size(); ++i)
        REQUIRE(p->assignment[i] == cells.cell_mor(i));
    }
  }
  SECTION("E^u is naturally semifull but not separable") {
    Semifunctor eu = canonical_E(stock::idem_u());
    REQUIRE_FALSE(solve_P(eu, PMode::Separable).has_value());
    REQUIRE(solve_P(eu, PMode::NaturallySemifull).has_value());
  }
  SECTION("empty hom with a nonempty image hom is an immediate NotFound") {
    // F : chain → chain collapsing everything onto Y: Hom(Y,X) = ∅ but
    // Hom(FY,FX) = Hom(Y,Y) ≠ ∅... use the opposite arrangement: collapse
    // onto X, then cells (Y,X) need values in Hom(Y,X) = ∅.
    CategoryPtr chain = stock::chain();
    Semifunctor k = constant_semifunctor(chain, chain->identity(0), chain);
    CHECK(chain->hom(1, 0).empty());
    REQUIRE_FALSE(solve_P(k, PMode::Semiseparable).has_value());
  }
}

TEST_CASE("characterization triangle on the gallery") {
  for (const auto& [name, f] : gallery::all_semifunctors()) {
    CAPTURE(name);
    bool sep = is_separable(f), nsf = is_naturally_semifull(f);
    bool ss = is_semiseparable(f);
    REQUIRE(sep == (ss && is_faithful(f)));
    REQUIRE(nsf == (ss && is_semifull(f)));
    REQUIRE(is_semifully_faithful(f) == (sep && nsf));
    if (nsf) REQUIRE(is_semifull(f));
  }
}

TEST_CASE("associated idempotent") {
  SECTION("separable semifunctors have the identity") {
    Semifunctor fe = gallery::monoid_fe();
    auto p = solve_P(fe, PMode::Semiseparable);
    REQUIRE(p);
    REQUIRE(is_identity_transf(associated_idempotent(fe, *p)));
  }
  SECTION("E^e recovers e") {
    for (const IdemNatTransf& e : {stock::idem_u(), stock::idem_e_m3()}) {
      Semifunctor ee = canonical_E(e);
      auto p = solve_P(ee, PMode::Semiseparable);
      REQUIRE(p);
      REQUIRE(associated_idempotent(ee, *p) == e);
    }
  }
  SECTION("rejects families that are not semiseparable solutions") {
    Semifunctor fe = gallery::monoid_fe();
    auto p = solve_P(fe, PMode::Separable);
    PSolution broken = *p;
    broken.assignment[0] = (broken.assignment[0] + 1) % 3;
    REQUIRE_THROWS_MATCHES(associated_idempotent(fe, broken), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& err) {
                             return err.code() == "NotSemiseparableSolution";
                           }));
  }
}

TEST_CASE("maschke transfers") {
  SECTION("identity functor returns the actual retraction") {
    CategoryPtr m3 = stock::m3();
    Semifunctor id = identity_semifunctor(m3);
    auto p = solve_P(id, PMode::Separable);
    int one = m3->require_morphism("1");
    REQUIRE(maschke_transfer(id, *p, one, MaschkeSide::Mono) == one);
  }
  SECTION("f_e transfers the witness of F(1)") {
    Semifunctor fe = gallery::monoid_fe();
    auto p = solve_P(fe, PMode::Separable);
    int one = fe.source->require_morphism("1");
    int r = maschke_transfer(fe, *p, one, MaschkeSide::Mono);
    REQUIRE(fe.source->compose(r, one) == fe.source->identity(0));
  }
  SECTION("υ transfers every semisplit image back to a genuine splitting") {
    Completion comp = idempotent_completion(stock::w());
    Semifunctor ups = upsilon(comp);
    auto p = solve_P(ups, PMode::Separable);
    REQUIRE(p);
    const FinCategory& n = *ups.source;
    int transferred = 0;
    for (int m = 0; m < n.num_morphisms(); ++m) {
      if (!fc_semisplit_mono_witness(ups, n.src(m), ups.mor(m))) continue;
      int r = maschke_transfer(ups, *p, m, MaschkeSide::Mono);
      REQUIRE(n.compose(r, m) == n.identity(n.src(m)));
      // cross-check against a direct split-mono search
      bool direct = false;
      for (int g : n.hom(n.dst(m), n.src(m)))
        direct |= n.compose(g, m) == n.identity(n.src(m));
      REQUIRE(direct);
      ++transferred;
    }
    REQUIRE(transferred > 0);
  }
  SECTION("hypothesis failures are reported") {
    Semifunctor eu = canonical_E(stock::idem_u());
    auto p = solve_P(identity_semifunctor(stock::m3()), PMode::Separable);
    REQUIRE_THROWS_MATCHES(
        maschke_transfer(eu, *p, 0, MaschkeSide::Mono), Error,
        Catch::Matchers::Predicate<Error>(
            [](const Error& err) { return err.code() == "HypothesisNotSatisfied"; }));
  }
}

TEST_CASE("composition laws on gallery pairs") {
  fuzz::Soundness s;
  Completion comp = idempotent_completion(stock::w());
  fuzz::check_composition_laws(s, iota(comp), upsilon(comp));
  fuzz::check_composition_laws(s, upsilon(comp), iota(comp));
  Semifunctor eu = canonical_E(stock::idem_u());
  fuzz::check_composition_laws(s, eu, eu);
  fuzz::check_composition_laws(s, eu, iota(comp));
  INFO((s.failures.empty() ? std::string() : s.failures[0]));
  REQUIRE(s.ok());
}

TEST_CASE("property transfer along the fixpoint semi-isomorphism") {
  FinSetCategory sets = full_finset_subcategory({FinSetObject{{"a", "b"}}});
  int const_a = sets.function_morphism(0, 0, {0, 0});
  Semifunctor f = make_semifunctor(stock::w(), sets.category, {0}, {const_a, const_a});
  gallery::FixpointResult fix = gallery::fixpoint_functor(f, sets);
  REQUIRE(find_semi_inverse(fix.alpha).has_value());
  REQUIRE(is_separable(fix.functor) == is_separable(fix.fixpoint));
  REQUIRE(is_naturally_semifull(fix.functor) == is_naturally_semifull(fix.fixpoint));
  REQUIRE(is_semiseparable(fix.functor) == is_semiseparable(fix.fixpoint));
}

TEST_CASE("solver agrees with the naive oracle on small instances") {
  fuzz::Rng rng(7);
  fuzz::Soundness s;
  for (int i = 0; i < 40; ++i) {
    CategoryPtr c = fuzz::random_category(rng, 2, 6);
    CategoryPtr d = rng.coin() ? c : fuzz::random_category(rng, 2, 6);
    Semifunctor f = fuzz::random_semifunctor(rng, c, d);
    if (fuzz::naive_cost(f) > 21.0) continue;
    fuzz::check_solver_against_oracle(s, f);
  }
  INFO((s.failures.empty() ? std::string() : s.failures[0]));
  REQUIRE(s.ok());
}
