#include <catch2/catch_amalgamated.hpp>

#include "semicat/completion.hpp"
#include "semicat/props.hpp"
#include "support/stock.hpp"

using namespace semicat;

TEST_CASE("completion of the walking idempotent") {
  Completion comp = idempotent_completion(stock::w());
  const FinCategory& n = *comp.category;
  REQUIRE(n.num_objects() == 2);
  REQUIRE(n.object_name(0) == "*#id");
  REQUIRE(n.object_name(1) == "*#u");
  REQUIRE(n.num_morphisms() == 5);
  REQUIRE(n.hom(0, 0).size() == 2);
  REQUIRE(n.hom(0, 1).size() == 1);
  REQUIRE(n.hom(1, 0).size() == 1);
  REQUIRE(n.hom(1, 1).size() == 1);
  // Id_(X,e) = e
  REQUIRE(comp.underlying[n.identity(1)] == comp.base->require_morphism("u"));
}

TEST_CASE("completion of M3") {
  Completion comp = idempotent_completion(stock::m3());
  const FinCategory& n = *comp.category;
  const CategoryPtr& m3 = comp.base;
  REQUIRE(n.num_objects() == 2);  // idempotents 1 and e
  int o1 = comp.object_of(m3->require_morphism("1"));
  int oe = comp.object_of(m3->require_morphism("e"));
  REQUIRE(n.hom(o1, o1).size() == 3);
  // filter {m : e∘m∘e = m}: e·x·e = x and e·e·e = e qualify, 1 does not
  REQUIRE(n.hom(oe, oe).size() == 2);
  std::vector<std::string> names;
  for (int m : n.hom(oe, oe)) names.push_back(m3->morphism_name(comp.underlying[m]));
  REQUIRE(names == std::vector<std::string>{"x", "e"});
  REQUIRE(n.hom(o1, oe).size() == 2);
  REQUIRE(n.hom(oe, o1).size() == 2);
}

TEST_CASE("terminal category is its own completion") {
  Completion comp = idempotent_completion(terminal_category());
  REQUIRE(comp.category->num_objects() == 1);
  REQUIRE(comp.category->num_morphisms() == 1);
}

TEST_CASE("iota and upsilon") {
  for (const CategoryPtr& c : {stock::w(), stock::m3()}) {
    Completion comp = idempotent_completion(c);
    Semifunctor io = iota(comp);
    Semifunctor ups = upsilon(comp);
    REQUIRE(is_functor(io));
    REQUIRE(is_fully_faithful(io));
    REQUIRE(compose_semifunctors(ups, io) == identity_semifunctor(c));
    REQUIRE(is_semifully_faithful(ups));
    REQUIRE_FALSE(is_functor(ups));  // both categories have a non-identity idempotent
  }
}

TEST_CASE("completing semifunctors") {
  SECTION("identity completes to the identity") {
    Completion comp = idempotent_completion(stock::w());
    Semifunctor idn = complete_semifunctor(identity_semifunctor(stock::w()), comp, comp);
    REQUIRE(idn == identity_semifunctor(comp.category));
  }
  SECTION("E^u sends both completed objects to (*, u)") {
    Completion comp = idempotent_completion(stock::w());
    Semifunctor eun = complete_semifunctor(canonical_E(stock::idem_u()), comp, comp);
    int ou = comp.object_of(comp.base->require_morphism("u"));
    REQUIRE(eun.obj(0) == ou);
    REQUIRE(eun.obj(1) == ou);
    REQUIRE(is_functor(eun));
  }
  SECTION("f_e completes to a non-full functor") {
    Semifunctor fe = gallery::monoid_fe();
    Completion source = idempotent_completion(fe.source);
    Completion target = idempotent_completion(fe.target);
    Semifunctor fen = complete_semifunctor(fe, source, target);
    REQUIRE(is_functor(fen));
    REQUIRE_FALSE(is_full(fen));  // f_e is not semifull
    REQUIRE(is_faithful(fen));
  }
}

TEST_CASE("completing transformations") {
  SECTION("components of the completed identity are identities") {
    Semifunctor eu = canonical_E(stock::idem_u());
    Completion comp = idempotent_completion(stock::w());
    Transformation a = make_transformation(eu, eu, {eu.source->require_morphism("u")});
    Transformation an = complete_transformation(a, comp, comp);
    REQUIRE(is_natural(an));
    for (int o = 0; o < comp.category->num_objects(); ++o)
      REQUIRE(an.at(o) == comp.category->identity(an.from.obj(o)));
  }
  SECTION("a natural semi-isomorphism completes to a natural isomorphism") {
    FinSetCategory sets = full_finset_subcategory({FinSetObject{{"a", "b"}}});
    int const_a = sets.function_morphism(0, 0, {0, 0});
    Semifunctor f = make_semifunctor(stock::w(), sets.category, {0}, {const_a, const_a});
    gallery::FixpointResult fix = gallery::fixpoint_functor(f, sets);
    Completion source = idempotent_completion(fix.functor.source);
    Completion target = idempotent_completion(fix.functor.target);
    Transformation an = complete_transformation(fix.alpha, source, target);
    auto inv = find_semi_inverse(an);
    REQUIRE(inv);
    // between functors the semi-inverse is an actual two-sided inverse
    const FinCategory& d = *an.from.target;
    for (std::size_t o = 0; o < an.components.size(); ++o) {
      REQUIRE(d.compose(inv->at(o), an.at(o)) == d.identity(an.from.obj(o)));
      REQUIRE(d.compose(an.at(o), inv->at(o)) == d.identity(an.to.obj(o)));
    }
  }
  SECTION("rejects non-seminatural inputs") {
    Semifunctor eu = canonical_E(stock::idem_u());
    Completion comp = idempotent_completion(stock::w());
    Transformation bad = make_transformation(eu, eu, {eu.source->require_morphism("id")});
    REQUIRE_THROWS_MATCHES(complete_transformation(bad, comp, comp), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& err) {
                             return err.code() == "NotSeminatural";
                           }));
  }
}

TEST_CASE("idempotent splitting") {
  CategoryPtr w = stock::w();
  REQUIRE_FALSE(is_idempotent_complete(w));
  Completion comp = idempotent_completion(w);
  REQUIRE(is_idempotent_complete(comp.category));
  SECTION("u splits through (*, u)") {
    auto [h, k] = split_idempotent(comp, w->require_morphism("u"));
    const FinCategory& n = *comp.category;
    REQUIRE(n.compose(h, k) == n.identity(1));
    REQUIRE(comp.underlying[n.compose(k, h)] == w->require_morphism("u"));
  }
  SECTION("identities split trivially") {
    auto [h, k] = split_idempotent(comp, w->require_morphism("id"));
    REQUIRE(h == comp.category->identity(0));
    REQUIRE(k == comp.category->identity(0));
  }
  SECTION("non-idempotents are rejected") {
    Completion m3c = idempotent_completion(stock::m3());
    REQUIRE_THROWS_MATCHES(split_idempotent(m3c, stock::m3()->require_morphism("x")),
                           Error,
                           Catch::Matchers::Predicate<Error>([](const Error& err) {
                             return err.code() == "NotIdempotent";
                           }));
  }
}

TEST_CASE("property transfer through the completion") {
  for (const auto& [name, f] : gallery::all_semifunctors()) {
    CAPTURE(name);
    Completion source = idempotent_completion(f.source);
    Completion target =
        same_category(f.source, f.target) ? source : idempotent_completion(f.target);
    Semifunctor fn = complete_semifunctor(f, source, target);
    REQUIRE(is_faithful(f) == is_faithful(fn));
    REQUIRE(is_semifull(f) == is_full(fn));
    REQUIRE(is_semiseparable(f) == is_semiseparable(fn));
    REQUIRE(is_separable(f) == is_separable(fn));
    REQUIRE(is_naturally_semifull(f) == is_naturally_full(fn));
    REQUIRE(is_semifully_faithful(f) == is_fully_faithful(fn));
  }
}

TEST_CASE("completion cap") {
  REQUIRE_THROWS_MATCHES(idempotent_completion(stock::m3(), 3), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& err) {
                           return err.code() == "CompletionTooLarge";
                         }));
}
