#include <catch2/catch_amalgamated.hpp>

#include "semicat/coident.hpp"
#include "semicat/props.hpp"
#include "support/stock.hpp"

using namespace semicat;

TEST_CASE("coidentifier by the identity is the category itself") {
  CategoryPtr m3 = stock::m3();
  Coidentifier coid = coidentifier(m3, identity_idem_nat_transf(m3));
  REQUIRE(coid.category->num_morphisms() == m3->num_morphisms());
  REQUIRE(is_fully_faithful(coid.projection));
  REQUIRE(is_functor(coid.section));
}

TEST_CASE("coidentifier of the walking idempotent is terminal") {
  CategoryPtr w = stock::w();
  Coidentifier coid = coidentifier(w, stock::idem_u());
  REQUIRE(coid.category->num_objects() == 1);
  REQUIRE(coid.category->num_morphisms() == 1);  // id ~ u
  REQUIRE(coid.class_of[w->require_morphism("id")] ==
          coid.class_of[w->require_morphism("u")]);
}

TEST_CASE("coidentifier of M3 merges 1 with e") {
  CategoryPtr m3 = stock::m3();
  Coidentifier coid = coidentifier(m3, stock::idem_e_m3());
  REQUIRE(coid.category->num_morphisms() == 2);  // classes {1,e} and {x}
  REQUIRE(coid.class_of[m3->require_morphism("1")] ==
          coid.class_of[m3->require_morphism("e")]);
  REQUIRE(coid.class_of[m3->require_morphism("x")] !=
          coid.class_of[m3->require_morphism("1")]);
  // representatives are least morphism ids, serialized with a ~ suffix
  REQUIRE(coid.category->morphism_name(coid.class_of[m3->require_morphism("e")]) == "1~");
}

TEST_CASE("H and L") {
  for (auto [base, e] : {std::pair{stock::w(), stock::idem_u()},
                         std::pair{stock::m3(), stock::idem_e_m3()}}) {
    Coidentifier coid = coidentifier(base, e);
    REQUIRE(is_functor(coid.projection));
    REQUIRE(is_naturally_full(coid.projection));
    REQUIRE_FALSE(is_functor(coid.section));
    REQUIRE(is_semifully_faithful(coid.section));
    SECTION("HL = Id and LH = E^e") {
      REQUIRE(compose_semifunctors(coid.projection, coid.section) ==
              identity_semifunctor(coid.category));
      REQUIRE(compose_semifunctors(coid.section, coid.projection) == canonical_E(e));
    }
    SECTION("L ⊣ H validates with identity-class unit and counit e") {
      const FinCategory& ce = *coid.category;
      std::vector<int> unit(ce.num_objects());
      for (int x = 0; x < ce.num_objects(); ++x) unit[x] = ce.identity(x);
      REQUIRE_NOTHROW(
          make_semiadjunction(coid.section, coid.projection, unit, e.components));
    }
  }
}

TEST_CASE("L(identity class) is e") {
  CategoryPtr w = stock::w();
  Coidentifier coid = coidentifier(w, stock::idem_u());
  REQUIRE(coid.section.image_identity(0) == w->require_morphism("u"));
}
