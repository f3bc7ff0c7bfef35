#include <catch2/catch_amalgamated.hpp>

#include "semicat/finset.hpp"
#include "support/stock.hpp"

using namespace semicat;

TEST_CASE("monoid M3 builds and validates") {
  CategoryPtr m3 = stock::m3();
  REQUIRE(m3->num_objects() == 1);
  REQUIRE(m3->num_morphisms() == 3);
  // x·x = e, x·e = x, e·e = e
  int x = m3->require_morphism("x"), e = m3->require_morphism("e");
  REQUIRE(m3->compose(x, x) == e);
  REQUIRE(m3->compose(x, e) == x);
  REQUIRE(m3->compose(e, e) == e);
}

TEST_CASE("terminal category validates") {
  CategoryPtr one = terminal_category();
  REQUIRE(one->num_morphisms() == 1);
  REQUIRE(one->identity(0) == 0);
}

TEST_CASE("validator rejects broken tables") {
  auto base = [] {
    FinCategoryBuilder b;
    b.add_object("*");
    b.add_morphism("1", "*", "*").add_morphism("x", "*", "*").add_morphism("e", "*", "*");
    b.set_identity("*", "1");
    return b;
  };
  SECTION("identity not neutral") {
    FinCategoryBuilder b = base();
    b.set_compose("1", "1", "1").set_compose("1", "e", "e").set_compose("e", "1", "e");
    b.set_compose("1", "x", "x");
    b.set_compose("x", "1", "e");  // x∘1 should be x
    b.set_compose("x", "x", "e").set_compose("x", "e", "x").set_compose("e", "x", "x");
    b.set_compose("e", "e", "e");
    REQUIRE_THROWS_MATCHES(std::move(b).build(), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& err) {
                             return err.code() == "IdentityNotNeutral";
                           }));
  }
  SECTION("associativity violation") {
    FinCategoryBuilder b = base();
    b.set_compose("1", "1", "1").set_compose("1", "e", "e").set_compose("e", "1", "e");
    b.set_compose("1", "x", "x").set_compose("x", "1", "x");
    b.set_compose("x", "x", "e");
    b.set_compose("x", "e", "e");  // x∘e should be x; breaks (x,e,x)
    b.set_compose("e", "x", "x").set_compose("e", "e", "e");
    REQUIRE_THROWS_MATCHES(std::move(b).build(), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& err) {
                             return err.code() == "NotAssociative";
                           }));
  }
  SECTION("missing composite") {
    FinCategoryBuilder b = base();
    b.set_compose("1", "1", "1").set_compose("1", "e", "e").set_compose("e", "1", "e");
    b.set_compose("1", "x", "x").set_compose("x", "1", "x");
    b.set_compose("x", "e", "x").set_compose("e", "x", "x").set_compose("e", "e", "e");
    REQUIRE_THROWS_MATCHES(std::move(b).build(), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& err) {
                             return err.code() == "MissingComposite";
                           }));
  }
  SECTION("dangling endpoint") {
    FinCategoryBuilder b;
    b.add_object("*");
    b.add_morphism("f", "*", "nowhere");
    b.set_identity("*", "f");
    REQUIRE_THROWS_MATCHES(std::move(b).build(), Error,
                           Catch::Matchers::Predicate<Error>([](const Error& err) {
                             return err.code() == "DanglingEndpoint";
                           }));
  }
}

TEST_CASE("hom sets") {
  CategoryPtr m3 = stock::m3();
  REQUIRE(hom_set(*m3, "*", "*").size() == 3);
  REQUIRE(terminal_category()->hom(0, 0).size() == 1);
  CategoryPtr sq = product_category(m3, m3);
  REQUIRE(sq->hom(0, 0).size() == 9);
  REQUIRE_THROWS_MATCHES(hom_set(*m3, "*", "nope"), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& err) {
                           return err.code() == "UnknownObject";
                         }));

  SECTION("hom sets partition the morphisms") {
    for (const CategoryPtr& c : {stock::m3(), stock::chain(), stock::parallel_pair()}) {
      std::size_t total = 0;
      for (int x = 0; x < c->num_objects(); ++x)
        for (int y = 0; y < c->num_objects(); ++y) {
          for (int m : c->hom(x, y)) {
            REQUIRE(c->src(m) == x);
            REQUIRE(c->dst(m) == y);
          }
          total += c->hom(x, y).size();
        }
      REQUIRE(total == static_cast<std::size_t>(c->num_morphisms()));
    }
  }
}

TEST_CASE("opposite category") {
  REQUIRE(opposite(terminal_category())->structurally_equal(*terminal_category()));
  // commutative table: the opposite has the same table
  REQUIRE(opposite(stock::m3())->structurally_equal(*stock::m3()));
  REQUIRE(opposite(stock::w())->structurally_equal(*stock::w()));
  SECTION("involution") {
    for (const CategoryPtr& c : {stock::m3(), stock::chain(), stock::parallel_pair()})
      REQUIRE(opposite(opposite(c))->structurally_equal(*c));
  }
  SECTION("reverses endpoints") {
    CategoryPtr op = opposite(stock::chain());
    int t = op->require_morphism("t");
    REQUIRE(op->object_name(op->src(t)) == "Y");
    REQUIRE(op->object_name(op->dst(t)) == "X");
  }
}

TEST_CASE("product category") {
  CategoryPtr w = stock::w();
  CategoryPtr ww = product_category(w, w);
  REQUIRE(ww->num_objects() == 1);
  REQUIRE(ww->num_morphisms() == 4);
  int ui = ww->require_morphism(pair_name("u", "id"));
  REQUIRE(ww->compose(ui, ui) == ui);

  SECTION("product with the terminal category") {
    CategoryPtr m3 = stock::m3();
    CategoryPtr prod = product_category(m3, terminal_category());
    REQUIRE(prod->num_morphisms() == m3->num_morphisms());
    for (int g = 0; g < m3->num_morphisms(); ++g)
      for (int f = 0; f < m3->num_morphisms(); ++f)
        if (m3->composable(g, f))
          REQUIRE(prod->compose(g, f) == m3->compose(g, f));
  }
  SECTION("hom sizes multiply") {
    CategoryPtr c = stock::chain();
    CategoryPtr p = product_category(c, stock::m3());
    for (int x = 0; x < c->num_objects(); ++x)
      for (int y = 0; y < c->num_objects(); ++y)
        REQUIRE(p->hom(x, y).size() == c->hom(x, y).size() * 3);
  }
}

TEST_CASE("monoid_category rejects non-monoids") {
  REQUIRE_THROWS_MATCHES(
      monoid_category({"a", "b"}, {{0, 1}, {1, 0}}, 1), Error,
      Catch::Matchers::Predicate<Error>(
          [](const Error& err) { return err.code() == "NotAMonoid"; }));
  // x·x = x makes {1,x,e} a different but valid monoid (a meet-semilattice
  // with adjoined unit); the table stays associative and unital.
  REQUIRE_NOTHROW(monoid_category({"1", "x", "e"}, {{0, 1, 2}, {1, 1, 1}, {2, 1, 2}}, 0));
  SECTION("matrix monoid over Z/2") {
    CategoryPtr mat = gallery::mat2_z2();
    REQUIRE(mat->num_morphisms() == 16);
    // E11·E12 = E12 but E12·E11 = 0
    int e11 = mat->require_morphism("m1000");
    int e12 = mat->require_morphism("m0100");
    REQUIRE(mat->compose(e11, e12) == e12);
    REQUIRE(mat->compose(e12, e11) == mat->require_morphism("m0000"));
  }
}

TEST_CASE("full finite-set subcategories") {
  FinSetObject empty{{}}, a{{"a"}}, ab{{"a", "b"}};
  REQUIRE(full_finset_subcategory({a}).category->num_morphisms() == 1);
  SECTION("empty set") {
    FinSetCategory fs = full_finset_subcategory({empty, a});
    REQUIRE(fs.category->num_morphisms() == 3);  // id_∅, id_{a}, ∅→{a}
    REQUIRE(fs.category->hom(1, 0).empty());     // no map {a} → ∅
  }
  SECTION("counts follow |B|^|A|") {
    FinSetCategory fs = full_finset_subcategory({a, ab});
    // 1^1 + 2^1 + 1^2 + 2^2
    REQUIRE(fs.category->num_morphisms() == 1 + 2 + 1 + 4);
    REQUIRE(fs.category->hom(0, 1).size() == 2);
    REQUIRE(fs.category->hom(1, 0).size() == 1);
    REQUIRE(fs.category->hom(1, 1).size() == 4);
  }
  SECTION("composition is function composition") {
    FinSetCategory fs = full_finset_subcategory({a, ab});
    int inc = fs.function_morphism(0, 1, {1});      // a ↦ b
    int swap = fs.function_morphism(1, 1, {1, 0});  // a↔b
    REQUIRE(fs.category->compose(swap, inc) == fs.function_morphism(0, 1, {0}));
  }
}
