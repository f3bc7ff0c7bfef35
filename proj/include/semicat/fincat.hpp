#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "semicat/error.hpp"

namespace semicat {

/// A finite category, stored as identifier lists plus a total composition
/// table. Objects and morphisms keep their insertion order; every search and
/// serialization in the library iterates in that order, so results are
/// reproducible. Instances are immutable once built and are always handled
/// through shared_ptr<const FinCategory>.
class FinCategory {
 public:
  struct Morphism {
    std::string id;
    int src = -1;
    int dst = -1;
  };

  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_morphisms() const { return static_cast<int>(morphisms_.size()); }

  const std::string& object_name(int x) const { return objects_[x]; }
  const Morphism& morphism(int m) const { return morphisms_[m]; }
  const std::string& morphism_name(int m) const { return morphisms_[m].id; }
  int src(int m) const { return morphisms_[m].src; }
  int dst(int m) const { return morphisms_[m].dst; }
  int identity(int x) const { return identities_[x]; }

  bool composable(int g, int f) const {
    return morphisms_[f].dst == morphisms_[g].src;
  }

  /// g∘f (apply f first). Callers must pass a composable pair.
  int compose(int g, int f) const {
    int h = table_[static_cast<std::size_t>(g) * morphisms_.size() + f];
    if (h < 0)
      throw Error("NotComposable", "compose(" + morphisms_[g].id + ", " +
                                       morphisms_[f].id + ") is undefined");
    return h;
  }

  /// Morphisms X → Y in insertion order.
  const std::vector<int>& hom(int x, int y) const {
    return hom_[static_cast<std::size_t>(x) * objects_.size() + y];
  }

  /// Position of m inside hom(src(m), dst(m)).
  int hom_position(int m) const { return hom_pos_[m]; }

  bool is_idempotent(int m) const {
    return src(m) == dst(m) && compose(m, m) == m;
  }

  int object_index(const std::string& name) const {
    auto it = obj_index_.find(name);
    return it == obj_index_.end() ? -1 : it->second;
  }
  int morphism_index(const std::string& name) const {
    auto it = mor_index_.find(name);
    return it == mor_index_.end() ? -1 : it->second;
  }

  int require_object(const std::string& name) const {
    int x = object_index(name);
    if (x < 0) throw Error("UnknownObject", "no object named '" + name + "'");
    return x;
  }
  int require_morphism(const std::string& name) const {
    int m = morphism_index(name);
    if (m < 0) throw Error("UnknownMorphism", "no morphism named '" + name + "'");
    return m;
  }

  bool structurally_equal(const FinCategory& other) const {
    if (objects_ != other.objects_ || identities_ != other.identities_ ||
        table_ != other.table_)
      return false;
    if (morphisms_.size() != other.morphisms_.size()) return false;
    for (std::size_t i = 0; i < morphisms_.size(); ++i) {
      const Morphism& a = morphisms_[i];
      const Morphism& b = other.morphisms_[i];
      if (a.id != b.id || a.src != b.src || a.dst != b.dst) return false;
    }
    return true;
  }

 private:
  friend class FinCategoryBuilder;
  FinCategory() = default;

  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<int> identities_;  // object -> morphism
  std::vector<int> table_;       // [g * n + f] = g∘f, -1 if not composable
  std::vector<std::vector<int>> hom_;
  std::vector<int> hom_pos_;
  std::unordered_map<std::string, int> obj_index_;
  std::unordered_map<std::string, int> mor_index_;
};

using CategoryPtr = std::shared_ptr<const FinCategory>;

inline bool same_category(const CategoryPtr& a, const CategoryPtr& b) {
  return a == b || (a && b && a->structurally_equal(*b));
}

/// Morphisms X → Y looked up by object name, in deterministic order.
inline const std::vector<int>& hom_set(const FinCategory& c, const std::string& x,
                                       const std::string& y) {
  return c.hom(c.require_object(x), c.require_object(y));
}

/// Collects raw category data and validates the axioms in build():
/// identities neutral, composition total on composable pairs and only there,
/// associativity over all composable triples. Errors carry the ids of the
/// offending morphisms.
class FinCategoryBuilder {
 public:
  FinCategoryBuilder& add_object(const std::string& id) {
    if (id.empty()) throw Error("EmptyId", "object with empty id");
    if (!obj_index_.emplace(id, static_cast<int>(objects_.size())).second)
      throw Error("DuplicateId", "duplicate object id '" + id + "'");
    objects_.push_back(id);
    return *this;
  }

  FinCategoryBuilder& add_morphism(const std::string& id, const std::string& src,
                                   const std::string& dst) {
    if (id.empty()) throw Error("EmptyId", "morphism with empty id");
    if (!mor_index_.emplace(id, static_cast<int>(morphisms_.size())).second)
      throw Error("DuplicateId", "duplicate morphism id '" + id + "'");
    morphisms_.push_back({id, src, dst});
    return *this;
  }

  FinCategoryBuilder& set_identity(const std::string& obj, const std::string& mor) {
    identity_of_[obj] = mor;
    return *this;
  }

  /// Declare g∘f = h.
  FinCategoryBuilder& set_compose(const std::string& g, const std::string& f,
                                  const std::string& h) {
    compose_entries_.push_back({g, f, h});
    return *this;
  }

  CategoryPtr build() && {
    auto cat = std::shared_ptr<FinCategory>(new FinCategory());
    const int nobj = static_cast<int>(objects_.size());
    const int nmor = static_cast<int>(morphisms_.size());
    cat->objects_ = std::move(objects_);
    cat->obj_index_ = std::move(obj_index_);

    cat->morphisms_.reserve(morphisms_.size());
    for (const RawMorphism& raw : morphisms_) {
      int s = lookup(cat->obj_index_, raw.src);
      int d = lookup(cat->obj_index_, raw.dst);
      if (s < 0 || d < 0)
        throw Error("DanglingEndpoint",
                    "morphism '" + raw.id + "' references unknown object '" +
                        (s < 0 ? raw.src : raw.dst) + "'");
      cat->morphisms_.push_back({raw.id, s, d});
    }
    cat->mor_index_ = std::move(mor_index_);

    cat->identities_.assign(nobj, -1);
    for (const auto& [obj, mor] : identity_of_) {
      int x = lookup(cat->obj_index_, obj);
      if (x < 0) throw Error("UnknownObject", "identity assigned to unknown object '" + obj + "'");
      int m = lookup(cat->mor_index_, mor);
      if (m < 0) throw Error("UnknownMorphism", "identity of '" + obj + "' names unknown morphism '" + mor + "'");
      cat->identities_[x] = m;
    }
    for (int x = 0; x < nobj; ++x) {
      if (cat->identities_[x] < 0)
        throw Error("MissingIdentity", "object '" + cat->objects_[x] + "' has no identity morphism");
      int m = cat->identities_[x];
      if (cat->src(m) != x || cat->dst(m) != x)
        throw Error("IdentityNotNeutral",
                    "identity '" + cat->morphism_name(m) + "' of object '" +
                        cat->objects_[x] + "' is not an endomorphism of it");
    }

    cat->table_.assign(static_cast<std::size_t>(nmor) * nmor, -1);
    for (const RawCompose& e : compose_entries_) {
      int g = lookup(cat->mor_index_, e.g);
      int f = lookup(cat->mor_index_, e.f);
      int h = lookup(cat->mor_index_, e.h);
      if (g < 0 || f < 0 || h < 0)
        throw Error("UnknownMorphism", "compose entry [" + e.g + ", " + e.f +
                                           ", " + e.h + "] names an unknown morphism");
      if (!cat->composable(g, f))
        throw Error("SpuriousComposite",
                    "compose entry for non-composable pair (" + e.g + ", " + e.f + ")");
      if (cat->src(h) != cat->src(f) || cat->dst(h) != cat->dst(g))
        throw Error("SpuriousComposite",
                    "composite of (" + e.g + ", " + e.f + ") has endpoints not matching '" + e.h + "'");
      int& slot = cat->table_[static_cast<std::size_t>(g) * nmor + f];
      if (slot >= 0 && slot != h)
        throw Error("DuplicateComposite",
                    "two composites declared for (" + e.g + ", " + e.f + ")");
      slot = h;
    }
    for (int g = 0; g < nmor; ++g)
      for (int f = 0; f < nmor; ++f)
        if (cat->composable(g, f) && cat->table_[static_cast<std::size_t>(g) * nmor + f] < 0)
          throw Error("MissingComposite", "no composite declared for (" +
                                              cat->morphism_name(g) + ", " +
                                              cat->morphism_name(f) + ")");

    for (int f = 0; f < nmor; ++f) {
      int idd = cat->identities_[cat->dst(f)];
      int ids = cat->identities_[cat->src(f)];
      if (cat->compose(idd, f) != f || cat->compose(f, ids) != f)
        throw Error("IdentityNotNeutral",
                    "identity is not neutral on morphism '" + cat->morphism_name(f) + "'");
    }

    for (int f = 0; f < nmor; ++f)
      for (int g = 0; g < nmor; ++g) {
        if (!cat->composable(g, f)) continue;
        int gf = cat->compose(g, f);
        for (int h = 0; h < nmor; ++h) {
          if (!cat->composable(h, g)) continue;
          if (cat->compose(h, gf) != cat->compose(cat->compose(h, g), f))
            throw Error("NotAssociative",
                        "associativity fails on (" + cat->morphism_name(h) + ", " +
                            cat->morphism_name(g) + ", " + cat->morphism_name(f) + ")");
        }
      }

    cat->hom_.assign(static_cast<std::size_t>(nobj) * nobj, {});
    cat->hom_pos_.assign(nmor, -1);
    for (int m = 0; m < nmor; ++m) {
      auto& cell = cat->hom_[static_cast<std::size_t>(cat->src(m)) * nobj + cat->dst(m)];
      cat->hom_pos_[m] = static_cast<int>(cell.size());
      cell.push_back(m);
    }
    return cat;
  }

 private:
  struct RawMorphism {
    std::string id, src, dst;
  };
  struct RawCompose {
    std::string g, f, h;
  };

  static int lookup(const std::unordered_map<std::string, int>& map,
                    const std::string& key) {
    auto it = map.find(key);
    return it == map.end() ? -1 : it->second;
  }

  std::vector<std::string> objects_;
  std::vector<RawMorphism> morphisms_;
  std::unordered_map<std::string, std::string> identity_of_;
  std::vector<RawCompose> compose_entries_;
  std::unordered_map<std::string, int> obj_index_;
  std::unordered_map<std::string, int> mor_index_;
};

/// One object, one identity morphism.
inline CategoryPtr terminal_category(const std::string& obj = "*",
                                     const std::string& id = "id") {
  FinCategoryBuilder b;
  b.add_object(obj);
  b.add_morphism(id, obj, obj);
  b.set_identity(obj, id);
  b.set_compose(id, id, id);
  return std::move(b).build();
}

/// Builds the one-object category of a monoid. table[i][j] is the index of
/// element_i ∘ element_j (apply j first).
inline CategoryPtr monoid_category(const std::vector<std::string>& elements,
                                   const std::vector<std::vector<int>>& table,
                                   int unit, const std::string& obj = "*") {
  const int n = static_cast<int>(elements.size());
  if (unit < 0 || unit >= n) throw Error("NotAMonoid", "unit index out of range");
  if (static_cast<int>(table.size()) != n)
    throw Error("NotAMonoid", "multiplication table has wrong shape");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw Error("NotAMonoid", "multiplication table has wrong shape");
    for (int v : row)
      if (v < 0 || v >= n) throw Error("NotAMonoid", "table value out of range");
  }
  for (int i = 0; i < n; ++i)
    if (table[unit][i] != i || table[i][unit] != i)
      throw Error("NotAMonoid", "'" + elements[unit] + "' is not a unit at '" +
                                    elements[i] + "'");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (table[i][table[j][k]] != table[table[i][j]][k])
          throw Error("NotAMonoid", "multiplication not associative at (" +
                                        elements[i] + ", " + elements[j] + ", " +
                                        elements[k] + ")");

  FinCategoryBuilder b;
  b.add_object(obj);
  for (const std::string& e : elements) b.add_morphism(e, obj, obj);
  b.set_identity(obj, elements[unit]);
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f)
      b.set_compose(elements[g], elements[f], elements[table[g][f]]);
  return std::move(b).build();
}

/// Same objects and morphism ids with src/dst swapped and the table reversed.
inline CategoryPtr opposite(const CategoryPtr& c) {
  FinCategoryBuilder b;
  for (int x = 0; x < c->num_objects(); ++x) b.add_object(c->object_name(x));
  for (int m = 0; m < c->num_morphisms(); ++m)
    b.add_morphism(c->morphism_name(m), c->object_name(c->dst(m)),
                   c->object_name(c->src(m)));
  for (int x = 0; x < c->num_objects(); ++x)
    b.set_identity(c->object_name(x), c->morphism_name(c->identity(x)));
  for (int g = 0; g < c->num_morphisms(); ++g)
    for (int f = 0; f < c->num_morphisms(); ++f)
      if (c->composable(f, g))
        b.set_compose(c->morphism_name(g), c->morphism_name(f),
                      c->morphism_name(c->compose(f, g)));
  return std::move(b).build();
}

inline std::string pair_name(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

/// Objects and morphisms are pairs; composition is componentwise.
inline CategoryPtr product_category(const CategoryPtr& c, const CategoryPtr& d) {
  FinCategoryBuilder b;
  for (int x = 0; x < c->num_objects(); ++x)
    for (int y = 0; y < d->num_objects(); ++y)
      b.add_object(pair_name(c->object_name(x), d->object_name(y)));
  for (int m = 0; m < c->num_morphisms(); ++m)
    for (int n = 0; n < d->num_morphisms(); ++n)
      b.add_morphism(pair_name(c->morphism_name(m), d->morphism_name(n)),
                     pair_name(c->object_name(c->src(m)), d->object_name(d->src(n))),
                     pair_name(c->object_name(c->dst(m)), d->object_name(d->dst(n))));
  for (int x = 0; x < c->num_objects(); ++x)
    for (int y = 0; y < d->num_objects(); ++y)
      b.set_identity(pair_name(c->object_name(x), d->object_name(y)),
                     pair_name(c->morphism_name(c->identity(x)),
                               d->morphism_name(d->identity(y))));
  for (int g = 0; g < c->num_morphisms(); ++g)
    for (int f = 0; f < c->num_morphisms(); ++f) {
      if (!c->composable(g, f)) continue;
      for (int u = 0; u < d->num_morphisms(); ++u)
        for (int v = 0; v < d->num_morphisms(); ++v) {
          if (!d->composable(u, v)) continue;
          b.set_compose(pair_name(c->morphism_name(g), d->morphism_name(u)),
                        pair_name(c->morphism_name(f), d->morphism_name(v)),
                        pair_name(c->morphism_name(c->compose(g, f)),
                                  d->morphism_name(d->compose(u, v))));
        }
    }
  return std::move(b).build();
}

}  // namespace semicat
