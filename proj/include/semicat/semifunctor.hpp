#pragma once

#include <memory>
#include <string>
#include <vector>

#include "semicat/error.hpp"
#include "semicat/fincat.hpp"

namespace semicat {

/// A semifunctor: object map plus morphism map preserving composition.
/// Identities need not be preserved; F(Id_X) is always idempotent.
struct Semifunctor {
  CategoryPtr source;
  CategoryPtr target;
  std::vector<int> obj_map;  // source object -> target object
  std::vector<int> mor_map;  // source morphism -> target morphism

  int obj(int x) const { return obj_map[x]; }
  int mor(int m) const { return mor_map[m]; }
  int image_identity(int x) const { return mor_map[source->identity(x)]; }

  friend bool operator==(const Semifunctor& a, const Semifunctor& b) {
    return same_category(a.source, b.source) && same_category(a.target, b.target) &&
           a.obj_map == b.obj_map && a.mor_map == b.mor_map;
  }
};

/// Checks totality, endpoint coherence and preservation of composition.
inline Semifunctor make_semifunctor(CategoryPtr source, CategoryPtr target,
                                    std::vector<int> obj_map,
                                    std::vector<int> mor_map) {
  if (static_cast<int>(obj_map.size()) != source->num_objects() ||
      static_cast<int>(mor_map.size()) != source->num_morphisms())
    throw Error("ShapeMismatch", "semifunctor maps are not total on the source");
  for (int x : obj_map)
    if (x < 0 || x >= target->num_objects())
      throw Error("ShapeMismatch", "object map value out of range");
  for (int m = 0; m < source->num_morphisms(); ++m) {
    int fm = mor_map[m];
    if (fm < 0 || fm >= target->num_morphisms())
      throw Error("ShapeMismatch", "morphism map value out of range");
    if (target->src(fm) != obj_map[source->src(m)] ||
        target->dst(fm) != obj_map[source->dst(m)])
      throw Error("EndpointMismatch",
                  "image of '" + source->morphism_name(m) +
                      "' does not go between the image objects");
  }
  for (int f = 0; f < source->num_morphisms(); ++f)
    for (int g = 0; g < source->num_morphisms(); ++g) {
      if (!source->composable(g, f)) continue;
      if (mor_map[source->compose(g, f)] !=
          target->compose(mor_map[g], mor_map[f]))
        throw Error("CompositionNotPreserved",
                    "F(" + source->morphism_name(g) + " ∘ " +
                        source->morphism_name(f) + ") differs from the composite of images");
    }
  Semifunctor f{std::move(source), std::move(target), std::move(obj_map),
                std::move(mor_map)};
  for (int x = 0; x < f.source->num_objects(); ++x) {
    int e = f.image_identity(x);
    if (!f.target->is_idempotent(e))
      throw Error("CompositionNotPreserved",
                  "image of an identity is not idempotent");  // unreachable
  }
  return f;
}

inline Semifunctor make_semifunctor_by_name(
    CategoryPtr source, CategoryPtr target,
    const std::vector<std::pair<std::string, std::string>>& objects,
    const std::vector<std::pair<std::string, std::string>>& morphisms) {
  std::vector<int> obj_map(source->num_objects(), -1);
  std::vector<int> mor_map(source->num_morphisms(), -1);
  for (const auto& [from, to] : objects)
    obj_map[source->require_object(from)] = target->require_object(to);
  for (const auto& [from, to] : morphisms)
    mor_map[source->require_morphism(from)] = target->require_morphism(to);
  return make_semifunctor(std::move(source), std::move(target), std::move(obj_map),
                          std::move(mor_map));
}

inline Semifunctor identity_semifunctor(const CategoryPtr& c) {
  std::vector<int> obj(c->num_objects()), mor(c->num_morphisms());
  for (int x = 0; x < c->num_objects(); ++x) obj[x] = x;
  for (int m = 0; m < c->num_morphisms(); ++m) mor[m] = m;
  return Semifunctor{c, c, std::move(obj), std::move(mor)};
}

/// True iff F(Id_X) = Id_FX for every object X.
inline bool is_functor(const Semifunctor& f) {
  for (int x = 0; x < f.source->num_objects(); ++x)
    if (f.image_identity(x) != f.target->identity(f.obj(x))) return false;
  return true;
}

/// g ∘ f, pointwise on both maps.
inline Semifunctor compose_semifunctors(const Semifunctor& g, const Semifunctor& f) {
  if (!same_category(f.target, g.source))
    throw Error("SourceTargetMismatch",
                "cannot compose semifunctors: inner target differs from outer source");
  std::vector<int> obj(f.obj_map.size()), mor(f.mor_map.size());
  for (std::size_t x = 0; x < f.obj_map.size(); ++x) obj[x] = g.obj_map[f.obj_map[x]];
  for (std::size_t m = 0; m < f.mor_map.size(); ++m) mor[m] = g.mor_map[f.mor_map[m]];
  return Semifunctor{f.source, g.target, std::move(obj), std::move(mor)};
}

/// X ↦ F(Id_X); each value is idempotent in the target.
inline std::vector<int> image_identities(const Semifunctor& f) {
  std::vector<int> out(f.source->num_objects());
  for (int x = 0; x < f.source->num_objects(); ++x) out[x] = f.image_identity(x);
  return out;
}

/// An idempotent natural transformation e : Id_C → Id_C, stored as a family
/// of endomorphisms e_X with e_X∘e_X = e_X and f∘e_X = e_Y∘f for all f.
struct IdemNatTransf {
  CategoryPtr base;
  std::vector<int> components;  // object -> endomorphism

  int at(int x) const { return components[x]; }

  friend bool operator==(const IdemNatTransf& a, const IdemNatTransf& b) {
    return same_category(a.base, b.base) && a.components == b.components;
  }
};

inline IdemNatTransf make_idem_nat_transf(CategoryPtr base, std::vector<int> components) {
  if (static_cast<int>(components.size()) != base->num_objects())
    throw Error("ShapeMismatch", "one component per object required");
  for (int x = 0; x < base->num_objects(); ++x) {
    int e = components[x];
    if (e < 0 || e >= base->num_morphisms() || base->src(e) != x || base->dst(e) != x)
      throw Error("EndpointMismatch",
                  "component at '" + base->object_name(x) + "' is not an endomorphism");
    if (base->compose(e, e) != e)
      throw Error("NotIdempotent",
                  "component '" + base->morphism_name(e) + "' is not idempotent");
  }
  for (int f = 0; f < base->num_morphisms(); ++f) {
    int x = base->src(f), y = base->dst(f);
    if (base->compose(f, components[x]) != base->compose(components[y], f))
      throw Error("NotNatural", "naturality square fails at morphism '" +
                                    base->morphism_name(f) + "'");
  }
  return IdemNatTransf{std::move(base), std::move(components)};
}

inline IdemNatTransf identity_idem_nat_transf(const CategoryPtr& c) {
  std::vector<int> comps(c->num_objects());
  for (int x = 0; x < c->num_objects(); ++x) comps[x] = c->identity(x);
  return IdemNatTransf{c, std::move(comps)};
}

inline bool is_identity_transf(const IdemNatTransf& e) {
  for (int x = 0; x < e.base->num_objects(); ++x)
    if (e.components[x] != e.base->identity(x)) return false;
  return true;
}

/// The canonical endosemifunctor of an idempotent natural transformation:
/// identity on objects, f ↦ f∘e_X (= e_Y∘f). A functor exactly when e = Id.
inline Semifunctor canonical_E(const IdemNatTransf& e) {
  const CategoryPtr& c = e.base;
  std::vector<int> obj(c->num_objects()), mor(c->num_morphisms());
  for (int x = 0; x < c->num_objects(); ++x) obj[x] = x;
  for (int m = 0; m < c->num_morphisms(); ++m)
    mor[m] = c->compose(m, e.at(c->src(m)));
  return make_semifunctor(c, c, std::move(obj), std::move(mor));
}

/// Sends every object to src(z) and every morphism to the idempotent z.
inline Semifunctor constant_semifunctor(const CategoryPtr& target, int z,
                                        const CategoryPtr& source) {
  if (z < 0 || z >= target->num_morphisms() || !target->is_idempotent(z))
    throw Error("NotIdempotent", "constant value must be an idempotent endomorphism");
  std::vector<int> obj(source->num_objects(), target->src(z));
  std::vector<int> mor(source->num_morphisms(), z);
  return make_semifunctor(source, target, std::move(obj), std::move(mor));
}

}  // namespace semicat
