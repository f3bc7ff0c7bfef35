#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "semicat/error.hpp"
#include "semicat/props.hpp"
#include "semicat/semifunctor.hpp"
#include "semicat/transform.hpp"

namespace semicat {

/// The idempotent completion C♮ together with the bookkeeping needed to move
/// between C and C♮. Objects of C♮ are pairs (X, e) with e idempotent,
/// serialized as "X#e"; a morphism (X,e) → (X',e') is an f : X → X' with
/// e'∘f∘e = f, and Id_(X,e) = e.
struct Completion {
  CategoryPtr base;
  CategoryPtr category;
  std::vector<std::pair<int, int>> object_pairs;  // completed object -> (obj, idem)
  std::vector<int> underlying;                    // completed morphism -> base morphism
  std::vector<int> object_of_idem;                // base morphism -> completed object or -1

  int object_of(int idem) const {
    int o = object_of_idem[idem];
    if (o < 0)
      throw Error("NotIdempotent",
                  "'" + base->morphism_name(idem) + "' is not an idempotent endomorphism");
    return o;
  }

  int morphism_at(int csrc, int cdst, int base_mor) const {
    auto it = index_.find(std::make_tuple(csrc, cdst, base_mor));
    if (it == index_.end())
      throw Error("UnknownMorphism",
                  "'" + base->morphism_name(base_mor) + "' is not a morphism " +
                      category->object_name(csrc) + " → " + category->object_name(cdst));
    return it->second;
  }

  std::map<std::tuple<int, int, int>, int> index_;
};

inline Completion idempotent_completion(const CategoryPtr& c, int morphism_cap = 5000) {
  Completion result;
  result.base = c;
  result.object_of_idem.assign(c->num_morphisms(), -1);
  for (int x = 0; x < c->num_objects(); ++x)
    for (int m : c->hom(x, x))
      if (c->compose(m, m) == m) {
        result.object_of_idem[m] = static_cast<int>(result.object_pairs.size());
        result.object_pairs.push_back({x, m});
      }

  struct Mor {
    int csrc, cdst, base;
  };
  std::vector<Mor> mors;
  const int nco = static_cast<int>(result.object_pairs.size());
  for (int a = 0; a < nco; ++a)
    for (int b = 0; b < nco; ++b) {
      auto [x, e] = result.object_pairs[a];
      auto [y, ep] = result.object_pairs[b];
      for (int f : c->hom(x, y))
        if (c->compose(ep, c->compose(f, e)) == f) {
          if (static_cast<int>(mors.size()) >= morphism_cap)
            throw Error("CompletionTooLarge",
                        "completion exceeds the cap of " + std::to_string(morphism_cap) +
                            " morphisms");
          mors.push_back({a, b, f});
        }
    }

  auto obj_name = [&](int a) {
    auto [x, e] = result.object_pairs[a];
    return c->object_name(x) + "#" + c->morphism_name(e);
  };
  auto mor_name = [&](const Mor& m) {
    return c->morphism_name(m.base) + "@" + obj_name(m.csrc) + ">" + obj_name(m.cdst);
  };

  FinCategoryBuilder b;
  for (int a = 0; a < nco; ++a) b.add_object(obj_name(a));
  for (const Mor& m : mors) b.add_morphism(mor_name(m), obj_name(m.csrc), obj_name(m.cdst));
  for (int a = 0; a < nco; ++a) {
    int e = result.object_pairs[a].second;
    b.set_identity(obj_name(a), mor_name(Mor{a, a, e}));
  }
  for (const Mor& g : mors)
    for (const Mor& f : mors) {
      if (f.cdst != g.csrc) continue;
      b.set_compose(mor_name(g), mor_name(f),
                    mor_name(Mor{f.csrc, g.cdst, c->compose(g.base, f.base)}));
    }
  result.category = std::move(b).build();
  result.underlying.resize(mors.size());
  for (std::size_t i = 0; i < mors.size(); ++i) {
    result.underlying[i] = mors[i].base;
    result.index_[std::make_tuple(mors[i].csrc, mors[i].cdst, mors[i].base)] =
        static_cast<int>(i);
  }
  return result;
}

/// The canonical fully faithful functor ι : C → C♮, X ↦ (X, Id_X).
inline Semifunctor iota(const Completion& comp) {
  const FinCategory& c = *comp.base;
  std::vector<int> obj(c.num_objects()), mor(c.num_morphisms());
  for (int x = 0; x < c.num_objects(); ++x) obj[x] = comp.object_of(c.identity(x));
  for (int m = 0; m < c.num_morphisms(); ++m)
    mor[m] = comp.morphism_at(obj[c.src(m)], obj[c.dst(m)], m);
  return make_semifunctor(comp.base, comp.category, std::move(obj), std::move(mor));
}

/// The forgetful semifunctor υ : C♮ → C, (X,e) ↦ X; υ(Id_(X,e)) = e.
inline Semifunctor upsilon(const Completion& comp) {
  const FinCategory& n = *comp.category;
  std::vector<int> obj(n.num_objects()), mor(n.num_morphisms());
  for (int a = 0; a < n.num_objects(); ++a) obj[a] = comp.object_pairs[a].first;
  for (int m = 0; m < n.num_morphisms(); ++m) mor[m] = comp.underlying[m];
  return make_semifunctor(comp.category, comp.base, std::move(obj), std::move(mor));
}

/// F♮ : C♮ → D♮, (X,e) ↦ (FX, Fe), f ↦ Ff. Always a genuine functor.
inline Semifunctor complete_semifunctor(const Semifunctor& f, const Completion& source,
                                        const Completion& target) {
  if (!same_category(f.source, source.base) || !same_category(f.target, target.base))
    throw Error("ShapeMismatch", "completions do not match the semifunctor");
  const FinCategory& sn = *source.category;
  std::vector<int> obj(sn.num_objects()), mor(sn.num_morphisms());
  for (int a = 0; a < sn.num_objects(); ++a)
    obj[a] = target.object_of(f.mor(source.object_pairs[a].second));
  for (int m = 0; m < sn.num_morphisms(); ++m) {
    int a = sn.src(m), bb = sn.dst(m);
    mor[m] = target.morphism_at(obj[a], obj[bb], f.mor(source.underlying[m]));
  }
  Semifunctor fn = make_semifunctor(source.category, target.category, std::move(obj),
                                    std::move(mor));
  if (!is_functor(fn))
    throw Error("InternalInvariantViolation", "completed semifunctor is not a functor");
  return fn;
}

/// α♮ with components α_(X,e) = α_X∘Fe = F'e∘α_X; a natural transformation
/// between the completed functors.
inline Transformation complete_transformation(const Transformation& a,
                                              const Completion& source,
                                              const Completion& target) {
  if (!is_seminatural(a))
    throw Error("NotSeminatural", "only seminatural transformations complete");
  Semifunctor fn = complete_semifunctor(a.from, source, target);
  Semifunctor gn = complete_semifunctor(a.to, source, target);
  const FinCategory& d = *a.from.target;
  std::vector<int> comps(source.category->num_objects());
  for (int o = 0; o < source.category->num_objects(); ++o) {
    auto [x, e] = source.object_pairs[o];
    int left = d.compose(a.at(x), a.from.mor(e));
    if (left != d.compose(a.to.mor(e), a.at(x)))
      throw Error("InternalInvariantViolation", "α_X∘Fe and F'e∘α_X disagree");
    comps[o] = target.morphism_at(fn.obj(o), gn.obj(o), left);
  }
  Transformation an = make_transformation(fn, gn, std::move(comps));
  if (!is_natural(an))
    throw Error("InternalInvariantViolation", "completed transformation is not natural");
  return an;
}

/// Splits the idempotent e of C through the completed object (src e, e):
/// returns (h, k) in C♮ with k∘h = ι(e) and h∘k = Id_(X,e).
inline std::pair<int, int> split_idempotent(const Completion& comp, int e) {
  const FinCategory& c = *comp.base;
  if (e < 0 || e >= c.num_morphisms() || !c.is_idempotent(e))
    throw Error("NotIdempotent", "only idempotent endomorphisms split");
  int xid = comp.object_of(c.identity(c.src(e)));
  int xe = comp.object_of(e);
  int h = comp.morphism_at(xid, xe, e);
  int k = comp.morphism_at(xe, xid, e);
  const FinCategory& n = *comp.category;
  if (n.compose(k, h) != comp.morphism_at(xid, xid, e) ||
      n.compose(h, k) != n.identity(xe))
    throw Error("InternalInvariantViolation", "canonical splitting failed");
  return {h, k};
}

/// Witness search in C itself: every idempotent e factors as k∘h with
/// h∘k = Id.
inline bool is_idempotent_complete(const CategoryPtr& c) {
  for (int e = 0; e < c->num_morphisms(); ++e) {
    if (!c->is_idempotent(e)) continue;
    int x = c->src(e);
    bool split = false;
    for (int y = 0; y < c->num_objects() && !split; ++y)
      for (int h : c->hom(x, y)) {
        if (split) break;
        for (int k : c->hom(y, x))
          if (c->compose(k, h) == e && c->compose(h, k) == c->identity(y)) {
            split = true;
            break;
          }
      }
    if (!split) return false;
  }
  return true;
}

}  // namespace semicat
