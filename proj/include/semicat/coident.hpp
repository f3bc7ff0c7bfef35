#pragma once

#include <string>
#include <vector>

#include "semicat/error.hpp"
#include "semicat/semifunctor.hpp"

namespace semicat {

/// The coidentifier C_e of an idempotent natural transformation e: same
/// objects, hom-sets quotiented by f ~ g iff e_Y∘f = e_Y∘g. H is the
/// canonical projection functor, L the section semifunctor f̄ ↦ e_Y∘f.
struct Coidentifier {
  CategoryPtr category;           // C_e
  Semifunctor projection;         // H : C → C_e
  Semifunctor section;            // L : C_e → C
  std::vector<int> class_of;      // base morphism -> C_e morphism
  std::vector<int> representative;  // C_e morphism -> least base morphism
};

inline Coidentifier coidentifier(const CategoryPtr& c, const IdemNatTransf& e) {
  if (!same_category(c, e.base))
    throw Error("ShapeMismatch", "idempotent transformation lives on another category");
  const int nmor = c->num_morphisms();

  // Canonical representative: least morphism index with the same e_Y∘f.
  std::vector<int> rep_of(nmor, -1);
  std::vector<int> reps;
  for (int f = 0; f < nmor; ++f) {
    int key = c->compose(e.at(c->dst(f)), f);
    for (int g = 0; g <= f; ++g) {
      if (c->src(g) != c->src(f) || c->dst(g) != c->dst(f)) continue;
      if (c->compose(e.at(c->dst(g)), g) == key) {
        rep_of[f] = rep_of[g] < 0 ? g : rep_of[g];
        break;
      }
    }
    if (rep_of[f] == f) reps.push_back(f);
  }

  auto cls_name = [&](int rep) { return c->morphism_name(rep) + "~"; };

  FinCategoryBuilder b;
  for (int x = 0; x < c->num_objects(); ++x) b.add_object(c->object_name(x));
  for (int r : reps) b.add_morphism(cls_name(r), c->object_name(c->src(r)),
                                    c->object_name(c->dst(r)));
  for (int x = 0; x < c->num_objects(); ++x)
    b.set_identity(c->object_name(x), cls_name(rep_of[c->identity(x)]));
  for (int r : reps)
    for (int s : reps) {
      if (!c->composable(r, s)) continue;
      b.set_compose(cls_name(r), cls_name(s), cls_name(rep_of[c->compose(r, s)]));
    }
  Coidentifier out;
  out.category = std::move(b).build();

  std::vector<int> cls_index(nmor, -1);
  for (std::size_t i = 0; i < reps.size(); ++i) cls_index[reps[i]] = static_cast<int>(i);
  out.class_of.resize(nmor);
  for (int f = 0; f < nmor; ++f) out.class_of[f] = cls_index[rep_of[f]];
  out.representative = reps;

  // Composition must be independent of representatives.
  for (int g = 0; g < nmor; ++g)
    for (int f = 0; f < nmor; ++f) {
      if (!c->composable(g, f)) continue;
      int via_reps = c->compose(rep_of[g], rep_of[f]);
      if (rep_of[c->compose(g, f)] != rep_of[via_reps])
        throw Error("InternalInvariantViolation",
                    "coidentifier composition is not well defined at (" +
                        c->morphism_name(g) + ", " + c->morphism_name(f) + ")");
    }

  std::vector<int> id_obj(c->num_objects());
  for (int x = 0; x < c->num_objects(); ++x) id_obj[x] = x;
  out.projection = make_semifunctor(c, out.category, id_obj, out.class_of);
  if (!is_functor(out.projection))
    throw Error("InternalInvariantViolation", "coidentifier projection is not a functor");

  std::vector<int> section_mor(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i)
    section_mor[i] = c->compose(e.at(c->dst(reps[i])), reps[i]);
  out.section = make_semifunctor(out.category, c, id_obj, std::move(section_mor));
  for (int x = 0; x < c->num_objects(); ++x)
    if (out.section.image_identity(x) != e.at(x))
      throw Error("InternalInvariantViolation", "L(Id) differs from e");
  return out;
}

}  // namespace semicat
