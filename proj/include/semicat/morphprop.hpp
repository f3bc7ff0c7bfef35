#pragma once

#include <optional>

#include "semicat/error.hpp"
#include "semicat/semifunctor.hpp"

namespace semicat {

namespace detail {
inline void require_inputs(const Semifunctor& f, int c, int mor) {
  if (c < 0 || c >= f.source->num_objects())
    throw Error("UnknownObject", "object index out of range");
  if (mor < 0 || mor >= f.target->num_morphisms())
    throw Error("UnknownMorphism", "morphism index out of range");
}
inline void require_from_image(const Semifunctor& f, int c, int mor) {
  require_inputs(f, c, mor);
  if (f.target->src(mor) != f.obj(c))
    throw Error("EndpointMismatch", "morphism '" + f.target->morphism_name(mor) +
                                        "' does not start at FC");
}
inline void require_into_image(const Semifunctor& f, int c, int mor) {
  require_inputs(f, c, mor);
  if (f.target->dst(mor) != f.obj(c))
    throw Error("EndpointMismatch", "morphism '" + f.target->morphism_name(mor) +
                                        "' does not end at FC");
}
}  // namespace detail

/// f : FC → D, and f∘h = f∘k forces FId_C∘h = FId_C∘k for every parallel
/// pair h,k into FC.
inline bool is_fc_semi_mono(const Semifunctor& f, int c, int mor) {
  detail::require_from_image(f, c, mor);
  const FinCategory& d = *f.target;
  int fid = f.image_identity(c);
  int fc = f.obj(c);
  for (int dp = 0; dp < d.num_objects(); ++dp) {
    const std::vector<int>& cands = d.hom(dp, fc);
    for (int h : cands)
      for (int k : cands)
        if (d.compose(mor, h) == d.compose(mor, k) &&
            d.compose(fid, h) != d.compose(fid, k))
          return false;
  }
  return true;
}

/// f : D → FC, and h∘f = k∘f forces h∘FId_C = k∘FId_C.
inline bool is_fc_semi_epi(const Semifunctor& f, int c, int mor) {
  detail::require_into_image(f, c, mor);
  const FinCategory& d = *f.target;
  int fid = f.image_identity(c);
  int fc = f.obj(c);
  for (int dp = 0; dp < d.num_objects(); ++dp) {
    const std::vector<int>& cands = d.hom(fc, dp);
    for (int h : cands)
      for (int k : cands)
        if (d.compose(h, mor) == d.compose(k, mor) &&
            d.compose(h, fid) != d.compose(k, fid))
          return false;
  }
  return true;
}

/// First g : D → FC with g∘f = FId_C.
inline std::optional<int> fc_semisplit_mono_witness(const Semifunctor& f, int c, int mor) {
  detail::require_from_image(f, c, mor);
  const FinCategory& d = *f.target;
  int fid = f.image_identity(c);
  for (int g : d.hom(d.dst(mor), f.obj(c)))
    if (d.compose(g, mor) == fid) return g;
  return std::nullopt;
}

/// First g : FC → D with f∘g = FId_C.
inline std::optional<int> fc_semisplit_epi_witness(const Semifunctor& f, int c, int mor) {
  detail::require_into_image(f, c, mor);
  const FinCategory& d = *f.target;
  int fid = f.image_identity(c);
  for (int g : d.hom(f.obj(c), d.src(mor)))
    if (d.compose(mor, g) == fid) return g;
  return std::nullopt;
}

namespace detail {
inline void require_between_images(const Semifunctor& f, int c, const Semifunctor& fp,
                                   int cp, int mor) {
  if (!same_category(f.target, fp.target))
    throw Error("ShapeMismatch", "the two semifunctors must share their target");
  require_from_image(f, c, mor);
  require_into_image(fp, cp, mor);
}
}  // namespace detail

/// f : FC → F'C' with f∘FId_C = f and a g with g∘f = FId_C, g∘F'Id_C' = g.
inline std::optional<int> cc_semisplit_mono_witness(const Semifunctor& f, int c,
                                                    const Semifunctor& fp, int cp,
                                                    int mor) {
  detail::require_between_images(f, c, fp, cp, mor);
  const FinCategory& d = *f.target;
  int fid = f.image_identity(c);
  int fid_p = fp.image_identity(cp);
  if (d.compose(mor, fid) != mor) return std::nullopt;
  for (int g : d.hom(fp.obj(cp), f.obj(c)))
    if (d.compose(g, mor) == fid && d.compose(g, fid_p) == g) return g;
  return std::nullopt;
}

/// f : FC → F'C' with F'Id_C'∘f = f and a g with f∘g = F'Id_C', FId_C∘g = g.
inline std::optional<int> cc_semisplit_epi_witness(const Semifunctor& f, int c,
                                                   const Semifunctor& fp, int cp,
                                                   int mor) {
  detail::require_between_images(f, c, fp, cp, mor);
  const FinCategory& d = *f.target;
  int fid = f.image_identity(c);
  int fid_p = fp.image_identity(cp);
  if (d.compose(fid_p, mor) != mor) return std::nullopt;
  for (int g : d.hom(fp.obj(cp), f.obj(c)))
    if (d.compose(mor, g) == fid_p && d.compose(fid, g) == g) return g;
  return std::nullopt;
}

/// If f is an (F_C, F'_C')-semi-isomorphism, returns the canonical semi-inverse
/// g' = g∘f∘g, the unique two-sided inverse-up-to-image-identities with
/// FId_C∘g' = g'. Uniqueness is re-checked by exhaustive scan.
inline std::optional<int> cc_semi_isomorphism(const Semifunctor& f, int c,
                                              const Semifunctor& fp, int cp, int mor) {
  detail::require_between_images(f, c, fp, cp, mor);
  const FinCategory& d = *f.target;
  int fid = f.image_identity(c);
  int fid_p = fp.image_identity(cp);
  if (d.compose(mor, fid) != mor) return std::nullopt;
  std::optional<int> normalized;
  for (int g : d.hom(fp.obj(cp), f.obj(c))) {
    if (d.compose(g, mor) != fid || d.compose(mor, g) != fid_p) continue;
    int gp = d.compose(d.compose(g, mor), g);
    if (d.compose(fid, gp) != gp)
      throw Error("InternalInvariantViolation", "normalized semi-inverse not absorbed");
    if (normalized && *normalized != gp)
      throw Error("InternalInvariantViolation",
                  "two distinct normalized semi-inverses for '" +
                      d.morphism_name(mor) + "'");
    normalized = gp;
  }
  return normalized;
}

}  // namespace semicat
