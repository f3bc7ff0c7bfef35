#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semicat/coident.hpp"
#include "semicat/completion.hpp"
#include "semicat/error.hpp"
#include "semicat/finset.hpp"
#include "semicat/props.hpp"
#include "semicat/semiadj.hpp"
#include "semicat/transform.hpp"

namespace semicat::gallery {

// ---------------------------------------------------------------------------
// Stock categories.

/// One object, morphisms {id, u} with u∘u = u: the smallest category with a
/// non-split idempotent.
inline CategoryPtr walking_idempotent() {
  return monoid_category({"id", "u"}, {{0, 1}, {1, 1}}, 0);
}

/// The commutative monoid {1, x, e} with x·x = e, x·e = x, e·e = e.
inline CategoryPtr monoid_m3() {
  return monoid_category({"1", "x", "e"}, {{0, 1, 2}, {1, 2, 1}, {2, 1, 2}}, 0);
}

/// Multiplicative monoid of Z/2.
inline CategoryPtr z2_mult() {
  return monoid_category({"0", "1"}, {{0, 0}, {0, 1}}, 1);
}

/// Multiplicative monoid of 2×2 matrices over Z/2; element "mabcd" is the
/// matrix [[a,b],[c,d]].
inline CategoryPtr mat2_z2() {
  auto name = [](int m) {
    return std::string("m") + char('0' + (m >> 3 & 1)) + char('0' + (m >> 2 & 1)) +
           char('0' + (m >> 1 & 1)) + char('0' + (m & 1));
  };
  std::vector<std::string> elements(16);
  for (int m = 0; m < 16; ++m) elements[m] = name(m);
  auto mul = [](int p, int q) {
    int a1 = p >> 3 & 1, b1 = p >> 2 & 1, c1 = p >> 1 & 1, d1 = p & 1;
    int a2 = q >> 3 & 1, b2 = q >> 2 & 1, c2 = q >> 1 & 1, d2 = q & 1;
    int a = (a1 * a2 + b1 * c2) & 1, b = (a1 * b2 + b1 * d2) & 1;
    int c = (c1 * a2 + d1 * c2) & 1, d = (c1 * b2 + d1 * d2) & 1;
    return a << 3 | b << 2 | c << 1 | d;
  };
  std::vector<std::vector<int>> table(16, std::vector<int>(16));
  for (int p = 0; p < 16; ++p)
    for (int q = 0; q < 16; ++q) table[p][q] = mul(p, q);
  return monoid_category(elements, table, 0b1001);
}

// ---------------------------------------------------------------------------
// Stock semifunctors.

/// f_e : M3 → M3×M3, b ↦ (e, b). Preserves products but not the unit.
inline Semifunctor monoid_fe() {
  CategoryPtr m3 = monoid_m3();
  CategoryPtr sq = product_category(m3, m3);
  std::vector<int> mor(3);
  for (int b = 0; b < 3; ++b)
    mor[b] = sq->require_morphism(pair_name("e", m3->morphism_name(b)));
  return make_semifunctor(m3, sq, {0}, std::move(mor));
}

/// m ↦ m·E11 : Z/2 → M2(Z/2).
inline Semifunctor matrix_e11() {
  CategoryPtr z2 = z2_mult();
  CategoryPtr mat = mat2_z2();
  return make_semifunctor(z2, mat,
                          {0},
                          {mat->require_morphism("m0000"), mat->require_morphism("m1000")});
}

/// (x,y) ↦ (x,y)·(0,1) = (0,y) on the multiplicative monoid of Z/2 × Z/2.
inline Semifunctor product_ring_z() {
  CategoryPtr z2 = z2_mult();
  CategoryPtr ring = product_category(z2, z2);
  std::vector<int> mor(4);
  for (int m = 0; m < 4; ++m) {
    int z = ring->require_morphism(pair_name("0", "1"));
    mor[m] = ring->compose(m, z);
  }
  return make_semifunctor(ring, ring, {0}, std::move(mor));
}

// ---------------------------------------------------------------------------
// Entries and report plumbing.

struct Check {
  std::string label;
  bool expected = true;
  std::function<bool()> run;
};

struct GalleryEntry {
  std::string name;
  std::vector<std::pair<std::string, Semifunctor>> semifunctors;
  std::vector<std::pair<std::string, Semiadjunction>> semiadjunctions;
  std::vector<Check> checks;
};

struct CheckResult {
  std::string entry;
  std::string label;
  bool expected = false;
  bool actual = false;
  bool pass = false;
};

struct Report {
  std::vector<CheckResult> results;
  int failures = 0;
};

namespace detail {

struct PropertyExpectations {
  bool faithful, full, semifull, separable, naturally_semifull, semiseparable, sff,
      functor;
};

inline void add_property_checks(GalleryEntry& entry, const std::string& tag,
                                const Semifunctor& f, PropertyExpectations expect) {
  auto add = [&](const char* prop, bool expected, std::function<bool()> run) {
    entry.checks.push_back({tag + " " + prop, expected, std::move(run)});
  };
  add("faithful", expect.faithful, [f] { return is_faithful(f); });
  add("full", expect.full, [f] { return is_full(f); });
  add("semifull", expect.semifull, [f] { return is_semifull(f); });
  add("separable", expect.separable, [f] { return is_separable(f); });
  add("naturally-semifull", expect.naturally_semifull,
      [f] { return is_naturally_semifull(f); });
  add("semiseparable", expect.semiseparable, [f] { return is_semiseparable(f); });
  add("semifully-faithful", expect.sff, [f] { return is_semifully_faithful(f); });
  add("functor", expect.functor, [f] { return is_functor(f); });
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Pointwise finite-set checks.

struct PointwiseReport {
  bool ok = true;
  int checks = 0;
  std::vector<std::string> failures;
  bool pi_not_epi_witnessed = false;
  bool gamma2_nonexistent = false;

  void record(bool pass, const std::string& what) {
    ++checks;
    if (!pass) {
      ok = false;
      failures.push_back(what);
    }
  }
};

inline std::vector<FinSetObject> sample_sets(int max_size) {
  std::vector<std::string> atoms;
  for (int i = 0; i < max_size; ++i) atoms.push_back(std::string(1, char('a' + i)));
  std::vector<FinSetObject> out;
  for (int mask = 0; mask < (1 << max_size); ++mask) {
    FinSetObject s;
    for (int i = 0; i < max_size; ++i)
      if (mask >> i & 1) s.elements.push_back(atoms[i]);
    out.push_back(std::move(s));
  }
  return out;
}

/// The squaring endosemifunctor on finite sets, A ↦ A×A,
/// F(f)((a,a')) = (f(a), f(a)), with its retraction P(g) = ψ_B∘g∘Δ_A.
/// Verifies P∘F = Id, F∘P = framing by the image identities, and the
/// naturality of P, pointwise on all sample sets.
inline PointwiseReport pointwise_set_square(const std::vector<FinSetObject>& samples) {
  PointwiseReport report;
  auto square_of = [](const std::vector<int>& f, int asz, int bsz) {
    // F(f) : A×A → B×B as an index map.
    std::vector<int> out(static_cast<std::size_t>(asz) * asz);
    for (int i = 0; i < asz; ++i)
      for (int j = 0; j < asz; ++j) out[i * asz + j] = f[i] * bsz + f[i];
    return out;
  };
  auto p_of = [](const std::vector<int>& g, int asz, int bsz) {
    // P(g) = ψ_B ∘ g ∘ Δ_A : A → B.
    std::vector<int> out(asz);
    for (int i = 0; i < asz; ++i) out[i] = g[i * asz + i] / bsz;
    return out;
  };
  for (const FinSetObject& a : samples)
    for (const FinSetObject& b : samples) {
      int asz = a.size(), bsz = b.size();
      for (const auto& f : all_functions(asz, bsz))
        report.record(p_of(square_of(f, asz, bsz), asz, bsz) == f,
                      "P(Ff) = f at " + a.name() + "→" + b.name());
      for (const auto& g : all_functions(asz * asz, bsz * bsz)) {
        std::vector<int> lhs = square_of(p_of(g, asz, bsz), asz, bsz);
        // FId_B ∘ g ∘ FId_A
        std::vector<int> rhs(static_cast<std::size_t>(asz) * asz);
        for (int i = 0; i < asz; ++i)
          for (int j = 0; j < asz; ++j) {
            int mid = g[i * asz + i];
            int first = mid / bsz;
            rhs[i * asz + j] = first * bsz + first;
          }
        report.record(lhs == rhs, "F(P(g)) framed at " + a.name() + "→" + b.name());
      }
    }
  // Naturality: P(Fl∘k∘Fh) = l∘P(k)∘h.
  for (const FinSetObject& a : samples)
    for (const FinSetObject& b : samples)
      for (const FinSetObject& c : samples)
        for (const FinSetObject& d : samples) {
          int as = a.size(), bs = b.size(), cs = c.size(), ds = d.size();
          for (const auto& h : all_functions(as, bs))
            for (const auto& k : all_functions(bs * bs, cs * cs))
              for (const auto& l : all_functions(cs, ds)) {
                std::vector<int> lhs(as);
                for (int i = 0; i < as; ++i) {
                  int p = h[i] * bs + h[i];
                  int q = k[p];
                  lhs[i] = l[q / cs];
                }
                std::vector<int> pk(bs);
                for (int i = 0; i < bs; ++i) pk[i] = k[i * bs + i] / cs;
                std::vector<int> rhs(as);
                for (int i = 0; i < as; ++i) rhs[i] = l[pk[h[i]]];
                report.record(lhs == rhs, "P naturality at " + a.name() + "→" + b.name() +
                                              "→" + c.name() + "→" + d.name());
              }
        }
  return report;
}

inline PointwiseReport pointwise_set_square(int max_size = 2) {
  return pointwise_set_square(sample_sets(max_size));
}

/// The diagonal/semi-product semiadjunction Δ ⊣ₛ × on finite sets, verified
/// componentwise: π_A∘⟨Id,Id⟩ = Id, both semitriangular identities, plus the
/// negative witnesses (π_B : ∅×B → B not epi; no γ₂ : B → ∅).
inline PointwiseReport pointwise_semiproduct(const std::vector<FinSetObject>& samples) {
  PointwiseReport report;
  for (const FinSetObject& a : samples) {
    int n = a.size();
    // ε_(A,A)∘Δη_A = ΔId_A, both components π_A∘⟨Id,Id⟩.
    for (int i = 0; i < n; ++i) {
      int paired = i * n + i;
      report.record(paired / n == i && paired % n == i,
                    "π∘⟨Id,Id⟩ = Id at " + a.name());
    }
  }
  for (const FinSetObject& a : samples)
    for (const FinSetObject& b : samples) {
      int asz = a.size(), bsz = b.size();
      // ×ε∘η_{A×B} = ×Id_(A,B) on every element of A×B.
      for (int p = 0; p < asz * bsz; ++p) {
        int first = p / bsz, second = p % bsz;
        report.record(first * bsz + second == p, "×ε∘η = ×Id at " + pair_name(a.name(), b.name()));
      }
    }
  // π_B : ∅×B = ∅ → B is not an epimorphism: a parallel pair h ≠ k with
  // h∘π = k∘π exists among the samples.
  for (const FinSetObject& b : samples) {
    if (b.size() == 0) continue;
    for (const FinSetObject& bp : samples) {
      auto fns = all_functions(b.size(), bp.size());
      if (fns.size() >= 2) report.pi_not_epi_witnessed = true;
    }
    bool has_empty = false;
    for (const FinSetObject& s : samples) has_empty |= s.size() == 0;
    if (has_empty && all_functions(b.size(), 0).empty())
      report.gamma2_nonexistent = true;  // no map B → ∅ for nonempty B
  }
  return report;
}

inline PointwiseReport pointwise_semiproduct(int max_size = 2) {
  return pointwise_semiproduct(sample_sets(max_size));
}

// ---------------------------------------------------------------------------
// Fixpoint construction for finite-set-valued semifunctors.

struct FixpointResult {
  FinSetCategory sets;        // extended with the fixpoint subsets
  Semifunctor functor;        // the input, rebuilt over the extension
  Semifunctor fixpoint;       // F̄, a genuine functor
  Transformation alpha;       // F → F̄, p ↦ F(Id)(p)
  Transformation beta;        // F̄ → F, inclusion
};

/// Restricts a finite-set-valued semifunctor to the fixpoints of F(Id): the
/// result F̄ is a functor and α, β exhibit F ≅ₛ F̄.
inline FixpointResult fixpoint_functor(const Semifunctor& f, const FinSetCategory& sets) {
  if (!same_category(f.target, sets.category))
    throw Error("ShapeMismatch", "semifunctor does not land in the given finite sets");
  const FinCategory& c = *f.source;

  std::vector<FinSetObject> extended = sets.objects;
  auto ensure = [&](const FinSetObject& s) {
    for (std::size_t i = 0; i < extended.size(); ++i)
      if (extended[i] == s) return static_cast<int>(i);
    extended.push_back(s);
    return static_cast<int>(extended.size() - 1);
  };

  std::vector<std::vector<int>> fix_indices(c.num_objects());
  std::vector<int> fix_obj(c.num_objects());
  for (int x = 0; x < c.num_objects(); ++x) {
    const FinSetObject& fx = sets.objects[f.obj(x)];
    const std::vector<int>& idg = sets.images_of(f.image_identity(x));
    FinSetObject bar;
    for (int i = 0; i < fx.size(); ++i)
      if (idg[i] == i) {
        fix_indices[x].push_back(i);
        bar.elements.push_back(fx.elements[i]);
      }
    fix_obj[x] = ensure(bar);
  }

  FixpointResult out;
  out.sets = full_finset_subcategory(extended);
  const FinSetCategory& ext = out.sets;

  std::vector<int> obj(c.num_objects()), mor(c.num_morphisms());
  for (int x = 0; x < c.num_objects(); ++x)
    obj[x] = ext.object_of(sets.objects[f.obj(x)]);
  for (int m = 0; m < c.num_morphisms(); ++m)
    mor[m] = ext.function_morphism(obj[c.src(m)], obj[c.dst(m)], sets.images_of(f.mor(m)));
  out.functor = make_semifunctor(f.source, ext.category, obj, std::move(mor));

  auto position_in_fix = [&](int x, int element) {
    const std::vector<int>& fix = fix_indices[x];
    for (std::size_t p = 0; p < fix.size(); ++p)
      if (fix[p] == element) return static_cast<int>(p);
    throw Error("InternalInvariantViolation", "image escapes the fixpoint subset");
  };

  std::vector<int> bar_mor(c.num_morphisms());
  for (int m = 0; m < c.num_morphisms(); ++m) {
    int x = c.src(m), y = c.dst(m);
    const std::vector<int>& graph = sets.images_of(f.mor(m));
    std::vector<int> restricted(fix_indices[x].size());
    for (std::size_t p = 0; p < fix_indices[x].size(); ++p)
      restricted[p] = position_in_fix(y, graph[fix_indices[x][p]]);
    bar_mor[m] = ext.function_morphism(fix_obj[x], fix_obj[y], restricted);
  }
  out.fixpoint = make_semifunctor(f.source, ext.category, fix_obj, std::move(bar_mor));
  if (!is_functor(out.fixpoint))
    throw Error("InternalInvariantViolation", "fixpoint restriction is not a functor");

  std::vector<int> alpha(c.num_objects()), beta(c.num_objects());
  for (int x = 0; x < c.num_objects(); ++x) {
    const std::vector<int>& idg = sets.images_of(f.image_identity(x));
    std::vector<int> collapse(idg.size());
    for (std::size_t i = 0; i < idg.size(); ++i)
      collapse[i] = position_in_fix(x, idg[i]);
    alpha[x] = ext.function_morphism(obj[x], fix_obj[x], collapse);
    beta[x] = ext.function_morphism(fix_obj[x], obj[x], fix_indices[x]);
  }
  out.alpha = make_transformation(out.functor, out.fixpoint, std::move(alpha));
  out.beta = make_transformation(out.fixpoint, out.functor, std::move(beta));
  if (!is_seminatural(out.alpha) || !is_seminatural(out.beta))
    throw Error("InternalInvariantViolation", "fixpoint comparison maps are not seminatural");
  return out;
}

// ---------------------------------------------------------------------------
// Entry builders.

namespace detail {

inline Semiadjunction upsilon_iota_adjunction(const Completion& comp,
                                              const Semifunctor& ups,
                                              const Semifunctor& io) {
  const FinCategory& n = *comp.category;
  const FinCategory& c = *comp.base;
  std::vector<int> unit(n.num_objects());
  for (int o = 0; o < n.num_objects(); ++o) {
    auto [x, e] = comp.object_pairs[o];
    unit[o] = comp.morphism_at(o, comp.object_of(c.identity(x)), e);
  }
  std::vector<int> counit(c.num_objects());
  for (int x = 0; x < c.num_objects(); ++x) counit[x] = c.identity(x);
  return make_semiadjunction(ups, io, std::move(unit), std::move(counit));
}

inline Semiadjunction iota_upsilon_adjunction(const Completion& comp,
                                              const Semifunctor& io,
                                              const Semifunctor& ups) {
  const FinCategory& n = *comp.category;
  const FinCategory& c = *comp.base;
  std::vector<int> unit(c.num_objects());
  for (int x = 0; x < c.num_objects(); ++x) unit[x] = c.identity(x);
  std::vector<int> counit(n.num_objects());
  for (int o = 0; o < n.num_objects(); ++o) {
    auto [x, e] = comp.object_pairs[o];
    counit[o] = comp.morphism_at(comp.object_of(c.identity(x)), o, e);
  }
  return make_semiadjunction(io, ups, std::move(unit), std::move(counit));
}

inline Semiadjunction coidentifier_adjunction(const Coidentifier& coid,
                                              const IdemNatTransf& e) {
  const FinCategory& ce = *coid.category;
  std::vector<int> unit(ce.num_objects());
  for (int x = 0; x < ce.num_objects(); ++x) unit[x] = ce.identity(x);
  return make_semiadjunction(coid.section, coid.projection, std::move(unit),
                             e.components);
}

inline GalleryEntry build_forgetful(const std::string& name, const CategoryPtr& base) {
  GalleryEntry entry{name, {}, {}, {}};
  Completion comp = idempotent_completion(base);
  Semifunctor ups = upsilon(comp);
  Semifunctor io = iota(comp);
  entry.semifunctors.push_back({"upsilon", ups});
  entry.semifunctors.push_back({"iota", io});
  // Both base categories here have a non-identity idempotent, so υ is a
  // proper semifunctor and never full.
  add_property_checks(entry, "upsilon", ups,
                      {true, false, true, true, true, true, true, false});
  add_property_checks(entry, "iota", io, {true, true, true, true, true, true, true, true});
  entry.checks.push_back({"base category is not idempotent complete", true,
                          [base] { return !is_idempotent_complete(base); }});
  entry.checks.push_back({"upsilon∘iota = Id", true, [ups, io, base] {
                            return compose_semifunctors(ups, io) ==
                                   identity_semifunctor(base);
                          }});
  entry.checks.push_back({"completion is idempotent complete", true, [comp] {
                            return is_idempotent_complete(comp.category);
                          }});
  entry.semiadjunctions.push_back(
      {"upsilon⊣iota", upsilon_iota_adjunction(comp, ups, io)});
  entry.semiadjunctions.push_back(
      {"iota⊣upsilon", iota_upsilon_adjunction(comp, io, ups)});
  return entry;
}

inline GalleryEntry build_coidentifier(const std::string& name, const CategoryPtr& base,
                                       const IdemNatTransf& e, int expected_classes) {
  GalleryEntry entry{name, {}, {}, {}};
  Coidentifier coid = coidentifier(base, e);
  entry.semifunctors.push_back({"L", coid.section});
  entry.semifunctors.push_back({"H", coid.projection});
  add_property_checks(entry, "L", coid.section,
                      {true, is_identity_transf(e), true, true, true, true, true,
                       is_identity_transf(e)});
  entry.checks.push_back({"H is a naturally full functor", true, [coid] {
                            return is_functor(coid.projection) &&
                                   is_naturally_full(coid.projection);
                          }});
  entry.checks.push_back(
      {"class count", true, [coid, expected_classes] {
         return coid.category->num_morphisms() == expected_classes;
       }});
  entry.checks.push_back({"HL = Id", true, [coid] {
                            return compose_semifunctors(coid.projection, coid.section) ==
                                   identity_semifunctor(coid.category);
                          }});
  entry.checks.push_back({"LH = E^e", true, [coid, e] {
                            return compose_semifunctors(coid.section, coid.projection) ==
                                   canonical_E(e);
                          }});
  entry.semiadjunctions.push_back({"L⊣H", coidentifier_adjunction(coid, e)});
  return entry;
}

inline GalleryEntry build_canonical_E(const std::string& name, const IdemNatTransf& e) {
  GalleryEntry entry{name, {}, {}, {}};
  Semifunctor ee = canonical_E(e);
  bool trivial = is_identity_transf(e);
  entry.semifunctors.push_back({"E", ee});
  add_property_checks(entry, "E", ee,
                      {trivial, trivial, true, trivial, true, true, trivial, trivial});
  entry.checks.push_back({"associated idempotent is e", true, [ee, e] {
                            auto p = solve_P(ee, PMode::Semiseparable);
                            return p && associated_idempotent(ee, *p) == e;
                          }});
  entry.checks.push_back({"E^Id is the identity functor", true, [e] {
                            IdemNatTransf id = identity_idem_nat_transf(e.base);
                            return canonical_E(id) == identity_semifunctor(e.base);
                          }});
  entry.semiadjunctions.push_back({"E⊣E", self_semiadjunction(e)});
  return entry;
}

}  // namespace detail

inline std::vector<std::string> entry_names() {
  return {"monoid-fe",           "matrix-E11",
          "product-ring-z",      "constant-Fe",
          "Ee-on-W",             "Ee-on-M3",
          "forgetful-upsilon-W", "forgetful-upsilon-M3",
          "coidentifier-W",      "coidentifier-M3",
          "SFe-composite",       "fixpoint-W",
          "identity-functors",   "pointwise-set-square",
          "pointwise-semiproduct"};
}

inline GalleryEntry build(const std::string& name, int max_set_size = 2) {
  using detail::add_property_checks;
  if (name == "monoid-fe") {
    GalleryEntry entry{name, {}, {}, {}};
    Semifunctor fe = monoid_fe();
    entry.semifunctors.push_back({"fe", fe});
    add_property_checks(entry, "fe", fe,
                        {true, false, false, true, false, true, false, false});
    return entry;
  }
  if (name == "matrix-E11") {
    GalleryEntry entry{name, {}, {}, {}};
    Semifunctor f = matrix_e11();
    entry.semifunctors.push_back({"E11", f});
    add_property_checks(entry, "E11", f,
                        {true, false, true, true, true, true, true, false});
    return entry;
  }
  if (name == "product-ring-z") {
    GalleryEntry entry{name, {}, {}, {}};
    Semifunctor f = product_ring_z();
    entry.semifunctors.push_back({"fz", f});
    add_property_checks(entry, "fz", f,
                        {false, false, true, false, true, true, false, false});
    return entry;
  }
  if (name == "constant-Fe") {
    GalleryEntry entry{name, {}, {}, {}};
    CategoryPtr m3 = monoid_m3();
    CategoryPtr one = terminal_category();
    CategoryPtr w = walking_idempotent();
    Semifunctor fe = constant_semifunctor(m3, m3->require_morphism("e"), one);
    Semifunctor k = constant_semifunctor(w, w->require_morphism("u"), m3);
    entry.semifunctors.push_back({"Fe", fe});
    entry.semifunctors.push_back({"K", k});
    add_property_checks(entry, "Fe", fe,
                        {true, false, false, true, false, true, false, false});
    add_property_checks(entry, "K", k,
                        {false, false, true, false, false, false, false, false});
    return entry;
  }
  if (name == "Ee-on-W") {
    CategoryPtr w = walking_idempotent();
    return detail::build_canonical_E(name,
                                     make_idem_nat_transf(w, {w->require_morphism("u")}));
  }
  if (name == "Ee-on-M3") {
    CategoryPtr m3 = monoid_m3();
    return detail::build_canonical_E(
        name, make_idem_nat_transf(m3, {m3->require_morphism("e")}));
  }
  if (name == "forgetful-upsilon-W")
    return detail::build_forgetful(name, walking_idempotent());
  if (name == "forgetful-upsilon-M3") return detail::build_forgetful(name, monoid_m3());
  if (name == "coidentifier-W") {
    CategoryPtr w = walking_idempotent();
    return detail::build_coidentifier(
        name, w, make_idem_nat_transf(w, {w->require_morphism("u")}), 1);
  }
  if (name == "coidentifier-M3") {
    CategoryPtr m3 = monoid_m3();
    return detail::build_coidentifier(
        name, m3, make_idem_nat_transf(m3, {m3->require_morphism("e")}), 2);
  }
  if (name == "SFe-composite") {
    GalleryEntry entry{name, {}, {}, {}};
    Semifunctor f = matrix_e11();
    IdemNatTransf zero =
        make_idem_nat_transf(f.source, {f.source->require_morphism("0")});
    Semifunctor s = compose_semifunctors(f, canonical_E(zero));
    entry.semifunctors.push_back({"SFe", s});
    add_property_checks(entry, "SFe", s,
                        {false, false, true, false, true, true, false, false});
    return entry;
  }
  if (name == "fixpoint-W") {
    GalleryEntry entry{name, {}, {}, {}};
    CategoryPtr w = walking_idempotent();
    FinSetCategory sets = full_finset_subcategory({FinSetObject{{"a", "b"}}});
    int const_a = sets.function_morphism(0, 0, {0, 0});
    Semifunctor f = make_semifunctor(w, sets.category, {0}, {const_a, const_a});
    FixpointResult fix = fixpoint_functor(f, sets);
    entry.semifunctors.push_back({"F", fix.functor});
    entry.semifunctors.push_back({"Fbar", fix.fixpoint});
    add_property_checks(entry, "F", fix.functor,
                        {false, false, true, false, true, true, false, false});
    add_property_checks(entry, "Fbar", fix.fixpoint,
                        {false, true, true, false, true, true, false, true});
    entry.checks.push_back({"alpha has semi-inverse beta", true, [fix] {
                              auto inv = find_semi_inverse(fix.alpha);
                              return inv && *inv == fix.beta;
                            }});
    entry.checks.push_back({"components are semi-isomorphisms", true, [fix] {
                              for (int x = 0; x < fix.functor.source->num_objects(); ++x) {
                                auto inv = cc_semi_isomorphism(fix.functor, x, fix.fixpoint,
                                                               x, fix.alpha.at(x));
                                if (!inv || *inv != fix.beta.at(x)) return false;
                              }
                              return true;
                            }});
    return entry;
  }
  if (name == "identity-functors") {
    GalleryEntry entry{name, {}, {}, {}};
    for (const auto& [tag, cat] :
         {std::pair<std::string, CategoryPtr>{"W", walking_idempotent()},
          std::pair<std::string, CategoryPtr>{"M3", monoid_m3()}}) {
      Semifunctor id = identity_semifunctor(cat);
      entry.semifunctors.push_back({"Id-" + tag, id});
      detail::add_property_checks(entry, "Id-" + tag, id,
                                  {true, true, true, true, true, true, true, true});
      entry.semiadjunctions.push_back({"Id⊣Id-" + tag, identity_semiadjunction(cat)});
    }
    return entry;
  }
  if (name == "pointwise-set-square") {
    GalleryEntry entry{name, {}, {}, {}};
    entry.checks.push_back({"squaring identities", true, [max_set_size] {
                              return pointwise_set_square(max_set_size).ok;
                            }});
    entry.checks.push_back(
        {"not full: no preimage of Id on a 2-element set", true, [] {
           // every F(f) collapses pairs, so Id_{A×A} has no preimage
           for (const auto& f : all_functions(2, 2)) {
             std::vector<int> sq(4);
             for (int i = 0; i < 2; ++i)
               for (int j = 0; j < 2; ++j) sq[i * 2 + j] = f[i] * 2 + f[i];
             if (sq == std::vector<int>{0, 1, 2, 3}) return false;
           }
           return true;
         }});
    return entry;
  }
  if (name == "pointwise-semiproduct") {
    GalleryEntry entry{name, {}, {}, {}};
    entry.checks.push_back({"semi-product identities", true, [max_set_size] {
                              return pointwise_semiproduct(max_set_size).ok;
                            }});
    entry.checks.push_back({"π from ∅ is not epi", true, [max_set_size] {
                              return pointwise_semiproduct(max_set_size).pi_not_epi_witnessed;
                            }});
    entry.checks.push_back({"no map from a nonempty set to ∅", true, [max_set_size] {
                              return pointwise_semiproduct(max_set_size).gamma2_nonexistent;
                            }});
    return entry;
  }
  throw Error("UnknownEntry", "no gallery entry named '" + name + "'");
}

inline Report run_all(const std::vector<std::string>& selection = {},
                      int max_set_size = 2) {
  Report report;
  std::vector<std::string> names = selection.empty() ? entry_names() : selection;
  for (const std::string& name : names) {
    GalleryEntry entry = build(name, max_set_size);
    for (const Check& check : entry.checks) {
      CheckResult r;
      r.entry = entry.name;
      r.label = check.label;
      r.expected = check.expected;
      r.actual = check.run();
      r.pass = r.expected == r.actual;
      if (!r.pass) ++report.failures;
      report.results.push_back(std::move(r));
    }
  }
  return report;
}

/// Every named semifunctor across all entries, as "entry/name".
inline std::vector<std::pair<std::string, Semifunctor>> all_semifunctors() {
  std::vector<std::pair<std::string, Semifunctor>> out;
  for (const std::string& name : entry_names()) {
    GalleryEntry entry = build(name);
    for (auto& [tag, f] : entry.semifunctors)
      out.push_back({entry.name + "/" + tag, std::move(f)});
  }
  return out;
}

inline std::vector<std::pair<std::string, Semiadjunction>> all_semiadjunctions() {
  std::vector<std::pair<std::string, Semiadjunction>> out;
  for (const std::string& name : entry_names()) {
    GalleryEntry entry = build(name);
    for (auto& [tag, adj] : entry.semiadjunctions)
      out.push_back({entry.name + "/" + tag, std::move(adj)});
  }
  return out;
}

}  // namespace semicat::gallery
