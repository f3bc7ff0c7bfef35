#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semicat/error.hpp"
#include "semicat/morphprop.hpp"
#include "semicat/props.hpp"
#include "semicat/transform.hpp"

namespace semicat {

/// A semiadjunction F ⊣ₛ G: unit η : Id_C → GF and counit ε : FG → Id_D
/// subject to the semitriangular identities Gε∘ηG = GId and εF∘Fη = FId.
struct Semiadjunction {
  Semifunctor left;   // F : C → D
  Semifunctor right;  // G : D → C
  Transformation unit;
  Transformation counit;
};

/// Unvalidated semiadjunction-shaped data, e.g. a parsed file or promotion
/// input where only one semitriangular identity is expected to hold.
struct SemiadjunctionData {
  Semifunctor left;
  Semifunctor right;
  std::vector<int> unit_components;
  std::vector<int> counit_components;

  friend bool operator==(const SemiadjunctionData& a, const SemiadjunctionData& b) {
    return a.left == b.left && a.right == b.right &&
           a.unit_components == b.unit_components &&
           a.counit_components == b.counit_components;
  }
};

inline Transformation transformation_to(const Semifunctor& to, std::vector<int> comps) {
  return make_transformation(identity_semifunctor(to.source), to, std::move(comps));
}
inline Transformation transformation_from(const Semifunctor& from, std::vector<int> comps) {
  return make_transformation(from, identity_semifunctor(from.source), std::move(comps));
}

inline Semiadjunction validate_semiadjunction(const SemiadjunctionData& data) {
  const Semifunctor& f = data.left;
  const Semifunctor& g = data.right;
  if (!same_category(f.source, g.target) || !same_category(f.target, g.source))
    throw Error("ShapeMismatch", "F and G do not go between the same two categories");

  Semifunctor gf = compose_semifunctors(g, f);
  Semifunctor fg = compose_semifunctors(f, g);
  Transformation unit = transformation_to(gf, data.unit_components);
  Transformation counit = transformation_from(fg, data.counit_components);
  if (!is_seminatural(unit))
    throw Error("NotSeminatural", "the unit is not a (semi)natural transformation");
  if (!is_seminatural(counit))
    throw Error("NotSeminatural", "the counit is not a (semi)natural transformation");

  // Gε∘ηG = GId, computed by whiskering.
  Transformation left_side =
      vertical_compose(whisker_left(g, counit), whisker_right(unit, g));
  for (int d = 0; d < g.source->num_objects(); ++d)
    if (left_side.at(d) != g.image_identity(d))
      throw Error("SemitriangularFailure",
                  "Gε∘ηG differs from GId at object '" + g.source->object_name(d) + "'");
  // εF∘Fη = FId.
  Transformation right_side =
      vertical_compose(whisker_right(counit, f), whisker_left(f, unit));
  for (int x = 0; x < f.source->num_objects(); ++x)
    if (right_side.at(x) != f.image_identity(x))
      throw Error("SemitriangularFailure",
                  "εF∘Fη differs from FId at object '" + f.source->object_name(x) + "'");
  return Semiadjunction{f, g, std::move(unit), std::move(counit)};
}

inline Semiadjunction make_semiadjunction(Semifunctor f, Semifunctor g,
                                          std::vector<int> unit_components,
                                          std::vector<int> counit_components) {
  return validate_semiadjunction(SemiadjunctionData{
      std::move(f), std::move(g), std::move(unit_components), std::move(counit_components)});
}

inline Semiadjunction identity_semiadjunction(const CategoryPtr& c) {
  Semifunctor id = identity_semifunctor(c);
  std::vector<int> comps(c->num_objects());
  for (int x = 0; x < c->num_objects(); ++x) comps[x] = c->identity(x);
  return make_semiadjunction(id, id, comps, comps);
}

/// The self-semiadjunction Eᵉ ⊣ₛ Eᵉ with unit and counit components e_X.
inline Semiadjunction self_semiadjunction(const IdemNatTransf& e) {
  Semifunctor ee = canonical_E(e);
  return make_semiadjunction(ee, ee, e.components, e.components);
}

/// τ_{C,D}(h) = G(h)∘η_C for h : FC → D.
inline int tau(const Semiadjunction& adj, int c, int d, int h) {
  const FinCategory& dc = *adj.left.target;
  if (dc.src(h) != adj.left.obj(c) || dc.dst(h) != d)
    throw Error("EndpointMismatch", "tau expects a morphism FC → D");
  return adj.left.source->compose(adj.right.mor(h), adj.unit.at(c));
}

/// σ_{C,D}(g) = ε_D∘F(g) for g : C → GD.
inline int sigma(const Semiadjunction& adj, int c, int d, int g) {
  const FinCategory& cc = *adj.left.source;
  if (cc.src(g) != c || cc.dst(g) != adj.right.obj(d))
    throw Error("EndpointMismatch", "sigma expects a morphism C → GD");
  return adj.left.target->compose(adj.counit.at(d), adj.left.mor(g));
}

/// (F'F ⊣ₛ GG') from (F ⊣ₛ G : C→D) and (F' ⊣ₛ G' : D→E), with unit
/// Gη'F∘η and counit ε'∘F'εG'.
inline Semiadjunction compose_semiadjunctions(const Semiadjunction& a1,
                                              const Semiadjunction& a2) {
  if (!same_category(a1.left.target, a2.left.source))
    throw Error("ShapeMismatch", "middle categories do not match");
  Semifunctor f = compose_semifunctors(a2.left, a1.left);
  Semifunctor g = compose_semifunctors(a1.right, a2.right);
  const FinCategory& c = *a1.left.source;
  const FinCategory& e = *a2.left.target;
  std::vector<int> unit(c.num_objects());
  for (int x = 0; x < c.num_objects(); ++x)
    unit[x] = c.compose(a1.right.mor(a2.unit.at(a1.left.obj(x))), a1.unit.at(x));
  std::vector<int> counit(e.num_objects());
  for (int z = 0; z < e.num_objects(); ++z)
    counit[z] = e.compose(a2.counit.at(z), a2.left.mor(a1.counit.at(a2.right.obj(z))));
  return make_semiadjunction(std::move(f), std::move(g), std::move(unit),
                             std::move(counit));
}

namespace detail {

inline std::pair<Transformation, Transformation> natural_unit_counit(
    const SemiadjunctionData& data) {
  Semifunctor gf = compose_semifunctors(data.right, data.left);
  Semifunctor fg = compose_semifunctors(data.left, data.right);
  Transformation unit = transformation_to(gf, data.unit_components);
  Transformation counit = transformation_from(fg, data.counit_components);
  if (!is_seminatural(unit) || !is_seminatural(counit))
    throw Error("NotSeminatural", "unit/counit must be (semi)natural transformations");
  return {std::move(unit), std::move(counit)};
}

}  // namespace detail

/// Given data where only Gε∘ηG = GId holds, builds the idempotent e = εF∘Fη
/// on F and the corrected left leg F' (same objects, f ↦ Ff∘e_X), returning
/// the full semiadjunction F' ⊣ₛ G with the same unit and counit components.
inline Semiadjunction promote_right_semiadjoint(const SemiadjunctionData& data) {
  auto [unit, counit] = detail::natural_unit_counit(data);
  const Semifunctor& f = data.left;
  const Semifunctor& g = data.right;
  const FinCategory& c = *f.source;
  const FinCategory& d = *f.target;
  for (int dd = 0; dd < g.source->num_objects(); ++dd)
    if (c.compose(g.mor(counit.at(dd)), unit.at(g.obj(dd))) != g.image_identity(dd))
      throw Error("NotRightSemiadjointData",
                  "Gε∘ηG differs from GId at object '" + g.source->object_name(dd) + "'");
  std::vector<int> e(c.num_objects());
  for (int x = 0; x < c.num_objects(); ++x) {
    e[x] = d.compose(counit.at(f.obj(x)), f.mor(unit.at(x)));
    if (d.compose(e[x], e[x]) != e[x] || d.compose(e[x], f.image_identity(x)) != e[x])
      throw Error("InternalInvariantViolation", "εF∘Fη is not idempotent seminatural on F");
  }
  std::vector<int> mor(c.num_morphisms());
  for (int m = 0; m < c.num_morphisms(); ++m) mor[m] = d.compose(f.mor(m), e[c.src(m)]);
  Semifunctor fp = make_semifunctor(f.source, f.target, f.obj_map, std::move(mor));
  return make_semiadjunction(std::move(fp), g, data.unit_components,
                             data.counit_components);
}

/// Dual: given data where only εF∘Fη = FId holds, corrects the right leg to
/// G' (g ↦ Gg∘e_D with e = Gε∘ηG) and returns F ⊣ₛ G'.
inline Semiadjunction promote_left_semiadjoint(const SemiadjunctionData& data) {
  auto [unit, counit] = detail::natural_unit_counit(data);
  const Semifunctor& f = data.left;
  const Semifunctor& g = data.right;
  const FinCategory& c = *f.source;
  const FinCategory& d = *f.target;
  for (int x = 0; x < c.num_objects(); ++x)
    if (d.compose(counit.at(f.obj(x)), f.mor(unit.at(x))) != f.image_identity(x))
      throw Error("NotLeftSemiadjointData",
                  "εF∘Fη differs from FId at object '" + c.object_name(x) + "'");
  std::vector<int> e(d.num_objects());
  for (int dd = 0; dd < d.num_objects(); ++dd) {
    e[dd] = c.compose(g.mor(counit.at(dd)), unit.at(g.obj(dd)));
    if (c.compose(e[dd], e[dd]) != e[dd] || c.compose(e[dd], g.image_identity(dd)) != e[dd])
      throw Error("InternalInvariantViolation", "Gε∘ηG is not idempotent seminatural on G");
  }
  std::vector<int> mor(d.num_morphisms());
  for (int m = 0; m < d.num_morphisms(); ++m) mor[m] = c.compose(g.mor(m), e[d.src(m)]);
  Semifunctor gp = make_semifunctor(g.source, g.target, g.obj_map, std::move(mor));
  return make_semiadjunction(f, std::move(gp), data.unit_components,
                             data.counit_components);
}

/// For two semiadjunctions sharing F, the canonical natural semi-isomorphism
/// γ = G'ε∘η'G : G → G' and its semi-inverse γ' = Gε'∘ηG'.
inline std::pair<Transformation, Transformation> right_adjoints_semiiso(
    const Semiadjunction& a1, const Semiadjunction& a2) {
  if (!(a1.left == a2.left))
    throw Error("ShapeMismatch", "the two semiadjunctions must share their left leg");
  const Semifunctor& g = a1.right;
  const Semifunctor& gp = a2.right;
  const FinCategory& c = *g.target;
  std::vector<int> gamma(g.source->num_objects()), gamma_p(g.source->num_objects());
  for (int d = 0; d < g.source->num_objects(); ++d) {
    gamma[d] = c.compose(gp.mor(a1.counit.at(d)), a2.unit.at(g.obj(d)));
    gamma_p[d] = c.compose(g.mor(a2.counit.at(d)), a1.unit.at(gp.obj(d)));
  }
  Transformation t_gamma = make_transformation(g, gp, std::move(gamma));
  Transformation t_gamma_p = make_transformation(gp, g, std::move(gamma_p));
  if (!is_seminatural(t_gamma) || !is_seminatural(t_gamma_p))
    throw Error("InternalInvariantViolation", "γ or γ' is not seminatural");
  for (int d = 0; d < g.source->num_objects(); ++d) {
    if (c.compose(t_gamma_p.at(d), t_gamma.at(d)) != g.image_identity(d) ||
        c.compose(t_gamma.at(d), t_gamma_p.at(d)) != gp.image_identity(d))
      throw Error("InternalInvariantViolation", "γ and γ' are not semi-inverse");
  }
  return {std::move(t_gamma), std::move(t_gamma_p)};
}

enum class AdjSide { Left, Right };

struct RafaelWitness {
  Transformation nu;  // ν : GF → Id_C (left) or γ : Id_D → FG (right)
  PSolution p;        // induced P for F (left) or G (right)
};

/// Rafael-type searches: a seminatural ν (left) or γ (right) satisfying the
/// mode equation, plus the induced P-solution P(g) = ν_Y∘Gg∘η_X (left) or
/// P(h) = ε_D'∘Fh∘γ_D (right).
inline std::optional<RafaelWitness> rafael(const Semiadjunction& adj, AdjSide side,
                                           PMode mode, int threads = 1) {
  const Semifunctor& f = adj.left;
  const Semifunctor& g = adj.right;
  if (side == AdjSide::Left) {
    const FinCategory& c = *f.source;
    Semifunctor gf = compose_semifunctors(g, f);
    Semifunctor idc = identity_semifunctor(f.source);
    auto filter = [&](int x, int m) {
      switch (mode) {
        case PMode::Separable:
          return c.compose(m, adj.unit.at(x)) == c.identity(x);
        case PMode::NaturallySemifull:
          return c.compose(adj.unit.at(x), m) == gf.image_identity(x);
        default:
          return c.compose(adj.unit.at(x), c.compose(m, adj.unit.at(x))) ==
                 adj.unit.at(x);
      }
    };
    auto nu = find_seminatural_witness(gf, idc, filter, threads);
    if (!nu) return std::nullopt;
    CellTable cells(f);
    std::vector<int> assignment(cells.size());
    for (int i = 0; i < cells.size(); ++i) {
      int x = cells.cell_x(i), y = cells.cell_y(i);
      assignment[i] =
          c.compose(nu->at(y), c.compose(g.mor(cells.cell_mor(i)), adj.unit.at(x)));
    }
    PSolution p{f, mode, std::move(assignment)};
    if (!verify_p_solution(p))
      throw Error("InternalInvariantViolation", "induced P fails its defining equations");
    return RafaelWitness{std::move(*nu), std::move(p)};
  }
  const FinCategory& d = *g.source;
  Semifunctor fg = compose_semifunctors(f, g);
  Semifunctor idd = identity_semifunctor(g.source);
  auto filter = [&](int x, int m) {
    switch (mode) {
      case PMode::Separable:
        return d.compose(adj.counit.at(x), m) == d.identity(x);
      case PMode::NaturallySemifull:
        return d.compose(m, adj.counit.at(x)) == fg.image_identity(x);
      default:
        return d.compose(adj.counit.at(x), d.compose(m, adj.counit.at(x))) ==
               adj.counit.at(x);
    }
  };
  auto gamma = find_seminatural_witness(idd, fg, filter, threads);
  if (!gamma) return std::nullopt;
  CellTable cells(g);
  std::vector<int> assignment(cells.size());
  for (int i = 0; i < cells.size(); ++i) {
    int x = cells.cell_x(i), y = cells.cell_y(i);
    assignment[i] =
        d.compose(adj.counit.at(y), d.compose(f.mor(cells.cell_mor(i)), gamma->at(x)));
  }
  PSolution p{g, mode, std::move(assignment)};
  if (!verify_p_solution(p))
    throw Error("InternalInvariantViolation", "induced P fails its defining equations");
  return RafaelWitness{std::move(*gamma), std::move(p)};
}

/// Per-object semisplitting profile of the unit and counit, with the derived
/// faithfulness/semifullness verdicts for both legs.
struct UnitCounitReport {
  struct Row {
    std::string object;
    bool mono_or_epi = false;   // η_C mono / ε_D epi
    bool semisplit = false;     // C-semisplit-epi / D-semisplit-mono
    bool semi_iso = false;      // (C,C)-semi-isomorphism
  };
  std::vector<Row> unit_rows;
  std::vector<Row> counit_rows;
  bool left_faithful = false, left_semifull = false, left_sff = false;
  bool right_faithful = false, right_semifull = false, right_sff = false;
};

inline UnitCounitReport char_unit_counit(const Semiadjunction& adj) {
  UnitCounitReport report;
  const Semifunctor& f = adj.left;
  const Semifunctor& g = adj.right;
  Semifunctor gf = compose_semifunctors(g, f);
  Semifunctor fg = compose_semifunctors(f, g);
  Semifunctor idc = identity_semifunctor(f.source);
  Semifunctor idd = identity_semifunctor(g.source);

  report.left_faithful = report.left_semifull = report.left_sff = true;
  for (int c = 0; c < f.source->num_objects(); ++c) {
    UnitCounitReport::Row row;
    row.object = f.source->object_name(c);
    row.mono_or_epi = is_fc_semi_mono(idc, c, adj.unit.at(c));
    row.semisplit = fc_semisplit_epi_witness(gf, c, adj.unit.at(c)).has_value();
    row.semi_iso = cc_semi_isomorphism(idc, c, gf, c, adj.unit.at(c)).has_value();
    report.left_faithful &= row.mono_or_epi;
    report.left_semifull &= row.semisplit;
    report.left_sff &= row.semi_iso;
    report.unit_rows.push_back(std::move(row));
  }
  report.right_faithful = report.right_semifull = report.right_sff = true;
  for (int d = 0; d < g.source->num_objects(); ++d) {
    UnitCounitReport::Row row;
    row.object = g.source->object_name(d);
    row.mono_or_epi = is_fc_semi_epi(idd, d, adj.counit.at(d));
    row.semisplit = fc_semisplit_mono_witness(fg, d, adj.counit.at(d)).has_value();
    row.semi_iso = cc_semi_isomorphism(fg, d, idd, d, adj.counit.at(d)).has_value();
    report.right_faithful &= row.mono_or_epi;
    report.right_semifull &= row.semisplit;
    report.right_sff &= row.semi_iso;
    report.counit_rows.push_back(std::move(row));
  }
  return report;
}

/// For a self-semiadjunction E ⊣ₛ E whose E is the identity on objects,
/// recovers the idempotent natural transformation e = εE∘Eη.
inline IdemNatTransf idempotent_from_self_semiadjoint(const Semiadjunction& adj) {
  if (!(adj.left == adj.right))
    throw Error("NotSelfAdjoint", "the two legs differ");
  const Semifunctor& e_fun = adj.left;
  const FinCategory& c = *e_fun.source;
  std::vector<int> comps(c.num_objects());
  for (int x = 0; x < c.num_objects(); ++x) {
    comps[x] = c.compose(adj.counit.at(e_fun.obj(x)), e_fun.mor(adj.unit.at(x)));
    if (c.compose(comps[x], e_fun.image_identity(x)) != comps[x])
      throw Error("InternalInvariantViolation", "e∘E(Id) differs from e");
  }
  for (int x = 0; x < c.num_objects(); ++x)
    if (e_fun.obj(x) != x)
      throw Error("NotSelfAdjoint",
                  "recovering an idempotent on Id requires E to fix objects");
  return make_idem_nat_transf(e_fun.source, std::move(comps));
}

/// Property transfer across a semiadjoint triple F ⊣ₛ G ⊣ₛ H: the outer legs
/// agree on semiseparable/separable/naturally-semifull/semifully-faithful.
struct TripleReport {
  bool semiseparable, separable, naturally_semifull, sff;
};

inline TripleReport triple_transfer(const Semiadjunction& a1, const Semiadjunction& a2) {
  if (!(a1.right == a2.left))
    throw Error("ShapeMismatch", "the middle semifunctor is not shared");
  const Semifunctor& f = a1.left;
  const Semifunctor& h = a2.right;
  auto check = [&](const char* name, bool lhs, bool rhs) {
    if (lhs != rhs)
      throw Error("AssertionFailure",
                  std::string("property '") + name + "' does not transfer across the triple");
    return lhs;
  };
  TripleReport report{};
  report.semiseparable = check("semiseparable", is_semiseparable(f), is_semiseparable(h));
  report.separable = check("separable", is_separable(f), is_separable(h));
  report.naturally_semifull =
      check("naturally-semifull", is_naturally_semifull(f), is_naturally_semifull(h));
  report.sff = check("semifully-faithful", is_semifully_faithful(f),
                     is_semifully_faithful(h));
  return report;
}

}  // namespace semicat
