#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "semicat/error.hpp"
#include "semicat/morphprop.hpp"
#include "semicat/semifunctor.hpp"

namespace semicat {

inline bool is_faithful(const Semifunctor& f) {
  const FinCategory& c = *f.source;
  for (int x = 0; x < c.num_objects(); ++x)
    for (int y = 0; y < c.num_objects(); ++y) {
      const std::vector<int>& hom = c.hom(x, y);
      for (std::size_t i = 0; i < hom.size(); ++i)
        for (std::size_t j = i + 1; j < hom.size(); ++j)
          if (f.mor(hom[i]) == f.mor(hom[j])) return false;
    }
  return true;
}

inline bool is_full(const Semifunctor& f) {
  const FinCategory& c = *f.source;
  const FinCategory& d = *f.target;
  for (int x = 0; x < c.num_objects(); ++x)
    for (int y = 0; y < c.num_objects(); ++y)
      for (int m : d.hom(f.obj(x), f.obj(y))) {
        bool hit = false;
        for (int g : c.hom(x, y))
          if (f.mor(g) == m) {
            hit = true;
            break;
          }
        if (!hit) return false;
      }
  return true;
}

inline bool is_fully_faithful(const Semifunctor& f) {
  return is_faithful(f) && is_full(f);
}

/// Indexes the hom-cells of Hom_D(F−, F−): one cell per (X, Y, d) with
/// d : FX → FY. Values of a cell live in Hom_C(X, Y).
class CellTable {
 public:
  explicit CellTable(const Semifunctor& f) : target_(f.target), nobj_(f.source->num_objects()) {
    const FinCategory& d = *f.target;
    offset_.assign(static_cast<std::size_t>(nobj_) * nobj_, -1);
    for (int x = 0; x < nobj_; ++x)
      for (int y = 0; y < nobj_; ++y) {
        offset_[static_cast<std::size_t>(x) * nobj_ + y] = total_;
        total_ += static_cast<int>(d.hom(f.obj(x), f.obj(y)).size());
        for (int m : d.hom(f.obj(x), f.obj(y))) {
          xs_.push_back(x);
          ys_.push_back(y);
          mors_.push_back(m);
        }
      }
  }

  int size() const { return total_; }
  int cell(int x, int y, int d_mor) const {
    int base = offset_[static_cast<std::size_t>(x) * nobj_ + y];
    return base + target_->hom_position(d_mor);
  }
  int cell_x(int i) const { return xs_[i]; }
  int cell_y(int i) const { return ys_[i]; }
  int cell_mor(int i) const { return mors_[i]; }

 private:
  CategoryPtr target_;
  int nobj_ = 0;
  std::vector<int> offset_;
  std::vector<int> xs_, ys_, mors_;
  int total_ = 0;
};

enum class PMode { Separable, NaturallySemifull, Semiseparable };

inline const char* to_string(PMode m) {
  switch (m) {
    case PMode::Separable: return "separable";
    case PMode::NaturallySemifull: return "naturally-semifull";
    default: return "semiseparable";
  }
}

inline std::optional<PMode> pmode_from_string(const std::string& s) {
  if (s == "separable") return PMode::Separable;
  if (s == "naturally-semifull" || s == "nat-semifull") return PMode::NaturallySemifull;
  if (s == "semiseparable" || s == "semisep") return PMode::Semiseparable;
  return std::nullopt;
}

/// A natural family P_{X,Y} : Hom(FX,FY) → Hom(X,Y) witnessing the chosen
/// mode equation. assignment is indexed by CellTable cell order.
struct PSolution {
  Semifunctor functor;
  PMode mode;
  std::vector<int> assignment;

  int at(const CellTable& cells, int x, int y, int d_mor) const {
    return assignment[cells.cell(x, y, d_mor)];
  }

  friend bool operator==(const PSolution& a, const PSolution& b) {
    return a.functor == b.functor && a.mode == b.mode && a.assignment == b.assignment;
  }
};

namespace detail {

/// One-sided naturality constraints generate the full two-sided family:
/// the (h, l) action factors through (h, Id) and (Id, l) via cells that all
/// exist, so checking h-steps and l-steps (identities included) suffices.
inline bool p_naturality_holds(const Semifunctor& f, const CellTable& cells,
                               const std::vector<int>& assignment) {
  const FinCategory& c = *f.source;
  const FinCategory& d = *f.target;
  for (int i = 0; i < cells.size(); ++i) {
    int y = cells.cell_x(i), z = cells.cell_y(i);
    int k = cells.cell_mor(i);
    int v = assignment[i];
    int fid_z = f.image_identity(z);
    int fid_y = f.image_identity(y);
    for (int x = 0; x < c.num_objects(); ++x)
      for (int h : c.hom(x, y)) {
        int kp = d.compose(fid_z, d.compose(k, f.mor(h)));
        if (assignment[cells.cell(x, z, kp)] != c.compose(v, h)) return false;
      }
    for (int t = 0; t < c.num_objects(); ++t)
      for (int l : c.hom(z, t)) {
        int kp = d.compose(f.mor(l), d.compose(k, fid_y));
        if (assignment[cells.cell(y, t, kp)] != c.compose(l, v)) return false;
      }
  }
  return true;
}

inline bool p_mode_equation_holds(const Semifunctor& f, const CellTable& cells,
                                  const std::vector<int>& assignment, PMode mode) {
  const FinCategory& c = *f.source;
  const FinCategory& d = *f.target;
  switch (mode) {
    case PMode::Separable:
      for (int g = 0; g < c.num_morphisms(); ++g)
        if (assignment[cells.cell(c.src(g), c.dst(g), f.mor(g))] != g) return false;
      return true;
    case PMode::NaturallySemifull:
      for (int i = 0; i < cells.size(); ++i) {
        int x = cells.cell_x(i), y = cells.cell_y(i);
        int framed = d.compose(f.image_identity(y),
                               d.compose(cells.cell_mor(i), f.image_identity(x)));
        if (f.mor(assignment[i]) != framed) return false;
      }
      return true;
    case PMode::Semiseparable:
      for (int g = 0; g < c.num_morphisms(); ++g)
        if (f.mor(assignment[cells.cell(c.src(g), c.dst(g), f.mor(g))]) != f.mor(g))
          return false;
      return true;
  }
  return false;
}

/// Constraint-propagation solver. Cells pinned or fibered by the mode
/// equation first, then naturality propagated from assigned cells; remaining
/// free cells are resolved by backtracking in deterministic cell order.
class PSolver {
 public:
  PSolver(const Semifunctor& f, PMode mode) : f_(f), mode_(mode), cells_(f) {}

  std::optional<std::vector<int>> solve() {
    const FinCategory& c = *f_.source;
    const FinCategory& d = *f_.target;
    const int n = cells_.size();
    domains_.assign(n, {});
    for (int i = 0; i < n; ++i) {
      int x = cells_.cell_x(i), y = cells_.cell_y(i);
      if (c.hom(x, y).empty() && !d.hom(f_.obj(x), f_.obj(y)).empty())
        return std::nullopt;  // no value available for this cell
      domains_[i] = c.hom(x, y);
    }
    switch (mode_) {
      case PMode::Separable:
        for (int g = 0; g < c.num_morphisms(); ++g)
          if (!restrict_to(cells_.cell(c.src(g), c.dst(g), f_.mor(g)),
                           [&](int v) { return v == g; }))
            return std::nullopt;
        break;
      case PMode::NaturallySemifull:
        for (int i = 0; i < n; ++i) {
          int x = cells_.cell_x(i), y = cells_.cell_y(i);
          int framed = d.compose(f_.image_identity(y),
                                 d.compose(cells_.cell_mor(i), f_.image_identity(x)));
          if (!restrict_to(i, [&](int v) { return f_.mor(v) == framed; }))
            return std::nullopt;
        }
        break;
      case PMode::Semiseparable:
        for (int g = 0; g < c.num_morphisms(); ++g)
          if (!restrict_to(cells_.cell(c.src(g), c.dst(g), f_.mor(g)),
                           [&](int v) { return f_.mor(v) == f_.mor(g); }))
            return std::nullopt;
        break;
    }
    assignment_.assign(n, -1);
    trail_.clear();
    for (int i = 0; i < n; ++i)
      if (domains_[i].size() == 1 && assignment_[i] < 0)
        if (!assign(i, domains_[i][0])) return std::nullopt;
    if (!backtrack()) return std::nullopt;
    // Single authoritative check of everything the solution must satisfy.
    if (!p_naturality_holds(f_, cells_, assignment_) ||
        !p_mode_equation_holds(f_, cells_, assignment_, mode_))
      throw Error("InternalInvariantViolation", "P-solver produced an invalid family");
    return assignment_;
  }

  const CellTable& cells() const { return cells_; }

 private:
  template <typename Pred>
  bool restrict_to(int cell, Pred keep) {
    auto& dom = domains_[cell];
    dom.erase(std::remove_if(dom.begin(), dom.end(),
                             [&](int v) { return !keep(v); }),
              dom.end());
    return !dom.empty();
  }

  /// Assign and propagate one-sided naturality consequences; records the
  /// touched cells on the trail for backtracking.
  bool assign(int cell, int value) {
    const FinCategory& c = *f_.source;
    const FinCategory& d = *f_.target;
    std::vector<int> queue;
    if (!push(cell, value, queue)) return false;
    while (!queue.empty()) {
      int i = queue.back();
      queue.pop_back();
      int y = cells_.cell_x(i), z = cells_.cell_y(i);
      int k = cells_.cell_mor(i);
      int v = assignment_[i];
      int fid_z = f_.image_identity(z);
      int fid_y = f_.image_identity(y);
      for (int x = 0; x < c.num_objects(); ++x)
        for (int h : c.hom(x, y)) {
          int target = cells_.cell(x, z, d.compose(fid_z, d.compose(k, f_.mor(h))));
          if (!push(target, c.compose(v, h), queue)) return false;
        }
      for (int t = 0; t < c.num_objects(); ++t)
        for (int l : c.hom(z, t)) {
          int target = cells_.cell(y, t, d.compose(f_.mor(l), d.compose(k, fid_y)));
          if (!push(target, c.compose(l, v), queue)) return false;
        }
    }
    return true;
  }

  bool push(int cell, int value, std::vector<int>& queue) {
    if (assignment_[cell] >= 0) return assignment_[cell] == value;
    for (int v : domains_[cell])
      if (v == value) {
        assignment_[cell] = value;
        trail_.push_back(cell);
        queue.push_back(cell);
        return true;
      }
    return false;
  }

  bool backtrack() {
    int pick = -1;
    std::size_t best = 0;
    for (int i = 0; i < cells_.size(); ++i) {
      if (assignment_[i] >= 0) continue;
      if (pick < 0 || domains_[i].size() < best) {
        pick = i;
        best = domains_[i].size();
      }
    }
    if (pick < 0) return true;
    for (int v : domains_[pick]) {
      std::size_t mark = trail_.size();
      if (assign(pick, v) && backtrack()) return true;
      while (trail_.size() > mark) {
        assignment_[trail_.back()] = -1;
        trail_.pop_back();
      }
    }
    return false;
  }

  const Semifunctor& f_;
  PMode mode_;
  CellTable cells_;
  std::vector<std::vector<int>> domains_;
  std::vector<int> assignment_;
  std::vector<int> trail_;
};

}  // namespace detail

inline std::optional<PSolution> solve_P(const Semifunctor& f, PMode mode) {
  detail::PSolver solver(f, mode);
  auto got = solver.solve();
  if (!got) return std::nullopt;
  return PSolution{f, mode, std::move(*got)};
}

/// Independent oracle for solve_P: enumerate every assignment family over the
/// full domains and test the constraints directly. Exponential; tests only.
inline std::optional<PSolution> solve_P_naive(const Semifunctor& f, PMode mode) {
  CellTable cells(f);
  const FinCategory& c = *f.source;
  const int n = cells.size();
  std::vector<const std::vector<int>*> domains(n);
  for (int i = 0; i < n; ++i) {
    domains[i] = &c.hom(cells.cell_x(i), cells.cell_y(i));
    if (domains[i]->empty()) return std::nullopt;
  }
  std::vector<int> pos(n, 0);
  std::vector<int> assignment(n);
  while (true) {
    for (int i = 0; i < n; ++i) assignment[i] = (*domains[i])[pos[i]];
    if (detail::p_mode_equation_holds(f, cells, assignment, mode) &&
        detail::p_naturality_holds(f, cells, assignment))
      return PSolution{f, mode, assignment};
    int i = n - 1;
    while (i >= 0 && pos[i] + 1 == static_cast<int>(domains[i]->size())) pos[i--] = 0;
    if (i < 0) return std::nullopt;
    ++pos[i];
  }
}

/// Re-checks that a PSolution satisfies naturality and its mode equation.
inline bool verify_p_solution(const PSolution& p) {
  CellTable cells(p.functor);
  if (static_cast<int>(p.assignment.size()) != cells.size()) return false;
  for (int i = 0; i < cells.size(); ++i) {
    int v = p.assignment[i];
    const auto& hom = p.functor.source->hom(cells.cell_x(i), cells.cell_y(i));
    if (std::find(hom.begin(), hom.end(), v) == hom.end()) return false;
  }
  return detail::p_naturality_holds(p.functor, cells, p.assignment) &&
         detail::p_mode_equation_holds(p.functor, cells, p.assignment, p.mode);
}

inline bool is_separable(const Semifunctor& f) {
  return solve_P(f, PMode::Separable).has_value();
}
inline bool is_naturally_semifull(const Semifunctor& f) {
  return solve_P(f, PMode::NaturallySemifull).has_value();
}
inline bool is_semiseparable(const Semifunctor& f) {
  return solve_P(f, PMode::Semiseparable).has_value();
}

/// Semifull witness: one g per morphism FX → FY with F(g) = FId_Y∘d∘FId_X.
/// On failure carries the first offending cell.
struct SemifullReport {
  bool semifull = false;
  std::vector<int> witness;          // per cell, when semifull
  int failing_x = -1, failing_y = -1, failing_mor = -1;
};

inline SemifullReport semifull_report(const Semifunctor& f) {
  const FinCategory& c = *f.source;
  const FinCategory& d = *f.target;
  CellTable cells(f);
  SemifullReport report;
  report.witness.assign(cells.size(), -1);
  for (int i = 0; i < cells.size(); ++i) {
    int x = cells.cell_x(i), y = cells.cell_y(i);
    int framed = d.compose(f.image_identity(y),
                           d.compose(cells.cell_mor(i), f.image_identity(x)));
    for (int g : c.hom(x, y))
      if (f.mor(g) == framed) {
        report.witness[i] = g;
        break;
      }
    if (report.witness[i] < 0) {
      report.semifull = false;
      report.failing_x = x;
      report.failing_y = y;
      report.failing_mor = cells.cell_mor(i);
      return report;
    }
  }
  report.semifull = true;
  return report;
}

inline bool is_semifull(const Semifunctor& f) { return semifull_report(f).semifull; }

inline bool is_semifully_faithful(const Semifunctor& f) {
  return is_faithful(f) && is_semifull(f);
}

/// Naturally full = naturally semifull + identities preserved.
inline bool is_naturally_full(const Semifunctor& f) {
  return is_functor(f) && is_naturally_semifull(f);
}

/// The unique idempotent natural transformation e with Fe = FId attached to a
/// semiseparable semifunctor, e_X = P_{X,X}(FId_X). Verifies idempotency,
/// naturality, Fe = FId, the universal property (Ff = Fg iff e_Y∘f = e_Y∘g)
/// and uniqueness among all idempotent natural transformations.
inline IdemNatTransf associated_idempotent(const Semifunctor& f, const PSolution& p) {
  if (!(p.functor == f))
    throw Error("NotSemiseparableSolution", "P-solution belongs to a different semifunctor");
  {
    PSolution check = p;
    check.mode = PMode::Semiseparable;
    if (!verify_p_solution(check))
      throw Error("NotSemiseparableSolution",
                  "the given family does not satisfy F∘P∘F = F with naturality");
  }
  const FinCategory& c = *f.source;
  CellTable cells(f);
  std::vector<int> comps(c.num_objects());
  for (int x = 0; x < c.num_objects(); ++x)
    comps[x] = p.assignment[cells.cell(x, x, f.image_identity(x))];
  IdemNatTransf e = make_idem_nat_transf(f.source, comps);
  for (int x = 0; x < c.num_objects(); ++x)
    if (f.mor(e.at(x)) != f.image_identity(x))
      throw Error("InternalInvariantViolation", "Fe = FId fails for the associated idempotent");
  for (int x = 0; x < c.num_objects(); ++x)
    for (int y = 0; y < c.num_objects(); ++y)
      for (int g : c.hom(x, y))
        for (int h : c.hom(x, y)) {
          bool images_equal = f.mor(g) == f.mor(h);
          bool collapsed = c.compose(e.at(y), g) == c.compose(e.at(y), h);
          if (images_equal != collapsed)
            throw Error("InternalInvariantViolation",
                        "universal property of the associated idempotent fails");
        }
  // Uniqueness among all idempotent natural transformations with the property.
  std::vector<int> cand(c.num_objects(), -1);
  int found = 0;
  std::function<void(int)> scan = [&](int x) {
    if (x == c.num_objects()) {
      for (int m = 0; m < c.num_morphisms(); ++m)
        if (c.compose(m, cand[c.src(m)]) != c.compose(cand[c.dst(m)], m)) return;
      for (int a = 0; a < c.num_objects(); ++a)
        for (int b = 0; b < c.num_objects(); ++b)
          for (int g : c.hom(a, b))
            for (int h : c.hom(a, b))
              if ((f.mor(g) == f.mor(h)) !=
                  (c.compose(cand[b], g) == c.compose(cand[b], h)))
                return;
      ++found;
      if (cand != e.components)
        throw Error("InternalInvariantViolation",
                    "associated idempotent is not unique");
      return;
    }
    for (int m : c.hom(x, x)) {
      if (c.compose(m, m) != m) continue;
      cand[x] = m;
      scan(x + 1);
      cand[x] = -1;
    }
  };
  scan(0);
  if (found != 1)
    throw Error("InternalInvariantViolation", "associated idempotent scan found " +
                                                  std::to_string(found) + " candidates");
  return e;
}

enum class MaschkeSide { Mono, Epi, Iso };

/// Transfers a semisplitting of F(f) back along a separable F: returns the
/// retraction P(g) with P(g)∘f = Id (mono), the section with f∘P(g) = Id
/// (epi), or the two-sided inverse (iso).
inline int maschke_transfer(const Semifunctor& f, const PSolution& p, int mor,
                            MaschkeSide side) {
  if (!(p.functor == f) || p.mode != PMode::Separable || !verify_p_solution(p))
    throw Error("HypothesisNotSatisfied", "a separable P-solution for F is required");
  const FinCategory& c = *f.source;
  int x = c.src(mor), y = c.dst(mor);
  CellTable cells(f);
  std::optional<int> g;
  switch (side) {
    case MaschkeSide::Mono: g = fc_semisplit_mono_witness(f, x, f.mor(mor)); break;
    case MaschkeSide::Epi: g = fc_semisplit_epi_witness(f, y, f.mor(mor)); break;
    case MaschkeSide::Iso: g = cc_semi_isomorphism(f, x, f, y, f.mor(mor)); break;
  }
  if (!g)
    throw Error("HypothesisNotSatisfied",
                "F(" + c.morphism_name(mor) + ") has no semisplitting witness");
  int r = p.assignment[cells.cell(y, x, *g)];
  bool ok = true;
  if (side != MaschkeSide::Epi) ok = ok && c.compose(r, mor) == c.identity(x);
  if (side != MaschkeSide::Mono) ok = ok && c.compose(mor, r) == c.identity(y);
  if (!ok)
    throw Error("InternalInvariantViolation",
                "transferred witness fails to split '" + c.morphism_name(mor) + "'");
  return r;
}

}  // namespace semicat
