#pragma once

#include <algorithm>
#include <functional>
#include <future>
#include <numeric>
#include <optional>
#include <vector>

#include "semicat/error.hpp"
#include "semicat/semifunctor.hpp"

namespace semicat {

/// An object-indexed family of morphisms α_X : FX → F'X between parallel
/// semifunctors. Naturality and seminaturality are decided by the predicates
/// below, never assumed.
struct Transformation {
  Semifunctor from;
  Semifunctor to;
  std::vector<int> components;  // source object -> target morphism

  int at(int x) const { return components[x]; }

  friend bool operator==(const Transformation& a, const Transformation& b) {
    return a.from == b.from && a.to == b.to && a.components == b.components;
  }
};

inline Transformation make_transformation(Semifunctor from, Semifunctor to,
                                          std::vector<int> components) {
  if (!same_category(from.source, to.source) || !same_category(from.target, to.target))
    throw Error("ShapeMismatch", "transformation requires parallel semifunctors");
  if (static_cast<int>(components.size()) != from.source->num_objects())
    throw Error("ShapeMismatch", "one component per source object required");
  const FinCategory& d = *from.target;
  for (int x = 0; x < from.source->num_objects(); ++x) {
    int m = components[x];
    if (m < 0 || m >= d.num_morphisms() || d.src(m) != from.obj(x) ||
        d.dst(m) != to.obj(x))
      throw Error("EndpointMismatch",
                  "component at '" + from.source->object_name(x) +
                      "' does not go from FX to F'X");
  }
  return Transformation{std::move(from), std::move(to), std::move(components)};
}

inline Transformation identity_transformation(const Semifunctor& f) {
  std::vector<int> comps(f.source->num_objects());
  for (int x = 0; x < f.source->num_objects(); ++x)
    comps[x] = f.target->identity(f.obj(x));
  return Transformation{f, f, std::move(comps)};
}

/// α_Y ∘ Ff = F'f ∘ α_X for every f. The squares at identity morphisms are
/// not vacuous for semifunctors and are included.
inline bool is_natural(const Transformation& a) {
  const FinCategory& d = *a.from.target;
  for (int f = 0; f < a.from.source->num_morphisms(); ++f) {
    int x = a.from.source->src(f), y = a.from.source->dst(f);
    if (d.compose(a.at(y), a.from.mor(f)) != d.compose(a.to.mor(f), a.at(x)))
      return false;
  }
  return true;
}

/// Natural and α_X ∘ F(Id_X) = α_X for every X.
inline bool is_seminatural(const Transformation& a) {
  const FinCategory& d = *a.from.target;
  for (int x = 0; x < a.from.source->num_objects(); ++x)
    if (d.compose(a.at(x), a.from.image_identity(x)) != a.at(x)) return false;
  return is_natural(a);
}

/// (β ∘ α)_X = β_X ∘ α_X.
inline Transformation vertical_compose(const Transformation& b, const Transformation& a) {
  if (!(a.to == b.from))
    throw Error("ShapeMismatch", "vertical composition of non-adjacent transformations");
  std::vector<int> comps(a.components.size());
  for (std::size_t x = 0; x < comps.size(); ++x)
    comps[x] = a.from.target->compose(b.components[x], a.components[x]);
  return Transformation{a.from, b.to, std::move(comps)};
}

/// (Hα)_X = H(α_X).
inline Transformation whisker_left(const Semifunctor& h, const Transformation& a) {
  if (!same_category(a.from.target, h.source))
    throw Error("ShapeMismatch", "whisker_left: H does not start at the target of α");
  std::vector<int> comps(a.components.size());
  for (std::size_t x = 0; x < comps.size(); ++x) comps[x] = h.mor(a.components[x]);
  return Transformation{compose_semifunctors(h, a.from),
                        compose_semifunctors(h, a.to), std::move(comps)};
}

/// (αH)_X = α_{HX}.
inline Transformation whisker_right(const Transformation& a, const Semifunctor& h) {
  if (!same_category(h.target, a.from.source))
    throw Error("ShapeMismatch", "whisker_right: H does not end at the source of α");
  std::vector<int> comps(h.source->num_objects());
  for (int x = 0; x < h.source->num_objects(); ++x) comps[x] = a.components[h.obj(x)];
  return Transformation{compose_semifunctors(a.from, h),
                        compose_semifunctors(a.to, h), std::move(comps)};
}

namespace detail {

/// Backtracking search for seminatural transformations A → B. Candidates per
/// object are pre-filtered by seminaturality, the endomorphism naturality
/// squares and a caller-supplied per-object condition; the remaining
/// naturality squares prune partial assignments. Deterministic: objects are
/// visited by ascending candidate count (ties by index), candidates in
/// hom-set order, so the first hit is the canonical witness.
class SeminaturalSearch {
 public:
  SeminaturalSearch(const Semifunctor& a, const Semifunctor& b,
                    const std::function<bool(int, int)>& object_filter)
      : a_(a), b_(b) {
    const FinCategory& d = *a.target;
    const FinCategory& c = *a.source;
    const int nobj = c.num_objects();
    candidates_.resize(nobj);
    for (int x = 0; x < nobj; ++x) {
      for (int m : d.hom(a.obj(x), b.obj(x))) {
        if (d.compose(m, a.image_identity(x)) != m) continue;
        bool ok = true;
        for (int f : c.hom(x, x)) {
          if (d.compose(m, a.mor(f)) != d.compose(b.mor(f), m)) {
            ok = false;
            break;
          }
        }
        if (ok && (!object_filter || object_filter(x, m))) candidates_[x].push_back(m);
      }
    }
    order_.resize(nobj);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int l, int r) {
      return candidates_[l].size() < candidates_[r].size();
    });
    rank_.assign(nobj, -1);
    for (int i = 0; i < nobj; ++i) rank_[order_[i]] = i;
    // Naturality squares between distinct objects, attached to whichever
    // endpoint the search reaches later.
    incident_.resize(nobj);
    for (int f = 0; f < c.num_morphisms(); ++f) {
      int x = c.src(f), y = c.dst(f);
      if (x == y) continue;
      incident_[rank_[x] > rank_[y] ? x : y].push_back(f);
    }
  }

  std::optional<std::vector<int>> first(int threads = 1) const {
    std::vector<int> assign(candidates_.size(), -1);
    if (order_.empty()) return assign;
    if (threads > 1 && candidates_[order_[0]].size() > 1) {
      const std::vector<int>& top = candidates_[order_[0]];
      int chunks = std::min<int>(threads, static_cast<int>(top.size()));
      std::vector<std::future<std::optional<std::vector<int>>>> futs;
      for (int chunk = 0; chunk < chunks; ++chunk) {
        futs.push_back(std::async(std::launch::async, [this, chunk, chunks, &top]() {
          std::vector<int> local(candidates_.size(), -1);
          for (std::size_t i = chunk; i < top.size(); i += chunks) {
            local[order_[0]] = top[i];
            if (consistent(local, order_[0]) && dfs(local, 1, nullptr)) return std::optional(local);
            local[order_[0]] = -1;
          }
          return std::optional<std::vector<int>>();
        }));
      }
      std::optional<std::vector<int>> best;
      for (auto& fut : futs) {
        auto got = fut.get();
        if (!got) continue;
        if (!best || lex_less(*got, *best)) best = got;
      }
      return best;
    }
    if (dfs(assign, 0, nullptr)) return assign;
    return std::nullopt;
  }

  std::vector<std::vector<int>> all() const {
    std::vector<std::vector<int>> out;
    std::vector<int> assign(candidates_.size(), -1);
    dfs(assign, 0, &out);
    return out;
  }

 private:
  bool lex_less(const std::vector<int>& l, const std::vector<int>& r) const {
    for (int x : order_) {
      if (l[x] != r[x]) return l[x] < r[x];
    }
    return false;
  }

  bool consistent(const std::vector<int>& assign, int x) const {
    const FinCategory& d = *a_.target;
    for (int f : incident_[x]) {
      int s = a_.source->src(f), t = a_.source->dst(f);
      if (assign[s] < 0 || assign[t] < 0) continue;
      if (d.compose(assign[t], a_.mor(f)) != d.compose(b_.mor(f), assign[s]))
        return false;
    }
    return true;
  }

  bool dfs(std::vector<int>& assign, std::size_t depth,
           std::vector<std::vector<int>>* collect) const {
    if (depth == order_.size()) {
      if (collect) {
        collect->push_back(assign);
        return false;
      }
      return true;
    }
    int x = order_[depth];
    for (int m : candidates_[x]) {
      assign[x] = m;
      if (consistent(assign, x) && dfs(assign, depth + 1, collect)) return true;
      assign[x] = -1;
    }
    return false;
  }

  const Semifunctor& a_;
  const Semifunctor& b_;
  std::vector<std::vector<int>> candidates_;
  std::vector<int> order_;
  std::vector<int> rank_;
  std::vector<std::vector<int>> incident_;
};

}  // namespace detail

/// First seminatural transformation A → B whose component at each object X
/// additionally satisfies `object_filter(X, component)`, in deterministic
/// search order.
inline std::optional<Transformation> find_seminatural_witness(
    const Semifunctor& a, const Semifunctor& b,
    const std::function<bool(int, int)>& object_filter = nullptr, int threads = 1) {
  if (!same_category(a.source, b.source) || !same_category(a.target, b.target))
    throw Error("ShapeMismatch", "witness search requires parallel semifunctors");
  detail::SeminaturalSearch search(a, b, object_filter);
  auto got = search.first(threads);
  if (!got) return std::nullopt;
  return Transformation{a, b, std::move(*got)};
}

/// All seminatural transformations F → F', lexicographic in the components.
inline std::vector<Transformation> enumerate_seminatural(const Semifunctor& f,
                                                         const Semifunctor& g) {
  if (!same_category(f.source, g.source) || !same_category(f.target, g.target))
    throw Error("ShapeMismatch", "enumeration requires parallel semifunctors");
  detail::SeminaturalSearch search(f, g, nullptr);
  std::vector<Transformation> out;
  auto sols = search.all();
  std::sort(sols.begin(), sols.end());
  for (auto& comps : sols) out.push_back(Transformation{f, g, std::move(comps)});
  return out;
}

namespace detail {
inline void require_seminatural(const Transformation& a, const char* op) {
  if (!is_seminatural(a))
    throw Error("NotSeminatural", std::string(op) + " requires a seminatural transformation");
}
}  // namespace detail

/// Seminatural β : F' → F with β∘α = FId.
inline std::optional<Transformation> natural_semisplit_mono_witness(
    const Transformation& a, int threads = 1) {
  detail::require_seminatural(a, "natural_semisplit_mono_witness");
  const FinCategory& d = *a.from.target;
  return find_seminatural_witness(
      a.to, a.from,
      [&](int x, int m) {
        return d.compose(m, a.at(x)) == a.from.image_identity(x);
      },
      threads);
}

/// Seminatural β : F' → F with α∘β = F'Id.
inline std::optional<Transformation> natural_semisplit_epi_witness(
    const Transformation& a, int threads = 1) {
  detail::require_seminatural(a, "natural_semisplit_epi_witness");
  const FinCategory& d = *a.from.target;
  return find_seminatural_witness(
      a.to, a.from,
      [&](int x, int m) {
        return d.compose(a.at(x), m) == a.to.image_identity(x);
      },
      threads);
}

/// The semi-inverse β with β∘α = FId and α∘β = F'Id, when α is a natural
/// semi-isomorphism. Unique when it exists.
inline std::optional<Transformation> find_semi_inverse(const Transformation& a,
                                                       int threads = 1) {
  detail::require_seminatural(a, "find_semi_inverse");
  const FinCategory& d = *a.from.target;
  return find_seminatural_witness(
      a.to, a.from,
      [&](int x, int m) {
        return d.compose(m, a.at(x)) == a.from.image_identity(x) &&
               d.compose(a.at(x), m) == a.to.image_identity(x);
      },
      threads);
}

}  // namespace semicat
