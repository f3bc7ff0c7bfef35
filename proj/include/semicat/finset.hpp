#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "semicat/error.hpp"
#include "semicat/fincat.hpp"

namespace semicat {

/// A finite set given by an ordered list of distinct atom labels.
struct FinSetObject {
  std::vector<std::string> elements;

  std::string name() const {
    std::string s = "{";
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (i) s += ",";
      s += elements[i];
    }
    return s + "}";
  }

  int size() const { return static_cast<int>(elements.size()); }

  friend bool operator==(const FinSetObject& a, const FinSetObject& b) {
    return a.elements == b.elements;
  }
};

/// Deterministic name for the function src→dst with the given image indices.
inline std::string function_name(const FinSetObject& src, const FinSetObject& dst,
                                 const std::vector<int>& images) {
  std::string s = src.name() + ">" + dst.name() + "[";
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i) s += ",";
    s += dst.elements[images[i]];
  }
  return s + "]";
}

/// A full subcategory of finite sets: the listed sets as objects, every
/// function between them as a morphism. Keeps the element tables so callers
/// can move between morphism indices and function graphs.
struct FinSetCategory {
  CategoryPtr category;
  std::vector<FinSetObject> objects;                 // aligned with category objects
  std::vector<std::vector<int>> graphs;              // morphism -> image indices

  int object_of(const FinSetObject& s) const {
    for (std::size_t i = 0; i < objects.size(); ++i)
      if (objects[i] == s) return static_cast<int>(i);
    return -1;
  }

  /// Morphism index of the function src→dst given by image indices.
  int function_morphism(int src, int dst, const std::vector<int>& images) const {
    return category->require_morphism(
        function_name(objects[src], objects[dst], images));
  }

  const std::vector<int>& images_of(int mor) const { return graphs[mor]; }
};

/// All functions A→B as image-index vectors, enumerated lexicographically.
inline std::vector<std::vector<int>> all_functions(int domain_size, int codomain_size) {
  std::vector<std::vector<int>> out;
  if (domain_size == 0) {
    out.push_back({});
    return out;
  }
  if (codomain_size == 0) return out;
  std::vector<int> cur(domain_size, 0);
  while (true) {
    out.push_back(cur);
    int i = domain_size - 1;
    while (i >= 0 && cur[i] == codomain_size - 1) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

inline FinSetCategory full_finset_subcategory(const std::vector<FinSetObject>& objs) {
  for (std::size_t i = 0; i < objs.size(); ++i) {
    std::vector<std::string> sorted = objs[i].elements;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error("DuplicateId", "set " + objs[i].name() + " repeats a label");
    for (std::size_t j = 0; j < i; ++j)
      if (objs[j] == objs[i])
        throw Error("DuplicateId", "set " + objs[i].name() + " listed twice");
  }

  FinSetCategory result;
  result.objects = objs;
  FinCategoryBuilder b;
  for (const FinSetObject& s : objs) b.add_object(s.name());

  struct Fn {
    int src, dst;
    std::vector<int> images;
  };
  std::vector<Fn> fns;
  for (std::size_t s = 0; s < objs.size(); ++s)
    for (std::size_t d = 0; d < objs.size(); ++d)
      for (auto& images : all_functions(objs[s].size(), objs[d].size())) {
        b.add_morphism(function_name(objs[s], objs[d], images), objs[s].name(),
                       objs[d].name());
        fns.push_back({static_cast<int>(s), static_cast<int>(d), std::move(images)});
      }

  for (std::size_t s = 0; s < objs.size(); ++s) {
    std::vector<int> id(objs[s].size());
    for (int i = 0; i < objs[s].size(); ++i) id[i] = i;
    b.set_identity(objs[s].name(), function_name(objs[s], objs[s], id));
  }

  for (const Fn& g : fns)
    for (const Fn& f : fns) {
      if (f.dst != g.src) continue;
      std::vector<int> comp(f.images.size());
      for (std::size_t i = 0; i < f.images.size(); ++i)
        comp[i] = g.images[f.images[i]];
      b.set_compose(function_name(objs[g.src], objs[g.dst], g.images),
                    function_name(objs[f.src], objs[f.dst], f.images),
                    function_name(objs[f.src], objs[g.dst], comp));
    }

  result.category = std::move(b).build();
  result.graphs.resize(fns.size());
  for (std::size_t i = 0; i < fns.size(); ++i) result.graphs[i] = fns[i].images;
  return result;
}

}  // namespace semicat
