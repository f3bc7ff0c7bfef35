#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "semicat/error.hpp"
#include "semicat/fincat.hpp"
#include "semicat/props.hpp"
#include "semicat/semiadj.hpp"
#include "semicat/semifunctor.hpp"
#include "semicat/transform.hpp"

namespace semicat::io {

// nlohmann::json with std::map keys: objects render with sorted keys, which
// together with dump(2) gives the canonical byte form.
using json = nlohmann::json;

/// Parsed document: a kind tag plus the payload. Semiadjunctions parse to
/// unvalidated SemiadjunctionData so that promotion inputs (where one
/// semitriangular identity fails on purpose) can still be read.
struct Document {
  std::string kind;
  int version = 1;
  std::variant<CategoryPtr, Semifunctor, Transformation, SemiadjunctionData,
               IdemNatTransf, PSolution>
      payload;
};

namespace detail {

inline const json& field(const json& j, const char* name, const std::string& path) {
  if (!j.is_object())
    throw Error("SchemaError", "expected an object at " + path);
  auto it = j.find(name);
  if (it == j.end())
    throw Error("SchemaError", "missing field '" + std::string(name) + "' at " + path);
  return *it;
}

inline std::string string_field(const json& j, const char* name, const std::string& path) {
  const json& v = field(j, name, path);
  if (!v.is_string())
    throw Error("SchemaError", "field '" + std::string(name) + "' at " + path +
                                   " must be a string");
  return v.get<std::string>();
}

/// Shares structurally equal categories parsed within one document so that
/// parallel semifunctors compare by pointer.
struct Context {
  std::filesystem::path base_dir;
  std::vector<CategoryPtr> seen;

  CategoryPtr share(CategoryPtr c) {
    for (const CategoryPtr& other : seen)
      if (other->structurally_equal(*c)) return other;
    seen.push_back(c);
    return c;
  }
};

inline CategoryPtr category_from_json(const json& j, const std::string& path);

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("ParseError", "cannot read file '" + p.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json parse_json(const std::string& bytes) {
  try {
    return json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw Error("ParseError", e.what());
  }
}

inline CategoryPtr category_or_ref(const json& j, Context& ctx, const std::string& path) {
  if (j.is_object() && j.contains("$ref")) {
    std::filesystem::path target = ctx.base_dir / string_field(j, "$ref", path);
    json doc = parse_json(read_file(target));
    if (string_field(doc, "kind", path + ".$ref") != "category")
      throw Error("SchemaError", "$ref at " + path + " must point to a category document");
    CategoryPtr c =
        category_from_json(field(doc, "payload", path + ".$ref"), path + ".$ref/payload");
    return ctx.share(c);
  }
  return ctx.share(category_from_json(j, path));
}

inline CategoryPtr category_from_json(const json& j, const std::string& path) {
  FinCategoryBuilder b;
  const json& objects = field(j, "objects", path);
  if (!objects.is_array())
    throw Error("SchemaError", "'objects' at " + path + " must be an array");
  for (const json& o : objects) {
    if (!o.is_string()) throw Error("SchemaError", "object names must be strings at " + path);
    b.add_object(o.get<std::string>());
  }
  const json& morphisms = field(j, "morphisms", path);
  if (!morphisms.is_array())
    throw Error("SchemaError", "'morphisms' at " + path + " must be an array");
  for (const json& m : morphisms)
    b.add_morphism(string_field(m, "id", path + "/morphisms"),
                   string_field(m, "src", path + "/morphisms"),
                   string_field(m, "dst", path + "/morphisms"));
  const json& identities = field(j, "identities", path);
  if (!identities.is_object())
    throw Error("SchemaError", "'identities' at " + path + " must be an object");
  for (auto it = identities.begin(); it != identities.end(); ++it) {
    if (!it.value().is_string())
      throw Error("SchemaError", "identity values must be strings at " + path);
    b.set_identity(it.key(), it.value().get<std::string>());
  }
  const json& compose = field(j, "compose", path);
  if (!compose.is_array())
    throw Error("SchemaError", "'compose' at " + path + " must be an array");
  for (const json& e : compose) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string() ||
        !e[2].is_string())
      throw Error("SchemaError", "compose entries at " + path + " must be [g, f, h] triples");
    b.set_compose(e[0].get<std::string>(), e[1].get<std::string>(), e[2].get<std::string>());
  }
  return std::move(b).build();
}

inline json category_to_json(const FinCategory& c) {
  json j;
  json objects = json::array();
  for (int x = 0; x < c.num_objects(); ++x) objects.push_back(c.object_name(x));
  j["objects"] = std::move(objects);
  json morphisms = json::array();
  for (int m = 0; m < c.num_morphisms(); ++m) {
    json rec;
    rec["id"] = c.morphism_name(m);
    rec["src"] = c.object_name(c.src(m));
    rec["dst"] = c.object_name(c.dst(m));
    morphisms.push_back(std::move(rec));
  }
  j["morphisms"] = std::move(morphisms);
  json identities;
  for (int x = 0; x < c.num_objects(); ++x)
    identities[c.object_name(x)] = c.morphism_name(c.identity(x));
  j["identities"] = std::move(identities);
  json compose = json::array();
  for (int g = 0; g < c.num_morphisms(); ++g)
    for (int f = 0; f < c.num_morphisms(); ++f)
      if (c.composable(g, f))
        compose.push_back(json::array({c.morphism_name(g), c.morphism_name(f),
                                       c.morphism_name(c.compose(g, f))}));
  j["compose"] = std::move(compose);
  return j;
}

inline std::vector<int> object_component_map(const json& j, const FinCategory& source,
                                             const FinCategory& target,
                                             const std::string& path) {
  if (!j.is_object()) throw Error("SchemaError", "expected an object map at " + path);
  std::vector<int> out(source.num_objects(), -1);
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_string())
      throw Error("SchemaError", "values at " + path + " must be strings");
    out[source.require_object(it.key())] = target.require_morphism(it.value().get<std::string>());
  }
  for (int x = 0; x < source.num_objects(); ++x)
    if (out[x] < 0)
      throw Error("SchemaError", "no component for object '" + source.object_name(x) +
                                     "' at " + path);
  return out;
}

inline Semifunctor semifunctor_from_json(const json& j, Context& ctx,
                                         const std::string& path) {
  CategoryPtr source = category_or_ref(field(j, "source", path), ctx, path + "/source");
  CategoryPtr target = category_or_ref(field(j, "target", path), ctx, path + "/target");
  const json& omap = field(j, "object_map", path);
  const json& mmap = field(j, "morphism_map", path);
  if (!omap.is_object() || !mmap.is_object())
    throw Error("SchemaError", "object_map/morphism_map at " + path + " must be objects");
  std::vector<int> obj(source->num_objects(), -1), mor(source->num_morphisms(), -1);
  for (auto it = omap.begin(); it != omap.end(); ++it)
    obj[source->require_object(it.key())] =
        target->require_object(it.value().get<std::string>());
  for (auto it = mmap.begin(); it != mmap.end(); ++it)
    mor[source->require_morphism(it.key())] =
        target->require_morphism(it.value().get<std::string>());
  for (int x = 0; x < source->num_objects(); ++x)
    if (obj[x] < 0)
      throw Error("SchemaError",
                  "object_map misses '" + source->object_name(x) + "' at " + path);
  for (int m = 0; m < source->num_morphisms(); ++m)
    if (mor[m] < 0)
      throw Error("SchemaError",
                  "morphism_map misses '" + source->morphism_name(m) + "' at " + path);
  return make_semifunctor(std::move(source), std::move(target), std::move(obj),
                          std::move(mor));
}

inline json semifunctor_to_json(const Semifunctor& f) {
  json j;
  j["source"] = category_to_json(*f.source);
  j["target"] = category_to_json(*f.target);
  json omap, mmap;
  for (int x = 0; x < f.source->num_objects(); ++x)
    omap[f.source->object_name(x)] = f.target->object_name(f.obj(x));
  for (int m = 0; m < f.source->num_morphisms(); ++m)
    mmap[f.source->morphism_name(m)] = f.target->morphism_name(f.mor(m));
  j["object_map"] = std::move(omap);
  j["morphism_map"] = std::move(mmap);
  return j;
}

inline Transformation transformation_from_json(const json& j, Context& ctx,
                                               const std::string& path) {
  Semifunctor from = semifunctor_from_json(field(j, "from", path), ctx, path + "/from");
  Semifunctor to = semifunctor_from_json(field(j, "to", path), ctx, path + "/to");
  std::vector<int> comps = object_component_map(field(j, "components", path),
                                                *from.source, *from.target,
                                                path + "/components");
  return make_transformation(std::move(from), std::move(to), std::move(comps));
}

inline json components_to_json(const FinCategory& source, const FinCategory& target,
                               const std::vector<int>& comps) {
  json j;
  for (int x = 0; x < source.num_objects(); ++x)
    j[source.object_name(x)] = target.morphism_name(comps[x]);
  return j.is_null() ? json::object() : j;
}

inline json transformation_to_json(const Transformation& t) {
  json j;
  j["from"] = semifunctor_to_json(t.from);
  j["to"] = semifunctor_to_json(t.to);
  j["components"] = components_to_json(*t.from.source, *t.from.target, t.components);
  return j;
}

inline SemiadjunctionData semiadjunction_from_json(const json& j, Context& ctx,
                                                   const std::string& path) {
  Semifunctor left = semifunctor_from_json(field(j, "F", path), ctx, path + "/F");
  Semifunctor right = semifunctor_from_json(field(j, "G", path), ctx, path + "/G");
  if (!same_category(left.source, right.target) ||
      !same_category(left.target, right.source))
    throw Error("SchemaError", "F and G at " + path + " do not form a cycle");
  std::vector<int> unit = object_component_map(field(j, "unit", path), *left.source,
                                               *left.source, path + "/unit");
  std::vector<int> counit = object_component_map(field(j, "counit", path), *right.source,
                                                 *right.source, path + "/counit");
  return SemiadjunctionData{std::move(left), std::move(right), std::move(unit),
                            std::move(counit)};
}

inline json semiadjunction_to_json(const SemiadjunctionData& a) {
  json j;
  j["F"] = semifunctor_to_json(a.left);
  j["G"] = semifunctor_to_json(a.right);
  j["unit"] = components_to_json(*a.left.source, *a.left.source, a.unit_components);
  j["counit"] = components_to_json(*a.right.source, *a.right.source, a.counit_components);
  return j;
}

inline IdemNatTransf idem_nat_from_json(const json& j, Context& ctx,
                                        const std::string& path) {
  CategoryPtr base = category_or_ref(field(j, "base", path), ctx, path + "/base");
  std::vector<int> comps =
      object_component_map(field(j, "components", path), *base, *base, path + "/components");
  return make_idem_nat_transf(std::move(base), std::move(comps));
}

inline json idem_nat_to_json(const IdemNatTransf& e) {
  json j;
  j["base"] = category_to_json(*e.base);
  j["components"] = components_to_json(*e.base, *e.base, e.components);
  return j;
}

inline PSolution p_solution_from_json(const json& j, Context& ctx, const std::string& path) {
  Semifunctor f = semifunctor_from_json(field(j, "functor", path), ctx, path + "/functor");
  std::string mode_str = string_field(j, "mode", path);
  auto mode = pmode_from_string(mode_str);
  if (!mode) throw Error("SchemaError", "unknown mode '" + mode_str + "' at " + path);
  CellTable cells(f);
  std::vector<int> assignment(cells.size(), -1);
  const json& rows = field(j, "assignment", path);
  if (!rows.is_object()) throw Error("SchemaError", "'assignment' at " + path + " must be an object");
  for (auto xit = rows.begin(); xit != rows.end(); ++xit) {
    int x = f.source->require_object(xit.key());
    for (auto yit = xit.value().begin(); yit != xit.value().end(); ++yit) {
      int y = f.source->require_object(yit.key());
      for (auto dit = yit.value().begin(); dit != yit.value().end(); ++dit) {
        int d = f.target->require_morphism(dit.key());
        if (f.target->src(d) != f.obj(x) || f.target->dst(d) != f.obj(y))
          throw Error("SchemaError", "cell '" + dit.key() + "' at " + path +
                                         " is not a morphism FX → FY");
        assignment[cells.cell(x, y, d)] =
            f.source->require_morphism(dit.value().get<std::string>());
      }
    }
  }
  for (int i = 0; i < cells.size(); ++i)
    if (assignment[i] < 0)
      throw Error("SchemaError", "assignment misses the cell for '" +
                                     f.target->morphism_name(cells.cell_mor(i)) + "'");
  return PSolution{std::move(f), *mode, std::move(assignment)};
}

inline json p_solution_to_json(const PSolution& p) {
  json j;
  j["functor"] = semifunctor_to_json(p.functor);
  j["mode"] = to_string(p.mode);
  CellTable cells(p.functor);
  json rows = json::object();
  for (int i = 0; i < cells.size(); ++i) {
    const std::string& x = p.functor.source->object_name(cells.cell_x(i));
    const std::string& y = p.functor.source->object_name(cells.cell_y(i));
    rows[x][y][p.functor.target->morphism_name(cells.cell_mor(i))] =
        p.functor.source->morphism_name(p.assignment[i]);
  }
  j["assignment"] = std::move(rows);
  return j;
}

}  // namespace detail

inline Document parse(const std::string& bytes,
                      const std::filesystem::path& base_dir = ".") {
  json j = detail::parse_json(bytes);
  Document doc;
  doc.kind = detail::string_field(j, "kind", "$");
  const json& version = detail::field(j, "version", "$");
  if (!version.is_number_integer())
    throw Error("SchemaError", "'version' must be an integer");
  doc.version = version.get<int>();
  if (doc.version != 1)
    throw Error("SchemaError", "unsupported version " + std::to_string(doc.version));
  detail::Context ctx{base_dir, {}};
  const json& payload = detail::field(j, "payload", "$");
  if (doc.kind == "category")
    doc.payload = detail::category_or_ref(payload, ctx, "$/payload");
  else if (doc.kind == "semifunctor")
    doc.payload = detail::semifunctor_from_json(payload, ctx, "$/payload");
  else if (doc.kind == "transformation")
    doc.payload = detail::transformation_from_json(payload, ctx, "$/payload");
  else if (doc.kind == "semiadjunction")
    doc.payload = detail::semiadjunction_from_json(payload, ctx, "$/payload");
  else if (doc.kind == "idem-nat")
    doc.payload = detail::idem_nat_from_json(payload, ctx, "$/payload");
  else if (doc.kind == "p-solution")
    doc.payload = detail::p_solution_from_json(payload, ctx, "$/payload");
  else
    throw Error("SchemaError", "unknown document kind '" + doc.kind + "'");
  return doc;
}

inline std::string render(const Document& doc) {
  json j;
  j["kind"] = doc.kind;
  j["version"] = doc.version;
  if (const auto* c = std::get_if<CategoryPtr>(&doc.payload))
    j["payload"] = detail::category_to_json(**c);
  else if (const auto* f = std::get_if<Semifunctor>(&doc.payload))
    j["payload"] = detail::semifunctor_to_json(*f);
  else if (const auto* t = std::get_if<Transformation>(&doc.payload))
    j["payload"] = detail::transformation_to_json(*t);
  else if (const auto* a = std::get_if<SemiadjunctionData>(&doc.payload))
    j["payload"] = detail::semiadjunction_to_json(*a);
  else if (const auto* e = std::get_if<IdemNatTransf>(&doc.payload))
    j["payload"] = detail::idem_nat_to_json(*e);
  else if (const auto* p = std::get_if<PSolution>(&doc.payload))
    j["payload"] = detail::p_solution_to_json(*p);
  return j.dump(2) + "\n";
}

inline Document make_document(CategoryPtr c) { return {"category", 1, std::move(c)}; }
inline Document make_document(Semifunctor f) { return {"semifunctor", 1, std::move(f)}; }
inline Document make_document(Transformation t) { return {"transformation", 1, std::move(t)}; }
inline Document make_document(SemiadjunctionData a) { return {"semiadjunction", 1, std::move(a)}; }
inline Document make_document(const Semiadjunction& a) {
  return {"semiadjunction", 1,
          SemiadjunctionData{a.left, a.right, a.unit.components, a.counit.components}};
}
inline Document make_document(IdemNatTransf e) { return {"idem-nat", 1, std::move(e)}; }
inline Document make_document(PSolution p) { return {"p-solution", 1, std::move(p)}; }

inline Document load_file(const std::filesystem::path& path) {
  return parse(detail::read_file(path), path.parent_path());
}

inline void save_file(const Document& doc, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("ParseError", "cannot write file '" + path.string() + "'");
  out << render(doc);
}

inline bool document_equal(const Document& a, const Document& b) {
  if (a.kind != b.kind || a.version != b.version) return false;
  if (a.payload.index() != b.payload.index()) return false;
  if (const auto* c = std::get_if<CategoryPtr>(&a.payload))
    return (*c)->structurally_equal(*std::get<CategoryPtr>(b.payload));
  if (const auto* f = std::get_if<Semifunctor>(&a.payload))
    return *f == std::get<Semifunctor>(b.payload);
  if (const auto* t = std::get_if<Transformation>(&a.payload))
    return *t == std::get<Transformation>(b.payload);
  if (const auto* s = std::get_if<SemiadjunctionData>(&a.payload))
    return *s == std::get<SemiadjunctionData>(b.payload);
  if (const auto* e = std::get_if<IdemNatTransf>(&a.payload))
    return *e == std::get<IdemNatTransf>(b.payload);
  if (const auto* p = std::get_if<PSolution>(&a.payload))
    return *p == std::get<PSolution>(b.payload);
  return false;
}

}  // namespace semicat::io
