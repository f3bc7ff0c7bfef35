#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semicat/coident.hpp"
#include "semicat/completion.hpp"
#include "semicat/gallery.hpp"
#include "semicat/io.hpp"
#include "semicat/morphprop.hpp"
#include "semicat/props.hpp"
#include "semicat/semiadj.hpp"

namespace {

using namespace semicat;
using nlohmann::json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

io::Document load_doc(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return io::parse(ss.str(), std::filesystem::current_path());
  }
  return io::load_file(path);
}

void save_doc(const io::Document& doc, const std::string& path) {
  if (path == "-")
    std::cout << io::render(doc);
  else
    io::save_file(doc, path);
}

json doc_json(const io::Document& doc) { return json::parse(io::render(doc)); }

const Semifunctor& as_semifunctor(const io::Document& doc) {
  if (const auto* f = std::get_if<Semifunctor>(&doc.payload)) return *f;
  throw Error("SchemaError", "expected a semifunctor document, got '" + doc.kind + "'");
}
CategoryPtr as_category(const io::Document& doc) {
  if (const auto* c = std::get_if<CategoryPtr>(&doc.payload)) return *c;
  throw Error("SchemaError", "expected a category document, got '" + doc.kind + "'");
}
const Transformation& as_transformation(const io::Document& doc) {
  if (const auto* t = std::get_if<Transformation>(&doc.payload)) return *t;
  throw Error("SchemaError", "expected a transformation document, got '" + doc.kind + "'");
}
const SemiadjunctionData& as_semiadjunction(const io::Document& doc) {
  if (const auto* a = std::get_if<SemiadjunctionData>(&doc.payload)) return *a;
  throw Error("SchemaError", "expected a semiadjunction document, got '" + doc.kind + "'");
}
const IdemNatTransf& as_idem_nat(const io::Document& doc) {
  if (const auto* e = std::get_if<IdemNatTransf>(&doc.payload)) return *e;
  throw Error("SchemaError", "expected an idem-nat document, got '" + doc.kind + "'");
}

void emit(const json& verdict, bool as_json) {
  if (as_json) {
    std::cout << verdict.dump(2) << "\n";
    return;
  }
  std::cout << verdict.at("check").get<std::string>() << ": "
            << (verdict.at("verdict").get<bool>() ? "true" : "false") << "\n";
}

json semifull_witness_json(const Semifunctor& f, const SemifullReport& report) {
  CellTable cells(f);
  json rows = json::object();
  for (int i = 0; i < cells.size(); ++i) {
    const std::string& x = f.source->object_name(cells.cell_x(i));
    const std::string& y = f.source->object_name(cells.cell_y(i));
    rows[x][y][f.target->morphism_name(cells.cell_mor(i))] =
        f.source->morphism_name(report.witness[i]);
  }
  return rows;
}

int run_property_check(const std::string& property, const Semifunctor& f, bool as_json) {
  json verdict;
  verdict["check"] = property;
  bool value = false;
  if (property == "faithful" || property == "sff") {
    bool faithful = is_faithful(f);
    if (faithful && property == "faithful") {
      long pairs = 0;
      for (int x = 0; x < f.source->num_objects(); ++x)
        for (int y = 0; y < f.source->num_objects(); ++y) {
          long n = static_cast<long>(f.source->hom(x, y).size());
          pairs += n * (n - 1) / 2;
        }
      verdict["witness"] = {{"exhaustive", true}, {"pairs_checked", pairs}};
    }
    if (!faithful) {
      const FinCategory& c = *f.source;
      for (int x = 0; x < c.num_objects(); ++x)
        for (int y = 0; y < c.num_objects(); ++y) {
          const std::vector<int>& hom = c.hom(x, y);
          for (std::size_t i = 0; i < hom.size(); ++i)
            for (std::size_t j = i + 1; j < hom.size(); ++j)
              if (f.mor(hom[i]) == f.mor(hom[j]) && !verdict.contains("counterexample"))
                verdict["counterexample"] = {
                    {"f", c.morphism_name(hom[i])},
                    {"g", c.morphism_name(hom[j])},
                    {"image", f.target->morphism_name(f.mor(hom[i]))}};
        }
    }
    value = faithful;
  }
  if (property == "full") {
    value = is_full(f);
    if (value) {
      long cells = 0;
      for (int x = 0; x < f.source->num_objects(); ++x)
        for (int y = 0; y < f.source->num_objects(); ++y)
          cells += static_cast<long>(f.target->hom(f.obj(x), f.obj(y)).size());
      verdict["witness"] = {{"exhaustive", true}, {"cells_checked", cells}};
    }
    if (!value) {
      const FinCategory& c = *f.source;
      for (int x = 0; x < c.num_objects() && !verdict.contains("counterexample"); ++x)
        for (int y = 0; y < c.num_objects() && !verdict.contains("counterexample"); ++y)
          for (int m : f.target->hom(f.obj(x), f.obj(y))) {
            bool hit = false;
            for (int g : c.hom(x, y)) hit |= f.mor(g) == m;
            if (!hit) {
              verdict["counterexample"] = {{"X", c.object_name(x)},
                                           {"Y", c.object_name(y)},
                                           {"morphism", f.target->morphism_name(m)}};
              break;
            }
          }
    }
  }
  if (property == "semifull" || property == "sff") {
    SemifullReport report = semifull_report(f);
    if (report.semifull)
      verdict["witness"] = semifull_witness_json(f, report);
    if (!report.semifull)
      verdict["counterexample"] = {
          {"X", f.source->object_name(report.failing_x)},
          {"Y", f.source->object_name(report.failing_y)},
          {"morphism", f.target->morphism_name(report.failing_mor)}};
    value = property == "sff" ? value && report.semifull : report.semifull;
  }
  if (property == "separable" || property == "naturally-semifull" ||
      property == "semiseparable") {
    PMode mode = *pmode_from_string(property);
    auto p = solve_P(f, mode);
    value = p.has_value();
    if (p) verdict["witness"] = doc_json(io::make_document(*p));
  }
  verdict["verdict"] = value;
  emit(verdict, as_json);
  return value ? kExitTrue : kExitFalse;
}

void export_fixture(const io::Document& doc, const std::filesystem::path& dir,
                    const std::string& name) {
  io::save_file(doc, dir / (name + ".semicat.json"));
}

void gallery_export(const std::string& out_dir) {
  std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  CategoryPtr w = gallery::walking_idempotent();
  CategoryPtr m3 = gallery::monoid_m3();
  export_fixture(io::make_document(m3), dir, "monoid_m3");
  export_fixture(io::make_document(w), dir, "walking_idempotent");
  export_fixture(io::make_document(gallery::mat2_z2()), dir, "mat2_z2");
  Semifunctor fe = gallery::monoid_fe();
  export_fixture(io::make_document(fe), dir, "monoid_fe");
  export_fixture(io::make_document(gallery::matrix_e11()), dir, "matrix_e11");
  export_fixture(io::make_document(gallery::product_ring_z()), dir, "product_ring_z");
  IdemNatTransf u = make_idem_nat_transf(w, {w->require_morphism("u")});
  export_fixture(io::make_document(u), dir, "idem_u_on_w");
  Semifunctor eu = canonical_E(u);
  export_fixture(io::make_document(eu), dir, "ee_on_w");
  export_fixture(io::make_document(constant_semifunctor(m3, m3->require_morphism("e"),
                                                        terminal_category())),
                 dir, "constant_fe");
  export_fixture(io::make_document(make_transformation(eu, eu, {w->require_morphism("u")})),
                 dir, "alpha_u_on_w");
  export_fixture(io::make_document(self_semiadjunction(u)), dir, "adj_ee_on_w");
  Completion comp = idempotent_completion(w);
  export_fixture(io::make_document(upsilon(comp)), dir, "upsilon_w");
  export_fixture(io::make_document(*solve_P(fe, PMode::Separable)), dir,
                 "psolution_fe_separable");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-category toolkit for semifunctors and semiadjunctions"};
  app.require_subcommand(1);
  bool as_json = false;
  int threads = 1;
  app.add_flag("--json", as_json, "emit machine-readable verdicts on stdout");
  app.add_option("--threads", threads, "worker threads for witness searches")
      ->default_val(1);

  std::string file, other_file, out_path = "-", obj_name, obj2_name, mor_name, pred;
  std::string mode_name, side_name, entry_name;
  int completion_cap = 5000;
  int max_set_size = 2;

  auto* validate = app.add_subcommand("validate", "parse and validate any document");
  validate->add_option("file", file, "document path or - for stdin")->required();

  auto* check = app.add_subcommand("check", "decide a property and print evidence");
  check->add_option("what", pred,
                    "faithful|full|semifull|separable|naturally-semifull|semiseparable|"
                    "sff|semi-iso|morphism")
      ->required();
  check->add_option("-F,--semifunctor", file, "semifunctor document");
  check->add_option("-T,--transformation", other_file, "transformation document");
  std::string second_sf, check_pred;
  check->add_option("--other", second_sf, "second semifunctor (morphism checks)");
  check->add_option("-C,--obj", obj_name, "source object C");
  check->add_option("--c2", obj2_name, "source object C' (defaults to C)");
  check->add_option("--mor", mor_name, "target morphism id");
  check->add_option("--pred", check_pred, "semisplit-mono|semisplit-epi|semi-iso");

  auto* solvep = app.add_subcommand("solve-p", "search the natural family P");
  solvep->add_option("-F,--semifunctor", file)->required();
  solvep->add_option("--mode", mode_name, "separable|nat-semifull|semisep")->required();
  solvep->add_option("-o,--out", out_path, "write the p-solution document here");

  auto* complete = app.add_subcommand("complete", "idempotent completion of a category");
  complete->add_option("-C,--category", file)->required();
  complete->add_option("-o,--out", out_path)->required();
  complete->add_option("--completion-cap", completion_cap)->default_val(5000);

  auto* coident_cmd = app.add_subcommand("coident", "coidentifier category with H and L");
  coident_cmd->add_option("-C,--category", file)->required();
  coident_cmd->add_option("-E,--idem", other_file, "idem-nat document")->required();
  coident_cmd->add_option("-o,--out", out_path, "output directory")->required();

  auto* adj = app.add_subcommand("adj", "semiadjunction operations");
  adj->require_subcommand(1);
  auto* adj_validate = adj->add_subcommand("validate", "check the semitriangular identities");
  adj_validate->add_option("-A,--adjunction", file)->required();
  auto* adj_compose = adj->add_subcommand("compose", "compose two semiadjunctions");
  adj_compose->add_option("-A,--first", file)->required();
  adj_compose->add_option("-B,--second", other_file)->required();
  adj_compose->add_option("-o,--out", out_path);
  auto* adj_promote = adj->add_subcommand("promote", "promote one-sided semiadjoint data");
  adj_promote->add_option("-A,--adjunction", file)->required();
  adj_promote->add_option("--side", side_name, "left|right")->required();
  adj_promote->add_option("-o,--out", out_path);

  auto* rafael_cmd = app.add_subcommand("rafael", "Rafael-type witness search");
  rafael_cmd->add_option("-A,--adjunction", file)->required();
  rafael_cmd->add_option("--side", side_name, "left|right")->required();
  rafael_cmd->add_option("--mode", mode_name, "separable|nat-semifull|semisep")->required();
  rafael_cmd->add_option("-o,--out", out_path, "write the induced p-solution here");

  auto* gal = app.add_subcommand("gallery", "built-in example catalogue");
  gal->require_subcommand(1);
  gal->add_subcommand("list", "list entry names");
  auto* gal_run = gal->add_subcommand("run", "run expectations");
  gal_run->add_option("entry", entry_name, "run a single entry");
  gal_run->add_option("--max-set-size", max_set_size)->default_val(2);
  auto* gal_export = gal->add_subcommand("export", "write fixture documents");
  gal_export->add_option("-o,--out", out_path, "output directory")->required();

  auto* enumerate = app.add_subcommand("enumerate",
                                       "enumerate seminatural transformations F → F'");
  enumerate->add_option("-F,--from", file)->required();
  enumerate->add_option("-T,--to", other_file)->required();

  // Allow --json/--threads to appear after the subcommand as well.
  for (CLI::App* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (CLI::App* nested : sub->get_subcommands({})) nested->fallthrough();
  }

  try {
    app.parse(argc, argv);

    if (*validate) {
      io::Document doc = load_doc(file);
      if (const auto* a = std::get_if<SemiadjunctionData>(&doc.payload))
        validate_semiadjunction(*a);
      std::cout << doc.kind << ": ok\n";
      return kExitTrue;
    }

    if (*check) {
      if (pred == "semi-iso") {
        Transformation alpha = as_transformation(load_doc(other_file.empty() ? file : other_file));
        json verdict;
        verdict["check"] = "semi-iso";
        auto inv = find_semi_inverse(alpha, threads);
        verdict["verdict"] = inv.has_value();
        if (inv) verdict["witness"] = doc_json(io::make_document(*inv));
        emit(verdict, as_json);
        return inv ? kExitTrue : kExitFalse;
      }
      if (pred == "morphism") {
        io::Document fdoc = load_doc(file);
        const Semifunctor& f = as_semifunctor(fdoc);
        Semifunctor g = second_sf.empty() ? f : as_semifunctor(load_doc(second_sf));
        if (!same_category(f.target, g.target))
          throw Error("ShapeMismatch", "the two semifunctors must share their target");
        int c = f.source->require_object(obj_name);
        int c2 = obj2_name.empty() ? g.source->require_object(obj_name)
                                   : g.source->require_object(obj2_name);
        int m = f.target->require_morphism(mor_name);
        std::optional<int> witness;
        if (check_pred == "semisplit-mono")
          witness = cc_semisplit_mono_witness(f, c, g, c2, m);
        else if (check_pred == "semisplit-epi")
          witness = cc_semisplit_epi_witness(f, c, g, c2, m);
        else if (check_pred == "semi-iso")
          witness = cc_semi_isomorphism(f, c, g, c2, m);
        else
          throw Error("UsageError", "unknown --pred '" + check_pred + "'");
        json verdict;
        verdict["check"] = "morphism " + check_pred;
        verdict["verdict"] = witness.has_value();
        if (witness) verdict["witness"] = f.target->morphism_name(*witness);
        emit(verdict, as_json);
        return witness ? kExitTrue : kExitFalse;
      }
      static const std::vector<std::string> props{"faithful",           "full",
                                                  "semifull",           "separable",
                                                  "naturally-semifull", "semiseparable",
                                                  "sff"};
      if (std::find(props.begin(), props.end(), pred) == props.end())
        throw Error("UsageError", "unknown check '" + pred + "'");
      return run_property_check(pred, as_semifunctor(load_doc(file)), as_json);
    }

    if (*solvep) {
      auto mode = pmode_from_string(mode_name);
      if (!mode) throw Error("UsageError", "unknown mode '" + mode_name + "'");
      Semifunctor f = as_semifunctor(load_doc(file));
      auto p = solve_P(f, *mode);
      json verdict;
      verdict["check"] = std::string("solve-p ") + to_string(*mode);
      verdict["verdict"] = p.has_value();
      if (p) {
        io::Document doc = io::make_document(*p);
        verdict["witness"] = doc_json(doc);
        if (out_path != "-") save_doc(doc, out_path);
      }
      emit(verdict, as_json);
      return p ? kExitTrue : kExitFalse;
    }

    if (*complete) {
      CategoryPtr c = as_category(load_doc(file));
      Completion comp = idempotent_completion(c, completion_cap);
      save_doc(io::make_document(comp.category), out_path);
      return kExitTrue;
    }

    if (*coident_cmd) {
      CategoryPtr c = as_category(load_doc(file));
      IdemNatTransf e = as_idem_nat(load_doc(other_file));
      if (!same_category(c, e.base))
        throw Error("ShapeMismatch", "idempotent transformation is not on the given category");
      IdemNatTransf on_c = make_idem_nat_transf(c, e.components);
      Coidentifier coid = coidentifier(c, on_c);
      std::filesystem::path dir(out_path);
      std::filesystem::create_directories(dir);
      io::save_file(io::make_document(coid.category), dir / "coidentifier.semicat.json");
      io::save_file(io::make_document(coid.projection), dir / "projection.semicat.json");
      io::save_file(io::make_document(coid.section), dir / "section.semicat.json");
      return kExitTrue;
    }

    if (*adj_validate) {
      validate_semiadjunction(as_semiadjunction(load_doc(file)));
      std::cout << "semiadjunction: ok\n";
      return kExitTrue;
    }
    if (*adj_compose) {
      Semiadjunction a = validate_semiadjunction(as_semiadjunction(load_doc(file)));
      Semiadjunction b = validate_semiadjunction(as_semiadjunction(load_doc(other_file)));
      save_doc(io::make_document(compose_semiadjunctions(a, b)), out_path);
      return kExitTrue;
    }
    if (*adj_promote) {
      SemiadjunctionData data = as_semiadjunction(load_doc(file));
      Semiadjunction promoted = side_name == "right" ? promote_right_semiadjoint(data)
                              : side_name == "left"  ? promote_left_semiadjoint(data)
                                                     : throw Error("UsageError",
                                                                   "--side must be left or right");
      save_doc(io::make_document(promoted), out_path);
      return kExitTrue;
    }

    if (*rafael_cmd) {
      auto mode = pmode_from_string(mode_name);
      if (!mode) throw Error("UsageError", "unknown mode '" + mode_name + "'");
      AdjSide side = side_name == "left"    ? AdjSide::Left
                     : side_name == "right" ? AdjSide::Right
                                            : throw Error("UsageError",
                                                          "--side must be left or right");
      Semiadjunction a = validate_semiadjunction(as_semiadjunction(load_doc(file)));
      auto witness = rafael(a, side, *mode, threads);
      json verdict;
      verdict["check"] = "rafael " + side_name + " " + to_string(*mode);
      verdict["verdict"] = witness.has_value();
      if (witness) {
        verdict["nu"] = doc_json(io::make_document(witness->nu));
        io::Document pdoc = io::make_document(witness->p);
        verdict["p"] = doc_json(pdoc);
        if (out_path != "-") save_doc(pdoc, out_path);
      }
      emit(verdict, as_json);
      return witness ? kExitTrue : kExitFalse;
    }

    if (*gal) {
      if (gal->get_subcommand("list")->parsed()) {
        for (const std::string& name : gallery::entry_names()) std::cout << name << "\n";
        return kExitTrue;
      }
      if (gal_run->parsed()) {
        std::vector<std::string> selection;
        if (!entry_name.empty()) selection.push_back(entry_name);
        gallery::Report report = gallery::run_all(selection, max_set_size);
        for (const auto& r : report.results)
          std::cout << (r.pass ? "[ ok ] " : "[FAIL] ") << r.entry << " :: " << r.label
                    << (r.pass ? "" : " (expected " + std::to_string(r.expected) +
                                          ", got " + std::to_string(r.actual) + ")")
                    << "\n";
        std::cout << report.results.size() << " checks, " << report.failures
                  << " failures\n";
        return report.failures == 0 ? kExitTrue : kExitFalse;
      }
      gallery_export(out_path);
      return kExitTrue;
    }

    if (*enumerate) {
      Semifunctor from = as_semifunctor(load_doc(file));
      Semifunctor to = as_semifunctor(load_doc(other_file));
      auto all = enumerate_seminatural(from, to);
      json verdict;
      verdict["check"] = "enumerate seminatural";
      verdict["verdict"] = !all.empty();
      json list = json::array();
      for (const Transformation& t : all)
        list.push_back(doc_json(io::make_document(t))["payload"]["components"]);
      verdict["witness"] = {{"count", all.size()}, {"transformations", list}};
      emit(verdict, as_json);
      return kExitTrue;
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitTrue : kExitUsage;
  } catch (const Error& e) {
    std::cerr << "semicat: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "semicat: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
