// Command-line front end: enumeration tables, Hall products, classification,
// verification suites, DOT/CSV/JSON output.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "f1rep/colored.hpp"
#include "f1rep/corr.hpp"
#include "f1rep/enumerate.hpp"
#include "f1rep/hall.hpp"
#include "f1rep/json_io.hpp"
#include "f1rep/verify.hpp"

using nlohmann::json;

namespace {

struct OutputSink {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    os << text;
  }
};

std::string slurp(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

f1rep::Representation parse_rep_arg(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') text = slurp(arg.substr(1));
  return json::parse(text).get<f1rep::Representation>();
}

void warn_large(int n) {
  if (n > 8) {
    std::cerr << "warning: dimension bound " << n
              << " exceeds 8; enumeration cost grows exponentially\n";
  }
}

json rep_to_json(const f1rep::Representation& r) {
  json j = r;
  return j;
}

json report_to_json(const f1rep::verify::Report& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return json{{"suite", rep.suite},
              {"pass", rep.pass()},
              {"checks", checks},
              {"notes", rep.notes}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with quiver representations over F1"};
  app.require_subcommand(1);

  // accepted for compatibility with scripted runs; execution is sequential
  // and deterministic regardless
  if (const char* threads = std::getenv("F1REP_THREADS")) {
    (void)threads;
  }

  std::string quiver_name = "L1";
  std::string out_path;
  std::string format;
  int max_dim = 6;
  int dim_cap = 6;

  auto add_common = [&](CLI::App* cmd, bool with_max) {
    cmd->add_option("--out", out_path, "write output to a file");
    if (with_max) cmd->add_option("--max", max_dim, "dimension bound");
  };

  auto* cmd_enum = app.add_subcommand("enumerate", "iso classes up to a dimension");
  cmd_enum->add_option("--quiver", quiver_name, "built-in quiver name");
  bool include_all = false;
  cmd_enum->add_flag("--all", include_all, "include non-nilpotent classes");
  add_common(cmd_enum, true);

  auto* cmd_ni = app.add_subcommand("ni-table", "growth table NI_Q / I_Q");
  cmd_ni->add_option("--quiver", quiver_name);
  cmd_ni->add_option("--format", format, "csv (default) or json");
  add_common(cmd_ni, true);

  auto* cmd_ind = app.add_subcommand("indecomposables",
                                     "indecomposable nilpotent classes");
  cmd_ind->add_option("--quiver", quiver_name);
  add_common(cmd_ind, true);

  auto* cmd_mul = app.add_subcommand("hall-mul", "Hall product of two classes");
  std::string arg_x, arg_y;
  cmd_mul->add_option("--quiver", quiver_name);
  cmd_mul->add_option("--dim-cap", dim_cap, "iso-class table cap");
  cmd_mul->add_option("x", arg_x, "class key (hex) or representation JSON")->required();
  cmd_mul->add_option("y", arg_y, "class key (hex) or representation JSON")->required();
  add_common(cmd_mul, false);

  auto* cmd_comul = app.add_subcommand("hall-comul", "Hall coproduct of a class");
  cmd_comul->add_option("--quiver", quiver_name);
  cmd_comul->add_option("--dim-cap", dim_cap);
  cmd_comul->add_option("x", arg_x, "class key (hex) or representation JSON")->required();
  add_common(cmd_comul, false);

  auto* cmd_classify = app.add_subcommand("classify", "tree / cycle / pseudotree");
  cmd_classify->add_option("--quiver", quiver_name);
  add_common(cmd_classify, false);

  auto* cmd_reduce = app.add_subcommand("reduce", "loop reduction L_n -> L_{n-1}");
  std::string rep_arg;
  cmd_reduce->add_option("--rep", rep_arg, "representation JSON or @file")->required();
  add_common(cmd_reduce, false);

  auto* cmd_embed = app.add_subcommand("embed", "embeddings into loop quivers");
  std::string embed_kind = "loops";
  std::string target_name;
  cmd_embed->add_option("--rep", rep_arg, "representation JSON or @file")->required();
  cmd_embed->add_option("--kind", embed_kind, "loops (default) or rank2");
  cmd_embed->add_option("--target", target_name, "target quiver for rank2");
  add_common(cmd_embed, false);

  auto* cmd_skew = app.add_subcommand("skew", "skew shapes and the L_n correspondence");
  int skew_n = 2, skew_cells = -1;
  std::string shape_arg;
  cmd_skew->add_option("--n", skew_n, "ambient dimension");
  cmd_skew->add_option("--cells", skew_cells, "enumerate shapes with this many cells");
  cmd_skew->add_option("--shape", shape_arg, "shape JSON or @file: convert to a representation");
  cmd_skew->add_option("--rep", rep_arg, "representation JSON or @file: convert to a shape");
  cmd_skew->add_option("--format", format, "json (default) or ascii");
  add_common(cmd_skew, false);

  auto* cmd_verify = app.add_subcommand("verify", "named verification suites");
  std::string suite;
  bool list_suites = false;
  cmd_verify->add_option("--suite", suite, "suite name");
  cmd_verify->add_flag("--list", list_suites, "list suite names");
  cmd_verify->add_option("--quiver", quiver_name);
  cmd_verify->add_option("--dim-cap", dim_cap);
  add_common(cmd_verify, true);

  auto* cmd_dot = app.add_subcommand("dot", "DOT export of a colored quiver");
  bool dot_quiver_only = false;
  cmd_dot->add_option("--rep", rep_arg, "representation JSON or @file");
  cmd_dot->add_flag("--quiver-only", dot_quiver_only, "print the base quiver instead");
  cmd_dot->add_option("--quiver", quiver_name);
  add_common(cmd_dot, false);

  bool quiver_given_defaulted = true;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  (void)quiver_given_defaulted;

  OutputSink out{out_path};
  try {
    if (cmd_enum->parsed()) {
      warn_large(max_dim);
      f1rep::Quiver q = f1rep::verify::named_quiver(quiver_name);
      auto table = f1rep::build_iso_table(q, max_dim, !include_all);
      json classes = json::object();
      for (const auto& [t, entries] : table.by_dim) {
        for (const auto& e : entries) {
          classes[f1rep::key_hex(e.key)] = {{"dim", t},
                                            {"dims", e.rep.dims},
                                            {"indecomposable", e.indecomposable},
                                            {"nilpotent", e.nilpotent},
                                            {"rep", rep_to_json(e.rep)}};
        }
      }
      out.write(dump(json{{"quiver", q}, {"classes", classes}}));
    } else if (cmd_ni->parsed()) {
      warn_large(max_dim);
      f1rep::Quiver q = f1rep::verify::named_quiver(quiver_name);
      if (format == "json") {
        json rows = json::array();
        for (int n = 1; n <= max_dim; ++n) {
          rows.push_back({{"quiver", quiver_name},
                          {"n", n},
                          {"NI", f1rep::ni(q, n)},
                          {"I", f1rep::i_growth(q, n)}});
        }
        out.write(dump(rows));
      } else {
        std::ostringstream os;
        os << "quiver,n,NI,I\n";
        for (int n = 1; n <= max_dim; ++n) {
          os << quiver_name << "," << n << "," << f1rep::ni(q, n) << ","
             << f1rep::i_growth(q, n) << "\n";
        }
        out.write(os.str());
      }
    } else if (cmd_ind->parsed()) {
      warn_large(max_dim);
      f1rep::Quiver q = f1rep::verify::named_quiver(quiver_name);
      json classes = json::object();
      for (int t = 1; t <= max_dim; ++t) {
        for (const auto& d : f1rep::compositions(t, q.num_vertices)) {
          for (const auto& e : f1rep::enumerate_classes(q, d, true)) {
            if (!e.indecomposable) continue;
            classes[f1rep::key_hex(e.key)] = {{"dim", t},
                                              {"dims", e.rep.dims},
                                              {"rep", rep_to_json(e.rep)}};
          }
        }
      }
      out.write(dump(json{{"quiver", q}, {"classes", classes}}));
    } else if (cmd_mul->parsed() || cmd_comul->parsed()) {
      warn_large(dim_cap);
      f1rep::Quiver q = f1rep::verify::named_quiver(quiver_name);
      f1rep::HallAlgebra H(q, dim_cap);
      auto resolve = [&](const std::string& arg) -> f1rep::IsoClass {
        if (!arg.empty() && (arg[0] == '{' || arg[0] == '@')) {
          return H.class_of(parse_rep_arg(arg));
        }
        for (int t = 0; t <= dim_cap; ++t) {
          for (const auto& e : H.classes(t)) {
            if (f1rep::key_hex(e.key) == arg) return {e.key, e.rep};
          }
        }
        throw std::runtime_error("unknown iso-class key: " + arg);
      };
      if (cmd_mul->parsed()) {
        auto x = resolve(arg_x), y = resolve(arg_y);
        json result = json::object();
        for (const auto& [k, c] : H.product(H.delta(x), H.delta(y))) {
          result[f1rep::key_hex(k)] = c.str();
        }
        out.write(dump(result));
      } else {
        auto x = resolve(arg_x);
        json result = json::object();
        for (const auto& [pr, c] : H.coproduct(H.delta(x))) {
          result[f1rep::key_hex(pr.first) + ":" + f1rep::key_hex(pr.second)] = c.str();
        }
        out.write(dump(result));
      }
    } else if (cmd_classify->parsed()) {
      f1rep::Quiver q = f1rep::verify::named_quiver(quiver_name);
      auto shape = f1rep::classify(q);
      out.write(dump(json{{"quiver", quiver_name},
                          {"tag", f1rep::shape_tag_name(shape.tag)},
                          {"cycle_rank", shape.cycle_rank}}));
    } else if (cmd_reduce->parsed()) {
      auto m = parse_rep_arg(rep_arg);
      out.write(dump(rep_to_json(f1rep::f_reduce(m))));
    } else if (cmd_embed->parsed()) {
      auto m = parse_rep_arg(rep_arg);
      if (embed_kind == "loops") {
        out.write(dump(rep_to_json(f1rep::embed_loops(m))));
      } else if (embed_kind == "rank2") {
        if (target_name.empty()) {
          throw std::runtime_error("--target is required for --kind rank2");
        }
        f1rep::Quiver target = f1rep::verify::named_quiver(target_name);
        out.write(dump(rep_to_json(f1rep::embed_rank2(m, target))));
      } else {
        throw std::runtime_error("unknown embed kind: " + embed_kind);
      }
    } else if (cmd_skew->parsed()) {
      if (!shape_arg.empty()) {
        std::string text = shape_arg[0] == '@' ? slurp(shape_arg.substr(1)) : shape_arg;
        auto s = json::parse(text).get<f1rep::SkewShape>();
        out.write(dump(rep_to_json(f1rep::shape_to_rep(s))));
      } else if (!rep_arg.empty()) {
        auto r = parse_rep_arg(rep_arg);
        auto s = f1rep::rep_to_shape(r);
        if (format == "ascii") {
          out.write(f1rep::shape_ascii(s));
        } else {
          out.write(dump(json(s)));
        }
      } else {
        if (skew_cells <= 0) {
          throw std::runtime_error("skew: pass --cells, --shape, or --rep");
        }
        auto shapes = f1rep::enumerate_shapes(skew_n, skew_cells);
        if (format == "ascii") {
          std::ostringstream os;
          for (const auto& s : shapes) os << f1rep::shape_ascii(s) << "\n";
          out.write(os.str());
        } else {
          out.write(dump(json(shapes)));
        }
      }
    } else if (cmd_verify->parsed()) {
      if (list_suites) {
        json names = f1rep::verify::suite_names();
        out.write(dump(names));
        return 0;
      }
      if (suite.empty()) throw std::runtime_error("verify: --suite is required");
      f1rep::verify::SuiteParams params;
      if (cmd_verify->count("--quiver") > 0) params.quiver = quiver_name;
      if (cmd_verify->count("--max") > 0) params.max = max_dim;
      if (cmd_verify->count("--dim-cap") > 0) params.dim_cap = dim_cap;
      auto report = f1rep::verify::run_suite(suite, params);
      out.write(dump(report_to_json(report)));
      return report.pass() ? 0 : 1;
    } else if (cmd_dot->parsed()) {
      if (dot_quiver_only || rep_arg.empty()) {
        f1rep::Quiver q = f1rep::verify::named_quiver(quiver_name);
        out.write(f1rep::to_dot(q));
      } else {
        auto r = parse_rep_arg(rep_arg);
        out.write(f1rep::to_dot(f1rep::gamma_of(r)));
      }
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
