// Copyright 2026 The qindex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qindex: command-line front end.
//
// Exit codes: 0 pass, 1 claim failure, 2 invalid input, 3 non-convergence.

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qindex/charpoly.hpp"
#include "qindex/config.hpp"
#include "qindex/enumerate.hpp"
#include "qindex/error.hpp"
#include "qindex/families.hpp"
#include "qindex/json_io.hpp"
#include "qindex/spectral.hpp"
#include "qindex/verify.hpp"

namespace {

using namespace qindex;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNonConvergence = 3;

// Options shared by every subcommand. Unset optionals leave the config
// file (or default) value in place.
struct Common {
  std::string config_path;
  std::optional<double> tol;
  std::optional<long> max_iter;
  std::optional<double> band;
  std::optional<int> workers;
  bool stamp = false;
  bool timing = false;
};

struct Shape {
  std::string family;
  int n = 0;
  int p = 0;
  int q = 0;
};

RunConfig resolve(const Common& c) {
  RunConfig cfg;
  if (!c.config_path.empty()) cfg = load_config_file(c.config_path, cfg);
  cfg = apply_environment(cfg);
  if (c.tol) cfg.tol = *c.tol;
  if (c.max_iter) cfg.max_iter = *c.max_iter;
  if (c.band) cfg.band_multiplier = *c.band;
  if (c.workers) cfg.workers = *c.workers;
  cfg.validate();
  return cfg;
}

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--config", c.config_path, "key = value config file");
  cmd->add_option("--tol", c.tol, "power iteration tolerance (default 1e-10)");
  cmd->add_option("--max-iter", c.max_iter, "power iteration cap (default 1000000)");
  cmd->add_option("--band", c.band, "equality band multiplier (default 10)");
  cmd->add_option("--workers", c.workers, "worker threads, 0 for all");
  cmd->add_flag("--stamp", c.stamp, "record a UTC timestamp in certificates");
  cmd->add_flag("--timing", c.timing, "include runtime in reports");
}

void add_shape(CLI::App* cmd, Shape& s) {
  cmd->add_option("--n", s.n, "order");
  cmd->add_option("--p", s.p, "size of V_p");
  cmd->add_option("--q", s.q, "size of V_q");
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << text;
}

std::pair<Digraph, std::optional<Bipartition>> load_digraph(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw InvalidInput("'" + path + "' is not JSON: " + e.what());
  }
  return digraph_from_json(doc);
}

// Digraph from --input or from a family shape.
std::pair<Digraph, std::optional<Bipartition>> source(const std::string& input, const Shape& s) {
  if (!input.empty()) return load_digraph(input);
  if (s.family.empty()) throw InvalidInput("give --input FILE or a family with --n/--p/--q");
  auto built = build(FamilySpec{parse_family(s.family), s.n, s.p, s.q});
  return {std::move(built.graph), std::move(built.sides)};
}

std::vector<Vertex> parse_vertices(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidInput("bad vertex list '" + text + "'");
    }
  }
  return out;
}

Arc parse_arc(const std::string& text) {
  const auto v = parse_vertices(text);
  if (v.size() != 2) throw InvalidInput("an arc is written u,v (got '" + text + "')");
  return {v[0], v[1]};
}

int emit(std::vector<Certificate> certs, const RunConfig& cfg, bool stamp) {
  if (stamp) {
    const auto now = utc_now();
    for (auto& c : certs) c.timestamp = now;
  }
  write_text(cfg.out_jsonl, to_jsonl(certs));
  if (!cfg.out_csv.empty()) write_text(cfg.out_csv, to_csv(certs));
  const bool failed = std::any_of(certs.begin(), certs.end(), [](const Certificate& c) {
    return c.verdict == Verdict::fail;
  });
  return failed ? kExitFail : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Q-index toolkit for bipartite digraph families"};
  app.require_subcommand(1);
  Common common;
  Shape shape;

  auto* build_cmd = app.add_subcommand("build", "build a family member");
  std::string format = "json";
  std::string out_path;
  build_cmd->add_option("family", shape.family, "kpq, b1..b6, path, cycle")->required();
  add_shape(build_cmd, shape);
  build_cmd->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  build_cmd->add_option("--out", out_path, "output file (default stdout)");
  add_common(build_cmd, common);

  auto* qindex_cmd = app.add_subcommand("qindex", "Q-index and Perron vector");
  std::string input;
  qindex_cmd->add_option("--input", input, "digraph JSON file");
  qindex_cmd->add_option("--family", shape.family, "family instead of --input");
  add_shape(qindex_cmd, shape);
  add_common(qindex_cmd, common);

  auto* charpoly_cmd = app.add_subcommand("charpoly", "closed-form polynomials f and g");
  std::string kind = "f";
  std::optional<double> eval_at;
  bool root = false;
  charpoly_cmd->add_option("--kind", kind, "f or g")->check(CLI::IsMember({"f", "g"}));
  add_shape(charpoly_cmd, shape);
  auto* eval_opt = charpoly_cmd->add_option("--eval", eval_at, "evaluate at X");
  charpoly_cmd->add_flag("--root", root, "largest real root")->excludes(eval_opt);
  add_common(charpoly_cmd, common);

  auto* verify_cmd = app.add_subcommand("verify", "check a theorem or lemma");
  std::string claim;
  std::string grid_text;
  std::string out_jsonl;
  std::string out_csv;
  std::string path_text;
  std::string arc_text;
  std::optional<int> u, v, w;
  std::optional<int> samples;
  std::optional<std::uint64_t> seed;
  bool dedup = false;
  verify_cmd->add_option("claim", claim, "thm1..thm8, chain, lemma1, lemma3..lemma6, perron, charpoly-cross")
      ->required();
  add_shape(verify_cmd, shape);
  verify_cmd->add_option("--grid", grid_text, "nmin=..,nmax=..,pmax=..,qmax=..");
  verify_cmd->add_option("--family", shape.family, "family for perron and lemma4 (default b1)");
  verify_cmd->add_option("--input", input, "digraph JSON for lemma1, lemma3, lemma4, lemma5");
  verify_cmd->add_option("--path", path_text, "lemma4 path as v1,v2,...");
  verify_cmd->add_option("--arc", arc_text, "lemma3/lemma5 arc as u,v");
  verify_cmd->add_option("--u", u, "lemma1 tail");
  verify_cmd->add_option("--v", v, "lemma1 old head");
  verify_cmd->add_option("--w", w, "lemma1 new head");
  verify_cmd->add_option("--samples", samples, "random samples for lemma1/3/5");
  verify_cmd->add_option("--seed", seed, "sample seed");
  verify_cmd->add_flag("--dedup", dedup, "thm7/thm8: canonical splits only");
  verify_cmd->add_option("--out-jsonl", out_jsonl, "certificates (default stdout)");
  verify_cmd->add_option("--out-csv", out_csv, "CSV summary");
  add_common(verify_cmd, common);

  auto* enum_cmd = app.add_subcommand("enumerate", "exhaustive minimum over G(n,p,q)");
  add_shape(enum_cmd, shape);
  enum_cmd->add_flag("--dedup", dedup, "canonical side splits only");
  enum_cmd->add_option("--out", out_path, "report file (default stdout)");
  add_common(enum_cmd, common);

  auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz output");
  dot_cmd->add_option("--input", input, "digraph JSON file");
  dot_cmd->add_option("--family", shape.family, "family instead of --input");
  add_shape(dot_cmd, shape);
  dot_cmd->add_option("--out", out_path, "output file (default stdout)");
  add_common(dot_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    RunConfig cfg = resolve(common);
    const auto vcfg = cfg.verify_config();

    if (*build_cmd) {
      const auto built = build(FamilySpec{parse_family(shape.family), shape.n, shape.p, shape.q});
      write_text(out_path, format == "dot" ? digraph_to_dot(built.graph, built.sides)
                                           : dump_json(digraph_to_json(built.graph, built.sides)) + "\n");
      return kExitPass;
    }

    if (*qindex_cmd) {
      const auto [g, sides] = source(input, shape);
      const auto r = q_index(g, vcfg.spectral);
      auto doc = to_json(r);
      doc["enclosure"] = {{"lower", r.lower}, {"upper", r.upper}};
      doc["n"] = g.order();
      write_text("", dump_json(doc) + "\n");
      return kExitPass;
    }

    if (*charpoly_cmd) {
      const CharPolySpec spec{parse_poly_kind(kind), shape.n, shape.p, shape.q};
      validate(spec);
      if (eval_at) {
        write_text("", format_double(eval_poly(spec, *eval_at)) + "\n");
      } else {
        write_text("", format_double(largest_real_root(spec).root) + "\n");
      }
      return kExitPass;
    }

    if (*verify_cmd) {
      if (!out_jsonl.empty()) cfg.out_jsonl = out_jsonl;
      if (!out_csv.empty()) cfg.out_csv = out_csv;
      if (samples) cfg.samples = *samples;
      if (seed) cfg.seed = *seed;
      if (!grid_text.empty()) cfg.grid = parse_grid(grid_text);
      cfg.validate();
      const bool single = shape.n > 0;

      if (claim == "thm7" || claim == "thm8") {
        EnumerationTask task{shape.n, shape.p, shape.q, cfg.tol, dedup, cfg.workers};
        const auto report = certify_minimum(task);
        auto cert = to_certificate(report, vcfg);
        if (cert.claim != claim) {
          throw InvalidInput(claim + " covers n-p-q " + (claim == "thm7" ? "even" : "odd") + "; use " + cert.claim);
        }
        return emit({std::move(cert)}, cfg, common.stamp);
      }
      if (claim == "lemma1" || claim == "lemma3" || claim == "lemma5") {
        if (input.empty()) return emit(run_lemma_samples(claim, cfg.samples, cfg.seed, cfg.max_order, vcfg), cfg, common.stamp);
        const auto g = load_digraph(input).first;
        if (claim == "lemma1") {
          if (!u || !v || !w) throw InvalidInput("lemma1 needs --u, --v and --w");
          return emit({check_lemma1(g, *u, *v, *w, vcfg)}, cfg, common.stamp);
        }
        const Arc arc = parse_arc(arc_text);
        return emit({claim == "lemma3" ? check_lemma3(g, arc, vcfg) : check_lemma5(g, arc, vcfg)}, cfg, common.stamp);
      }
      if (claim == "lemma4" && !input.empty()) {
        return emit({check_lemma4(load_digraph(input).first, parse_vertices(path_text), vcfg)}, cfg, common.stamp);
      }
      if (claim == "perron" && single) {
        const auto fam = parse_family(shape.family.empty() ? "b1" : shape.family);
        return emit({check_perron_structure(shape.n, shape.p, shape.q, fam, vcfg)}, cfg, common.stamp);
      }
      if (claim == "lemma4" && single) {
        const auto fam = parse_family(shape.family.empty() ? "b1" : shape.family);
        return emit({check_lemma4_family({fam, shape.n, shape.p, shape.q}, vcfg)}, cfg, common.stamp);
      }
      if (!is_family_claim(claim)) throw InvalidInput("unknown claim '" + claim + "'");
      if (single) return emit({run_single(claim, {shape.n, shape.p, shape.q}, vcfg)}, cfg, common.stamp);
      return emit(run_grid(claim, cfg.grid, vcfg, cfg.workers), cfg, common.stamp);
    }

    if (*enum_cmd) {
      EnumerationTask task{shape.n, shape.p, shape.q, cfg.tol, dedup, cfg.workers};
      const auto report = certify_minimum(task);
      auto doc = report_to_json(report, vcfg, common.timing);
      if (common.stamp) doc["certificate"]["timestamp"] = utc_now();
      write_text(out_path, dump_json(doc) + "\n");
      return to_certificate(report, vcfg).verdict == Verdict::fail ? kExitFail : kExitPass;
    }

    if (*dot_cmd) {
      const auto [g, sides] = source(input, shape);
      write_text(out_path, digraph_to_dot(g, sides));
      return kExitPass;
    }
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const NonConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNonConvergence;
  }
  return kExitInvalid;
}
