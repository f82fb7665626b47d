#include "zzlab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <future>
#include <istream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zzlab/basilica.hpp"
#include "zzlab/connectivity.hpp"
#include "zzlab/generators.hpp"
#include "zzlab/io.hpp"
#include "zzlab/iso.hpp"
#include "zzlab/parity.hpp"
#include "zzlab/products.hpp"
#include "zzlab/spectral.hpp"

namespace zzlab {

using nlohmann::json;

namespace {

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(Errc::FormatError, "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void spew(const std::string& path, const std::string& content, std::ostream& out) {
  if (path == "-") {
    out << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(Errc::FormatError, "cannot open " + path + " for writing");
  f << content;
}

RotationGraph load_graph(const std::string& path, std::istream& in) {
  return from_rotgraph_json(slurp(path, in));
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("ZZLAB_SEED")) return std::strtoull(env, nullptr, 10);
  return 0;
}

json spectrum_json(const SpectrumReport& rep) {
  json j;
  j["source"] = spectrum_source_name(rep.source);
  j["size"] = rep.eigenvalues.size();
  j["eigenvalues"] = rep.eigenvalues;
  json mult = json::array();
  for (const auto& [value, count] : rep.multiplicities) mult.push_back({{"value", value}, {"count", count}});
  j["multiplicities"] = mult;
  j["grouping_tolerance"] = rep.grouping_tolerance;
  return j;
}

std::string spectrum_csv(const SpectrumReport& rep) {
  std::ostringstream csv;
  csv << "index,eigenvalue\n";
  csv.precision(17);
  for (std::size_t i = 0; i < rep.eigenvalues.size(); ++i) csv << i << "," << rep.eigenvalues[i] << "\n";
  return csv.str();
}

json parity_json(const RotationGraph& g, const ParityDecomposition& dec) {
  json j;
  j["degree"] = g.degree();
  j["half_degree"] = dec.half_degree;
  json blocks = json::array();
  for (const ParityBlock& b : dec.blocks) {
    json jb;
    jb["id"] = b.id;
    jb["size"] = b.size();
    jb["odden_count"] = b.odden_count();
    jb["dart_count"] = b.darts.size();
    json members = json::array();
    for (const auto& [v, tag] : b.members)
      members.push_back({{"vertex", g.vertex_name(v)}, {"parity", parity_name(tag)}});
    jb["members"] = members;
    blocks.push_back(jb);
  }
  j["blocks"] = blocks;
  json sizes = json::array();
  for (const auto& comp : g.connected_components()) sizes.push_back(comp.size());
  j["component_sizes"] = sizes;
  return j;
}

struct BasilicaLevelResult {
  int level = 0;
  json report;
  bool ok = true;
};

BasilicaLevelResult run_basilica_level(int level, const std::string& what) {
  BasilicaLevelResult res;
  res.level = level;
  json j;
  j["level"] = level;
  if (what == "graph" || what == "all") {
    RotationGraph gamma = schreier_graph(level);
    ParityDecomposition dec = parity_decomposition(gamma);
    bool all_odden = dec.blocks.size() == 1 && dec.blocks[0].odden_count() == dec.blocks[0].size();
    bool ok = gamma.is_connected() && all_odden;
    j["graph"] = {{"vertices", gamma.vertex_count()},
                  {"degree", gamma.degree()},
                  {"connected", gamma.is_connected()},
                  {"parity_blocks", dec.blocks.size()},
                  {"all_odden", all_odden},
                  {"ok", ok}};
    res.ok = res.ok && ok;
  }
  if (what == "zigzag" || what == "all") {
    BasilicaZigzagReport rep = basilica_zigzag_check(level);
    j["zigzag"] = {{"product_vertices", rep.product_vertices},
                   {"connected", rep.connected},
                   {"dc_length", rep.dc_length},
                   {"expected_length", rep.expected_length},
                   {"ok", rep.ok}};
    res.ok = res.ok && rep.ok;
  }
  if (what == "spectrum" || what == "all") {
    BasilicaSpectrumReport rep = basilica_spectrum_check(level);
    j["spectrum"] = {{"tensor_ok", rep.tensor_ok},
                     {"max_spectrum_diff", rep.max_spectrum_diff},
                     {"spectrum_ok", rep.spectrum_ok},
                     {"max_residual", rep.max_residual},
                     {"residual_ok", rep.residual_ok},
                     {"ok", rep.ok}};
    res.ok = res.ok && rep.ok;
  }
  j["ok"] = res.ok;
  res.report = std::move(j);
  return res;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"rotation-map graphs, replacement/zig-zag products and their analyses"};
  app.name("zzlab");
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "emit a named graph as rotgraph-v1 JSON or DOT");
  std::string gen_kind;
  int gen_param = -1;
  int gen_size = 0, gen_degree = 0;
  std::uint64_t gen_seed = 0;
  bool gen_seed_set = false, gen_dot = false;
  std::string gen_out = "-";
  gen->add_option("kind", gen_kind,
                  "cycle | complete-good | complete-example42 | complete-example53 | "
                  "complete-example56 | cube | double-cycle | schreier | random")
      ->required();
  gen->add_option("param", gen_param, "size parameter (n, d or k)");
  gen->add_option("--size", gen_size, "vertex count (random)");
  gen->add_option("--degree", gen_degree, "degree (random)");
  gen->add_option("--seed", gen_seed, "RNG seed (random; default $ZZLAB_SEED or 0)")
      ->trigger_on_parse()
      ->each([&](const std::string&) { gen_seed_set = true; });
  gen->add_flag("--dot", gen_dot, "emit DOT instead of JSON");
  gen->add_option("-o,--output", gen_out, "output file ('-' = stdout)");

  // product
  auto* product = app.add_subcommand("product", "replacement or zig-zag product of two graphs");
  std::string prod_kind, prod_g1, prod_g2, prod_out = "-";
  bool prod_allow_disconnected = false, prod_dot = false;
  product->add_option("--kind", prod_kind, "replace | zigzag")->required();
  product->add_option("g1", prod_g1, "first factor ('-' = stdin)")->required();
  product->add_option("g2", prod_g2, "second factor")->required();
  product->add_flag("--allow-disconnected", prod_allow_disconnected, "skip the connectivity check");
  product->add_flag("--dot", prod_dot, "emit DOT instead of JSON");
  product->add_option("-o,--output", prod_out, "output file");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "parity, neighborhood, correspond or spectrum report");
  std::string an_what, an_graph = "-", an_out = "-", an_formula = "auto", an_csv;
  analyze->add_option("what", an_what, "parity | neighborhood | correspond | spectrum")->required();
  analyze->add_option("graph", an_graph, "input graph ('-' = stdin)");
  analyze->add_option("--formula", an_formula, "spectrum route: auto | numeric | circulant | dc");
  analyze->add_option("--csv", an_csv, "also write the spectrum as CSV ('-' = stdout, replaces JSON)");
  analyze->add_option("-o,--output", an_out, "output file");

  // check
  auto* check = app.add_subcommand("check", "exact isomorphism test");
  std::string check_what, check_a, check_b, check_out = "-";
  check->add_option("what", check_what, "iso")->required();
  check->add_option("a", check_a, "first graph")->required();
  check->add_option("b", check_b, "second graph")->required();
  check->add_option("-o,--output", check_out, "output file");

  // basilica
  auto* basilica = app.add_subcommand("basilica", "checks on the level-n Schreier graphs");
  std::vector<int> bas_levels;
  std::string bas_check = "all";
  int bas_jobs = 1;
  basilica->add_option("--level", bas_levels, "level(s) n >= 1")->required();
  basilica->add_option("--check", bas_check, "graph | zigzag | spectrum | all");
  basilica->add_option("--jobs", bas_jobs, "parallel level checks")->check(CLI::PositiveNumber);

  // export
  auto* exp = app.add_subcommand("export", "re-emit a graph as DOT or canonical JSON");
  std::string exp_format, exp_graph = "-", exp_out = "-";
  exp->add_option("format", exp_format, "dot | json")->required();
  exp->add_option("graph", exp_graph, "input graph ('-' = stdin)");
  exp->add_option("-o,--output", exp_out, "output file");

  std::vector<const char*> argv;
  argv.push_back("zzlab");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*gen) {
      RotationGraph g = [&]() -> RotationGraph {
        if (gen_kind == "random") {
          if (gen_size <= 0 || gen_degree <= 0)
            fail(Errc::UsageError, "gen random needs --size and --degree");
          return random_regular_graph(gen_size, gen_degree, gen_seed_set ? gen_seed : default_seed());
        }
        if (gen_kind == "schreier") {
          if (gen_param < 0) fail(Errc::UsageError, "gen schreier needs a level parameter");
          return schreier_graph(gen_param);
        }
        LabellingScheme scheme = parse_labelling_scheme(gen_kind);
        switch (scheme) {
          case LabellingScheme::CycleCayley:
            if (gen_param < 0) fail(Errc::UsageError, "gen cycle needs n");
            return cycle_graph(gen_param);
          case LabellingScheme::HammingCube:
            if (gen_param < 0) fail(Errc::UsageError, "gen cube needs k");
            return hamming_cube(gen_param);
          case LabellingScheme::DoubleCycle:
            if (gen_param < 0) fail(Errc::UsageError, "gen double-cycle needs n");
            return double_cycle(gen_param);
          case LabellingScheme::CompleteGood:
            if (gen_param < 0) fail(Errc::UsageError, "gen complete-good needs d");
            return complete_graph(scheme, gen_param);
          default:
            return complete_graph(scheme, 0);
        }
      }();
      spew(gen_out, gen_dot ? to_dot(g) : to_rotgraph_json(g), out);
      err << "gen " << gen_kind << ": " << g.vertex_count() << " vertices, degree " << g.degree()
          << "\n";
      return 0;
    }

    if (*product) {
      RotationGraph g1 = load_graph(prod_g1, in);
      RotationGraph g2 = load_graph(prod_g2, in);
      ProductOptions opt{prod_allow_disconnected};
      RotationGraph p = prod_kind == "replace" ? replacement_product(g1, g2, opt)
                        : prod_kind == "zigzag"
                            ? zigzag_product(g1, g2, opt)
                            : (fail(Errc::UsageError, "--kind must be replace or zigzag"), g1);
      spew(prod_out, prod_dot ? to_dot(p) : to_rotgraph_json(p), out);
      err << "product " << prod_kind << ": " << p.vertex_count() << " vertices, degree "
          << p.degree() << "\n";
      return 0;
    }

    if (*analyze) {
      RotationGraph g = load_graph(an_graph, in);
      if (an_what == "parity") {
        ParityDecomposition dec = parity_decomposition(g);
        json j = parity_json(g, dec);
        spew(an_out, j.dump(2) + "\n", out);
        err << "parity: " << dec.blocks.size() << " block(s)\n";
        return 0;
      }
      if (an_what == "neighborhood") {
        NeighborhoodGraph ng = neighborhood_graph(g);
        json j;
        j["vertices"] = ng.neighbor_sets.size();
        json sets = json::array();
        for (const auto& s : ng.neighbor_sets) sets.push_back(s);
        j["neighbor_sets"] = sets;
        json edges = json::array();
        for (std::size_t h = 0; h < ng.adjacency.size(); ++h)
          for (int k : ng.adjacency[h])
            if (static_cast<int>(h) < k) edges.push_back({h, k});
        j["edges"] = edges;
        j["components"] = ng.components;
        j["connected"] = ng.connected();
        j["zigzag_connected_sufficient"] = ng.connected();
        spew(an_out, j.dump(2) + "\n", out);
        err << "neighborhood: " << ng.components.size() << " component(s)\n";
        return 0;
      }
      if (an_what == "correspond") {
        BlockComponentCorrespondence bc = block_component_correspondence(g);
        json j;
        j["blocks"] = bc.entries.size();
        j["components"] = bc.entries.size();
        json entries = json::array();
        for (const auto& e : bc.entries) {
          json names = json::array();
          for (int v : e.product_vertices) names.push_back(bc.product.vertex_name(v));
          entries.push_back({{"block", e.block_id},
                             {"component", e.component_index},
                             {"component_size", e.product_vertices.size()},
                             {"product_vertices", names}});
        }
        j["entries"] = entries;
        j["verified"] = true;
        spew(an_out, j.dump(2) + "\n", out);
        err << "correspond: " << bc.entries.size() << " block(s) <-> component(s)\n";
        return 0;
      }
      if (an_what == "spectrum") {
        IntMatrix adj = g.adjacency_matrix();
        SpectrumReport rep = [&] {
          if (an_formula == "numeric") return eigenvalues_symmetric(adj);
          if (an_formula == "circulant" || (an_formula == "auto" && is_circulant(adj))) {
            if (!is_circulant(adj)) fail(Errc::NotSymmetric, "adjacency matrix is not circulant");
            std::vector<double> row(adj.cols());
            for (int c = 0; c < adj.cols(); ++c) row[c] = static_cast<double>(adj(0, c));
            std::vector<double> real;
            for (const auto& z : circulant_eigenvalues(row)) real.push_back(z.real());
            return group_multiplicities(std::move(real), SpectrumSource::CirculantFormula);
          }
          if (an_formula == "dc") {
            auto n = recognize_double_cycle(Multigraph::from_rotation(g));
            if (!n) fail(Errc::UsageError, "graph is not a double cycle");
            return dc_spectrum(*n);
          }
          if (an_formula != "auto") fail(Errc::UsageError, "--formula must be auto|numeric|circulant|dc");
          return eigenvalues_symmetric(adj);
        }();
        if (!an_csv.empty() && an_csv == "-") {
          spew("-", spectrum_csv(rep), out);
        } else {
          if (!an_csv.empty()) spew(an_csv, spectrum_csv(rep), out);
          spew(an_out, spectrum_json(rep).dump(2) + "\n", out);
        }
        err << "spectrum (" << spectrum_source_name(rep.source) << "): " << rep.eigenvalues.size()
            << " eigenvalue(s)\n";
        return 0;
      }
      fail(Errc::UsageError, "analyze what: parity | neighborhood | correspond | spectrum");
    }

    if (*check) {
      if (check_what != "iso") fail(Errc::UsageError, "check supports: iso");
      Multigraph a = Multigraph::from_rotation(load_graph(check_a, in));
      Multigraph b = Multigraph::from_rotation(load_graph(check_b, in));
      auto cert = is_isomorphic(a, b);
      json j;
      j["isomorphic"] = cert.has_value();
      j["vertices"] = a.size();
      if (cert) {
        j["mapping"] = cert->mapping;
        j["verified"] = cert->verified;
      }
      spew(check_out, j.dump(2) + "\n", out);
      err << (cert ? "isomorphic\n" : "not isomorphic\n");
      return cert ? 0 : 1;
    }

    if (*basilica) {
      if (bas_check != "graph" && bas_check != "zigzag" && bas_check != "spectrum" && bas_check != "all")
        fail(Errc::UsageError, "--check must be graph | zigzag | spectrum | all");
      std::vector<BasilicaLevelResult> results(bas_levels.size());
      if (bas_jobs <= 1 || bas_levels.size() <= 1) {
        for (std::size_t i = 0; i < bas_levels.size(); ++i)
          results[i] = run_basilica_level(bas_levels[i], bas_check);
      } else {
        std::vector<std::future<BasilicaLevelResult>> futures;
        futures.reserve(bas_levels.size());
        for (int level : bas_levels)
          futures.push_back(std::async(std::launch::async, run_basilica_level, level, bas_check));
        for (std::size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
      }
      json j = json::array();
      bool all_ok = true;
      for (auto& r : results) {
        all_ok = all_ok && r.ok;
        j.push_back(std::move(r.report));
        err << "basilica level " << r.level << ": " << (r.ok ? "ok" : "FAILED") << "\n";
      }
      out << (j.size() == 1 ? j[0] : j).dump(2) << "\n";
      return all_ok ? 0 : 1;
    }

    if (*exp) {
      RotationGraph g = load_graph(exp_graph, in);
      if (exp_format == "dot")
        spew(exp_out, to_dot(g), out);
      else if (exp_format == "json")
        spew(exp_out, to_rotgraph_json(g), out);
      else
        fail(Errc::UsageError, "export format: dot | json");
      return 0;
    }
  } catch (const Error& e) {
    json j;
    j["error"] = errc_name(e.code());
    j["detail"] = e.detail();
    out << j.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::UsageError ? 2 : 1;
  }

  return 2;
}

}  // namespace zzlab
