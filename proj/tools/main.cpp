#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "kconvex/hardness.hpp"
#include "kconvex/io.hpp"
#include "kconvex/regions.hpp"
#include "kconvex/shape.hpp"
#include "kconvex/svg.hpp"
#include "kconvex/sweep.hpp"
#include "kconvex/transversals.hpp"
#include "kconvex/twoconvex.hpp"

namespace {

using namespace kconvex;
using nlohmann::json;

// Analysis said "no" under --expect, or an analysis-level failure occurred.
struct AnalysisNegative {
  int code = 1;
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    std::cout << bytes;
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot open output file: " + path);
  out << bytes;
}

json point_to_json(const Point& p) {
  return {to_string(p.x), to_string(p.y)};
}

json line_to_json(const Line& l) {
  return {{"anchor", point_to_json(l.anchor)},
          {"direction", {to_string(l.dir.dx), to_string(l.dir.dy)}}};
}

json indices_to_json(const std::vector<std::size_t>& idx) {
  json out = json::array();
  for (std::size_t i : idx) out.push_back(i);
  return out;
}

json witness_to_json(const TwoConvexWitness& w) {
  if (std::holds_alternative<MultiHitRay>(w)) {
    const auto& r = std::get<MultiHitRay>(w);
    return {{"kind", "multi_hit_ray"},
            {"vertex", r.vertex},
            {"origin", point_to_json(r.ray.origin)},
            {"hit_count", r.hits.size()}};
  }
  if (std::holds_alternative<InnerTangent>(w)) {
    const auto& t = std::get<InnerTangent>(w);
    return {{"kind", "inner_tangent"}, {"v", t.v}, {"w", t.w}};
  }
  if (std::holds_alternative<InflectionStabber>(w)) {
    const auto& s = std::get<InflectionStabber>(w);
    return {{"kind", "inflection_stabber"}, {"edge", s.edge}, {"line", line_to_json(s.line)}};
  }
  return nullptr;
}

Polygon load_polygon(const std::string& path) { return polygon_from_json(read_json(path)); }

std::map<std::string, fixtures::FixtureName> fixture_names() {
  using fixtures::FixtureName;
  return {{"convex_ngon", FixtureName::ConvexNgon},
          {"comb", FixtureName::Comb},
          {"pseudo_triangle", FixtureName::PseudoTriangle},
          {"spike_rect", FixtureName::SpikeRect},
          {"spiky_star", FixtureName::SpikyStar},
          {"many_pockets", FixtureName::ManyPockets},
          {"amoeba", FixtureName::Amoeba},
          {"helly_family", FixtureName::HellyFamily},
          {"quad_row", FixtureName::QuadRow},
          {"interlock_combs", FixtureName::InterlockCombs}};
}

std::map<std::string, long> parse_params(const std::string& spec) {
  std::map<std::string, long> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw IoError("parameter '" + item + "' is not of the form name=value");
    try {
      out[item.substr(0, eq)] = std::stol(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw IoError("parameter '" + item + "' has a non-integer value");
    }
  }
  return out;
}

std::vector<Int> parse_int_list(const std::string& spec) {
  std::vector<Int> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t b = item.find_first_not_of(" \t");
    std::size_t e = item.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    try {
      out.push_back(Int(item.substr(b, e - b + 1)));
    } catch (const std::exception&) {
      throw IoError("non-integer entry '" + item + "' in input list");
    }
  }
  return out;
}

void render_polygons(const std::vector<Polygon>& polys, const std::vector<Line>& lines,
                     const std::string& path) {
  RenderSpec spec;
  for (std::size_t i = 0; i < polys.size(); ++i)
    spec.polygons.push_back({polys[i], i % 2 ? "alt" : "poly"});
  spec.lines = lines;
  write_output(path, render_svg(spec));
}

void register_commands(CLI::App& app) {
  // stab
  {
    auto* cmd = app.add_subcommand("stab", "exact stabbing number with a witness line");
    auto file = std::make_shared<std::string>();
    cmd->add_option("polygon", *file, "polygon JSON file or -")->required();
    cmd->callback([file]() {
      StabbingCertificate cert = stabbing_number(load_polygon(*file));
      emit({{"stabbing_number", cert.value}, {"witness_line", line_to_json(cert.witness_line)}});
    });
  }
  // kconvex
  {
    auto* cmd = app.add_subcommand("kconvex", "test whether the polygon is k-convex");
    auto file = std::make_shared<std::string>();
    auto k = std::make_shared<int>(1);
    auto expect = std::make_shared<bool>(false);
    cmd->add_option("polygon", *file)->required();
    cmd->add_option("--k", *k, "components bound")->required();
    cmd->add_flag("--expect", *expect, "exit 1 when the answer is no");
    cmd->callback([file, k, expect]() {
      StabbingCertificate cert = stabbing_number(load_polygon(*file));
      bool ok = cert.value <= 2 * *k;
      json out{{"k_convex", ok}};
      if (!ok) out["witness_line"] = line_to_json(cert.witness_line);
      emit(out);
      if (*expect && !ok) throw AnalysisNegative{};
    });
  }
  // recognize2
  {
    auto* cmd = app.add_subcommand("recognize2", "structural 2-convexity recognizer");
    auto file = std::make_shared<std::string>();
    auto oracle = std::make_shared<bool>(false);
    auto expect = std::make_shared<bool>(false);
    cmd->add_option("polygon", *file)->required();
    cmd->add_flag("--oracle", *oracle, "force the stabbing-number path");
    cmd->add_flag("--expect", *expect, "exit 1 when the answer is no");
    cmd->callback([file, oracle, expect]() {
      Polygon p = load_polygon(*file);
      json out;
      bool ok;
      if (*oracle) {
        ok = is_k_convex(p, 2);
        out = {{"is_two_convex", ok}, {"used_oracle_fallback", true}, {"witness", nullptr}};
      } else {
        TwoConvexVerdict v = recognize_2convex(p);
        ok = v.is_two_convex;
        out = {{"is_two_convex", ok},
               {"used_oracle_fallback", v.used_oracle_fallback},
               {"witness", witness_to_json(v.witness)}};
      }
      emit(out);
      if (*expect && !ok) throw AnalysisNegative{};
    });
  }
  // triangulate
  {
    auto* cmd = app.add_subcommand("triangulate", "plane-sweep polygon triangulation");
    auto file = std::make_shared<std::string>();
    auto sort = std::make_shared<std::string>("finger");
    auto stats = std::make_shared<bool>(false);
    auto render = std::make_shared<std::string>();
    cmd->add_option("polygon", *file)->required();
    cmd->add_option("--sort", *sort, "scan|finger (reported comparison cost)")
        ->check(CLI::IsMember({"scan", "finger"}));
    cmd->add_flag("--stats", *stats, "emit comparison_count and max status size");
    cmd->add_option("--render", *render, "write an SVG of the triangulation");
    cmd->callback([file, sort, stats, render]() {
      Polygon p = load_polygon(*file);
      Triangulation t = triangulate(p);
      json tris = json::array();
      for (const auto& tr : t.triangles) tris.push_back({tr[0], tr[1], tr[2]});
      json out{{"triangles", std::move(tris)}};
      if (*stats) {
        std::size_t comparisons =
            *sort == "scan" ? sort_scan(p).comparison_count : sort_finger(p).comparison_count;
        out["sort"] = *sort;
        out["comparison_count"] = comparisons;
        out["max_active_edges"] = t.max_active_edges;
      }
      emit(out);
      if (!render->empty()) {
        RenderSpec spec;
        spec.polygons.push_back({p, "poly"});
        for (const auto& tr : t.triangles)
          for (int e = 0; e < 3; ++e)
            spec.segments.push_back({p.vertices[tr[e]], p.vertices[tr[(e + 1) % 3]]});
        write_output(*render, render_svg(spec));
      }
    });
  }
  // chains
  {
    auto* cmd = app.add_subcommand("chains", "pocket and convex chain decomposition");
    auto file = std::make_shared<std::string>();
    cmd->add_option("polygon", *file)->required();
    cmd->callback([file]() {
      Polygon p = load_polygon(*file);
      PocketChains pc = pocket_chains(p);
      ChainDecomposition cd = convex_chains(p);
      json pockets = json::array();
      for (const Pocket& pk : pc.pockets)
        pockets.push_back({{"c1", indices_to_json(pk.c1.indices(p.size()))},
                           {"c2", indices_to_json(pk.c2.indices(p.size()))},
                           {"c3", indices_to_json(pk.c3.indices(p.size()))}});
      json chains = json::array();
      for (const IndexRange& r : cd.chains) chains.push_back(indices_to_json(r.indices(p.size())));
      emit({{"hull", indices_to_json(pc.hull)},
            {"pockets", std::move(pockets)},
            {"chains", std::move(chains)}});
    });
  }
  // convex-subset
  {
    auto* cmd = app.add_subcommand("convex-subset", "largest convex vertex subset found");
    auto file = std::make_shared<std::string>();
    cmd->add_option("polygon", *file)->required();
    cmd->callback([file]() {
      Polygon p = load_polygon(*file);
      std::vector<std::size_t> idx = largest_convex_subset(p);
      emit({{"indices", indices_to_json(idx)},
            {"size", idx.size()},
            {"guarantee", convex_subset_bound(p.size())}});
    });
  }
  // partition
  {
    auto* cmd = app.add_subcommand("partition", "partition vertices into convex subsets");
    auto file = std::make_shared<std::string>();
    cmd->add_option("polygon", *file)->required();
    cmd->callback([file]() {
      Polygon p = load_polygon(*file);
      json parts = json::array();
      for (const auto& part : convex_partition(p)) parts.push_back(indices_to_json(part));
      emit({{"parts", std::move(parts)}});
    });
  }
  // reduce3sum
  {
    auto* cmd = app.add_subcommand("reduce3sum", "triple-sum to stabbing-number reduction");
    auto input = std::make_shared<std::string>();
    auto emit_poly = std::make_shared<std::string>();
    auto decide = std::make_shared<bool>(false);
    cmd->add_option("--input", *input, "comma-separated integers")->required();
    cmd->add_option("--emit-polygon", *emit_poly, "write the notched polygon JSON");
    cmd->add_flag("--decide", *decide, "run the full geometric decision");
    cmd->callback([input, emit_poly, decide]() {
      std::vector<Int> xs = parse_int_list(*input);
      ReductionInstance r = prepare_reduction(xs);
      json out{{"brute_force", three_sum_brute(xs)},
               {"early_exit", r.early_exit ? json(*r.early_exit) : json(nullptr)}};
      json dedup = json::array();
      for (const Int& v : r.dedup_sorted) dedup.push_back(v.str());
      out["dedup_sorted"] = std::move(dedup);
      if (!r.early_exit && !r.dedup_sorted.empty()) {
        out["epsilon"] = to_string(r.epsilon);
        ReductionInstance full = build_P2(xs);
        out["polygon_size"] = full.p2->size();
        out["stabbing_number"] = stabbing_number(*full.p2).value;
        if (!emit_poly->empty())
          write_output(*emit_poly, polygon_to_json(*full.p2).dump(2) + "\n");
      }
      if (*decide) {
        try {
          out["decision"] = decide_3sum_geometric(xs);
        } catch (const CalibrationFailure& e) {
          out["decision"] = nullptr;
          out["calibration_failure"] = e.what();
          emit(out);
          std::cerr << e.what() << "\n";
          throw AnalysisNegative{};
        }
      }
      emit(out);
    });
  }
  // region-degree
  {
    auto* cmd = app.add_subcommand("region-degree", "measured degree of convexity of a region");
    auto file = std::make_shared<std::string>();
    auto seed = std::make_shared<std::uint64_t>(0);
    cmd->add_option("spec", *file, "region spec JSON: {polygons, expr}")->required();
    cmd->add_option("--seed", *seed, "seed for the cross-check batch");
    cmd->callback([file, seed]() {
      RegionExpr e = region_from_json(read_json(*file));
      emit({{"degree", empirical_degree(e, 200, *seed)}});
    });
  }
  // helly
  {
    auto* cmd = app.add_subcommand("helly", "no-common-point ring family check");
    auto m = std::make_shared<int>(3);
    cmd->add_option("--m", *m, "family size")->required();
    cmd->callback([m]() {
      HellyReport r = helly_check(*m);
      emit({{"m", r.m},
            {"all_two_convex", r.all_two_convex},
            {"full_family_empty", r.full_family_empty},
            {"proper_subfamilies_nonempty", r.proper_subfamilies_nonempty},
            {"checks", r.checks},
            {"passed", r.passed}});
      if (!r.passed) throw AnalysisNegative{};
    });
  }
  // ggp
  {
    auto* cmd = app.add_subcommand("ggp", "generalized geometric permutations of a family");
    auto file = std::make_shared<std::string>();
    auto render = std::make_shared<std::string>();
    cmd->add_option("family", *file, "family JSON: {polygons: {id: ...}}")->required();
    cmd->add_option("--render", *render, "write an SVG with one witness line per permutation");
    cmd->callback([file, render]() {
      auto polys = family_from_json(read_json(*file));
      auto witnessed = enumerate_ggp_witnessed(polys);
      json perms = json::array();
      for (const auto& [seq, line] : witnessed) perms.push_back(seq);
      emit({{"count", witnessed.size()}, {"permutations", std::move(perms)}});
      if (!render->empty()) {
        std::vector<Polygon> ps;
        std::vector<Line> lines;
        for (const auto& [id, poly] : polys) ps.push_back(poly);
        for (const auto& [seq, line] : witnessed) lines.push_back(line);
        render_polygons(ps, lines, *render);
      }
    });
  }
  // gen
  {
    auto* cmd = app.add_subcommand("gen", "generate a named fixture");
    auto name = std::make_shared<std::string>();
    auto params = std::make_shared<std::string>();
    auto seed = std::make_shared<std::uint64_t>(0);
    auto out_path = std::make_shared<std::string>("-");
    cmd->add_option("name", *name, "fixture name or 'random'")->required();
    cmd->add_option("--params", *params, "comma-separated name=value pairs");
    cmd->add_option("--seed", *seed, "seed for randomized fixtures");
    cmd->add_option("-o,--output", *out_path, "output file (default stdout)");
    cmd->callback([name, params, seed, out_path]() {
      auto pm = parse_params(*params);
      json out;
      if (*name == "random") {
        auto it = pm.find("n");
        if (it == pm.end()) throw IoError("random fixture needs n=<count>");
        out = polygon_to_json(fixtures::random_simple_polygon(static_cast<int>(it->second), *seed));
      } else {
        auto names = fixture_names();
        auto it = names.find(*name);
        if (it == names.end()) throw IoError("unknown fixture name: " + *name);
        fixtures::FixtureOutput fo = fixtures::generate({it->second, pm, *seed});
        if (std::holds_alternative<Polygon>(fo)) {
          out = polygon_to_json(std::get<Polygon>(fo));
        } else {
          const auto& list = std::get<std::vector<Polygon>>(fo);
          std::map<std::string, Polygon> fam;
          for (std::size_t i = 0; i < list.size(); ++i)
            fam.emplace("P" + std::to_string(i), list[i]);
          out = family_to_json(fam);
        }
      }
      write_output(*out_path, out.dump(2) + "\n");
    });
  }
  // render
  {
    auto* cmd = app.add_subcommand("render", "draw a polygon or family as SVG");
    auto file = std::make_shared<std::string>();
    auto out_path = std::make_shared<std::string>("-");
    auto witness = std::make_shared<bool>(false);
    cmd->add_option("input", *file, "polygon or family JSON")->required();
    cmd->add_option("-o,--output", *out_path, "output file (default stdout)");
    cmd->add_flag("--witness", *witness, "overlay the stabbing witness line of each polygon");
    cmd->callback([file, out_path, witness]() {
      json j = read_json(*file);
      std::vector<Polygon> ps;
      if (j.contains("polygons"))
        for (const auto& [id, poly] : family_from_json(j)) ps.push_back(poly);
      else
        ps.push_back(polygon_from_json(j));
      std::vector<Line> lines;
      if (*witness)
        for (const Polygon& p : ps) lines.push_back(stabbing_number(p).witness_line);
      render_polygons(ps, lines, *out_path);
    });
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rational toolkit for k-convex polygons"};
  app.require_subcommand(1);
  register_commands(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const AnalysisNegative& neg) {
    return neg.code;
  } catch (const IoError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const PolygonError& e) {
    std::cerr << "invalid polygon: " << e.what() << "\n";
    return 2;
  } catch (const kconvex::fixtures::FixtureError& e) {
    std::cerr << "fixture error: " << e.what() << "\n";
    return 2;
  } catch (const UnboundId& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
