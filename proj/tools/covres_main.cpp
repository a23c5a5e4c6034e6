#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "covres/covering.hpp"
#include "covres/errors.hpp"
#include "covres/graph.hpp"
#include "covres/hjstring.hpp"
#include "covres/io.hpp"
#include "covres/lattice.hpp"
#include "covres/monodromy.hpp"
#include "covres/resolve.hpp"

namespace {

using covres::Error;
using covres::ErrorCode;
using json = nlohmann::ordered_json;

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open input file " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

covres::Document load(const std::string& path) {
  covres::Document doc = covres::parse_document(read_input(path));
  for (const auto& w : doc.warnings) std::cerr << "warning: " << w << "\n";
  return doc;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

json big(const covres::Int& v) { return json(v.str()); }

json group_json(const covres::AbelianGroup& g) {
  json out = json::object();
  out["free_rank"] = g.free_rank;
  out["torsion"] = json::array();
  for (const auto& t : g.torsion) out["torsion"].push_back(big(t));
  out["torsion_order"] = big(g.torsion_order());
  return out;
}

json map_json(const std::map<long long, long long>& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

json findings_json(const std::vector<covres::Finding>& findings) {
  json out = json::array();
  for (const auto& f : findings) out.push_back({{"code", f.code}, {"detail", f.detail}});
  return out;
}

// The presentation named by the document: an explicit covering block if
// present, otherwise the universal abelian covering of the base (which
// requires a rational-homology-sphere base).
covres::CoveringPresentation presentation_of(const covres::Document& doc) {
  if (doc.covering) {
    covres::check_presentation(*doc.covering);
    return *doc.covering;
  }
  return covres::universal_covering(doc.graph);
}

int run(int argc, char** argv) {
  CLI::App app{"cyclic covers of embedded resolution graphs"};
  app.require_subcommand(1);
  bool json_errors = false;
  app.add_flag("--json-errors", json_errors, "report errors as JSON on stderr");

  std::string input = "-";
  long long N = 1, m1 = 1, m2 = 1;
  bool flag_minimize = false, flag_strip = false, flag_realize = false, flag_neumann = false;
  long long neumann_n = 1;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "input document (JSON), - for stdin");
  };

  auto* c_validate = app.add_subcommand("validate", "check a document for structural problems");
  add_input(c_validate);
  auto* c_mult = app.add_subcommand("mult", "solve for the multiplicity system");
  add_input(c_mult);
  auto* c_euler = app.add_subcommand("euler", "recover Euler numbers from multiplicities");
  add_input(c_euler);
  auto* c_homology = app.add_subcommand("homology", "first homology of the plumbed boundary");
  add_input(c_homology);
  auto* c_hgamma = app.add_subcommand("hgamma", "vertex group modulo node relations");
  add_input(c_hgamma);
  auto* c_group = app.add_subcommand("cover-group", "classification group of covering graphs");
  add_input(c_group);
  auto* c_universal = app.add_subcommand("universal", "universal abelian covering data");
  add_input(c_universal);
  auto* c_stats = app.add_subcommand("cover-stats", "invariants of the realized covering graph");
  add_input(c_stats);
  auto* c_modn = app.add_subcommand("modn", "quotient presentation modulo N");
  add_input(c_modn);
  c_modn->add_option("-N,--degree", N, "quotient degree")->required();
  auto* c_resolve = app.add_subcommand("resolve", "resolution graph of the N-fold cyclic cover");
  add_input(c_resolve);
  c_resolve->add_option("-N,--degree", N, "covering degree")->required();
  c_resolve->add_flag("--strip", flag_strip, "drop arrowheads and multiplicities");
  c_resolve->add_flag("--minimize", flag_minimize, "strip and blow down to the minimal good model");
  auto* c_minimize = app.add_subcommand("minimize", "blow down all contractible vertices");
  add_input(c_minimize);
  auto* c_monodromy = app.add_subcommand("monodromy", "zeta factors and Jordan block counts");
  add_input(c_monodromy);
  c_monodromy->add_flag("--neumann", flag_neumann, "include the splice crosscheck count");
  c_monodromy->add_option("--neumann-degree", neumann_n, "degree for the crosscheck (default 1)");
  auto* c_hj = app.add_subcommand("hj", "string insertion for one edge of the cover");
  c_hj->add_option("--m1", m1, "left multiplicity")->required();
  c_hj->add_option("--m2", m2, "right multiplicity")->required();
  c_hj->add_option("-N,--degree", N, "covering degree")->required();
  auto* c_dot = app.add_subcommand("dot", "Graphviz rendering of the document graph");
  add_input(c_dot);
  c_dot->add_flag("--realize", flag_realize, "render the realized covering graph instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*c_validate) {
      covres::Document doc = load(input);
      covres::ValidationReport report = covres::validate_graph(doc.graph);
      if (report.ok() && doc.covering) {
        try {
          covres::check_presentation(*doc.covering);
        } catch (const Error& e) {
          report.findings.push_back({"covering", e.what()});
        }
      }
      bool has_full_decorations = true;
      for (const auto& [v, data] : doc.graph.vertices) {
        if (!data.mult || (data.kind == covres::VertexKind::Node && !data.euler))
          has_full_decorations = false;
      }
      if (report.ok() && has_full_decorations && !covres::check_compatibility(doc.graph))
        report.findings.push_back({"compatibility", "multiplicity balance fails at some node"});
      json out = json::object();
      out["ok"] = report.ok();
      out["findings"] = findings_json(report.findings);
      print_json(out);
      return report.ok() ? 0 : 1;
    }
    if (*c_mult) {
      covres::Document doc = load(input);
      auto mults = covres::solve_multiplicities(doc.graph);
      for (const auto& [v, m] : mults) doc.graph.vertices.at(v).mult = m;
      std::cout << covres::serialize_document(doc.graph, doc.covering);
      return 0;
    }
    if (*c_euler) {
      covres::Document doc = load(input);
      auto eulers = covres::solve_euler_numbers(doc.graph);
      for (const auto& [v, e] : eulers) doc.graph.vertices.at(v).euler = e;
      std::cout << covres::serialize_document(doc.graph, doc.covering);
      return 0;
    }
    if (*c_homology) {
      covres::Document doc = load(input);
      print_json(group_json(covres::link_homology(doc.graph)));
      return 0;
    }
    if (*c_hgamma) {
      covres::Document doc = load(input);
      print_json(group_json(covres::h_gamma(doc.graph)));
      return 0;
    }
    if (*c_group) {
      covres::Document doc = load(input);
      if (!doc.covering) throw Error(ErrorCode::InconsistentCoveringData, "document has no covering block");
      covres::check_presentation(*doc.covering);
      covres::CoveringClassGroup cg = covres::classification_group(doc.graph, doc.covering->data);
      json out = group_json(cg.group);
      out["generator_images"] = json::object();
      for (const auto& [e, image] : cg.generator_images) {
        json coords = json::array();
        for (const auto& c : image) coords.push_back(big(c));
        out["generator_images"][std::to_string(e)] = coords;
      }
      print_json(out);
      return 0;
    }
    if (*c_universal) {
      covres::Document doc = load(input);
      covres::CoveringPresentation p = covres::universal_covering(doc.graph);
      std::cout << covres::serialize_document(doc.graph, p);
      return 0;
    }
    if (*c_stats) {
      covres::Document doc = load(input);
      covres::CoveringPresentation p = presentation_of(doc);
      covres::GraphStats s = covres::cover_stats(p);
      json out = json::object();
      out["components"] = s.num_components;
      out["cycle_rank"] = s.cycle_rank;
      out["total_genus"] = s.total_genus;
      out["arrows"] = s.num_arrows;
      print_json(out);
      return 0;
    }
    if (*c_modn) {
      covres::Document doc = load(input);
      covres::CoveringPresentation p = presentation_of(doc);
      covres::CoveringPresentation q = covres::mod_n(p, N);
      std::cout << covres::serialize_document(q.base, q);
      return 0;
    }
    if (*c_resolve) {
      covres::Document doc = load(input);
      covres::CoveringPresentation p = presentation_of(doc);
      covres::ResolveOutput out = covres::resolve_cyclic_cover(doc.graph, p, N);
      const covres::DecoratedGraph& result =
          flag_minimize ? covres::minimize(out.stripped) : (flag_strip ? out.stripped : out.embedded);
      json j = json::parse(covres::serialize_document(result));
      j["points_above"] = out.points_above;
      print_json(j);
      return 0;
    }
    if (*c_minimize) {
      covres::Document doc = load(input);
      std::cout << covres::serialize_document(covres::minimize(doc.graph));
      return 0;
    }
    if (*c_monodromy) {
      covres::Document doc = load(input);
      covres::CoveringPresentation p = presentation_of(doc);
      covres::JordanReport report = covres::jordan_report(doc.graph, p);
      covres::ZetaFactorization delta1 = covres::acampo_delta1(doc.graph, report.milnor_components);
      auto [dim1_upper, dim1_lower] = covres::dim_eigen_one(doc.graph);
      json out = json::object();
      out["milnor_components"] = report.milnor_components;
      out["delta1"] = map_json(delta1.factors);
      out["delta1_degree"] = delta1.degree();
      out["dims"] = map_json(report.dims);
      out["blocks2"] = map_json(report.blocks2);
      out["blocks1"] = map_json(report.blocks1);
      out["dim_eigen_one"] = json::array({dim1_upper, dim1_lower});
      out["finiteness"] = findings_json(covres::finiteness_checks(doc.graph, p, report).findings);
      if (flag_neumann) out["neumann"] = covres::neumann_crosscheck(doc.graph, neumann_n);
      print_json(out);
      return 0;
    }
    if (*c_hj) {
      covres::HJString s = covres::hj_resolve_edge(m1, m2, N);
      json out = json::object();
      out["ks"] = s.ks;
      out["mults"] = s.mults;
      out["left_mult"] = s.left_mult;
      out["right_mult"] = s.right_mult;
      out["t"] = s.t;
      out["n_prime"] = s.n_prime;
      out["lambda"] = s.lambda;
      print_json(out);
      return 0;
    }
    if (*c_dot) {
      covres::Document doc = load(input);
      if (flag_realize) {
        covres::CoveringPresentation p = presentation_of(doc);
        std::cout << covres::to_dot(covres::realize(p).cover);
      } else {
        std::cout << covres::to_dot(doc.graph);
      }
      return 0;
    }
  } catch (const Error& e) {
    if (json_errors) {
      json err = {{"error", covres::error_code_name(e.code())}, {"detail", e.what()}};
      std::cerr << err.dump() << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return e.code() == ErrorCode::ParseError ? 2 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
