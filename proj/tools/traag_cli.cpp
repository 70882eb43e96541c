#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "traag/decision.hpp"
#include "traag/embedding.hpp"
#include "traag/presentation.hpp"

namespace {

using namespace traag;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::SyntaxError, "cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string component_desc(const ComponentClass& c) {
  std::string out{component_kind_name(c.kind)};
  if (c.kind == ComponentKind::Star || c.kind == ComponentKind::SinkStar)
    out += "(" + std::to_string(c.leaf_count) + ")";
  return out;
}

std::string join_sizes(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

int cmd_classify(const std::string& graph_path, bool machine) {
  MixedGraph g = parse_graph(read_file(graph_path));
  auto comps = connected_components(g);
  GraphShape shape = graph_shape(g);
  if (machine) {
    std::cout << "components=" << comps.size() << '\n';
    for (std::size_t i = 0; i < comps.size(); ++i)
      std::cout << "component" << i << '=' << component_desc(classify_component(comps[i]))
                << '\n';
    std::cout << "isolated=" << shape.isolated_count << '\n'
              << "stars=" << join_sizes(shape.star_sizes) << '\n'
              << "sink_stars=" << join_sizes(shape.sink_star_sizes) << '\n'
              << "other_trees=" << shape.other_tree_count << '\n'
              << "directed_other=" << shape.directed_other_count << '\n'
              << "cyclic=" << shape.cyclic_count << '\n';
    return 0;
  }
  if (comps.empty()) {
    std::cout << "empty\n";
    return 0;
  }
  for (std::size_t i = 0; i < comps.size(); ++i) {
    ComponentClass c = classify_component(comps[i]);
    std::cout << "component " << i << ": " << component_desc(c);
    if (c.kind == ComponentKind::Cyclic) {
      std::cout << (contains_triangle(comps[i])
                        ? "  (contains a triangle; embeds in no knot group)"
                        : "  (contains a cycle; embeds in no knot group)");
    }
    std::cout << '\n';
  }
  std::cout << "shape: " << shape_formula(shape) << '\n';
  return 0;
}

int cmd_decide(const std::string& graph_path, const std::string& jsj_path, bool machine) {
  MixedGraph g = parse_graph(read_file(graph_path));
  KnotJsj j = parse_jsj(read_file(jsj_path));
  Verdict v = decide(g, j);
  if (machine) {
    std::cout << render_machine(v);
  } else {
    std::cout << "embeds: " << (v.embeds ? "yes" : "no") << '\n'
              << "rule: " << v.rule << '\n'
              << "witness: "
              << (v.witness_available ? "constructible (see verify-embed)" : "none") << '\n';
    for (const auto& d : v.diagnostics) std::cout << "  - " << d << '\n';
  }
  return v.embeds ? 0 : 1;
}

int cmd_nf(const std::string& word_text, const std::string& selector, bool machine) {
  GroupSpec spec = GroupSpec::parse(selector);
  GroupWord w = parse_word(word_text, spec);
  AmalgamNormalForm nf = normal_form(w);

  // spelling of the syllable part only (without the central h power)
  AmalgamNormalForm tail = nf;
  tail.central_exp = 0;
  GroupWord tail_word = spell(tail);

  if (machine) {
    std::cout << "central_exp=" << nf.central_exp << '\n'
              << "syllables=" << nf.syllables.size() << '\n'
              << "word=" << to_string(tail_word) << '\n';
  } else {
    std::cout << "group: " << spec.selector() << '\n'
              << "input: " << to_string(w) << '\n'
              << "normal form: " << to_string(nf) << '\n'
              << "syllables: " << nf.syllables.size() << '\n';
  }
  return 0;
}

int cmd_verify_embed(int n, const std::string& selector, int bound, bool machine) {
  GroupSpec spec = GroupSpec::parse(selector);
  Assignment asg = build_assignment(n, spec);  // NotEvenType -> exit 2
  bool relators_ok = verify_relators(asg, sink_star_graph(n));
  if (machine) {
    std::cout << "relators=" << (relators_ok ? "ok" : "fail") << '\n';
    if (!relators_ok) return 1;
    InjectivityReport report = verify_injectivity_bounded(asg, n, bound);
    std::cout << render(report);
    return report.violations.empty() ? 0 : 1;
  }
  std::cout << "group: " << spec.selector() << " (p = " << spec.r() / 2 << ")\n"
            << "assignment: a -> x^" << spec.r() / 2 << ", b_i -> [x^" << spec.r() / 2
            << ", (yxy)^i] for i = 1.." << n << '\n'
            << "relators: " << (relators_ok ? "ok, all Klein relations hold exactly" : "FAILED")
            << '\n';
  if (!relators_ok) return 1;
  InjectivityReport report = verify_injectivity_bounded(asg, n, bound);
  std::cout << "ball |a-exp| + word length <= " << bound << ": checked " << report.checked
            << " elements, " << report.violations.size() << " violations\n";
  for (const SinkStarElement& e : report.violations)
    std::cout << "  kernel element " << to_string(e) << '\n';
  if (report.violations.empty())
    std::cout << "injectivity certified on the ball\n";
  return report.violations.empty() ? 0 : 1;
}

int cmd_abelianize(const std::string& graph_path, bool machine) {
  MixedGraph g = parse_graph(read_file(graph_path));
  AbelianInvariants inv = abelianization(traag_presentation(g));
  if (machine) {
    std::cout << "free_rank=" << inv.free_rank << '\n' << "torsion=";
    for (std::size_t i = 0; i < inv.torsion.size(); ++i) {
      if (i) std::cout << ',';
      std::cout << inv.torsion[i];
    }
    std::cout << '\n';
  } else {
    std::cout << "abelianization: " << render(inv) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted right-angled Artin groups in knot groups: classify mixed graphs, "
               "decide embeddability against a JSJ descriptor, and machine-verify the "
               "explicit sink-star embeddings."};
  app.require_subcommand(1);
  bool machine = false;
  app.add_flag("--machine", machine, "stable line-oriented key=value output");

  std::string graph_path, jsj_path, word_text, selector;
  int n = 1, bound = 4;

  auto* classify = app.add_subcommand("classify", "component classes and shape of a mixed graph");
  classify->add_option("graph", graph_path, "graph file")->required();

  auto* dec = app.add_subcommand(
      "decide", "does the group of the graph embed into the knot group? exit 0 yes, 1 no");
  dec->add_option("graph", graph_path, "graph file")->required();
  dec->add_option("jsj", jsj_path, "JSJ descriptor file")->required();

  auto* nf = app.add_subcommand("nf", "amalgam normal form of a word");
  nf->add_option("word", word_text, "word, e.g. 'x^2 y^-3'")->required();
  nf->add_option("--group", selector, "torus:r,s or cable:r,s (torus: x is the even fiber)")
      ->required();

  auto* verify = app.add_subcommand(
      "verify-embed", "check the sink-star embedding: relators exactly, injectivity on a ball");
  verify->add_option("--n", n, "number of sink-star leaves")->required();
  verify->add_option("--group", selector, "torus:r,s or cable:r,s with r even")->required();
  verify->add_option("--bound", bound, "ball radius |a-exp| + word length")
      ->required()
      ->check(CLI::NonNegativeNumber);

  auto* abel = app.add_subcommand("abelianize", "abelian invariants of the graph's group");
  abel->add_option("graph", graph_path, "graph file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*classify) return cmd_classify(graph_path, machine);
    if (*dec) return cmd_decide(graph_path, jsj_path, machine);
    if (*nf) return cmd_nf(word_text, selector, machine);
    if (*verify) return cmd_verify_embed(n, selector, bound, machine);
    if (*abel) return cmd_abelianize(graph_path, machine);
  } catch (const traag::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
