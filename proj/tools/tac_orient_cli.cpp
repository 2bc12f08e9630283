// Copyright 2026 The tac-orient Authors
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

// tac-orient: command-line front end over the C interface.
//
// Exit codes: 0 success, 1 the input lies outside an operation's domain or
// over a cap, 2 usage or parse errors.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "tacorient/tac_orient.h"

namespace {

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_of(tac_status status) {
  switch (status) {
    case TAC_ERR_PARSE:
    case TAC_ERR_INVALID_ARGUMENT:
      return 2;
    default:
      return 1;
  }
}

void check(tac_status status) {
  if (status != TAC_OK) throw Failure{exit_code_of(status), tac_last_error()};
}

struct GraphDeleter {
  void operator()(tac_graph* g) const { tac_graph_free(g); }
};
struct DigraphDeleter {
  void operator()(tac_digraph* d) const { tac_digraph_free(d); }
};
struct StringDeleter {
  void operator()(char* s) const { tac_string_free(s); }
};
using Graph = std::unique_ptr<tac_graph, GraphDeleter>;
using Digraph = std::unique_ptr<tac_digraph, DigraphDeleter>;
using Heads = std::vector<int32_t>;

std::string take(char* s) {
  std::unique_ptr<char, StringDeleter> owned(s);
  return owned.get();
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin),
            std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{2, "cannot open " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_graph(const std::string& path) {
  tac_graph* g = nullptr;
  check(tac_graph_parse(read_input(path).c_str(), &g));
  return Graph(g);
}

Digraph load_digraph(const std::string& path) {
  tac_digraph* d = nullptr;
  check(tac_digraph_parse(read_input(path).c_str(), &d));
  return Digraph(d);
}

Digraph oriented(const tac_graph* g, const Heads& heads) {
  tac_digraph* d = nullptr;
  check(tac_orient(g, heads.data(), &d));
  return Digraph(d);
}

std::int64_t tac_of(const tac_digraph* d) {
  std::int64_t value = 0;
  check(tac_total_arc_connectivity(d, &value));
  return value;
}

std::string fraction(std::int64_t p, std::int64_t q) {
  if (q == 0) return p == 0 ? "1/1" : std::to_string(p) + "/0";
  const std::int64_t g = std::gcd(p, q);
  return std::to_string(p / g) + "/" + std::to_string(q / g);
}

// Graph text, or DOT when dot is set.
void print_graph(const tac_graph* g, bool dot) {
  if (!dot) {
    char* s = nullptr;
    check(tac_graph_serialize(g, &s));
    std::cout << take(s);
    return;
  }
  // An undirected graph in DOT: orient each edge low to high, then relabel.
  const int32_t m = tac_graph_edge_count(g);
  Heads heads(m);
  for (int32_t e = 0; e < m; ++e) {
    int32_t u = 0;
    int32_t v = 0;
    check(tac_graph_edge(g, e, &u, &v));
    heads[e] = std::max(u, v);
  }
  char* s = nullptr;
  check(tac_digraph_to_dot(oriented(g, heads).get(), &s));
  std::string text = take(s);
  text.replace(0, std::string("digraph").size(), "graph");
  for (std::size_t at = text.find("->"); at != std::string::npos;
       at = text.find("->", at)) {
    text.replace(at, 2, "--");
  }
  std::cout << text;
}

void print_digraph(const tac_digraph* d, bool dot) {
  char* s = nullptr;
  check(dot ? tac_digraph_to_dot(d, &s) : tac_digraph_serialize(d, &s));
  std::cout << take(s);
}

struct Globals {
  int cap = 20;
  bool dot = false;
};

int run(int argc, char** argv) {
  CLI::App app{"Orientations maximizing total arc-connectivity.",
               "tac-orient"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  app.fallthrough();
  Globals globals;
  app.add_option("--cap", globals.cap,
                 "Largest edge count for exhaustive search")
      ->check(CLI::Range(0, 62))
      ->capture_default_str();
  app.add_flag("--dot", globals.dot, "Emit graphs and digraphs as DOT");

  // tac
  std::string tac_file;
  auto* tac_cmd = app.add_subcommand("tac", "Total arc-connectivity of a digraph");
  tac_cmd->add_option("digraph", tac_file, "Digraph file or -")->required();

  // lambda
  std::string lambda_file;
  int32_t lambda_u = 0;
  int32_t lambda_v = 0;
  bool lambda_directed = false;
  auto* lambda_cmd = app.add_subcommand("lambda", "Local connectivity λ(u, v)");
  lambda_cmd->add_option("file", lambda_file, "Graph or digraph file or -")
      ->required();
  lambda_cmd->add_option("u", lambda_u)->required();
  lambda_cmd->add_option("v", lambda_v)->required();
  lambda_cmd->add_flag("--directed", lambda_directed,
                       "Read a digraph and count arc-disjoint paths");

  // orient
  std::string orient_algo;
  std::string orient_file;
  bool orient_ratio = false;
  int32_t orient_max_odd = 0;
  auto* orient_cmd = app.add_subcommand("orient", "Orient a multigraph");
  orient_cmd
      ->add_option("algorithm", orient_algo,
                   "approx, wb, reach, exact, euler or robbins")
      ->required()
      ->check(CLI::IsMember(
          {"approx", "wb", "reach", "exact", "euler", "robbins"}));
  orient_cmd->add_option("graph", orient_file, "Graph file or -")->required();
  orient_cmd->add_flag("--ratio", orient_ratio,
                       "Also report tac over the exhaustive optimum");
  orient_cmd->add_option("--max-odd", orient_max_odd,
                         "Odd-vertex cap per component for wb and approx");

  // verify
  std::string verify_kind;
  std::string verify_graph;
  std::string verify_orientation;
  auto* verify_cmd = app.add_subcommand("verify", "Check an orientation");
  verify_cmd->add_option("property", verify_kind, "wb")
      ->required()
      ->check(CLI::IsMember({"wb"}));
  verify_cmd->add_option("graph", verify_graph)->required();
  verify_cmd->add_option("orientation", verify_orientation)->required();

  // decompose
  std::string decompose_kind;
  std::string decompose_file;
  auto* decompose_cmd = app.add_subcommand("decompose", "Decompose a multigraph");
  decompose_cmd->add_option("kind", decompose_kind, "2ecc")
      ->required()
      ->check(CLI::IsMember({"2ecc"}));
  decompose_cmd->add_option("graph", decompose_file)->required();

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Generate instances");
  gen_cmd->require_subcommand(1);
  gen_cmd->fallthrough();

  int32_t gadget_alpha = 0;
  int32_t gadget_beta = 0;
  auto* gen_gadget = gen_cmd->add_subcommand("gadget", "(A,B)-gadget");
  gen_gadget->add_option("A", gadget_alpha)->required();
  gen_gadget->add_option("B", gadget_beta)->required();

  int32_t tube_n = 0;
  int32_t tube_alpha = 0;
  auto* gen_tube = gen_cmd->add_subcommand("tube", "(N,ALPHA)-tube");
  gen_tube->add_option("N", tube_n)->required();
  gen_tube->add_option("ALPHA", tube_alpha)->required();

  int32_t tripled_t = 0;
  std::string tripled_orient;
  auto* gen_tripled = gen_cmd->add_subcommand("tripled-path", "Tripled path");
  gen_tripled->add_option("T", tripled_t)->required();
  gen_tripled
      ->add_option("--orient", tripled_orient,
                   "Emit the g1 (alternating) or g2 (forward) digraph")
      ->check(CLI::IsMember({"g1", "g2"}));

  int32_t random_n = 0;
  int32_t random_m = 0;
  std::uint64_t random_seed = 0;
  auto* gen_random = gen_cmd->add_subcommand("random", "Seeded random multigraph");
  gen_random->add_option("N", random_n)->required();
  gen_random->add_option("M", random_m)->required();
  gen_random->add_option("SEED", random_seed)->required();

  std::string oco_graph;
  std::string oco_labels;
  std::string oco_bounds;
  std::vector<int32_t> oco_exp = {5, 2};
  bool oco_no_validate = false;
  std::int64_t oco_max_vertices = 0;
  auto* gen_oco = gen_cmd->add_subcommand("oco", "OCO instance H; k on stderr");
  gen_oco->add_option("graph", oco_graph)->required();
  gen_oco->add_option("labels", oco_labels)->required();
  gen_oco->add_option("--bounds", oco_bounds, "Bound file; default from labels");
  gen_oco->add_option("--exp", oco_exp, "Tube exponents P Q")
      ->expected(2)
      ->capture_default_str();
  gen_oco->add_flag("--no-validate", oco_no_validate);
  gen_oco->add_option("--max-vertices", oco_max_vertices,
                      "Largest H that will be built");

  std::string red_graph;
  std::string red_labels;
  std::string red_bounds;
  std::string red_which = "g2";
  bool red_no_validate = false;
  auto* gen_reduction =
      gen_cmd->add_subcommand("reduction", "G1 or G2 from a labeled input");
  gen_reduction->add_option("graph", red_graph)->required();
  gen_reduction->add_option("labels", red_labels)->required();
  gen_reduction->add_option("bounds", red_bounds)->required();
  gen_reduction->add_option("--which", red_which)
      ->check(CLI::IsMember({"g1", "g2"}))
      ->capture_default_str();
  gen_reduction->add_flag("--no-validate", red_no_validate);

  // decide
  std::string decide_kind;
  std::string decide_graph;
  std::int64_t decide_k = 0;
  auto* decide_cmd = app.add_subcommand("decide", "Decide OCO exhaustively");
  decide_cmd->add_option("problem", decide_kind, "oco")
      ->required()
      ->check(CLI::IsMember({"oco"}));
  decide_cmd->add_option("graph", decide_graph)->required();
  decide_cmd->add_option("K", decide_k)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (const char* env = std::getenv("TAC_ORIENT_THREADS")) {
    int cap = std::atoi(env);
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    tac_set_thread_count(cap > 0 ? std::min(cap, std::max(hw, 1)) : 1);
  }

  if (*tac_cmd) {
    std::cout << tac_of(load_digraph(tac_file).get()) << "\n";
    return 0;
  }

  if (*lambda_cmd) {
    int32_t value = 0;
    if (lambda_directed) {
      check(tac_arc_connectivity(load_digraph(lambda_file).get(), lambda_u,
                                 lambda_v, &value));
    } else {
      check(tac_edge_connectivity(load_graph(lambda_file).get(), lambda_u,
                                  lambda_v, &value));
    }
    std::cout << value << "\n";
    return 0;
  }

  if (*orient_cmd) {
    Graph g = load_graph(orient_file);
    Heads heads(tac_graph_edge_count(g.get()));
    std::int64_t exact_value = -1;
    if (orient_algo == "approx") {
      check(tac_orient_approx(g.get(), orient_max_odd, heads.data()));
    } else if (orient_algo == "wb") {
      check(tac_orient_well_balanced(g.get(), orient_max_odd, heads.data()));
    } else if (orient_algo == "reach") {
      check(tac_orient_max_reach(g.get(), heads.data()));
    } else if (orient_algo == "exact") {
      check(tac_orient_exact(g.get(), globals.cap, heads.data(), &exact_value));
    } else if (orient_algo == "euler") {
      check(tac_orient_eulerian(g.get(), heads.data()));
    } else {
      check(tac_orient_robbins(g.get(), heads.data()));
    }
    Digraph d = oriented(g.get(), heads);
    const std::int64_t value = tac_of(d.get());
    if (orient_ratio && exact_value < 0) {
      Heads best(heads.size());
      check(tac_orient_exact(g.get(), globals.cap, best.data(), &exact_value));
    }
    if (globals.dot) {
      print_digraph(d.get(), true);
    } else {
      char* s = nullptr;
      check(tac_orientation_serialize(g.get(), heads.data(), &s));
      std::cout << take(s);
    }
    std::cerr << "tac=" << value << "\n";
    if (orient_ratio) {
      std::cerr << "optimum=" << exact_value << "\n";
      std::cerr << "ratio=" << fraction(value, exact_value) << "\n";
    }
    return 0;
  }

  if (*verify_cmd) {
    Graph g = load_graph(verify_graph);
    Heads heads(tac_graph_edge_count(g.get()));
    check(tac_orientation_parse(g.get(), read_input(verify_orientation).c_str(),
                                heads.data()));
    tac_wb_report report{};
    check(tac_verify_well_balanced(g.get(), heads.data(), &report));
    std::cout << (report.well_balanced ? "true" : "false") << "\n";
    if (!report.well_balanced) {
      std::cerr << "violation: u=" << report.u << " v=" << report.v
                << " lambda=" << report.lambda_graph
                << " forward=" << report.forward
                << " backward=" << report.backward << "\n";
    }
    return 0;
  }

  if (*decompose_cmd) {
    Graph g = load_graph(decompose_file);
    const int32_t n = tac_graph_vertex_count(g.get());
    const int32_t m = tac_graph_edge_count(g.get());
    std::vector<int32_t> class_of(n);
    std::vector<std::uint8_t> bridge(m);
    int32_t classes = 0;
    check(tac_two_edge_connected_components(g.get(), class_of.data(), &classes,
                                            bridge.data()));
    std::vector<std::vector<int32_t>> members(classes);
    for (int32_t v = 0; v < n; ++v) members[class_of[v]].push_back(v);
    std::cout << "classes " << classes << "\n";
    for (const auto& cls : members) {
      for (std::size_t i = 0; i < cls.size(); ++i) {
        std::cout << (i ? " " : "") << cls[i];
      }
      std::cout << "\n";
    }
    std::vector<int32_t> bridges;
    for (int32_t e = 0; e < m; ++e) {
      if (bridge[e]) bridges.push_back(e);
    }
    std::cout << "bridges " << bridges.size() << "\n";
    for (int32_t e : bridges) {
      int32_t u = 0;
      int32_t v = 0;
      check(tac_graph_edge(g.get(), e, &u, &v));
      std::cout << e << " " << u << " " << v << "\n";
    }
    return 0;
  }

  if (*gen_cmd) {
    tac_graph* raw = nullptr;
    if (*gen_gadget) {
      check(tac_gen_gadget(gadget_alpha, gadget_beta, &raw));
    } else if (*gen_tube) {
      check(tac_gen_tube(tube_n, tube_alpha, &raw));
    } else if (*gen_tripled) {
      check(tac_gen_tripled_path(tripled_t, &raw));
      Graph g(raw);
      if (tripled_orient.empty()) {
        print_graph(g.get(), globals.dot);
        return 0;
      }
      Heads heads(tac_graph_edge_count(g.get()));
      check(tac_tripled_path_orientation(
          tripled_t,
          tripled_orient == "g2" ? TAC_TRIPLED_FORWARD : TAC_TRIPLED_ALTERNATING,
          heads.data()));
      print_digraph(oriented(g.get(), heads).get(), globals.dot);
      return 0;
    } else if (*gen_random) {
      check(tac_gen_random(random_n, random_m, random_seed, &raw));
    } else if (*gen_oco) {
      Graph base = load_graph(oco_graph);
      const std::string labels = read_input(oco_labels);
      const std::string bounds = oco_bounds.empty() ? "" : read_input(oco_bounds);
      char* k = nullptr;
      check(tac_gen_oco(base.get(), labels.c_str(),
                        oco_bounds.empty() ? nullptr : bounds.c_str(),
                        oco_exp[0], oco_exp[1], oco_no_validate ? 0 : 1,
                        oco_max_vertices, &raw, &k));
      Graph h(raw);
      print_graph(h.get(), globals.dot);
      std::cerr << "k=" << take(k) << "\n";
      return 0;
    } else {
      Graph base = load_graph(red_graph);
      tac_graph* g1 = nullptr;
      tac_graph* g2 = nullptr;
      check(tac_gen_reduction(base.get(), read_input(red_labels).c_str(),
                              read_input(red_bounds).c_str(),
                              red_no_validate ? 0 : 1, &g1, &g2));
      Graph first(g1);
      Graph second(g2);
      print_graph(red_which == "g1" ? first.get() : second.get(), globals.dot);
      return 0;
    }
    Graph g(raw);
    print_graph(g.get(), globals.dot);
    return 0;
  }

  if (*decide_cmd) {
    int answer = 0;
    check(tac_decide_oco(load_graph(decide_graph).get(), decide_k, globals.cap,
                         &answer));
    std::cout << (answer ? "true" : "false") << "\n";
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.exit_code;
  }
}
