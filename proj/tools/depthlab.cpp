#include <depthlab/cli.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>

namespace {

using depthlab::cli::RunConfig;

void add_common(CLI::App* app, RunConfig& cfg, bool needs_input) {
  auto* in = app->add_option("--input,-i", cfg.input, "site file, or - for stdin");
  if (needs_input) in->required();
  app->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--dim", cfg.dim, "expected dimension");
  app->add_option("--seed", cfg.seed, "seed for randomized steps");
  app->add_flag("--exact,!--no-exact", cfg.exact, "exact depth (default) or sampled");
  app->add_option("--budget", cfg.budget, "evaluation, orientation, or sample budget");
  app->add_option("--svg", cfg.svg, "write an SVG picture (d = 2)");
  app->add_flag("--recheck", cfg.recheck, "re-verify results by an independent route");
  app->add_flag("--timing", cfg.timing, "include wall-clock time in the report");
  app->add_option("--point", cfg.point, "query point, comma-separated");
  app->add_option("--hyperplane", cfg.hyperplane, "coefficients a_1..a_d,a_0 of a_1 x_1 + ... + a_d x_d + a_0 = 0");
}

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact depth, deep fits and partitions"};
  app.require_subcommand(1);
  RunConfig cfg;

  struct Group {
    const char* name;
    const char* help;
    std::vector<std::pair<const char*, const char*>> subs;
    bool needs_input;
  };
  const std::vector<Group> groups{
      {"depth", "depth of a query",
       {{"regression", "regression depth of --hyperplane"},
        {"location", "location depth of --point"},
        {"undirected", "undirected depth of --point among input lines a,b,c"},
        {"crossing", "crossing distance between --point and --hyperplane"}},
       true},
      {"fit", "deep hyperplane fits",
       {{"deepest", "exact deepest hyperplane"}, {"heuristic", "sphere pole-search heuristic"}},
       true},
      {"median", "Tukey median", {}, true},
      {"partition", "partitions certifying depth lower bounds",
       {{"radon", "Radon partition of d + 2 sites"},
        {"birch", "planar Tverberg partition around --point (default: median)"},
        {"peel", "greedy simplex peeling around --point (default: median)"},
        {"contractible", "contractible partition around the deepest hyperplane"},
        {"contractible3d", "3D contractible partition by splitting planes"},
        {"tverberg", "exact Tverberg depth by brute force (n <= 10)"}},
       true},
      {"helly", "non-Helly family of contractible hulls",
       {{"build", "construct the family"}, {"verify", "construct and verify the family"}},
       false},
      {"reduce", "problem reductions", {{"loc2reg", "location depth of --point as regression depth"}}, true},
  };

  std::vector<std::pair<CLI::App*, std::pair<std::string, std::string>>> leaves;
  for (const auto& g : groups) {
    auto* top = app.add_subcommand(g.name, g.help);
    if (g.subs.empty()) {
      add_common(top, cfg, g.needs_input);
      leaves.push_back({top, {g.name, ""}});
      continue;
    }
    top->require_subcommand(1);
    for (const auto& [name, help] : g.subs) {
      auto* leaf = top->add_subcommand(name, help);
      add_common(leaf, cfg, g.needs_input);
      if (std::string(g.name) == "helly") leaf->add_option("--n", cfg.n, "polygon size (>= 5)");
      leaves.push_back({leaf, {g.name, name}});
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  for (const auto& [leaf, names] : leaves)
    if (leaf->parsed()) std::tie(cfg.command, cfg.subcommand) = names;

  std::string text;
  if (cfg.input == "-") {
    text = read_all(std::cin);
  } else if (!cfg.input.empty()) {
    std::ifstream f(cfg.input, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open " << cfg.input << "\n";
      return 2;
    }
    text = read_all(f);
  }

  auto r = depthlab::cli::run(cfg, text);
  std::cout << r.out;
  std::cerr << r.err;
  if (cfg.svg && r.exit_code != 2) {
    if (r.svg.empty()) {
      std::cerr << "note: SVG output needs planar sites; nothing written\n";
    } else {
      std::ofstream f(*cfg.svg);
      f << r.svg;
      if (!f) {
        std::cerr << "error: cannot write " << *cfg.svg << "\n";
        return 2;
      }
    }
  }
  return r.exit_code;
}
