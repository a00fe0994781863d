#pragma once

// Command dispatch for the depthlab tool. run() is pure: input text in, JSON
// report (plus optional SVG) and exit code out, so tests can call it directly.
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 search
// budget exhausted.

#include <depthlab/cli_io.hpp>
#include <depthlab/helly.hpp>
#include <depthlab/sphere_heuristic.hpp>

#include <chrono>
#include <functional>
#include <map>

namespace depthlab::cli {

struct RunConfig {
  std::string command;     // depth, fit, median, partition, helly, reduce
  std::string subcommand;  // e.g. regression, deepest, birch
  std::string input;       // path, "-" for stdin, empty when unused
  std::string format = "csv";
  std::optional<std::size_t> dim;
  std::uint64_t seed = 1;
  bool exact = true;
  std::optional<std::size_t> budget;  // heuristic evaluations, orientations, or samples
  std::optional<std::string> svg;
  bool recheck = false;
  bool timing = false;
  std::optional<std::string> point;       // comma-separated coordinates
  std::optional<std::string> hyperplane;  // comma-separated coefficients a_1..a_d, a_0
  std::size_t n = 6;                      // helly family size
};

struct RunResult {
  int exit_code = 0;
  std::string out;  // JSON report (stdout)
  std::string err;  // diagnostics (stderr)
  std::string svg;  // empty unless requested and d = 2
};

namespace detail {

struct Context {
  const RunConfig& cfg;
  const std::string& text;
  json result = json::object();
  json verification = json::object();
  bool verified = true;
  bool budget_failure = false;
  std::optional<SiteSet> sites;
  std::optional<Svg> svg;

  Context(const RunConfig& c, const std::string& t) : cfg(c), text(t) {}

  const SiteSet& need_sites() {
    if (!sites) {
      if (cfg.input.empty()) throw InputError("--input is required for this command");
      sites = ingest_text(text, cfg.format, cfg.dim);
      if (cfg.exact && sites->dim() >= 4)
        throw InputError("exact mode supports d <= 3; pass --no-exact for sampled depth");
      if (cfg.svg && sites->dim() == 2) svg.emplace(*sites);
    }
    return *sites;
  }

  void check(const std::string& name, bool ok) {
    verification[name] = ok;
    verified = verified && ok;
  }

  DepthOptions depth_options() const {
    DepthOptions o;
    o.exact = cfg.exact;
    o.seed = cfg.seed;
    if (cfg.budget) o.samples = *cfg.budget;
    return o;
  }

  HomoPoint point_arg(std::size_t d, bool allow_homogeneous) {
    if (!cfg.point) throw InputError("--point is required");
    Vec v = parse_vector(*cfg.point, "--point");
    if (v.size() == d) return HomoPoint::affine(v);
    if (allow_homogeneous && v.size() == d + 1) {
      if (is_zero(v)) throw InputError("--point: zero vector");
      return HomoPoint(v);
    }
    throw InputError("--point: expected " + std::to_string(d) + " coordinates");
  }

  std::optional<HomoPoint> optional_point(std::size_t d) {
    if (!cfg.point) return std::nullopt;
    return point_arg(d, false);
  }

  Hyperplane hyperplane_arg(std::size_t d) {
    if (!cfg.hyperplane) throw InputError("--hyperplane is required (coefficients a_1..a_d, a_0)");
    Vec v = parse_vector(*cfg.hyperplane, "--hyperplane");
    if (v.size() != d + 1) throw InputError("--hyperplane: expected " + std::to_string(d + 1) + " coefficients");
    if (is_zero(v)) throw InputError("--hyperplane: zero vector");
    return Hyperplane(v);
  }
};

inline void report_depth(Context& c, const DepthCertificate& cert) {
  c.result = to_json(cert);
  if (c.cfg.recheck) c.check("recount_matches", recount(cert.witness, *c.sites) == cert.value);
  if (c.svg) c.svg->wedge(cert.witness);
}

inline void cmd_depth(Context& c) {
  const auto& sub = c.cfg.subcommand;
  if (sub == "undirected") {
    if (c.cfg.input.empty()) throw InputError("--input is required (rows a,b,c of lines a x + b y + c = 0)");
    auto rows = parse_rows(c.text, c.cfg.format);
    if (rows.empty()) throw InputError("no lines");
    if (rows.front().size() != 3) throw InputError("undirected depth expects rows a,b,c");
    std::vector<Hyperplane> lines;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i][0] == 0 && rows[i][1] == 0) throw InputError("row " + std::to_string(i + 1) + ": not a line");
      lines.emplace_back(rows[i]);
    }
    HomoPoint x = c.point_arg(2, false);
    auto cert = undirected_depth_2d(x, lines);
    c.result = to_json(cert);
    if (c.cfg.recheck) c.check("recount_matches", recount_ray(x, lines, *cert.ray_direction) == cert.value);
    return;
  }
  const SiteSet& s = c.need_sites();
  const std::size_t d = s.dim();
  if (sub == "regression") {
    Hyperplane h = c.hyperplane_arg(d);
    if (h.is_vertical()) throw InputError("--hyperplane: vertical hyperplanes have no regression depth");
    auto cert = regression_depth(h, s, c.depth_options());
    report_depth(c, cert);
    if (c.cfg.recheck && d == 2 && c.cfg.exact) c.check("sweep_matches", regression_depth_sweep_2d(h, s) == cert.value);
  } else if (sub == "location") {
    report_depth(c, location_depth(c.point_arg(d, false), s, c.depth_options()));
    if (c.svg) c.svg->marker(parse_vector(*c.cfg.point, "--point"));
  } else if (sub == "crossing") {
    HomoPoint x = c.point_arg(d, true);
    Hyperplane h = c.hyperplane_arg(d);
    if (incident(h, x)) throw InputError("crossing distance undefined: the point lies on the hyperplane");
    report_depth(c, crossing_distance(x, h, s, c.depth_options()));
  } else {
    throw InputError("unknown depth subcommand '" + sub + "' (regression, location, undirected, crossing)");
  }
}

inline json fit_json(const FitResult& f) {
  return {{"hyperplane", to_json(f.hyperplane.coeffs())},
          {"value", f.depth.value},
          {"exact", f.exact},
          {"generators", f.generators},
          {"candidates_examined", f.candidates_examined},
          {"certificate", to_json(f.depth)}};
}

inline void cmd_fit(Context& c) {
  const SiteSet& s = c.need_sites();
  const std::size_t d = s.dim(), bound = center_bound(s.size(), d);
  FitResult fit;
  if (c.cfg.subcommand == "deepest") {
    if (d < 2) throw InputError("fits need d >= 2");
    if (d <= 3) {
      fit = d == 2 ? deepest_line_2d(s) : deepest_hyperplane(s);
    } else {
      // sampled scoring over the same candidates; the reported depth is an upper estimate
      auto opts = c.depth_options();
      auto cands = fit_candidates(s);
      std::optional<std::size_t> best;
      for (const auto& cand : cands) {
        auto cert = regression_depth(cand.hyperplane, s, opts);
        if (!best || cert.value > *best) {
          best = cert.value;
          fit = FitResult{cand.hyperplane, cert, cands.size(), false, cand.generators};
        }
      }
    }
    c.result = fit_json(fit);
  } else if (c.cfg.subcommand == "heuristic") {
    if (d < 2 || d > 3) throw InputError("heuristic fit supports d in {2, 3}");
    auto h = heuristic_deep_hyperplane(s, c.cfg.budget.value_or(96), c.cfg.seed);
    fit = h.fit;
    c.result = fit_json(fit);
    c.result["fallback"] = h.fallback;
    if (h.fallback) c.result["fallback_reason"] = h.fallback_reason;
    // floating-point diagnostics of the pole search, flagged as such
    c.result["heuristic_diagnostics"] = {{"floating_point", true},
                                         {"evaluations", h.evaluations},
                                         {"best_objective", h.best.objective},
                                         {"rounding_distance", h.rounding_distance}};
  } else {
    throw InputError("unknown fit subcommand '" + c.cfg.subcommand + "' (deepest, heuristic)");
  }
  c.result["center_bound"] = bound;
  if (fit.exact) c.check("meets_center_bound", fit.depth.value >= bound);
  if (c.cfg.recheck) {
    c.check("recount_matches", recount(fit.depth.witness, s) == fit.depth.value);
    if (d == 2) c.check("sweep_matches", regression_depth_sweep_2d(fit.hyperplane, s) == fit.depth.value);
  }
  if (c.svg) c.svg->line(fit.hyperplane, "#2ca02c");
}

inline void cmd_median(Context& c) {
  const SiteSet& s = c.need_sites();
  if (s.dim() > 3) throw InputError("median supports d <= 3");
  auto m = tukey_median(s);
  c.result = {{"point", to_json(m.point.affine_coords())}, {"value", m.depth.value}, {"certificate", to_json(m.depth)}};
  std::size_t bound = center_bound(s.size(), s.dim());
  c.result["center_bound"] = bound;
  c.check("is_center_point", certify_center_point(m.point, s).is_center);
  if (c.cfg.recheck) c.check("recount_matches", recount(m.depth.witness, s) == m.depth.value);
  if (c.svg) {
    c.svg->wedge(m.depth.witness);
    c.svg->marker(m.point.affine_coords());
  }
}

inline void report_partition(Context& c, const Partition& p) {
  c.result["partition"] = to_json(p);
  c.result["parts"] = p.size();
  c.check("all_parts_verified", p.all_verified());
  if (c.cfg.recheck) {
    Partition again = p;
    verify_partition(again, *c.sites);
    c.check("reverified_from_scratch", again.report == p.report && again.all_verified());
  }
  if (c.svg) {
    if (p.witness_point) c.svg->marker(p.witness_point->affine_coords());
    if (p.witness_hyperplane) c.svg->line(*p.witness_hyperplane, "#2ca02c");
  }
}

inline void cmd_partition(Context& c) {
  const SiteSet& s = c.need_sites();
  const std::size_t d = s.dim();
  const auto& sub = c.cfg.subcommand;
  auto center = [&]() { return c.optional_point(d).value_or(tukey_median(s).point); };
  if (sub == "radon") {
    if (s.size() != d + 2) throw InputError("radon needs exactly d + 2 = " + std::to_string(d + 2) + " sites");
    report_partition(c, radon_partition(s));
  } else if (sub == "birch") {
    if (d != 2) throw InputError("birch needs d = 2");
    HomoPoint x = center();
    std::size_t k = std::min(location_depth(x, s).value, s.size() / 3);
    if (k == 0) throw InputError("the center has location depth 0 or fewer than 3 sites");
    auto red = reduce_to_3k(x, s, k);
    Partition p = birch_partition(x, red.sites, k);
    for (auto& part : p.parts)
      for (auto& i : part) i = red.kept[i];
    verify_partition(p, s);
    c.result["k"] = k;
    report_partition(c, p);
  } else if (sub == "peel") {
    if (d > 3) throw InputError("peel supports d <= 3");
    HomoPoint x = center();
    auto depth = location_depth(x, s).value;
    Partition p = greedy_simplex_peeling(x, s);
    c.result["center_depth"] = depth;
    report_partition(c, p);
    c.check("meets_peeling_bound", p.size() >= (depth + d - 1) / d);
  } else if (sub == "contractible") {
    if (d < 2 || d > 3) throw InputError("contractible supports d in {2, 3}");
    Partition p = contractible_partition_general(s);
    report_partition(c, p);
    std::size_t bound = (s.size() + d * (d + 1) - 1) / (d * (d + 1));
    c.result["bound"] = bound;
    c.check("meets_bound", p.size() >= bound);
  } else if (sub == "contractible3d") {
    if (d != 3) throw InputError("contractible3d needs d = 3");
    if (s.size() < 6) throw InputError("contractible3d needs at least 6 sites");
    Contractible3dOptions opts;
    opts.seed = c.cfg.seed;
    if (c.cfg.budget) opts.max_orientations = *c.cfg.budget;
    auto r = contractible_partition_3d(s, opts);
    c.result["target"] = r.target;
    c.result["orientations_tried"] = r.orientations_tried;
    if (!r.partition) {
      c.result["failure"] = r.failure;
      c.budget_failure = true;
      return;
    }
    report_partition(c, *r.partition);
    c.check("meets_bound", r.partition->size() >= r.target);
  } else if (sub == "tverberg") {
    if (s.size() > 10) throw InputError("tverberg brute force needs n <= 10; use birch or peel for lower bounds");
    HomoPoint x = center();
    auto r = tverberg_depth_bruteforce(x, s);
    c.result["value"] = r.value;
    report_partition(c, r.partition);
  } else {
    throw InputError("unknown partition subcommand '" + sub +
                     "' (radon, birch, peel, contractible, contractible3d, tverberg)");
  }
}

inline json quad_json(const LineQuad& q) {
  json a = json::array();
  for (const auto& l : q) a.push_back(to_json(l.coeffs()));
  return a;
}

inline void cmd_helly(Context& c) {
  if (c.cfg.n < 5) throw InputError("--n must be at least 5");
  HellyFamily f = build_helly_family(c.cfg.n);
  c.result["n"] = f.n;
  json ngon = json::array();
  for (const auto& v : f.ngon) ngon.push_back(to_json(v));
  c.result["ngon"] = ngon;
  json fams = json::array();
  for (const auto& q : f.families) fams.push_back(quad_json(q));
  c.result["families"] = fams;
  if (c.cfg.subcommand == "build") return;
  if (c.cfg.subcommand != "verify") throw InputError("unknown helly subcommand (build, verify)");
  auto r = verify_helly_failure(f);
  std::size_t nonempty = 0;
  json witnesses = json::array();
  for (const auto& w : r.leave_one_out) {
    if (w) ++nonempty;
    witnesses.push_back(w ? to_json(*w) : json(nullptr));
  }
  c.result["leave_one_out_nonempty"] = nonempty;
  c.result["full_intersection_empty"] = r.full_empty;
  c.result["leave_one_out_witnesses"] = witnesses;
  if (r.full_witness) c.result["full_intersection_witness"] = to_json(*r.full_witness);
  c.result["faces"] = {{"vertices", r.vertices}, {"edges", r.edges}, {"cells", r.cells}, {"simple", r.simple}};
  c.check("leave_one_out_nonempty", nonempty == f.n);
  c.check("full_intersection_empty", r.full_empty);
  c.check("euler_characteristic", r.euler_ok);
}

inline void cmd_reduce(Context& c) {
  if (c.cfg.subcommand != "loc2reg") throw InputError("unknown reduce subcommand (loc2reg)");
  const SiteSet& s = c.need_sites();
  HomoPoint x = c.point_arg(s.dim(), false);
  auto r = reduce_location_to_regression(x, s);
  auto reg = regression_depth(r.hyperplane, r.sites, c.depth_options());
  json sites = json::array();
  for (const auto& p : r.sites.sites()) sites.push_back(to_json(p.canonical()));
  c.result = {{"hyperplane", to_json(r.hyperplane.coeffs())},
              {"sites_homogeneous", sites},
              {"value", reg.value},
              {"certificate", to_json(reg)}};
  c.check("location_depth_preserved", location_depth(x, s, c.depth_options()).value == reg.value);
  if (c.cfg.recheck) c.check("recount_matches", recount(reg.witness, r.sites) == reg.value);
}

}  // namespace detail

inline RunResult run(const RunConfig& cfg, const std::string& input_text) {
  RunResult out;
  detail::Context ctx(cfg, input_text);
  static const std::map<std::string, std::function<void(detail::Context&)>> commands{
      {"depth", detail::cmd_depth},   {"fit", detail::cmd_fit},     {"median", detail::cmd_median},
      {"partition", detail::cmd_partition}, {"helly", detail::cmd_helly}, {"reduce", detail::cmd_reduce}};
  auto started = std::chrono::steady_clock::now();
  try {
    auto it = commands.find(cfg.command);
    if (it == commands.end()) throw InputError("unknown command '" + cfg.command + "'");
    it->second(ctx);
  } catch (const InputError& e) {
    out.err = std::string("error: ") + e.what() + "\n";
    out.exit_code = 2;
    return out;
  } catch (const std::invalid_argument& e) {
    out.err = std::string("error: ") + e.what() + "\n";
    out.exit_code = 2;
    return out;
  } catch (const DegenerateQuery& e) {
    out.err = std::string("error: ") + e.what() + "\n";
    out.exit_code = 2;
    return out;
  } catch (const std::exception& e) {
    out.err = std::string("verification error: ") + e.what() + "\n";
    out.exit_code = 1;
    return out;
  }
  json report;
  report["schema"] = "depthlab/1";
  report["command"] = cfg.subcommand.empty() ? cfg.command : cfg.command + " " + cfg.subcommand;
  if (ctx.sites)
    report["input"] = {{"digest", fnv1a64(input_text)}, {"n", ctx.sites->size()}, {"dim", ctx.sites->dim()}};
  else if (!cfg.input.empty())
    report["input"] = {{"digest", fnv1a64(input_text)}};
  report["seed"] = cfg.seed;
  report["exact"] = cfg.exact;
  report["result"] = ctx.result;
  report["verification"] = ctx.verification;
  report["verified"] = ctx.verified;
  report["status"] = ctx.budget_failure ? "budget_exhausted" : ctx.verified ? "ok" : "verification_failed";
  if (cfg.recheck) report["recheck"] = true;
  if (cfg.timing) {
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    report["timing_ms"] = ms;
  }
  out.out = report.dump(2) + "\n";
  if (ctx.svg) out.svg = ctx.svg->str();
  if (ctx.budget_failure) {
    out.exit_code = 3;
    out.err = "search budget exhausted: " + ctx.result.value("failure", std::string("no result")) + "\n";
  } else if (!ctx.verified) {
    out.exit_code = 1;
    out.err = "verification failed\n";
  }
  return out;
}

}  // namespace depthlab::cli
