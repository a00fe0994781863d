#include <depthlab/cli.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "support.hpp"

using namespace depthlab;
using namespace depthlab::cli;

namespace {

RunConfig config(std::string cmd, std::string sub) {
  RunConfig c;
  c.command = std::move(cmd);
  c.subcommand = std::move(sub);
  c.input = "-";
  return c;
}

json report(const RunResult& r) { return json::parse(r.out); }

struct Proc {
  int code;
  std::string out;
};

// runs the installed binary with stdout captured; stderr is discarded
Proc spawn(const std::string& args) {
  std::string cmd = std::string(DEPTHLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  Proc p{-1, {}};
  if (!f) return p;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), f)) > 0) p.out.append(buf.data(), got);
  int st = pclose(f);
  p.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return p;
}

std::string temp_file(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / ("depthlab_cli_" + name);
  std::ofstream(path) << body;
  return path.string();
}

std::string nine_sites() { return "0,0\n4,0\n0,4\n4,4\n2,1\n1,3\n3,2\n2,2\n1,1\n"; }

}  // namespace

TEST(Ingest, DecimalAndRationalFieldsAreExact) {
  auto s = ingest_text("0.5,1\n1/3,2/7\n", "csv", std::nullopt);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].affine_coords(), (Vec{Scalar(1, 2), Scalar(1)}));
  Scalar a(1, 3), b(2, 7);
  EXPECT_EQ(s[1].affine_coords(), (Vec{a, b}));
}

TEST(Ingest, CommentsBlankLinesAndJson) {
  auto csv = ingest_text("# header\n\n1,2\n  \n3,4\n", "csv", 2);
  auto js = ingest_text("[[1, \"2\"], [3, 4.0]]", "json", std::nullopt);
  ASSERT_EQ(csv.size(), 2u);
  ASSERT_EQ(js.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(csv[i].affine_coords(), js[i].affine_coords());
}

TEST(Ingest, Errors) {
  auto message = [](const std::string& text, const std::string& fmt, std::optional<std::size_t> d = {}) {
    try {
      ingest_text(text, fmt, d);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_EQ(message("", "csv"), "no sites");
  EXPECT_EQ(message("# only a comment\n", "csv"), "no sites");
  EXPECT_NE(message("1,2\n3\n", "csv").find("ragged input at row 2"), std::string::npos);
  EXPECT_NE(message("1,2\n3,x\n", "csv").find("row 2"), std::string::npos);
  EXPECT_NE(message("1,2\n", "csv", 3).find("dimension mismatch"), std::string::npos);
  EXPECT_NE(message("[[1,2],[3]]", "json").find("ragged"), std::string::npos);
  EXPECT_NE(message("{\"a\":1}", "json").find("array"), std::string::npos);
  EXPECT_NE(message("[[1,", "json").find("invalid JSON"), std::string::npos);
  EXPECT_NE(message("1,2", "xml").find("unknown input format"), std::string::npos);
}

TEST(Run, RegressionDepthOfCollinearSites) {
  auto c = config("depth", "regression");
  c.hyperplane = "1,-1,0";
  c.recheck = true;
  auto r = run(c, "0,0\n1,1\n2,2\n");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  auto j = report(r);
  EXPECT_EQ(j["result"]["value"], 3);
  EXPECT_EQ(j["verification"]["recount_matches"], true);
  EXPECT_EQ(j["verification"]["sweep_matches"], true);
  EXPECT_EQ(j["input"]["digest"], fnv1a64("0,0\n1,1\n2,2\n"));
}

TEST(Run, DeepestFitMeetsCenterBound) {
  auto c = config("fit", "deepest");
  c.recheck = true;
  auto j = report(run(c, nine_sites()));
  EXPECT_GE(j["result"]["value"].get<int>(), 3);
  EXPECT_EQ(j["result"]["center_bound"], 3);
  EXPECT_EQ(j["verified"], true);
}

TEST(Run, HellyVerify) {
  auto c = config("helly", "verify");
  c.input.clear();
  c.n = 6;
  auto r = run(c, "");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  auto j = report(r);
  EXPECT_EQ(j["result"]["leave_one_out_nonempty"], 6);
  EXPECT_EQ(j["result"]["full_intersection_empty"], true);
  EXPECT_EQ(j["result"]["families"].size(), 6u);
}

TEST(Run, EveryPartitionVerifies) {
  for (std::string sub : {"birch", "peel", "contractible", "tverberg"}) {
    auto c = config("partition", sub);
    c.recheck = true;
    auto r = run(c, nine_sites());
    ASSERT_EQ(r.exit_code, 0) << sub << ": " << r.err;
    auto j = report(r);
    EXPECT_EQ(j["result"]["partition"]["all_verified"], true) << sub;
    EXPECT_EQ(j["verification"]["reverified_from_scratch"], true) << sub;
  }
  auto radon = run(config("partition", "radon"), "0,0\n4,0\n0,4\n1,1\n");
  ASSERT_EQ(radon.exit_code, 0) << radon.err;
  EXPECT_EQ(report(radon)["result"]["parts"], 2);
}

TEST(Run, LocationReductionPreservesDepth) {
  auto c = config("reduce", "loc2reg");
  c.point = "2,2";
  auto j = report(run(c, nine_sites()));
  EXPECT_EQ(j["verification"]["location_depth_preserved"], true);
  auto loc = config("depth", "location");
  loc.point = "2,2";
  EXPECT_EQ(report(run(loc, nine_sites()))["result"]["value"], j["result"]["value"]);
}

TEST(Run, UndirectedDepthReadsLines) {
  auto c = config("depth", "undirected");
  c.point = "1,1";
  c.recheck = true;
  auto r = run(c, "1,0,0\n0,1,0\n1,1,-5\n");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(report(r)["result"]["value"], 1);
}

TEST(Run, ExitCodes) {
  EXPECT_EQ(run(config("median", ""), "").exit_code, 2);
  EXPECT_EQ(run(config("depth", "location"), nine_sites()).exit_code, 2);  // no --point
  auto vertical = config("depth", "regression");
  vertical.hyperplane = "1,0,-2";
  EXPECT_EQ(run(vertical, nine_sites()).exit_code, 2);
  auto high = config("median", "");
  EXPECT_EQ(run(high, "1,2,3,4\n").exit_code, 2);
  EXPECT_EQ(run(config("partition", "radon"), nine_sites()).exit_code, 2);
  auto budget = config("partition", "contractible3d");
  budget.budget = 0;
  auto r = run(budget, "0,0,0\n1,0,0\n0,1,0\n0,0,1\n1,1,1\n2,1,0\n3,3,1\n");
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_EQ(report(r)["status"], "budget_exhausted");
  EXPECT_EQ(run(config("nope", ""), "").exit_code, 2);
}

TEST(Run, SampledModeInHighDimension) {
  testsupport::Gen g(7);
  std::string text;
  for (int i = 0; i < 12; ++i) {
    auto v = g.ivec(4, 9);
    text += to_string(v[0]) + "," + to_string(v[1]) + "," + to_string(v[2]) + "," + to_string(v[3]) + "\n";
  }
  auto c = config("depth", "location");
  c.point = "0,0,0,0";
  EXPECT_EQ(run(c, text).exit_code, 2);
  c.exact = false;
  c.recheck = true;
  auto r = run(c, text);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  auto j = report(r);
  EXPECT_EQ(j["exact"], false);
  EXPECT_EQ(j["result"]["exact"], false);
  EXPECT_EQ(j["verification"]["recount_matches"], true);
}

TEST(Run, DeterministicAcrossRuns) {
  for (const auto& [cmd, sub] : std::vector<std::pair<std::string, std::string>>{
           {"fit", "heuristic"}, {"median", ""}, {"partition", "contractible"}}) {
    auto c = config(cmd, sub);
    c.seed = 11;
    EXPECT_EQ(run(c, nine_sites()).out, run(c, nine_sites()).out) << cmd << " " << sub;
  }
}

TEST(Run, SvgForPlanarInput) {
  auto c = config("median", "");
  c.svg = "unused";
  auto r = run(c, nine_sites());
  EXPECT_EQ(r.svg.rfind("<svg", 0), 0u);
  EXPECT_NE(r.svg.find("<polygon"), std::string::npos);
  EXPECT_EQ(std::count(r.svg.begin(), r.svg.end(), '\n') > 9, true);
}

TEST(Binary, OutputIsByteIdenticalAndJsonOnStdout) {
  auto path = temp_file("nine.csv", nine_sites());
  auto a = spawn("fit deepest --input " + path);
  auto b = spawn("fit deepest --input " + path);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_GE(json::parse(a.out)["result"]["value"].get<int>(), 3);
}

TEST(Binary, ExitCodesAndStdin) {
  auto empty = temp_file("empty.csv", "");
  EXPECT_EQ(spawn("median --input " + empty).code, 2);
  EXPECT_EQ(spawn("bogus").code, 2);
  EXPECT_EQ(spawn("depth regression --hyperplane 1,-1,0 --input - < /dev/null").code, 2);
  auto col = temp_file("col.csv", "0,0\n1,1\n2,2\n");
  auto p = spawn("depth regression --hyperplane 1,-1,0 --input - < " + col);
  ASSERT_EQ(p.code, 0);
  EXPECT_EQ(json::parse(p.out)["result"]["value"], 3);
  auto h = spawn("helly verify --n 6");
  ASSERT_EQ(h.code, 0);
  EXPECT_EQ(json::parse(h.out)["result"]["leave_one_out_nonempty"], 6);
}

TEST(Binary, WritesSvg) {
  auto path = temp_file("svg.csv", nine_sites());
  auto svg = (std::filesystem::temp_directory_path() / "depthlab_cli_out.svg").string();
  std::filesystem::remove(svg);
  ASSERT_EQ(spawn("median --input " + path + " --svg " + svg).code, 0);
  std::ifstream f(svg);
  std::string first;
  std::getline(f, first);
  EXPECT_EQ(first.rfind("<svg", 0), 0u);
}
