#include "linkeuler/cli.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace linkeuler;
using namespace linkeuler::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

bool has_line(const std::string& text, const std::string& line) {
  for (const auto& l : lines(text)) {
    if (l == line) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("parse_args") {
  const auto c = parse_args({"euler", "--ell", "2", "--dim", "4", "--max-degree", "9",
                             "--format", "csv"});
  CHECK(c.subcommand == Subcommand::euler);
  CHECK(c.dim == 4);
  CHECK(c.ell == 2);
  CHECK(c.max_degree == 9);
  CHECK(c.format == Format::csv);
  CHECK(c.series == SeriesKind::closed);

  const auto g = parse_args({"growth", "--ell", "3", "--dim", "4", "--max-degree", "120",
                             "--tail", "5"});
  CHECK(g.subcommand == Subcommand::growth);
  CHECK(g.tail == 5);
  CHECK(g.max_degree == 120);
  CHECK(g.series == SeriesKind::relative);

  const auto v = parse_args({"verify", "--prop", "5.2", "--ell-max", "4", "--j-max", "8"});
  CHECK(v.identities == std::vector<Identity>{Identity::stirling_alternating});

  const auto all = parse_args({"verify"});
  CHECK(all.identities.size() == 4);

  const auto a = parse_args({"euler", "--bounds", "--alpha", "3/2"});
  REQUIRE(a.alpha);
  CHECK(*a.alpha == Rational(3, 2));

  const auto d = parse_args({"table"});
  CHECK(d.max_degree == 30);
  CHECK(d.p_max == 5);
  CHECK(d.format == Format::text);
}

TEST_CASE("parse_args rejects bad input naming the flag") {
  auto message = [](std::vector<std::string> args) -> std::string {
    try {
      parse_args(args);
    } catch (const CommandLineError& e) {
      return e.what();
    }
    return "";
  };
  CHECK(message({"euler", "--dim", "2"}).find("--dim") != std::string::npos);
  CHECK(message({"euler", "--dim", "2"}).find(">= 3") != std::string::npos);
  CHECK(message({"euler", "--ell", "0"}).find("--ell") != std::string::npos);
  CHECK(message({"euler", "--alpha", "1"}).find("--alpha") != std::string::npos);
  CHECK(message({"euler", "--alpha", "x"}).find("--alpha") != std::string::npos);
  CHECK(message({"euler", "--max-degree", "-3"}).find("max-degree") != std::string::npos);
  CHECK(message({"euler", "--bogus"}).find("--bogus") != std::string::npos);
  CHECK(message({"euler", "--format", "xml"}) != "");
  CHECK(message({"verify", "--prop", "9.9"}).find("--prop") != std::string::npos);
  CHECK(message({}) != "");
  CHECK(message({"frobnicate"}) != "");
}

TEST_CASE("exit codes") {
  CHECK(invoke({"euler", "--dim", "2"}).code == 2);
  CHECK(invoke({"euler", "--unknown"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"euler"}).code == 0);
  // engine error: relative series for ell = 1 has no ratios
  const auto g = invoke({"growth", "--ell", "1"});
  CHECK(g.code == 1);
  CHECK(g.err.find("error:") != std::string::npos);
}

TEST_CASE("euler csv") {
  const auto r = invoke({"euler", "--ell", "2", "--dim", "4", "--max-degree", "9",
                         "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "degree,coefficient\n0,1\n3,3\n6,7\n9,15\n");
}

TEST_CASE("euler json") {
  const auto r = invoke({"euler", "--ell", "1", "--dim", "4", "--max-degree", "6",
                         "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["degrees"] == nlohmann::json::array({0, 3, 6}));
  CHECK(j["coefficients"] == nlohmann::json::array({1, 1, 1}));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"params", "degrees", "coefficients", "meta"});
  CHECK(j["meta"]["summed_equals_closed"] == true);
}

TEST_CASE("json prints big integers in full") {
  const auto r = invoke({"euler", "--ell", "4", "--dim", "4", "--max-degree", "90",
                         "--format", "json"});
  CHECK(r.code == 0);
  const auto csv = invoke({"euler", "--ell", "4", "--dim", "4", "--max-degree", "90",
                           "--format", "csv"});
  const auto last = lines(csv.out).back();
  const auto value = last.substr(last.find(',') + 1);
  CHECK(value.size() > 19);
  CHECK(r.out.find(value) != std::string::npos);
}

TEST_CASE("euler bounds") {
  const auto r = invoke({"euler", "--ell", "2", "--dim", "4", "--max-degree", "9",
                         "--format", "csv", "--bounds"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "degree,coefficient,window_lo,window_hi"));
  CHECK(has_line(r.out, "6,7,2,6"));
  CHECK(has_line(r.out, "9,15,3,9"));
  const auto given = invoke({"euler", "--ell", "2", "--max-degree", "9", "--format",
                             "csv", "--bounds", "--alpha", "3"});
  CHECK(has_line(given.out, "9,15,6,9"));
}

TEST_CASE("table csv") {
  const auto r = invoke({"table", "--ell", "2", "--dim", "4", "--p-max", "2",
                         "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).front() == "p,q,dim");
  CHECK(has_line(r.out, "2,3,4"));
  CHECK(has_line(r.out, "2,6,11"));
  CHECK(has_line(r.out, "0,0,1"));
  CHECK(has_line(r.out, "1,3,1"));
}

TEST_CASE("csv and json carry the same numbers") {
  for (const auto& sub : {std::string("euler"), std::string("relative"),
                          std::string("table")}) {
    const std::vector<std::string> base{sub, "--ell", "3", "--dim", "5", "--max-degree", "24"};
    auto csv_args = base;
    csv_args.insert(csv_args.end(), {"--format", "csv"});
    auto json_args = base;
    json_args.insert(json_args.end(), {"--format", "json"});
    const auto csv = lines(invoke(csv_args).out);
    const auto j = nlohmann::json::parse(invoke(json_args).out);
    REQUIRE(csv.size() == j["degrees"].size() + 1);
    for (std::size_t i = 1; i < csv.size(); ++i) {
      std::string rebuilt;
      const auto& deg = j["degrees"][i - 1];
      if (deg.is_array()) {
        rebuilt = deg[0].dump() + "," + deg[1].dump();
      } else {
        rebuilt = deg.dump();
      }
      rebuilt += "," + j["coefficients"][i - 1].dump();
      CHECK(csv[i] == rebuilt);
    }
  }
}

TEST_CASE("relative for ell = 1 is reported as trivial") {
  const auto csv = invoke({"relative", "--ell", "1", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "degree,coefficient\nALL,0\n");
  CHECK(csv.err.find("pair is trivial for ell=1") != std::string::npos);

  const auto text = invoke({"relative", "--ell", "1"});
  CHECK(has_line(text.out, "ALL 0"));
  CHECK(text.out.find("pair is trivial for ell=1") != std::string::npos);

  const auto json = invoke({"relative", "--ell", "1", "--format", "json"});
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["coefficients"].empty());
  CHECK(j["degrees"].empty());
  CHECK(j["meta"]["note"] == "pair is trivial for ell=1");
}

TEST_CASE("relative csv for ell = 2") {
  const auto r = invoke({"relative", "--ell", "2", "--dim", "4", "--max-degree", "12",
                         "--format", "csv"});
  CHECK(r.out == "degree,coefficient\n0,0\n3,1\n6,4\n9,11\n12,26\n");
}

TEST_CASE("verify") {
  const auto r = invoke({"verify", "--prop", "5.2", "--ell-max", "4", "--j-max", "8"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "OK 32/32 cases"));

  const auto lemma = invoke({"verify", "--lemma", "5.3", "--d-max", "8", "--samples", "100"});
  CHECK(lemma.code == 0);
  CHECK(has_line(lemma.out, "OK 109/109 cases"));

  const auto thm = invoke({"verify", "--identity", "closed-form", "--ell-max", "4",
                           "--dim", "5", "--max-degree", "40"});
  CHECK(thm.code == 0);
  CHECK(has_line(thm.out, "OK 44/44 cases"));

  const auto cor = invoke({"verify", "--corollary", "5.4", "--ell-max", "4", "--j-max", "12"});
  CHECK(cor.code == 0);
  CHECK(has_line(cor.out, "OK 52/52 cases"));

  const auto json = invoke({"verify", "--prop", "5.2", "--ell-max", "2", "--j-max", "2",
                            "--format", "json"});
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["meta"]["ok"] == true);
  CHECK(j["meta"]["total"] == 4);
  CHECK(j["coefficients"][0] == nlohmann::json::array({1, 1, 1}));
}

TEST_CASE("growth") {
  const auto r = invoke({"growth", "--ell", "2", "--dim", "4", "--max-degree", "90",
                         "--tail", "5", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["meta"]["u_ratio"].get<double>() - 2.0) < 1e-3);
  CHECK(j["degrees"].size() == 6);
  CHECK(j["degrees"].back() == 90);

  const auto csv = invoke({"growth", "--ell", "3", "--dim", "4", "--max-degree", "120",
                           "--series", "closed", "--format", "csv"});
  CHECK(lines(csv.out).front() == "u_ratio,x_rate");
  const auto row = lines(csv.out).at(1);
  CHECK(std::abs(std::stod(row.substr(0, row.find(','))) - 3.0) < 1e-2);
}

TEST_CASE("stirling subcommand") {
  const auto r = invoke({"stirling", "--kind", "second", "--n-max", "4", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).front() == "n,k,value");
  CHECK(has_line(r.out, "4,2,7"));
  const auto e = invoke({"stirling", "--kind", "eulerian2", "--n-max", "3", "--format", "csv"});
  CHECK(has_line(e.out, "3,1,8"));
  const auto f = invoke({"stirling", "--kind", "first", "--n-max", "4", "--format", "csv"});
  CHECK(has_line(f.out, "4,2,11"));
}

TEST_CASE("N = 3 warns") {
  const auto r = invoke({"euler", "--dim", "3", "--ell", "2"});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning") != std::string::npos);
  CHECK(invoke({"euler", "--dim", "4"}).err.empty());
}

TEST_CASE("rendering is deterministic") {
  for (const auto* fmt : {"text", "csv", "json"}) {
    const std::vector<std::string> args{"table", "--ell", "3", "--dim", "4", "--p-max", "4",
                                        "--format", fmt};
    CHECK(invoke(args).out == invoke(args).out);
  }
}

TEST_CASE("--output writes to a file") {
  const std::string path = "cli_output_test.csv";
  const auto r = invoke({"euler", "--ell", "2", "--max-degree", "9", "--format", "csv",
                         "--output", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == "degree,coefficient\n0,1\n3,3\n6,7\n9,15\n");
  std::remove(path.c_str());
}
