#include <doctest.h>

#include <sstream>

#include "dispatch.hpp"
#include "support.hpp"

using namespace support;
namespace cli = gsp4h::cli;

namespace {

struct Run {
  int code = -1;
  std::string out, err;
  cli::json doc() const { return cli::json::parse(out); }
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "gsp4h");
  std::istringstream in(input);
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("report envelope") {
  const auto r = run({"kernel", "--input", "-"}, R"({"a": "2", "b": "3"})");
  REQUIRE(r.code == 0);
  const auto d = r.doc();
  CHECK(d["schema"] == 1);
  CHECK(d["command"] == "kernel");
  CHECK(d["mode"] == "rational");
  CHECK(d["status"] == "ok");
  CHECK_FALSE(d["citations"].empty());
  CHECK(d["payload"]["dim"] == 17);
  CHECK(d["payload"]["rank"] == 7);
  REQUIRE(d["payload"]["basis"].size() == 17);
  // every basis row lies in the kernel
  const auto K = kernel_basis(Q(2), Q(3)).space;
  for (const auto& row : d["payload"]["basis"]) {
    Vec<Q> v;
    for (const auto& s : row) v.push_back(Q::parse(s.get<std::string>()));
    CHECK(K.contains(v));
  }
  // sectioned input gives the same result
  const auto s = run({"kernel", "--input", "-"}, R"({"schema": 1, "phi_module": {"a": "2", "b": "3"}})");
  CHECK(s.out == r.out);
}

TEST_CASE("symbolic matrices match the displayed ones") {
  const auto r = run({"matrices", "--symbolic"});
  REQUIRE(r.code == 0);
  const auto d = r.doc();
  CHECK(d["mode"] == "symbolic");
  const auto want = displayed_matrices(R::var_a(), R::var_b());
  const auto& got = d["payload"]["matrices"];
  REQUIRE(got.size() == want.size());
  for (size_t k = 0; k < want.size(); ++k) {
    CHECK(got[k]["name"] == want[k].first);
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j)
        CHECK(R::parse(got[k]["matrix"][i][j].get<std::string>()) == want[k].second(i, j));
  }
}

TEST_CASE("recover round trip") {
  const auto r = run({"recover", "--input", "-"}, R"({"a": "-7/3", "b": "5"})");
  REQUIRE(r.code == 0);
  const auto p = r.doc()["payload"];
  CHECK(p["a"] == "-7/3");
  CHECK(p["b"] == "5");
  CHECK(p["round_trip"] == true);
}

TEST_CASE("exit codes") {
  const auto bad = run({"kernel", "--input", "-"}, R"({"a": "2", "b":)");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("ParseError") != std::string::npos);
  const auto missing = run({"kernel", "--input", "-"}, "{}");
  CHECK(missing.code == 2);
  CHECK(missing.doc()["status"] == "invalid");
  const auto deg = run({"kernel", "--input", "-"}, R"({"a": "1", "b": "-1"})");
  CHECK(deg.code == 3);
  CHECK(deg.doc()["status"] == "degenerate");
  CHECK(deg.doc()["payload"]["error"] == "DegenerateIntersection");
  CHECK(run({"frobnicate"}).code == 2);
  const auto dot = run({"kernel", "--input", "-", "--format", "dot"}, R"({"a": "2", "b": "3"})");
  CHECK(dot.code == 2);
  CHECK(dot.doc()["status"] == "ok");
  const auto val = run({"validate", "--input", "-"}, R"({"a": "1", "b": "-1", "p": 5, "alphas": ["1", "2", "3", "6"], "weights": [3, 2, 1, 0]})");
  CHECK(val.code == 3);
  const auto val2 =
      run({"validate", "--input", "-"}, R"({"a": "2", "b": "3", "p": 5, "alphas": ["1", "2", "3", "4"], "weights": [3, 2, 1, 0]})");
  CHECK(val2.code == 2);
  CHECK(run({"--version"}).code == 0);
}

TEST_CASE("socle output") {
  const auto d = run({"socle", "pimin", "--format", "dot"});
  CHECK(d.code == 0);
  CHECK(d.out.rfind("digraph \"pimin\"", 0) == 0);
  const auto t = run({"socle", "PS1", "id", "--format", "text"});
  CHECK(t.code == 0);
  CHECK(t.out.find("layer 1: C({1},s1) C({1,2},s2)") != std::string::npos);
  CHECK(run({"socle", "pi7"}).code == 2);
  CHECK(run({"socle", "PS1"}).code == 2);
}

TEST_CASE("ledger and hecke") {
  const auto l = run({"ledger"});
  CHECK(l.code == 0);
  CHECK(l.doc()["payload"]["consistent"] == true);
  const auto h = run({"hecke", "--input", "-"}, R"({"l": 2, "c0": "1", "c1": "0", "c2": "0"})");
  CHECK(h.code == 0);
  CHECK(h.doc()["payload"]["frobenius"]["text"] == "T^4 + 10*T^2 + 64");
  const auto bad = run({"hecke", "--input", "-"}, R"({"l": 2, "coeffs": ["1", "0", "10", "0", "63"], "sim": "8"})");
  CHECK(bad.code == 2);
}

TEST_CASE("batch and sweep") {
  const auto e = run({"batch", "--input", "-"}, "[]");
  CHECK(e.code == 0);
  CHECK(e.doc() == cli::json::array());
  const auto mixed = run({"batch", "--input", "-"}, R"([
    {"command": "kernel", "input": {"a": "2", "b": "3"}},
    {"command": "kernel", "input": {"a": "1", "b": "-1"}},
    {"command": "batch", "input": []}
  ])");
  CHECK(mixed.code == 3);
  const auto arr = mixed.doc();
  REQUIRE(arr.size() == 3);
  CHECK(arr[0]["status"] == "ok");
  CHECK(arr[1]["status"] == "degenerate");
  CHECK(arr[2]["status"] == "invalid");

  const auto sw = run({"sweep", "--seed", "7"});
  REQUIRE(sw.code == 0);
  CHECK(sw.doc().size() == 100);
  CHECK(run({"sweep", "--seed", "7"}).out == sw.out);
  CHECK(run({"sweep", "--seed", "8"}).out != sw.out);
  const auto res = run({"batch", "--input", "-"}, sw.out);
  CHECK(res.code == 0);
  for (const auto& r : res.doc()) {
    CHECK(r["status"] == "ok");
    CHECK(r["payload"]["round_trip"] == true);
  }
}

TEST_CASE("deterministic output") {
  for (const auto& cmd : {"glue", "matrices", "flag", "kernel"}) {
    const std::string in = R"({"a": "3/2", "b": "-4"})";
    CHECK(run({cmd, "--input", "-"}, in).out == run({cmd, "--input", "-"}, in).out);
  }
  const auto sym = run({"kernel", "--symbolic"});
  CHECK(sym.code == 0);
  CHECK(sym.doc()["payload"]["dim"] == 17);
}
