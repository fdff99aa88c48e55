// Copyright 2026 The ctxkit Authors
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

#include <catch2/catch.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "ctxkit/io.hpp"

using namespace ctxkit;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(CTXKIT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe))
    out.append(buf, got);
  int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/ctxkit_test_") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("model files") {
  SECTION("exact values") {
    Model m = parse_model("model kcbs\nvalues 1/3 1/3 1/3\n");
    REQUIRE(m.kind == Model::Kind::exacts);
    REQUIRE(m.exacts.size() == 3);
    REQUIRE(m.exacts[0] == Rat64(1, 3));
  }
  SECTION("decimal values go to the float path") {
    Model m = parse_model("model x\nvalues 0.5 0.25 0.25\n");
    REQUIRE(m.kind == Model::Kind::reals);
    REQUIRE(m.reals[1] == Approx(0.25));
  }
  SECTION("bits") {
    Model m = parse_model("model x\nbits 0 1 1 0\n");
    REQUIRE(m.kind == Model::Kind::bits);
    REQUIRE(m.bits.to_string() == "0110");
  }
  SECTION("junk rejected") {
    REQUIRE_THROWS_AS(parse_model("model x\nbits 0 2\n"), Error);
    REQUIRE_THROWS_AS(parse_model("bits 0 1\n"), Error);
    REQUIRE_THROWS_AS(parse_model("model x\nvalues 1/3\nextra\n"), Error);
  }
  SECTION("round trip of a bits model") {
    std::string text = emit_model_bits("kcbs", Bitvec::from_string("0111101111"));
    Model m = parse_model(text);
    REQUIRE(m.bits.to_string() == "0111101111");
  }
}

TEST_CASE("builtin emission round trips") {
  for (const auto* name : {"kcbs", "chsh", "mansfield233"}) {
    AtomGraph g = builtin_scenario(name);
    AtomGraph back = parse_scenario(emit_builtin(name));
    REQUIRE(back.atoms == g.atoms);
    REQUIRE(back.cliques == g.cliques);
    // emission is bit-exact across calls
    REQUIRE(emit_builtin(name) == emit_builtin(name));
  }
  REQUIRE_THROWS_AS(builtin_scenario("nope"), Error);
}

TEST_CASE("cli: scenario emit and check pipeline") {
  auto emit = run_cli("scenario emit kcbs");
  REQUIRE(emit.exit_code == 0);
  REQUIRE(emit.out.find("scenario kcbs") == 0);
  std::string scen_path = write_temp("kcbs.scenario", emit.out);

  std::string b5_model = emit_model_bits("kcbs", [] {
    Bitvec b = Bitvec::all_ones(10);
    b.set(0, false);
    b.set(5, false);
    return b;
  }());
  std::string model_path = write_temp("b5.model", b5_model);

  SECTION("check prints the verdict and exits 0") {
    auto res = run_cli("check " + scen_path + " " + model_path);
    REQUIRE(res.exit_code == 0);
    REQUIRE(res.out.find("logically-contextual") == 0);
  }
  SECTION("paradox prints the three-event paradox") {
    auto res = run_cli("paradox " + scen_path + " " + model_path);
    REQUIRE(res.exit_code == 0);
    REQUIRE(res.out.find("{v9, !v1, !v6}") != std::string::npos);
  }
  SECTION("noncontextual model: paradox exits 1") {
    std::string uniform =
        "model kcbs\nvalues 1/3 1/3 1/3 1/3 1/3 1/3 1/3 1/3 1/3 1/3\n";
    std::string upath = write_temp("uniform.model", uniform);
    auto res = run_cli("paradox " + scen_path + " " + upath);
    REQUIRE(res.exit_code == 1);
    auto check = run_cli("check " + scen_path + " " + upath);
    REQUIRE(check.exit_code == 0);
    REQUIRE(check.out.find("noncontextual") == 0);
  }
  SECTION("bad input exits 2") {
    auto res = run_cli("check /tmp/ctxkit_no_such_file.scenario " + model_path);
    REQUIRE(res.exit_code == 2);
    std::string bad = write_temp("bad.model", "model kcbs\nbits 0 1\n");
    REQUIRE(run_cli("check " + scen_path + " " + bad).exit_code == 2);
  }
}

TEST_CASE("cli: values model runs the probabilistic pipeline") {
  // Born values of the built-in construction's designated state, truncated
  // to 12 decimals (still inside the default tolerance)
  std::string model =
      "model kcbs\n"
      "values 0 0.723606797750 0.276393202250 0.447213595500 "
      "0.276393202250 0 0.723606797750 0.170820393250 0.105572809000 "
      "0.170820393250\n";
  std::string mpath = write_temp("born.model", model);
  auto check = run_cli("check kcbs " + mpath);
  REQUIRE(check.exit_code == 0);
  REQUIRE(check.out.find("logically-contextual") == 0);

  auto px = run_cli("paradox kcbs " + mpath);
  REQUIRE(px.exit_code == 0);
  REQUIRE(px.out.find("{v9, !v1, !v6}") != std::string::npos);
  REQUIRE(px.out.find("sp: 0.105572809") != std::string::npos);
}

TEST_CASE("cli: strongly contextual model reports a certain paradox") {
  // the odd-cycle box: impossible exactly on the completion atoms
  std::string model = "model kcbs\nbits 0 1 1 0 1 0 1 0 1 0\n";
  std::string mpath = write_temp("box.model", model);
  auto check = run_cli("check kcbs " + mpath);
  REQUIRE(check.exit_code == 0);
  REQUIRE(check.out.find("strongly-contextual") == 0);

  auto px = run_cli("paradox kcbs " + mpath);
  REQUIRE(px.exit_code == 0);
  REQUIRE(px.out.find("certain (SP = 1)") != std::string::npos);
}

TEST_CASE("cli: enumerate with classes and zero filter") {
  auto res = run_cli("enumerate chsh --classes --zeros 3");
  REQUIRE(res.exit_code == 0);
  REQUIRE(res.out.find("64 vectors") != std::string::npos);
  REQUIRE(res.out.find("10 classes") != std::string::npos);

  auto kcbs = run_cli("--format machine enumerate kcbs --classes");
  REQUIRE(kcbs.exit_code == 0);
  REQUIRE(kcbs.out.find("count 21") != std::string::npos);
  REQUIRE(kcbs.out.find("classes 5") != std::string::npos);
}

TEST_CASE("cli: machine output is stable across runs") {
  auto a = run_cli("--format machine enumerate kcbs --classes --all");
  auto b = run_cli("--format machine enumerate kcbs --classes --all");
  REQUIRE(a.out == b.out);
  auto q1 = run_cli("--format machine quantum realize kcbs 0111101111 --seed 7");
  auto q2 = run_cli("--format machine quantum realize kcbs 0111101111 --seed 7");
  REQUIRE(q1.out == q2.out);
}

TEST_CASE("cli: quantum subcommands") {
  auto kc = run_cli("--format machine quantum kcbs-sp");
  REQUIRE(kc.exit_code == 0);
  REQUIRE(kc.out.find("sp 0.105572") != std::string::npos);

  auto hs = run_cli("--format machine quantum hardy-sp");
  REQUIRE(hs.exit_code == 0);
  REQUIRE(hs.out.find("sp 0.0901699") != std::string::npos);

  auto rz = run_cli("quantum realize kcbs 0111101111");
  REQUIRE(rz.exit_code == 0);
  REQUIRE(rz.out.find("realizable") == 0);

  auto nr = run_cli("quantum realize kcbs 0110101011");
  REQUIRE(nr.exit_code == 1);
  REQUIRE(nr.out.find("not-realizable") == 0);
}

TEST_CASE("cli: states and matrix") {
  auto st = run_cli("--format machine states kcbs");
  REQUIRE(st.exit_code == 0);
  REQUIRE(st.out.find("count 11") != std::string::npos);

  auto mx = run_cli("--format machine matrix kcbs");
  REQUIRE(mx.exit_code == 0);
  // 10 rows of 11 space-separated bits
  int rows = 0;
  for (char c : mx.out) rows += (c == '\n');
  REQUIRE(rows == 10);
}
