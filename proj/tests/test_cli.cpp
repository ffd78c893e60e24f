#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "test_support.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(ARSOB_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string example(const std::string& name) {
  return arsob::test::data_dir() + "/examples/" + name;
}

std::string catalogue_file(const std::string& name) {
  return arsob::test::data_dir() + "/catalogue/" + name;
}

}  // namespace

TEST_CASE("decide --ade golden outputs and exit codes") {
  RunResult a1 = run_cli("decide --ade A1 --dim 3 --format json");
  CHECK(a1.exit_code == 0);
  auto j = nlohmann::ordered_json::parse(a1.out);
  CHECK(j.at("outcome") == "nodal_unobstructed");

  RunResult d5 = run_cli("decide --ade D5 --dim 7 --format json");
  CHECK(d5.exit_code == 0);
  auto jd = nlohmann::ordered_json::parse(d5.out);
  CHECK(jd.at("outcome") == "obstructed");
  bool reduced = false;
  for (const auto& step : jd.at("certificate"))
    if (step.at("kind") == "AuslanderSolbergReduction") reduced = true;
  CHECK(reduced);

  CHECK(run_cli("decide --ade A3 --dim 4").exit_code == 2);
  CHECK(run_cli("decide --ade X9").exit_code == 1);
  CHECK(run_cli("decide --ade A1 --ade-typo").exit_code != 0);
}

TEST_CASE("identical invocations are byte-identical") {
  for (const char* args : {"decide --ade E8 --dim 5 --format json", "ar show D5",
                           "ar reduce E8", "validate-catalogue"}) {
    RunResult first = run_cli(args);
    RunResult second = run_cli(args);
    CHECK(first.exit_code == second.exit_code);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("every branch-system example is exercised") {
  RunResult node = run_cli("decide --branches " + example("node.branches") + " --format json");
  CHECK(node.exit_code == 0);
  CHECK(nlohmann::ordered_json::parse(node.out).at("outcome") == "nodal_unobstructed");

  RunResult tangent = run_cli("decide --branches " + example("tangent.branches"));
  CHECK(tangent.exit_code == 0);
  CHECK(tangent.out.find("obstructed") != std::string::npos);

  RunResult shared = run_cli("decide --branches " + example("shared_branch.branches"));
  CHECK(shared.exit_code == 1);
  CHECK(shared.out.find("NotMutuallyPrime") != std::string::npos);
}

TEST_CASE("every curve-configuration example is exercised") {
  struct Expect {
    const char* file;
    int exit_code;
    const char* needle;
  };
  for (Expect e : {Expect{"chain3.curves", 0, "2-cycle"},
                   Expect{"single_nodal.curves", 0, "nodal_unobstructed"},
                   Expect{"single_unknown.curves", 2, "undetermined"},
                   Expect{"single_loop.curves", 0, "CurveLoop"}}) {
    RunResult r = run_cli("decide --curves " + example(e.file));
    CHECK_MESSAGE(r.exit_code == e.exit_code, e.file);
    CHECK_MESSAGE(r.out.find(e.needle) != std::string::npos, e.file);
  }
}

TEST_CASE("algebra info runs on every shipped presentation") {
  struct Golden {
    const char* file;
    const char* dim_line;
  };
  for (Golden g : {Golden{"commutative_square.alg", "dimension: 9"},
                   Golden{"dual_numbers.alg", "dimension: 2"},
                   Golden{"gentle_two_nodes.alg", "dimension: 9"},
                   Golden{"ka2.alg", "dimension: 3"},
                   Golden{"ka3_linear.alg", "dimension: 6"},
                   Golden{"kronecker.alg", "dimension: 4"},
                   Golden{"loop_cubed.alg", "dimension: 3"},
                   Golden{"nakayama_cycle3.alg", "dimension: 9"},
                   Golden{"semisimple_two.alg", "dimension: 2"},
                   Golden{"two_cycle_radsq.alg", "dimension: 4"}}) {
    RunResult r = run_cli("algebra info " + example(g.file));
    std::string context = std::string(g.file) + ": " + r.out;
    CHECK_MESSAGE(r.exit_code == 0, context);
    CHECK_MESSAGE(r.out.find(g.dim_line) != std::string::npos, context);
  }
  RunResult gentle = run_cli("algebra info " + example("gentle_two_nodes.alg"));
  CHECK(gentle.out.find("radical dims: 9 6 2 0") != std::string::npos);
  CHECK(gentle.out.find("is_gorenstein: yes") != std::string::npos);
}

TEST_CASE("algebra ext and gp subcommands") {
  RunResult ext = run_cli("algebra ext " + example("kronecker.alg") + " --simples 1 2 --deg 1");
  CHECK(ext.exit_code == 0);
  CHECK(ext.out.find("= 2") != std::string::npos);

  RunResult gp = run_cli("algebra gp " + example("gentle_two_nodes.alg") +
                         " --bound 2,2,2 --field F2");
  CHECK(gp.exit_code == 0);
  CHECK(gp.out.find("non-projective GP indecomposables: 4") != std::string::npos);
  CHECK(gp.out.find("components: 2") != std::string::npos);

  CHECK(run_cli("algebra gp " + example("gentle_two_nodes.alg") + " --bound 2,2 --field F2")
            .exit_code == 1);
  CHECK(run_cli("algebra gp " + example("gentle_two_nodes.alg") + " --bound 2,2,2 --field Z9")
            .exit_code == 1);
}

TEST_CASE("mesh and catalogue subcommands") {
  RunResult mesh = run_cli("mesh " + catalogue_file("A1.tq"));
  CHECK(mesh.exit_code == 0);
  CHECK(mesh.out.find("dimension: 4") != std::string::npos);

  RunResult show = run_cli("ar show A2");
  CHECK(show.exit_code == 0);
  CHECK(show.out.find("tau") != std::string::npos);
  RunResult dot = run_cli("ar show A2 --format dot");
  CHECK(dot.out.find("digraph") != std::string::npos);

  RunResult reduce = run_cli("ar reduce D5");
  CHECK(reduce.exit_code == 0);
  CHECK(reduce.out.find("remove (0,1) (2,3) -> A3") != std::string::npos);

  RunResult validate = run_cli("validate-catalogue");
  CHECK(validate.exit_code == 0);
  CHECK(validate.out.find("catalogue ok") != std::string::npos);

  CHECK(run_cli("ar show A99").exit_code == 1);
  CHECK(run_cli("mesh /nonexistent.tq").exit_code == 1);
}
