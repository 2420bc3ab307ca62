#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "cellalg/errors.hpp"
#include "cellalg/oracle.hpp"
#include "cellalg/spec_file.hpp"
#include "cli.hpp"
#include "json.hpp"

using namespace cellalg;

namespace {

const std::filesystem::path kData = CELLALG_TEST_DATA;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return (kData / name).string(); }

std::size_t error_line(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("parse_spec example") {
  const auto spec = parse_spec("field Q\nlayer\nvars x\nideal x^2 - x\nvdim 1\nphi [[1]]\nend\n");
  REQUIRE(spec.layers.size() == 1);
  CHECK(spec.layers[0]->vdim == 1);
  CHECK(dim_K(*spec.layers[0]->ring) == 2u);
  CHECK(spec.field == FieldSpec::rationals());
}

TEST_CASE("parse_spec errors") {
  CHECK_THROWS_AS(parse_spec("field Q\nlayer\nvars x\nideal x\nvdim 2\nphi [[1]]\nend\n"), ParseError);
  try {
    parse_spec("field Q\nlayer\nvars x\nideal x\nvdim 2\nphi [[1]]\nend\n");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("phi has 1 rows but vdim is 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_spec("field Fp 6\n"), ParseError);
  CHECK(error_line("field Fp 6\n") == 1);
  CHECK(error_line("# c\nfield Q\nlayer\nvars x\nideal x +\nvdim 1\nphi [[1]]\nend\n") == 5);
  CHECK(error_line("field Q\nlayer\nvars x\nideal y\nvdim 1\nphi [[1]]\nend\n") == 4);
  CHECK(error_line("field Q\nlayer\nvars x\nideal x\nvdim 1\nphi [[1]]\n") != 0);
  CHECK(error_line("field Q\nlayer\nvars x\nideal x\nvdim 1\nphi [[1, 2]]\nend\n") == 6);
  CHECK(error_line("field Q\nbogus\n") == 2);
  CHECK(error_line("field Q\n") != 0);
  CHECK(error_line("field Q\nlayer\nvars x, x\nideal x\nvdim 1\nphi [[1]]\nend\n") == 3);
  CHECK_THROWS_AS(parse_spec_file(data("missing.cell")), SpecIoError);
}

TEST_CASE("multi-line phi and sigma") {
  const auto spec = parse_spec(
      "field Q\nlayer\n  vars x\n  ideal x^2 - 1\n  vdim 2\n  phi [[1, x],\n       [-x, 1]]\n  sigma x -> -x\nend\n");
  REQUIRE(spec.layers.size() == 1);
  CHECK(spec.layers[0]->sigma[0].to_string() == "-x");
  CHECK(validate_spec(spec).ok());
}

TEST_CASE("print/parse round trip") {
  for (const auto* name : {"one_layer_x2.cell", "two_layers.cell", "fp5_frobenius.cell", "zero_divisor_phi.cell",
                           "polynomial_ring.cell", "sign_involution.cell"}) {
    const auto spec = parse_spec_file(data(name));
    const std::string text = print_spec(spec);
    const auto again = parse_spec(text);
    CHECK(specs_identical(spec, again));
    CHECK(print_spec(again) == text);
  }
  for (std::size_t i = 0; i < 50; ++i) {
    const auto spec = oracle::random_instance(oracle::corpus_seed(5, i), oracle::RandomParams{});
    CHECK(specs_identical(spec, parse_spec(print_spec(spec))));
  }
}

TEST_CASE("run_command examples") {
  auto r = run({"check", "semisimple", data("one_layer_x2.cell")});
  CHECK(r.code == 0);
  CHECK(r.out.find("NO") != std::string::npos);
  CHECK(run({"check", "semisimple", data("missing.cell")}).code == 1);
  auto c = run({"corpus", "--seed", "7", "--count", "100"});
  CHECK(c.code == 0);
  CHECK(c.out == "100/100 oracle agreements\n");
}

TEST_CASE("exit codes never encode the answer") {
  CHECK(run({"check", "semisimple", data("idempotent_layer.cell")}).code == 0);
  CHECK(run({"check", "jacobson", data("one_layer_x2.cell")}).code == 0);
  CHECK(run({"check", "jacobson", data("one_layer_x2.cell")}).out.find("UNKNOWN") != std::string::npos);
  CHECK(run({"check", "artinian", data("polynomial_ring.cell")}).code == 0);
}

TEST_CASE("error exit codes") {
  CHECK(run({"check", "semisimple", data("bad_shape.cell")}).code == 1);
  auto inv = run({"validate", data("invalid_unit_ideal.cell")});
  CHECK(inv.code == 2);
  CHECK(inv.err.find("nonzero-ring") != std::string::npos);
  CHECK(run({"check", "noetherian", data("idempotent_layer.cell")}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"radical", data("fp5_frobenius.cell")}).code == 2);
  CHECK(run({"validate", data("idempotent_layer.cell")}).code == 0);
}

TEST_CASE("budget exceeded exit code") {
  setenv("CELLALG_GB_MAX_PAIRS", "1", 1);
  auto r = run({"check", "semisimple", data("budget.cell")});
  unsetenv("CELLALG_GB_MAX_PAIRS");
  CHECK(r.code == 3);
  CHECK(r.err.find("budget") != std::string::npos);
  cli::apply_budget_from_environment();
  CHECK(run({"check", "semisimple", data("budget.cell")}).code == 0);
}

TEST_CASE("json schema") {
  auto r = run({"check", "semisimple", data("zero_divisor_phi.cell"), "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["property"] == "semisimple");
  CHECK(j["answer"] == "NO");
  CHECK(j["citedStatement"].is_string());
  const auto& l = j["layers"][0];
  CHECK(l["index"] == 1);
  CHECK(l["dimK"] == 2);
  CHECK(l["radical"]["answer"] == "true");
  CHECK(l["radical"]["minimal_polynomials"].is_array());
  CHECK(l["detPhi"] == "x");
  CHECK(l["detPhiUnit"] == false);
  CHECK(l["witness"] == "x - 1");

  auto rep = run({"report", data("two_layers.cell"), "--json"});
  REQUIRE(rep.code == 0);
  const auto jr = nlohmann::json::parse(rep.out);
  CHECK(jr["verdicts"].size() == 5);
  CHECK(jr["oracle"]["agrees"] == true);
  CHECK(jr["asymptotic"]["dimK"] == 9);
  CHECK(run({"report", data("two_layers.cell"), "--json"}).out == rep.out);

  auto inf = nlohmann::json::parse(run({"check", "artinian", data("polynomial_ring.cell"), "--json"}).out);
  CHECK(inf["layers"][0]["dimK"] == "infinite");
  CHECK(inf["answer"] == "NO");
}

TEST_CASE("other commands") {
  auto a = run({"asymptotic", data("two_layers.cell")});
  CHECK(a.code == 0);
  CHECK(a.out.find("M_1(Q) + M_2(Q[x]/(x^2 - 2))") != std::string::npos);
  auto rad = run({"radical", data("zero_divisor_phi.cell")});
  CHECK(rad.code == 0);
  CHECK(rad.out.find("radical dimK 3") != std::string::npos);
  auto sep = run({"corpus", "--seed", "3", "--count", "30", "--prime", "5"});
  CHECK(sep.code == 0);
  CHECK(sep.out == "30/30 separable/semisimple agreements\n");
  auto v = nlohmann::json::parse(run({"validate", data("invalid_unit_ideal.cell"), "--json"}).out);
  CHECK(v["valid"] == false);
  CHECK(run({"--help"}).code == 0);
}

}  // TEST_SUITE
