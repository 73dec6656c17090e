#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "tangle/cli/commands.hpp"
#include "tangle/cli/input.hpp"
#include "tangle/presets.hpp"

using namespace tangle;
using namespace tangle::cli;

TEST_CASE("real parsing accepts decimals and fractions") {
  CHECK(parse_real("0.25", "x") == 0.25);
  CHECK(parse_real("1/3", "x") == 1.0 / 3.0);
  CHECK(parse_real(" -2/8 ", "x") == -0.25);
  CHECK(parse_real("1e-3", "x") == 1e-3);
  CHECK_THROWS_AS(parse_real("1/0", "x"), InputError);
  CHECK_THROWS_AS(parse_real("abc", "x"), InputError);
  CHECK_THROWS_AS(parse_real("1/3/4", "x"), InputError);
  CHECK_THROWS_AS(parse_real("", "x"), InputError);
  CHECK_THROWS_WITH(parse_real("0.5q", "asd.phi"), doctest::Contains("asd.phi"));
}

TEST_CASE("presets") {
  CHECK(is_preset_name("ghz"));
  CHECK(is_preset_name("omega:1/2"));
  CHECK_FALSE(is_preset_name("state.json"));
  const auto g = std::get<AsdParams>(preset_state("G"));
  CHECK(g.lambda(0) == 0.5);
  const auto om = std::get<AsdParams>(preset_state("omega:1/2"));
  CHECK(om.lambda(4) == 0.5);
  const auto vk = std::get<AsdParams>(preset_state("varkappa:0.5"));
  CHECK(vk.lambda(2) == 0.5);
  CHECK_THROWS_AS(preset_state("omega:2"), InputError);
  CHECK_THROWS_AS(preset_state("nope"), InputError);
}

TEST_CASE("state JSON parsing") {
  const auto ghz = parse_state_json(R"({"amplitudes": [["1/2", 0], [0, 0], [0, 0], [0, 0],
                                       [0, 0], [0, 0], [0, 0], ["1/2", 0]]})",
                                    true);
  CHECK(std::get<Amplitudes>(ghz)[7].real() == doctest::Approx(std::sqrt(0.5)));

  const auto asd = parse_state_json(R"({"asd": {"lambda": ["2/3", 0, 0.5, 0.5, 0.23570226039551584], "phi": 0}})",
                                    false);
  CHECK(std::get<AsdParams>(asd).lambda(0) == 2.0 / 3.0);

  CHECK(std::holds_alternative<AsdParams>(parse_state_json(R"({"preset": "kappa"})", false)));
}

TEST_CASE("state JSON errors name the field") {
  auto fails_on = [](const char* text, const char* field) {
    CAPTURE(text);
    CHECK_THROWS_WITH_AS(parse_state_json(text, false), doctest::Contains(field), InputError);
  };
  fails_on(R"({"amplitudes": [[1, 0]]})", "amplitudes");
  fails_on(R"({"amplitudes": [[1,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,"x"],[0,0]]})", "amplitudes[6][1]");
  fails_on(R"({"amplitudes": [[1,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[1,0]]})", "not 1");
  fails_on(R"({"asd": {"lambda": [1, 0, 0, 0]}})", "asd.lambda");
  fails_on(R"({"asd": {"lambda": [1, -0.1, 0, 0, 0]}})", "asd.lambda[1]");
  fails_on(R"({"asd": {"lambda": [1, 0, 0, 0, 0], "phi": "pi"}})", "asd.phi");
  fails_on(R"({"asd": {"lambda": [1, 0, 0, 0, 0], "theta": 1}})", "asd.theta");
  fails_on(R"({"asd": {"lambda": [1, 1, 0, 0, 0]}})", "asd.lambda");
  fails_on(R"({"asd": {"lambda": [1,0,0,0,0]}, "preset": "ghz"})", "exactly one");
  fails_on(R"({"colour": 1})", "colour");
  fails_on("[1, 2", "invalid JSON");
}

TEST_CASE("normalize rescales ASD magnitudes") {
  const auto p = std::get<AsdParams>(parse_state_json(R"({"asd": {"lambda": [1, 0, 0, 0, 1]}})", true));
  CHECK(p.lambda(0) == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("record columns and CSV rows") {
  const auto& cols = record_columns();
  REQUIRE(cols.size() == 39);
  CHECK(cols.front() == "seed");
  CHECK(cols[1] == "kind");
  CHECK(cols[2] == "lambda0");
  CHECK(cols[8] == "c0_re");
  CHECK(cols[24] == "tau_ab");
  CHECK(cols.back() == "slocc_class");

  const Record r = make_record(presets::ghz(), "asd", 5);
  const std::string row = csv_row(r);
  CHECK(row.rfind("5,asd,0.70710678118654757,0,0,0,0.70710678118654757,0,,", 0) == 0);
  CHECK(row.size() >= 3);
  CHECK(row.substr(row.size() - 3) == "GHZ");
}

TEST_CASE("sweep output is deterministic and well-formed") {
  std::ostringstream a, b;
  CHECK(cmd_sweep(20, SweepKind::Haar, 42, a) == kExitOk);
  CHECK(cmd_sweep(20, SweepKind::Haar, 42, b) == kExitOk);
  CHECK(a.str() == b.str());

  std::istringstream lines(a.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == csv_header());
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 38);
    CHECK(line.find(",haar,") != std::string::npos);
  }
  CHECK(rows == 20);

  // Row i only depends on seed + i.
  std::ostringstream shifted;
  cmd_sweep(1, SweepKind::Haar, 43, shifted);
  CHECK(a.str().find(shifted.str().substr(shifted.str().find('\n') + 1)) != std::string::npos);
}

TEST_CASE("sweep rows satisfy the residual interval and monogamy") {
  std::ostringstream out;
  cmd_sweep(200, SweepKind::Asd, 7, out);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  const auto& cols = record_columns();
  auto idx = [&cols](const char* name) { return std::find(cols.begin(), cols.end(), name) - cols.begin(); };
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
    cells.resize(cols.size());
    const double res = std::stod(cells[idx("residual")]);
    CHECK(res <= 1e-9);
    CHECK(res >= -(std::numbers::ln2 - 0.5) - 1e-9);
    const double ab = std::stod(cells[idx("tau_ab")]), ac = std::stod(cells[idx("tau_ac")]);
    const double abc = std::stod(cells[idx("tau_abc")]);
    CHECK(ab + ac + abc <= 1.0 + 1e-12);
    CHECK_FALSE(cells[idx("j1")].empty());
  }
}

TEST_CASE("measures JSON uses the record columns") {
  std::ostringstream out, err;
  Options opt;
  opt.json = true;
  opt.oracle = true;
  CHECK(cmd_measures(presets::vartheta(), opt, out, err) == kExitOk);
  const auto doc = nlohmann::json::parse(out.str());
  for (const auto& c : record_columns()) CHECK(doc.contains(c));
  CHECK(doc["tau_abc"].get<double>() == doctest::Approx(0.81));
  CHECK(doc["slocc_class"] == "GHZ");
  CHECK(doc["seed"].is_null());
  CHECK(doc["c0_re"].is_null());
  CHECK(doc["oracle_max_discrepancy"].get<double>() < 1e-9);
}

TEST_CASE("classify refuses amplitude input") {
  std::ostringstream out, err;
  CHECK(cmd_classify(Amplitudes::basis(0), {}, out, err) == kExitInput);
  CHECK(err.str().find("ASD") != std::string::npos);
}

TEST_CASE("classify output") {
  std::ostringstream out, err;
  CHECK(cmd_classify(presets::kappa(), {}, out, err) == kExitOk);
  CHECK(out.str().rfind("GHZ; none vanish; form varpi1\n", 0) == 0);
  std::ostringstream w;
  cmd_classify(presets::w(), {}, w, err);
  CHECK(w.str().rfind("W\n", 0) == 0);
}

TEST_CASE("reconstruct exit codes") {
  std::ostringstream out, err;
  CHECK(cmd_reconstruct(4.0 / 9, 4.0 / 9, 0.25, {}, out, err) == kExitOk);
  CHECK(cmd_reconstruct(0.6, 0.6, 0.6, {}, out, err) == kExitInput);
  CHECK(cmd_reconstruct(-1, 0.6, 0.6, {}, out, err) == kExitInput);
}

TEST_CASE("verify exit codes") {
  std::ostringstream out, err;
  Options opt;
  CHECK(cmd_verify("monogamy", 500, opt, out, err) == kExitOk);
  CHECK(cmd_verify("nonsense", 10, opt, out, err) == kExitInput);
  std::ostringstream out2, err2;
  CHECK(cmd_verify("ckw", 500, opt, out2, err2) == kExitSuite);
  CHECK(err2.str().find("first counterexample (ckw): lambda=(") != std::string::npos);
}
