#include "tangle/cli/commands.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "json.hpp"
#include "tangle/classify.hpp"
#include "tangle/closed_form.hpp"
#include "tangle/format.hpp"
#include "tangle/oracle.hpp"
#include "tangle/presets.hpp"
#include "tangle/relations.hpp"

namespace tangle::cli {

namespace {

std::string quoted(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

// Single-level JSON object with numbers at machine precision.
class FlatJson {
 public:
  FlatJson& number(std::string_view k, double v) {
    return raw(k, std::isfinite(v) ? format_exact(v) : "null");
  }
  FlatJson& text(std::string_view k, std::string_view v) { return raw(k, quoted(v)); }
  FlatJson& boolean(std::string_view k, bool v) { return raw(k, v ? "true" : "false"); }
  FlatJson& null(std::string_view k) { return raw(k, "null"); }
  FlatJson& raw(std::string_view k, std::string_view v) {
    if (!body_.empty()) body_ += ",";
    body_ += quoted(k) + ":" + std::string(v);
    return *this;
  }
  std::string str() const { return "{" + body_ + "}"; }

 private:
  std::string body_;
};

std::string cell_text(const Cell& c) {
  struct {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(std::uint64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_exact(v); }
    std::string operator()(const std::string& v) const { return v; }
  } visit;
  return std::visit(visit, c);
}

void add_cell(FlatJson& j, std::string_view key, const Cell& c) {
  if (std::holds_alternative<std::monostate>(c)) j.null(key);
  else if (const auto* u = std::get_if<std::uint64_t>(&c)) j.raw(key, std::to_string(*u));
  else if (const auto* d = std::get_if<double>(&c)) j.number(key, *d);
  else j.text(key, std::get<std::string>(c));
}

FlatJson record_json(const Record& r) {
  FlatJson j;
  const auto& cols = record_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) add_cell(j, cols[i], r.cells[i]);
  return j;
}

Amplitudes amplitudes_of(const StateInput& s) {
  if (const auto* p = std::get_if<AsdParams>(&s)) return asd_to_amplitudes(*p);
  return std::get<Amplitudes>(s);
}

MeasureReport report_of(const StateInput& s) {
  if (const auto* p = std::get_if<AsdParams>(&s)) return measure_report(*p);
  return measure_report(std::get<Amplitudes>(s));
}

std::string describe_human(const StateInput& s) {
  std::string out;
  if (const auto* p = std::get_if<AsdParams>(&s)) {
    out = "lambda=(";
    for (std::size_t i = 0; i < 5; ++i) out += (i ? ", " : "") + format_human(p->lambda(i));
    return out + ") phi=" + format_human(p->phi());
  }
  const auto& a = std::get<Amplitudes>(s);
  out = "c=[";
  for (std::size_t i = 0; i < Amplitudes::kSize; ++i)
    out += (i ? ", " : "") + std::string("(") + format_human(a[i].real()) + "," + format_human(a[i].imag()) + ")";
  return out + "]";
}

struct NamedValue {
  const char* name;
  double value;
};

std::array<NamedValue, 10> compared_fields(const MeasureReport& r) {
  return {{{"tau_ab", r.tangles.ab},
           {"tau_ac", r.tangles.ac},
           {"tau_bc", r.tangles.bc},
           {"tau_abc", r.tangles.abc},
           {"s_a", r.entropies.s_a},
           {"s_b", r.entropies.s_b},
           {"s_c", r.entropies.s_c},
           {"A", r.avg_tangle},
           {"m", r.avg_entropy},
           {"residual", r.relation_residual}}};
}

void pad(std::ostream& out, std::string_view s, std::size_t width) {
  out << s;
  for (std::size_t i = s.size(); i < width; ++i) out << ' ';
}

}  // namespace

// ---------------------------------------------------------------------------
// Records

const std::vector<std::string>& record_columns() {
  static const std::vector<std::string> cols = [] {
    std::vector<std::string> c{"seed", "kind"};
    for (int i = 0; i < 5; ++i) c.push_back("lambda" + std::to_string(i));
    c.push_back("phi");
    for (int i = 0; i < 8; ++i) {
      c.push_back("c" + std::to_string(i) + "_re");
      c.push_back("c" + std::to_string(i) + "_im");
    }
    for (const char* name : {"tau_ab", "tau_ac", "tau_bc", "tau_abc", "s_a", "s_b", "s_c", "j1", "j2", "j3",
                             "j4", "A", "m", "residual", "slocc_class"})
      c.emplace_back(name);
    return c;
  }();
  return cols;
}

Record make_record(const StateInput& state, std::string_view kind, std::optional<std::uint64_t> seed) {
  Record r;
  r.cells.reserve(record_columns().size());
  auto push = [&r](Cell c) { r.cells.push_back(std::move(c)); };

  push(seed ? Cell{*seed} : Cell{});
  push(std::string(kind));

  const auto* asd = std::get_if<AsdParams>(&state);
  for (int i = 0; i < 5; ++i) push(asd ? Cell{asd->lambda(i)} : Cell{});
  push(asd ? Cell{asd->phi()} : Cell{});
  const auto* amp = std::get_if<Amplitudes>(&state);
  for (std::size_t i = 0; i < Amplitudes::kSize; ++i) {
    push(amp ? Cell{(*amp)[i].real()} : Cell{});
    push(amp ? Cell{(*amp)[i].imag()} : Cell{});
  }

  const MeasureReport m = report_of(state);
  for (double v : {m.tangles.ab, m.tangles.ac, m.tangles.bc, m.tangles.abc, m.entropies.s_a, m.entropies.s_b,
                   m.entropies.s_c})
    push(v);
  if (m.invariants) {
    for (double v : {m.invariants->j1, m.invariants->j2, m.invariants->j3, m.invariants->j4}) push(v);
  } else {
    for (int i = 0; i < 4; ++i) push(Cell{});
  }
  push(m.avg_tangle);
  push(m.avg_entropy);
  push(m.relation_residual);
  push(asd ? Cell{std::string(to_string(slocc_class_asd(*asd).label))} : Cell{});
  return r;
}

std::string csv_header() {
  std::string out;
  for (const auto& c : record_columns()) out += (out.empty() ? "" : ",") + c;
  return out;
}

std::string csv_row(const Record& r) {
  std::string out;
  for (std::size_t i = 0; i < r.cells.size(); ++i) {
    if (i) out += ',';
    out += cell_text(r.cells[i]);
  }
  return out;
}

std::string json_object(const Record& r) { return record_json(r).str(); }

// ---------------------------------------------------------------------------
// measures

int cmd_measures(const StateInput& state, const Options& opt, std::ostream& out, std::ostream& err) {
  const bool is_asd = std::holds_alternative<AsdParams>(state);
  const Record rec = make_record(state, is_asd ? "asd" : "amplitudes", std::nullopt);
  const MeasureReport closed = report_of(state);

  std::optional<MeasureReport> oracle;
  double worst = 0.0;
  const char* worst_field = "";
  if (opt.oracle) {
    try {
      oracle = measures_oracle(amplitudes_of(state));
    } catch (const NumericalError& e) {
      err << "oracle: " << e.what() << '\n';
      return kExitOracle;
    }
    const auto a = compared_fields(closed);
    const auto b = compared_fields(*oracle);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double d = std::abs(a[i].value - b[i].value);
      if (d > worst) {
        worst = d;
        worst_field = a[i].name;
      }
    }
  }

  if (opt.json) {
    FlatJson j = record_json(rec);
    if (oracle) {
      for (const auto& f : compared_fields(*oracle)) j.number(std::string("oracle_") + f.name, f.value);
      j.number("oracle_max_discrepancy", worst);
    }
    out << j.str() << '\n';
  } else {
    out << "state        " << describe_human(state) << '\n';
    if (is_asd) out << "slocc_class  " << to_string(slocc_class_asd(std::get<AsdParams>(state)).label) << '\n';
    out << '\n';
    pad(out, "measure", 13);
    out << (oracle ? "closed form   " : "closed form");
    if (oracle) {
      pad(out, "oracle", 14);
      out << "|diff|";
    }
    out << '\n';
    const auto a = compared_fields(closed);
    for (std::size_t i = 0; i < a.size(); ++i) {
      pad(out, a[i].name, 13);
      if (!oracle) out << format_human(a[i].value);
      if (oracle) {
        pad(out, format_human(a[i].value), 14);
        const double o = compared_fields(*oracle)[i].value;
        pad(out, format_human(o), 14);
        out << format_number(std::abs(a[i].value - o), 3);
      }
      out << '\n';
    }
    const auto& c = closed.concurrences;
    out << "\nconcurrence  C_AB=" << format_human(c[0]) << " C_AC=" << format_human(c[1])
        << " C_BC=" << format_human(c[2]) << '\n';
    if (closed.invariants) {
      const auto& j = *closed.invariants;
      out << "invariants   J1=" << format_human(j.j1) << " J2=" << format_human(j.j2) << " J3=" << format_human(j.j3)
          << " J4=" << format_human(j.j4) << '\n';
    }
    if (oracle) out << "max |closed form - oracle| = " << format_number(worst, 3) << '\n';
  }

  if (oracle && worst > kOracleTol) {
    err << "oracle discrepancy " << format_exact(worst) << " on " << worst_field << " exceeds "
        << format_human(kOracleTol) << '\n';
    return kExitOracle;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// table5

int cmd_table5(const Options& opt, std::ostream& out) {
  static constexpr std::array<const char*, 7> kNames{"tau_ab", "tau_ac", "tau_bc", "tau_abc", "s_a", "s_b", "s_c"};
  if (!opt.json) {
    pad(out, "state", 10);
    pad(out, "measure", 10);
    pad(out, "reference", 13);
    pad(out, "computed", 13);
    out << "deviation\n";
  }
  std::vector<std::string> rows;
  for (const auto& row : presets::reference_rows()) {
    const MeasureReport m = measure_report(row.state);
    const std::array<double, 7> ref{row.tangles[0],    row.tangles[1],    row.tangles[2], row.three_tangle,
                                    row.entropies[0], row.entropies[1], row.entropies[2]};
    const std::array<double, 7> got{m.tangles.ab,     m.tangles.ac,     m.tangles.bc,    m.tangles.abc,
                                    m.entropies.s_a, m.entropies.s_b, m.entropies.s_c};
    for (std::size_t i = 0; i < kNames.size(); ++i) {
      const double dev = got[i] - ref[i];
      if (opt.json) {
        rows.push_back(FlatJson()
                           .text("state", row.name)
                           .text("measure", kNames[i])
                           .number("reference", ref[i])
                           .number("computed", got[i])
                           .number("deviation", dev)
                           .str());
        continue;
      }
      pad(out, i == 0 ? row.name : "", 10);
      pad(out, kNames[i], 10);
      pad(out, format_human(ref[i]), 13);
      pad(out, format_human(got[i]), 13);
      out << format_number(dev, 3) << '\n';
    }
  }
  if (opt.json) {
    out << '[';
    for (std::size_t i = 0; i < rows.size(); ++i) out << (i ? ",\n " : "") << rows[i];
    out << "]\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep

int cmd_sweep(std::size_t n, SweepKind kind, std::uint64_t seed, std::ostream& out) {
  out << csv_header() << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t row_seed = seed + i;
    Rng rng(row_seed);
    const Record r = kind == SweepKind::Haar ? make_record(random_state(rng), "haar", row_seed)
                                             : make_record(random_asd(rng), "asd", row_seed);
    out << csv_row(r) << '\n';
  }
  return out ? kExitOk : kExitInput;
}

// ---------------------------------------------------------------------------
// verify

namespace {

constexpr std::array<std::string_view, 5> kSuites{"propositions", "averages", "monogamy", "ckw", "extrema"};

SuiteReport run_suite(std::string_view name, std::size_t n, Rng& rng) {
  if (name == "propositions") return proposition_suite(n, rng);
  if (name == "averages") return averages_relation_suite(n, rng);
  if (name == "monogamy") return monogamy_suite(n, rng);
  if (name == "ckw") return ckw_suite(n, rng);
  return extrema_suite(rng);
}

const char* check_tag(const ClaimCheck& c) {
  if (!c.asserted) return "[info]";
  return c.passed ? "[ok]  " : "[FAIL]";
}

}  // namespace

bool is_suite_name(std::string_view name) {
  return name == "all" || std::find(kSuites.begin(), kSuites.end(), name) != kSuites.end();
}

int cmd_verify(std::string_view suite, std::size_t n, const Options& opt, std::ostream& out, std::ostream& err) {
  if (!is_suite_name(suite)) {
    err << "verify: unknown suite \"" << suite << "\" (expected propositions, averages, monogamy, ckw, extrema, all)\n";
    return kExitInput;
  }
  if (n == 0) {
    err << "verify: n must be at least 1\n";
    return kExitInput;
  }

  std::vector<SuiteReport> reports;
  for (std::string_view name : kSuites) {
    if (suite != "all" && suite != name) continue;
    Rng rng(opt.seed);  // each suite reproducible on its own
    reports.push_back(run_suite(name, n, rng));
  }

  const SuiteReport* first_failure = nullptr;
  for (const auto& r : reports)
    if (!r.passed() && !first_failure) first_failure = &r;

  if (opt.json) {
    nlohmann::json doc;
    doc["seed"] = opt.seed;
    doc["n"] = n;
    doc["passed"] = first_failure == nullptr;
    doc["suites"] = nlohmann::json::array();
    for (const auto& r : reports) {
      nlohmann::json s{{"name", r.name}, {"passed", r.passed()}, {"checks", nlohmann::json::array()}};
      for (const auto& c : r.checks)
        s["checks"].push_back({{"claim", c.claim}, {"asserted", c.asserted}, {"passed", c.passed}, {"detail", c.detail}});
      s["counterexample"] = r.counterexample ? nlohmann::json(*r.counterexample) : nlohmann::json(nullptr);
      doc["suites"].push_back(std::move(s));
    }
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      out << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << '\n';
      for (const auto& c : r.checks) {
        out << "  " << check_tag(c) << ' ' << c.claim;
        if (!c.detail.empty()) out << "\n         " << c.detail;
        out << '\n';
      }
    }
    const auto passed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
    out << "\n" << passed << " of " << reports.size() << " suites passed\n";
  }

  if (first_failure) {
    err << "first counterexample (" << first_failure->name << "): "
        << first_failure->counterexample.value_or("none recorded") << '\n';
    return kExitSuite;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// classify

int cmd_classify(const StateInput& state, const Options& opt, std::ostream& out, std::ostream& err) {
  const auto* p = std::get_if<AsdParams>(&state);
  if (!p) {
    err << "classify: needs ASD input ({\"asd\": {\"lambda\": [...], \"phi\": ...}} or a preset); "
           "reducing a general amplitude vector to its ASD form is not supported\n";
    return kExitInput;
  }

  const Classification c = slocc_class_asd(*p);
  std::optional<VanishingProfile> profile;
  std::optional<NonvanishingForm> form;
  if (c.label == SloccClass::GHZ) {
    profile = vanishing_profile(*p);
    if (profile->matched == VanishingCase::NoneVanish) form = nonvanishing_form(*p);
  }

  if (opt.json) {
    FlatJson j;
    j.text("slocc_class", to_string(c.label)).boolean("near_boundary", c.near_boundary);
    if (profile) {
      j.boolean("zero_ab", profile->zero_ab)
          .boolean("zero_ac", profile->zero_ac)
          .boolean("zero_bc", profile->zero_bc)
          .text("vanishing", to_string(profile->matched))
          .boolean("lambda_criterion", profile->lambda_criterion);
    } else {
      j.null("zero_ab").null("zero_ac").null("zero_bc").null("vanishing").null("lambda_criterion");
    }
    if (form) j.text("form", to_string(form->form));
    else j.null("form");
    out << j.str() << '\n';
    return kExitOk;
  }

  out << to_string(c.label);
  if (profile) out << "; " << to_string(profile->matched);
  if (form) out << "; form " << to_string(form->form);
  out << '\n';
  out << "state          " << describe_human(state) << '\n';
  if (c.near_boundary) out << "note           a deciding quantity lies within 10x the zero tolerance\n";
  if (profile) {
    out << "zero tangles   AB=" << (profile->zero_ab ? "yes" : "no") << " AC=" << (profile->zero_ac ? "yes" : "no")
        << " BC=" << (profile->zero_bc ? "yes" : "no") << '\n';
    out << "lambda test    " << (profile->lambda_criterion ? "agrees" : "disagrees") << " with the tangle pattern\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// reconstruct

int cmd_reconstruct(double tau_ab, double tau_ac, double tau_bc, const Options& opt, std::ostream& out,
                    std::ostream& err) {
  std::optional<Reconstruction> found;
  try {
    found = reconstruct_from_tangles(tau_ab, tau_ac, tau_bc);
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kExitInput;
  } catch (const std::domain_error& e) {
    err << e.what() << '\n';
    return kExitInput;
  }
  const Reconstruction& rec = *found;
  const TangleSet t = tangles_asd(rec.params);

  if (opt.json) {
    FlatJson j;
    for (int i = 0; i < 5; ++i) j.number("lambda" + std::to_string(i), rec.params.lambda(i));
    j.number("phi", rec.params.phi())
        .boolean("w_class", rec.w_class)
        .number("tau_ab", t.ab)
        .number("tau_ac", t.ac)
        .number("tau_bc", t.bc)
        .number("tau_abc", t.abc);
    out << j.str() << '\n';
    return kExitOk;
  }

  out << "state     " << describe_human(rec.params) << '\n';
  out << "class     " << (rec.w_class ? "W (lambda4 = 0)" : "GHZ") << '\n';
  pad(out, "measure", 10);
  pad(out, "requested", 13);
  pad(out, "recomputed", 13);
  out << "deviation\n";
  const std::array<NamedValue, 3> req{{{"tau_ab", tau_ab}, {"tau_ac", tau_ac}, {"tau_bc", tau_bc}}};
  const std::array<double, 3> got{t.ab, t.ac, t.bc};
  for (std::size_t i = 0; i < 3; ++i) {
    pad(out, req[i].name, 10);
    pad(out, format_human(req[i].value), 13);
    pad(out, format_human(got[i]), 13);
    out << format_number(got[i] - req[i].value, 3) << '\n';
  }
  out << "tau_abc   " << format_human(t.abc) << '\n';
  return kExitOk;
}

}  // namespace tangle::cli
