#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tangle/cli/input.hpp"

namespace tangle::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,
  kExitOracle = 2,
  kExitSuite = 3,
};

/// Largest closed-form vs oracle difference `measures --oracle` tolerates.
inline constexpr double kOracleTol = 1e-9;

struct Options {
  std::uint64_t seed = 1;
  bool normalize = false;
  bool oracle = false;
  bool json = false;
};

// Records -------------------------------------------------------------------

/// Empty, integer, real or text cell of a sweep/measures record.
using Cell = std::variant<std::monostate, std::uint64_t, double, std::string>;

/// Column names in output order.
const std::vector<std::string>& record_columns();

struct Record {
  std::vector<Cell> cells;  ///< aligned with record_columns()
};

/// `kind` is "haar", "asd" or "amplitudes". ASD input fills lambda/phi,
/// J1..J4 and slocc_class; amplitude input fills the c columns.
Record make_record(const StateInput& state, std::string_view kind, std::optional<std::uint64_t> seed);

std::string csv_header();
std::string csv_row(const Record& r);
/// Flat JSON object keyed by record_columns(); empty cells become null.
std::string json_object(const Record& r);

// Commands ------------------------------------------------------------------
// Each writes its report to `out`, diagnostics to `err`, and returns the exit
// code.

int cmd_measures(const StateInput& state, const Options& opt, std::ostream& out, std::ostream& err);
int cmd_table5(const Options& opt, std::ostream& out);

enum class SweepKind { Haar, Asd };
/// Row i draws from its own generator seeded with seed + i.
int cmd_sweep(std::size_t n, SweepKind kind, std::uint64_t seed, std::ostream& out);

/// propositions | averages | monogamy | ckw | extrema | all
bool is_suite_name(std::string_view name);
int cmd_verify(std::string_view suite, std::size_t n, const Options& opt, std::ostream& out, std::ostream& err);

int cmd_classify(const StateInput& state, const Options& opt, std::ostream& out, std::ostream& err);
int cmd_reconstruct(double tau_ab, double tau_ac, double tau_bc, const Options& opt, std::ostream& out,
                    std::ostream& err);

}  // namespace tangle::cli
