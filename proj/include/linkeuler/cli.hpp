#pragma once

// Command-line front end. parse_args() validates flags into a Command,
// build_report() runs the engine, render() turns a Report into text, CSV or
// JSON. Rendering never consults the locale.

#include "linkeuler/exact_arith.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace linkeuler::cli {

enum class Subcommand { euler, table, relative, verify, growth, stirling };
enum class Format { text, csv, json };
enum class SeriesKind { closed, summed, knot, relative };
enum class Identity { stirling_alternating, finite_difference, closed_form, knot_product };
enum class TriangleKind { first, second, eulerian2 };

struct Command {
  Subcommand subcommand = Subcommand::euler;
  std::int64_t dim = 4;
  std::int64_t ell = 1;
  std::size_t max_degree = 30;
  std::int64_t p_max = 5;
  std::optional<Rational> alpha;
  std::size_t tail = 5;
  Format format = Format::text;
  std::optional<std::string> output;

  // euler / growth
  SeriesKind series = SeriesKind::closed;
  bool bounds = false;

  // verify
  std::vector<Identity> identities;
  std::int64_t ell_max = 4;
  std::int64_t j_max = 8;
  std::int64_t d_max = 8;
  std::int64_t samples = 100;
  std::uint64_t seed = 20240611;

  // stirling
  TriangleKind triangle = TriangleKind::second;
  std::int64_t n_max = 10;
};

/// Bad command line. Maps to exit code 2.
class CommandLineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help was given; `text` is the usage message. Maps to exit code 0.
struct HelpRequested {
  std::string text;
};

/// Parses arguments (without the program name). Throws CommandLineError or
/// HelpRequested.
Command parse_args(const std::vector<std::string>& args);

using Cell = std::variant<std::int64_t, ExactInt, double, std::string>;
using Row = std::vector<Cell>;

struct Table {
  std::vector<std::string> columns;
  std::vector<Row> rows;
};

struct Report {
  std::string title;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  /// Rows shared by all formats. The first `key_columns` cells of a row go
  /// to "degrees" in JSON, the rest to "coefficients".
  Table data;
  std::size_t key_columns = 1;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  /// Replaces `data` in CSV output when set.
  std::optional<Table> csv;
  /// Replaces the default text body when nonempty.
  std::vector<std::string> text_lines;
  /// Human-readable remarks; printed in text mode, to stderr otherwise.
  std::vector<std::string> notes;
  /// False when a verification found a counterexample.
  bool ok = true;
};

Report build_report(const Command& cmd);
std::string render(const Report& report, Format format);

/// Runs the command, writing the report to `out` (or the --output file) and
/// diagnostics to `err`. Returns the process exit code.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

/// Full entry point: parse, run, map errors to exit codes.
int main_entry(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err);

}  // namespace linkeuler::cli
