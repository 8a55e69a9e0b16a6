#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "webweave/bijection.hpp"
#include "webweave/io.hpp"

namespace webweave {

enum class Check { theorem, involution, lemma, validity, injectivity };

const char* to_string(Check check) noexcept;
/// Throws ParseError on an unknown name.
Check check_from_string(const std::string& name);

struct Failure {
  RowStrictTableau tableau;
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  std::string family;
  Check check = Check::theorem;
  std::size_t total = 0;
  /// Sorted by the reading word of the tableau.
  std::vector<Failure> failures;
  double elapsed_ms = 0;
  /// False when a time budget stopped the run early.
  bool complete = true;

  bool ok() const noexcept { return complete && failures.empty(); }
};

Json report_to_json(const VerifyReport& report);
std::string format_report_text(const VerifyReport& report);

/// Largest family each kind may be verified at without a time budget.
struct DeskBounds {
  int two_row_n = 8;
  int three_row_standard_k = 5;
  int russell_k = 4;

  bool admits(const Family& f) const noexcept;
  std::string describe(const Family& f) const;
};

struct VerifyOptions {
  /// 0 picks the OpenMP default, capped by WEBWEAVE_THREADS when set.
  int threads = 0;
  /// Stop (and report incomplete) once this many seconds have passed.
  std::optional<double> max_seconds;
};

/// Checks one tableau and returns the failure, if any. Injectivity is a
/// property of the whole family, so here it only builds the web.
std::optional<Failure> check_tableau(const RowStrictTableau& t, Family::Kind kind, Check check);

/// The identity of t's web: matching JSON for two rows, canonical code for three.
std::string web_key(const RowStrictTableau& t, Family::Kind kind);

/// Reference implementation: one thread, in family order.
VerifyReport verify_serial(const Family& family, Check check, const VerifyOptions& options = {});

/// OpenMP kernel over the family's tableaux; the report is identical to
/// verify_serial's apart from elapsed time.
VerifyReport verify_parallel(const Family& family, Check check, const VerifyOptions& options = {});

/// Thread cap from WEBWEAVE_THREADS, if set to a positive integer.
std::optional<int> thread_cap_from_env();

}  // namespace webweave
