#include "webweave/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>

#include <omp.h>

#include "webweave/errors.hpp"
#include "webweave/jdt.hpp"

namespace webweave {

const char* to_string(Check check) noexcept {
  switch (check) {
    case Check::theorem:
      return "theorem";
    case Check::involution:
      return "involution";
    case Check::lemma:
      return "lemma";
    case Check::validity:
      return "validity";
    case Check::injectivity:
      return "injectivity";
  }
  return "unknown";
}

Check check_from_string(const std::string& name) {
  for (Check c : {Check::theorem, Check::involution, Check::lemma, Check::validity, Check::injectivity}) {
    if (name == to_string(c)) {
      return c;
    }
  }
  throw ParseError("unknown check '" + name + "'");
}

bool DeskBounds::admits(const Family& f) const noexcept {
  if (f.size < 0) {
    return false;
  }
  if (f.kind == Family::Kind::two_row) {
    return f.size <= two_row_n;
  }
  if (f.size < 1) {
    return false;
  }
  return f.repetition == 0 ? f.size <= three_row_standard_k : f.size <= russell_k;
}

std::string DeskBounds::describe(const Family& f) const {
  if (f.kind == Family::Kind::two_row) {
    return "two-row shapes (n,n) are limited to n <= " + std::to_string(two_row_n);
  }
  if (f.repetition == 0) {
    return "standard three-row shapes (k,k,k) are limited to k <= " + std::to_string(three_row_standard_k);
  }
  return "Russell tableaux of shape (k,k,k) are limited to k <= " + std::to_string(russell_k);
}

std::optional<int> thread_cap_from_env() {
  const char* value = std::getenv("WEBWEAVE_THREADS");
  if (value == nullptr) {
    return std::nullopt;
  }
  const int n = std::atoi(value);
  if (n <= 0) {
    return std::nullopt;
  }
  return n;
}

std::string web_key(const RowStrictTableau& t, Family::Kind kind) {
  if (kind == Family::Kind::two_row) {
    return matching_to_json(web_of_2row(t)).dump();
  }
  return canonicalize(russell_web(t)).code;
}

std::optional<Failure> check_tableau(const RowStrictTableau& t, Family::Kind kind, Check check) {
  auto fail = [&t](std::string expected, std::string actual) {
    return std::optional<Failure>(Failure{t, std::move(expected), std::move(actual)});
  };
  switch (check) {
    case Check::theorem: {
      const RowStrictTableau e = evacuate(t);
      if (kind == Family::Kind::two_row) {
        const Matching expected = web_of_2row(e);
        const Matching actual = reflect_matching(web_of_2row(t));
        if (!(expected == actual)) {
          return fail(matching_to_json(expected).dump(), matching_to_json(actual).dump());
        }
      } else {
        const CanonicalWeb expected = canonicalize(russell_web(e));
        const CanonicalWeb actual = canonicalize(reflect_web(russell_web(t)));
        if (expected != actual) {
          return fail(expected.code, actual.code);
        }
      }
      return std::nullopt;
    }
    case Check::involution: {
      const RowStrictTableau twice = evacuate(evacuate(t));
      if (!(twice == t)) {
        return fail(format_tableau_text(t), format_tableau_text(twice));
      }
      return std::nullopt;
    }
    case Check::lemma: {
      const RowStrictTableau e = evacuate(t);
      const RowStrictTableau r = rotate_complement(t, t.max_entry());
      if (!(e == r)) {
        return fail(format_tableau_text(r), format_tableau_text(e));
      }
      return std::nullopt;
    }
    case Check::validity: {
      if (kind == Family::Kind::two_row) {
        web_of_2row(t);  // the Matching constructor rejects crossing or partial matchings
        return std::nullopt;
      }
      const auto report = validate_web(russell_web(t));
      if (!report.ok()) {
        std::string actual;
        for (const auto& v : report.violations) {
          actual += std::string(to_string(v.kind)) + ": " + v.detail + "; ";
        }
        return fail("valid web", actual);
      }
      return std::nullopt;
    }
    case Check::injectivity:
      web_key(t, kind);
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;

std::optional<Failure> guarded_check(const RowStrictTableau& t, Family::Kind kind, Check check) {
  try {
    return check_tableau(t, kind, check);
  } catch (const std::exception& e) {
    return Failure{t, "no error", std::string("error: ") + e.what()};
  }
}

struct Outcome {
  std::optional<Failure> failure;
  std::string key;
  bool done = false;
};

Outcome check_slot(const RowStrictTableau& t, Family::Kind kind, Check check) {
  Outcome out;
  if (check == Check::injectivity) {
    try {
      out.key = web_key(t, kind);
    } catch (const std::exception& e) {
      out.failure = Failure{t, "no error", std::string("error: ") + e.what()};
    }
  } else {
    out.failure = guarded_check(t, kind, check);
  }
  out.done = true;
  return out;
}

VerifyReport summarize(const Family& family, Check check, const std::vector<RowStrictTableau>& tableaux,
                       std::vector<Outcome>& outcomes, Clock::time_point start) {
  VerifyReport report;
  report.family = family.describe();
  report.check = check;
  std::map<std::string, std::size_t> first_with_key;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    Outcome& o = outcomes[i];
    if (!o.done) {
      report.complete = false;
      continue;
    }
    ++report.total;
    if (o.failure) {
      report.failures.push_back(std::move(*o.failure));
    }
    if (check == Check::injectivity && !o.key.empty()) {
      const auto [it, fresh] = first_with_key.emplace(o.key, i);
      if (!fresh) {
        report.failures.push_back(
            {tableaux[i], "web distinct from " + format_word(reading_word(tableaux[it->second])), o.key});
      }
    }
  }
  std::stable_sort(report.failures.begin(), report.failures.end(), [](const Failure& a, const Failure& b) {
    return reading_word(a.tableau) < reading_word(b.tableau);
  });
  report.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return report;
}

std::optional<Clock::time_point> deadline_of(const VerifyOptions& options, Clock::time_point start) {
  if (!options.max_seconds) {
    return std::nullopt;
  }
  return start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*options.max_seconds));
}

}  // namespace

VerifyReport verify_serial(const Family& family, Check check, const VerifyOptions& options) {
  const auto start = Clock::now();
  const auto deadline = deadline_of(options, start);
  const auto tableaux = family.tableaux();
  std::vector<Outcome> outcomes(tableaux.size());
  for (std::size_t i = 0; i < tableaux.size(); ++i) {
    if (deadline && Clock::now() > *deadline) {
      break;
    }
    outcomes[i] = check_slot(tableaux[i], family.kind, check);
  }
  return summarize(family, check, tableaux, outcomes, start);
}

VerifyReport verify_parallel(const Family& family, Check check, const VerifyOptions& options) {
  const auto start = Clock::now();
  const auto deadline = deadline_of(options, start);
  const auto tableaux = family.tableaux();
  std::vector<Outcome> outcomes(tableaux.size());

  int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
  if (const auto cap = thread_cap_from_env()) {
    threads = std::min(threads, *cap);
  }
  const auto count = static_cast<std::ptrdiff_t>(tableaux.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    if (deadline && Clock::now() > *deadline) {
      continue;
    }
    outcomes[static_cast<std::size_t>(i)] = check_slot(tableaux[static_cast<std::size_t>(i)], family.kind, check);
  }
  return summarize(family, check, tableaux, outcomes, start);
}

Json report_to_json(const VerifyReport& report) {
  Json j;
  j["family"] = report.family;
  j["check"] = to_string(report.check);
  j["total"] = report.total;
  j["failures"] = Json::array();
  for (const auto& f : report.failures) {
    Json entry;
    entry["tableau"] = tableau_to_json(f.tableau);
    entry["expected"] = f.expected;
    entry["actual"] = f.actual;
    j["failures"].push_back(std::move(entry));
  }
  j["elapsed_ms"] = report.elapsed_ms;
  j["complete"] = report.complete;
  return j;
}

std::string format_report_text(const VerifyReport& report) {
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.1f", report.elapsed_ms);
  std::string out;
  out += "family: " + report.family + "\n";
  out += "check: " + std::string(to_string(report.check)) + "\n";
  out += "total: " + std::to_string(report.total) + "\n";
  out += "failures: " + std::to_string(report.failures.size()) + "\n";
  for (const auto& f : report.failures) {
    out += "  tableau " + format_word(reading_word(f.tableau)) + "\n";
    out += "    expected: " + f.expected + "\n";
    out += "    actual:   " + f.actual + "\n";
  }
  if (!report.complete) {
    out += "stopped early: time budget exhausted\n";
  }
  out += "elapsed_ms: " + std::string(elapsed) + "\n";
  out += std::string("result: ") + (report.ok() ? "PASS" : "FAIL") + "\n";
  return out;
}

}  // namespace webweave
