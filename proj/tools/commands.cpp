#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "webweave/errors.hpp"
#include "webweave/io.hpp"
#include "webweave/jdt.hpp"
#include "webweave/render.hpp"
#include "webweave/verify.hpp"

namespace webweave::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw UsageError("cannot open '" + path + "'");
  }
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

bool looks_like_json(const std::string& text) {
  const auto first = std::find_if(text.begin(), text.end(), [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
  return first != text.end() && *first == '{';
}

std::optional<int> parse_repetition(const std::string& text) {
  if (text == "all") {
    return std::nullopt;
  }
  try {
    std::size_t used = 0;
    const int h = std::stoi(text, &used);
    if (used == text.size() && h >= 0) {
      return h;
    }
  } catch (const std::exception&) {
  }
  throw UsageError("--repetition must be a non-negative integer or 'all', got '" + text + "'");
}

Family family_of(const std::string& shape_text, const std::string& repetition_text) {
  const Shape shape = parse_shape(shape_text);
  const auto repetition = parse_repetition(repetition_text);
  const auto& parts = shape.parts();
  const bool equal_rows = std::all_of(parts.begin(), parts.end(), [&](int p) { return p == parts.front(); });
  if (equal_rows && parts.size() == 2) {
    if (repetition != 0) {
      throw UsageError("two-row shapes take no repetition");
    }
    return Family::two_row(parts.front());
  }
  if (equal_rows && parts.size() == 3) {
    const int k = parts.front();
    if (repetition && *repetition >= 3 * k) {
      throw UsageError("repetition must be below " + std::to_string(3 * k) + " for shape " + shape_text);
    }
    return Family::three_row(k, repetition);
  }
  throw UsageError("shape must be (n,n) or (k,k,k), got " + shape_text);
}

void print_tableau(const RowStrictTableau& t, bool json, std::ostream& out) {
  if (json) {
    out << tableau_to_json(t).dump() << '\n';
  } else {
    out << format_tableau_text(t);
  }
}

bool is_two_row(const RowStrictTableau& t) { return t.shape().outer().rows() == 2; }

Json web_json_of(const RowStrictTableau& t, bool canonical) {
  if (t.shape().outer().rows() <= 2) {
    return matching_to_json(web_of_2row(t));
  }
  const Web w = russell_web(t);
  if (canonical) {
    Json j;
    j["canonical"] = canonicalize(w).code;
    return j;
  }
  return web_to_json(w);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evacuation, jeu de taquin and web bijections for row-strict tableaux", "webweave"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "webweave 1.0");

  std::string input;
  bool json = false;

  auto* evacuate_cmd = app.add_subcommand("evacuate", "Print the evacuation of a straight-shape tableau");
  evacuate_cmd->add_option("input", input, "Tableau file (text or JSON); stdin when omitted or '-'");
  evacuate_cmd->add_flag("--json", json, "Print JSON instead of text");

  auto* standardize_cmd = app.add_subcommand("standardize", "Standardize a Russell tableau");
  standardize_cmd->add_option("input", input, "Tableau file; stdin when omitted or '-'");
  standardize_cmd->add_flag("--json", json, "Print JSON instead of text");

  bool canonical = false;
  auto* to_web_cmd = app.add_subcommand("to-web", "Print the web of a 2-row, 3-row standard or Russell tableau");
  to_web_cmd->add_option("input", input, "Tableau file; stdin when omitted or '-'");
  to_web_cmd->add_flag("--canonical", canonical, "Print the canonical encoding of an sl3 web");

  auto* reflect_cmd = app.add_subcommand("reflect", "Reflect a web or matching JSON document");
  reflect_cmd->add_option("input", input, "Web or matching JSON file; stdin when omitted or '-'");

  std::string shape_text;
  std::string repetition_text = "0";
  std::string check_text = "theorem";
  std::optional<double> max_seconds;
  int threads = 0;
  bool serial = false;
  auto* verify_cmd = app.add_subcommand("verify", "Check a property over every tableau of a family");
  verify_cmd->add_option("--shape", shape_text, "Family shape, n,n or k,k,k")->required();
  verify_cmd->add_option("--repetition", repetition_text, "Number of doubled values, or 'all'");
  verify_cmd->add_option("--check", check_text, "theorem, involution, lemma, validity or injectivity");
  verify_cmd->add_option("--max-seconds", max_seconds, "Time budget; lifts the size bounds")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--threads", threads, "Worker threads (0 = default)")->check(CLI::NonNegativeNumber);
  verify_cmd->add_flag("--serial", serial, "Use the single-threaded reference loop");
  verify_cmd->add_flag("--json", json, "Print the report as JSON");

  bool count_only = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List every tableau of a family");
  enumerate_cmd->add_option("--shape", shape_text, "Family shape, n,n or k,k,k")->required();
  enumerate_cmd->add_option("--repetition", repetition_text, "Number of doubled values, or 'all'");
  enumerate_cmd->add_flag("--count", count_only, "Print only the number of tableaux");
  enumerate_cmd->add_flag("--json", json, "Print a JSON array");

  std::string format = "svg";
  std::string stage = "web";
  auto* render_cmd = app.add_subcommand("render", "Draw a web, matching or m-diagram as SVG");
  render_cmd->add_option("input", input, "Web JSON or tableau file; stdin when omitted or '-'");
  render_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"svg"}));
  render_cmd->add_option("--stage", stage, "web or mdiagram")->check(CLI::IsMember({"web", "mdiagram"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (evacuate_cmd->parsed()) {
      print_tableau(evacuate(parse_tableau(read_input(input, in))), json, out);
      return kOk;
    }
    if (standardize_cmd->parsed()) {
      const RowStrictTableau t = parse_tableau(read_input(input, in));
      if (t.shape().outer().rows() == 3) {
        russell_repetition(t);  // reports why a 3-row tableau is not Russell
      }
      print_tableau(standardize(t), json, out);
      return kOk;
    }
    if (to_web_cmd->parsed()) {
      out << web_json_of(parse_tableau(read_input(input, in)), canonical).dump() << '\n';
      return kOk;
    }
    if (reflect_cmd->parsed()) {
      const Json doc = parse_json(read_input(input, in));
      if (doc.is_object() && doc.contains("pairs")) {
        out << matching_to_json(reflect_matching(matching_from_json(doc))).dump() << '\n';
      } else {
        out << web_to_json(reflect_web(web_from_json(doc))).dump() << '\n';
      }
      return kOk;
    }
    if (verify_cmd->parsed()) {
      const Family family = family_of(shape_text, repetition_text);
      const Check check = check_from_string(check_text);
      const DeskBounds bounds;
      if (!max_seconds && !bounds.admits(family)) {
        err << "error: family " << family.describe() << " is outside the default bounds: " << bounds.describe(family)
            << "; pass --max-seconds to run it under a time budget\n";
        return kUsage;
      }
      const VerifyOptions options{threads, max_seconds};
      const VerifyReport report =
          serial ? verify_serial(family, check, options) : verify_parallel(family, check, options);
      if (json) {
        out << report_to_json(report).dump(2) << '\n';
      } else {
        out << format_report_text(report);
      }
      return report.ok() ? kOk : kFailed;
    }
    if (enumerate_cmd->parsed()) {
      const auto tableaux = family_of(shape_text, repetition_text).tableaux();
      if (count_only) {
        out << tableaux.size() << '\n';
      } else if (json) {
        Json list = Json::array();
        for (const auto& t : tableaux) {
          list.push_back(tableau_to_json(t));
        }
        out << list.dump() << '\n';
      } else {
        for (std::size_t i = 0; i < tableaux.size(); ++i) {
          out << (i > 0 ? "\n" : "") << format_tableau_text(tableaux[i]);
        }
      }
      return kOk;
    }
    if (render_cmd->parsed()) {
      const std::string text = read_input(input, in);
      if (stage == "mdiagram") {
        RowStrictTableau t = parse_tableau(text);
        if (!is_standard(t)) {
          t = standardize(t);
        }
        out << render_mdiagram_svg(m_diagram(t));
        return kOk;
      }
      if (looks_like_json(text)) {
        const Json doc = parse_json(text);
        if (doc.contains("pairs")) {
          out << render_matching_svg(matching_from_json(doc));
          return kOk;
        }
        if (doc.contains("boundary")) {
          out << render_web_svg(web_from_json(doc));
          return kOk;
        }
      }
      const RowStrictTableau t = parse_tableau(text);
      if (is_two_row(t)) {
        out << render_matching_svg(web_of_2row(t));
      } else {
        out << render_web_svg(russell_web(t));
      }
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace webweave::cli
