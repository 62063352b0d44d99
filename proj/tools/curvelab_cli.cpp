// curvelab command-line front end. Talks to the library through the C API
// only and renders its JSON results as JSON or plain ASCII tables.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "curvelab/curvelab.h"

namespace {

using Json = nlohmann::json;

enum Exit { kOk = 0, kUsage = 1, kRefused = 2, kInconsistent = 3 };

int exit_code(curvelab_status s) {
  switch (s) {
    case CURVELAB_OK: return kOk;
    case CURVELAB_E_USAGE: return kUsage;
    case CURVELAB_E_REFUSED:
    case CURVELAB_E_OVERFLOW:
    case CURVELAB_E_LIMIT: return kRefused;
    case CURVELAB_E_INCONSISTENT:
    case CURVELAB_E_INTERNAL: return kInconsistent;
  }
  return kInconsistent;
}

struct Config {
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> d;
  std::int64_t m = 0;
  std::string m_range;
  std::string format = "table";
  bool homogenize = false;
  bool oracle = false;
  std::int64_t step_bound = 1'000'000;
  std::int64_t d_cap = 4096;
  unsigned threads = 0;
};

struct FamilyDeleter {
  void operator()(curvelab_family* f) const { curvelab_family_free(f); }
};
using FamilyPtr = std::unique_ptr<curvelab_family, FamilyDeleter>;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Failure {
  curvelab_status status;
  std::string message;
};

// Owns a JSON string returned by the library.
std::optional<Json> take(char* raw) {
  if (!raw) return std::nullopt;
  Json j = Json::parse(raw);
  curvelab_free_string(raw);
  return j;
}

curvelab_options options_of(const Config& cfg) {
  curvelab_options o;
  curvelab_options_init(&o);
  o.step_bound = cfg.step_bound;
  o.d_cap = cfg.d_cap;
  o.include_homogeneous = cfg.homogenize ? 1 : 0;
  o.threads = cfg.threads;
  return o;
}

FamilyPtr open_family(const Config& cfg) {
  if (cfg.a.empty() == cfg.d.empty()) throw UsageError("exactly one of --a or --d is required");
  curvelab_family* raw = nullptr;
  curvelab_status s;
  if (!cfg.a.empty()) {
    if (cfg.a.size() != 4) throw UsageError("--a takes four comma-separated integers");
    const curvelab_options o = options_of(cfg);
    s = curvelab_family_from_degrees(cfg.a.data(), &o, &raw);
  } else {
    if (cfg.d.size() != 8) throw UsageError("--d takes eight comma-separated integers d21,d41,d32,d42,d13,d23,d14,d34");
    s = curvelab_family_from_params(cfg.d.data(), &raw);
  }
  if (s != CURVELAB_OK) throw Failure{s, curvelab_last_error()};
  return FamilyPtr(raw);
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("--m-range expects lo..hi");
  std::int64_t lo = 0, hi = 0;
  try {
    std::size_t used = 0;
    lo = std::stoll(text.substr(0, dots), &used);
    if (used != dots) throw UsageError("bad --m-range lower bound");
    const std::string rest = text.substr(dots + 2);
    hi = std::stoll(rest, &used);
    if (used != rest.size()) throw UsageError("bad --m-range upper bound");
  } catch (const std::logic_error&) {
    throw UsageError("--m-range expects integers lo..hi");
  }
  if (lo < 0) throw UsageError("--m-range lower bound must be >= 0");
  if (hi < lo) throw UsageError("empty m range " + text);
  return {lo, hi};
}

std::string monomial_text(const Json& m) {
  const auto exps = m.at("exponents").get<std::vector<std::int64_t>>();
  const int first = exps.size() == 5 ? 0 : 1;
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(first + static_cast<int>(i));
    if (exps[i] != 1) out += "^" + std::to_string(exps[i]);
  }
  return out.empty() ? "1" : out;
}

std::string binomial_text(const Json& b) { return monomial_text(b.at("lead")) + " - " + monomial_text(b.at("trail")); }

std::string vec_text(const Json& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i].get<std::int64_t>());
  return out + ")";
}

std::string opt_text(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string data_text(const Json& d) {
  std::string out;
  for (const char* k : {"d21", "d41", "d32", "d42", "d13", "d23", "d14", "d34"}) {
    out += std::string(out.empty() ? "" : " ") + k + "=" + std::to_string(d.at(k).get<std::int64_t>());
  }
  return out;
}

void print_basis(std::ostream& out, const Json& basis, const std::string& indent) {
  for (const auto& e : basis.at("elements")) out << indent << binomial_text(e) << "\n";
}

void print_report(std::ostream& out, const Json& r) {
  out << "m            " << r.at("m").get<std::int64_t>() << "\n";
  out << "degrees      " << vec_text(r.at("degrees")) << "\n";
  if (!r.at("applicable").get<bool>()) {
    out << "status       skipped (" << opt_text(r.at("skip_reason")) << ")\n";
    if (!r.at("error").is_null()) out << "error        " << r.at("error").get<std::string>() << "\n";
    return;
  }
  if (r.at("reordered").get<bool>()) {
    out << "reordered    permutation " << vec_text(r.at("permutation")) << "\n";
  }
  out << "data         " << data_text(r.at("data")) << "\n";
  out << "case         " << opt_text(r.at("case")) << "    w " << opt_text(r.at("w")) << "\n";
  out << "conditions\n";
  for (const auto& c : r.at("conditions")) {
    out << "  " << std::left << std::setw(44) << c.at("name").get<std::string>() << std::right << std::setw(6)
        << c.at("value").get<std::int64_t>() << "  " << (c.at("pass").get<bool>() ? "pass" : "FAIL") << "\n";
  }
  out << "verdict      criterion=" << opt_text(r.at("verdict_criterion"))
      << " groebner=" << opt_text(r.at("verdict_groebner")) << " agree=" << opt_text(r.at("agree")) << "\n";
  out << "ACM          " << opt_text(r.at("verdict_criterion")) << "\n";
  if (!r.at("x4_generators").empty()) {
    out << "x4-bearing initial generators:";
    for (const auto& g : r.at("x4_generators")) out << " " << monomial_text(g);
    out << "\n";
  }
  if (r.contains("reduced_basis")) {
    out << "reduced Groebner basis (x2>x1>x3>x4)\n";
    print_basis(out, r.at("reduced_basis"), "  ");
  }
  if (r.contains("homogeneous_basis")) {
    out << "homogeneous basis (x2>x1>x3>x4>x0)\n";
    print_basis(out, r.at("homogeneous_basis"), "  ");
  }
}

void print_family_table(std::ostream& out, const Json& scan) {
  out << std::right << std::setw(4) << "m" << "  " << std::left << std::setw(26) << "degrees" << std::setw(22)
      << "status" << std::setw(5) << "case" << std::setw(4) << "w" << std::setw(10) << "criterion"
      << std::setw(9) << "groebner" << std::setw(6) << "agree" << "note\n";
  for (const auto& r : scan.at("reports")) {
    const bool applicable = r.at("applicable").get<bool>();
    std::string status = applicable ? (r.at("verdict_criterion").get<bool>() ? "ACM" : "not ACM")
                                    : "skip: " + opt_text(r.at("skip_reason"));
    if (!r.at("error").is_null()) status = "error";
    std::string note;
    if (r.at("reordered").get<bool>()) note = "reordered " + vec_text(r.at("permutation"));
    if (applicable && !r.at("verdict_criterion").get<bool>()) {
      for (const auto& c : r.at("conditions")) {
        if (!c.at("pass").get<bool>()) {
          note += (note.empty() ? "" : "; ") + c.at("name").get<std::string>().substr(0, 3) + "=" +
                  std::to_string(c.at("value").get<std::int64_t>());
          break;
        }
      }
    }
    out << std::right << std::setw(4) << r.at("m").get<std::int64_t>() << "  " << std::left << std::setw(26)
        << vec_text(r.at("degrees")) << std::setw(22) << status << std::setw(5) << opt_text(r.at("case"))
        << std::setw(4) << opt_text(r.at("w")) << std::setw(10) << opt_text(r.at("verdict_criterion"))
        << std::setw(9) << opt_text(r.at("verdict_groebner")) << std::setw(6) << opt_text(r.at("agree")) << note
        << "\n";
  }
  const auto& s = scan.at("summary");
  out << "summary: acm=" << s.at("acm") << " non-acm=" << s.at("non_acm") << " skipped=" << s.at("skipped")
      << " reordered=" << s.at("reordered") << " disagreements=" << s.at("disagreements") << "\n";
}

void emit(const Config& cfg, const Json& j, void (*table)(std::ostream&, const Json&)) {
  if (cfg.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    table(std::cout, j);
  }
}

int report_failure(curvelab_status s) {
  std::cerr << "error: " << curvelab_last_error() << "\n";
  return exit_code(s);
}

int cmd_analyze(const Config& cfg) {
  const FamilyPtr fam = open_family(cfg);
  const curvelab_options o = options_of(cfg);
  char* raw = nullptr;
  const curvelab_status s = curvelab_analyze(fam.get(), cfg.m, &o, &raw);
  if (auto j = take(raw)) emit(cfg, *j, print_report);
  return s == CURVELAB_OK ? kOk : report_failure(s);
}

int cmd_family(const Config& cfg, bool strict) {
  const auto [lo, hi] = parse_range(cfg.m_range);
  const FamilyPtr fam = open_family(cfg);
  const curvelab_options o = options_of(cfg);
  char* raw = nullptr;
  const curvelab_status s = curvelab_scan(fam.get(), lo, hi, &o, &raw);
  auto j = take(raw);
  if (j) emit(cfg, *j, print_family_table);
  if (s != CURVELAB_OK) return report_failure(s);
  if (strict && j && j->at("summary").at("errors").get<std::int64_t>() > 0) {
    std::cerr << "error: some members could not be analyzed\n";
    return kRefused;
  }
  return kOk;
}

void print_gb(std::ostream& out, const Json& j) {
  out << "m=" << j.at("m").get<std::int64_t>() << " degrees=" << vec_text(j.at("degrees")) << "  "
      << j.at("label").get<std::string>() << "\n";
  print_basis(out, j.at("basis"), "  ");
}

int cmd_gb(const Config& cfg) {
  const FamilyPtr fam = open_family(cfg);
  const curvelab_options o = options_of(cfg);
  const int flags = (cfg.homogenize ? CURVELAB_BASIS_HOMOGENIZE : 0) | (cfg.oracle ? CURVELAB_BASIS_ORACLE : 0);
  char* raw = nullptr;
  const curvelab_status s = curvelab_basis(fam.get(), cfg.m, flags, &o, &raw);
  if (s != CURVELAB_OK) return report_failure(s);
  emit(cfg, *take(raw), print_gb);
  return kOk;
}

void print_recover(std::ostream& out, const Json& j) {
  out << "degrees " << vec_text(j.at("degrees")) << "\n";
  if (j.at("solutions").empty()) {
    out << "not Bresinsky form\n";
    return;
  }
  for (const auto& s : j.at("solutions")) {
    out << "permutation " << vec_text(s.at("permutation")) << " -> degrees " << vec_text(s.at("degrees")) << "\n";
    out << "  parameters " << data_text(s.at("data")) << "\n";
    out << "  v=" << vec_text(s.at("shift")) << "\n";
    out << "  generators\n";
    for (const auto& g : s.at("generators")) out << "    " << binomial_text(g) << "\n";
  }
}

int cmd_recover(const Config& cfg) {
  if (cfg.a.size() != 4 || !cfg.d.empty()) throw UsageError("recover takes --a n1,n2,n3,n4");
  const curvelab_options o = options_of(cfg);
  char* raw = nullptr;
  const curvelab_status s = curvelab_recover(cfg.a.data(), &o, &raw);
  if (auto j = take(raw)) emit(cfg, *j, print_recover);
  return s == CURVELAB_OK ? kOk : report_failure(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arithmetic Cohen-Macaulayness of shifted Gorenstein monomial curves in 4-space"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App* sub, bool range) {
    sub->add_option("--a", cfg.a, "degree vector n1,n2,n3,n4")->delimiter(',');
    sub->add_option("--d", cfg.d, "parameters d21,d41,d32,d42,d13,d23,d14,d34")->delimiter(',');
    if (range) {
      sub->add_option("--m-range", cfg.m_range, "inclusive range lo..hi")->required();
    } else {
      sub->add_option("--m", cfg.m, "family index m >= 0")->check(CLI::NonNegativeNumber);
    }
    sub->add_option("--format", cfg.format, "json or table")
        ->check(CLI::IsMember({"json", "table"}))
        ->envname("CURVELAB_FORMAT");
    sub->add_option("--step-bound", cfg.step_bound, "reduction steps per normal form")
        ->check(CLI::PositiveNumber)
        ->envname("CURVELAB_STEP_BOUND");
    sub->add_option("--d-cap", cfg.d_cap, "cap on d1..d4 during parameter recovery")
        ->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 20))
        ->envname("CURVELAB_D_CAP");
    sub->add_option("--threads", cfg.threads, "scan workers (0 = all cores)")->envname("CURVELAB_THREADS");
  };

  auto* analyze = app.add_subcommand("analyze", "ACM report for one family member");
  add_common(analyze, false);
  analyze->add_flag("--homogenize", cfg.homogenize, "attach the homogeneous basis when ACM");
  auto* family = app.add_subcommand("family", "scan a range of m");
  add_common(family, true);
  auto* verify = app.add_subcommand("verify", "family scan that fails on any disagreement");
  add_common(verify, true);
  auto* gb = app.add_subcommand("gb", "print the Groebner basis of one member");
  add_common(gb, false);
  gb->add_flag("--homogenize", cfg.homogenize, "basis of the homogenized ideal");
  gb->add_flag("--oracle", cfg.oracle, "use the Buchberger result instead of the closed form");
  auto* recover = app.add_subcommand("recover", "recover Bresinsky parameters from degrees");
  add_common(recover, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(cfg);
    if (family->parsed()) return cmd_family(cfg, false);
    if (verify->parsed()) return cmd_family(cfg, true);
    if (gb->parsed()) return cmd_gb(cfg);
    if (recover->parsed()) return cmd_recover(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return exit_code(f.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInconsistent;
  }
  return kUsage;
}
