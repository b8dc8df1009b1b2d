#pragma once

// Command-line front end. Exit codes: 0 success, 1 identity failure, 2 usage.

#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "eulerbern/eulerbern.hpp"

namespace eulerbern::cli {

enum class ExitCode : int { ok = 0, identity_failure = 1, usage = 2 };

enum class OutputFormat { table, json, csv };

struct RunConfig {
  std::string command;
  Ranges ranges;
  std::optional<std::uint64_t> prime;
  std::optional<unsigned long> precision;
  OutputFormat format = OutputFormat::table;
  std::optional<std::string> output_path;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::size_t parse_natural(const std::string& text, const char* what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError(std::string(what) + " must be a natural number, got '" + text + "'");
  }
  try {
    return static_cast<std::size_t>(std::stoull(text));
  } catch (const std::out_of_range&) {
    throw UsageError(std::string(what) + " is out of range: '" + text + "'");
  }
}

inline Poly parse_poly(const std::string& text) {
  if (text.empty()) throw UsageError("empty polynomial spec");
  try {
    return Poly::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad polynomial spec: ") + e.what());
  }
}

inline std::uint64_t parse_odd_prime(const std::string& text) {
  const auto p = parse_natural(text, "prime");
  try {
    require_odd_prime(p);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return p;
}

inline OutputFormat parse_format(const std::string& text) {
  if (text == "table") return OutputFormat::table;
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  throw UsageError("unknown format '" + text + "'");
}

inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline std::string side_text(const std::optional<Rational>& v) { return v ? v->to_string() : "undefined"; }

inline void emit(const std::string& text, const RunConfig& cfg, std::ostream& out) {
  if (!cfg.output_path) {
    out << text;
    return;
  }
  std::ofstream file(*cfg.output_path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + *cfg.output_path + "'");
  file << text;
}

struct VerifyOptions {
  std::vector<std::string> suites;
  std::string variant = "corrected";
  bool deterministic = false;
  bool expect_typos = false;
  unsigned threads = 1;
};

inline std::string render_verify_table(const Reports& reports, const std::vector<CheckSummary>& summary,
                                       bool deterministic) {
  std::ostringstream out;
  out << "# eulerbern verify\n";
  if (!deterministic) out << "# generated " << utc_timestamp() << '\n';
  out << std::left << std::setw(7) << "suite" << std::setw(15) << "check" << std::setw(11) << "variant"
      << std::right << std::setw(8) << "cases" << std::setw(8) << "failed" << std::setw(10) << "undefined"
      << "  counterexample\n";
  std::size_t failures = 0;
  for (const auto& s : summary) {
    failures += s.failed;
    out << std::left << std::setw(7) << s.suite << std::setw(15) << s.check << std::setw(11)
        << to_string(s.variant) << std::right << std::setw(8) << s.total << std::setw(8) << s.failed
        << std::setw(10) << s.undefined << "  ";
    if (s.counterexample) {
      const auto& c = *s.counterexample;
      out << c.params_string() << " lhs=" << side_text(c.lhs) << " rhs=" << side_text(c.rhs);
    } else {
      out << "-";
    }
    out << '\n';
  }
  out << "total: " << reports.size() << " cases, " << failures << " failures\n";
  return out.str();
}

inline std::string render_verify_json(const Reports& reports, bool deterministic) {
  json doc = json::object();
  if (!deterministic) doc["generated"] = utc_timestamp();
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  doc["reports"] = std::move(arr);
  return doc.dump(1) + "\n";
}

inline std::string render_verify_csv(const Reports& reports) {
  std::ostringstream out;
  out << "suite,check,variant,params,degree,lhs,rhs,equal\n";
  for (const auto& r : reports) {
    out << r.suite << ',' << r.check << ',' << to_string(r.variant) << ',' << csv_field(r.params_string())
        << ',' << r.degree << ',' << side_text(r.lhs) << ',' << side_text(r.rhs) << ','
        << (r.equal ? "true" : "false") << '\n';
  }
  return out.str();
}

inline ExitCode cmd_verify(const RunConfig& cfg, const VerifyOptions& opts, std::ostream& out) {
  VariantSelection sel;
  std::vector<std::string> suites;
  try {
    sel = parse_variant_selection(opts.variant);
    suites = resolve_suites(opts.suites);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Reports reports = run_suites(suites, cfg.ranges, sel, EulerCache::shared(), opts.threads);
  const auto summary = summarize(reports);

  std::string text;
  switch (cfg.format) {
    case OutputFormat::table: text = render_verify_table(reports, summary, opts.deterministic); break;
    case OutputFormat::json: text = render_verify_json(reports, opts.deterministic); break;
    case OutputFormat::csv: text = render_verify_csv(reports); break;
  }
  emit(text, cfg, out);

  for (const auto& r : reports) {
    if (r.equal) continue;
    if (r.variant == Variant::corrected) return ExitCode::identity_failure;
    if (!opts.expect_typos || !known_typo_checks().count(r.check)) return ExitCode::identity_failure;
  }
  return ExitCode::ok;
}

inline std::string render_trace(const PartialSumTrace& trace, OutputFormat format,
                                std::optional<unsigned long> precision) {
  auto residue = [&](const Rational& s) -> std::string {
    try {
      return reduce_mod(s, trace.p, *precision).to_string();
    } catch (const std::invalid_argument&) {
      return "not p-integral";
    }
  };
  std::ostringstream out;
  switch (format) {
    case OutputFormat::csv:
      if (!precision) return trace.to_csv();
      out << "N,S_N,valuation_gap,residue\n";
      for (const auto& row : trace.rows) {
        out << row.N << ',' << row.sum << ',' << row.gap << ',' << residue(row.sum) << '\n';
      }
      break;
    case OutputFormat::json: {
      json doc{{"p", trace.p}, {"limit", trace.limit.to_string()}};
      json rows = json::array();
      for (const auto& row : trace.rows) {
        json j{{"N", row.N}, {"S_N", row.sum.to_string()}, {"valuation_gap", row.gap.to_string()}};
        if (precision) j["residue"] = residue(row.sum);
        rows.push_back(std::move(j));
      }
      doc["rows"] = std::move(rows);
      out << doc.dump(1) << '\n';
      break;
    }
    case OutputFormat::table:
      out << "# p = " << trace.p << ", limit = " << trace.limit << '\n';
      out << std::setw(4) << "N" << "  " << std::setw(24) << "S_N" << "  " << std::setw(13) << "valuation_gap";
      if (precision) out << "  residue";
      out << '\n';
      for (const auto& row : trace.rows) {
        out << std::setw(4) << row.N << "  " << std::setw(24) << row.sum.to_string() << "  " << std::setw(13)
            << row.gap.to_string();
        if (precision) out << "  " << residue(row.sum);
        out << '\n';
      }
      break;
  }
  return out.str();
}

}  // namespace detail

/// Runs the CLI on argv-style arguments (args[0] is the program name).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Euler numbers, Bernstein polynomials and fermionic p-adic integrals", "eulerbern"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "eulerbern 1.0.0");

  RunConfig cfg;
  std::string format = "table";
  std::optional<std::string> out_path;
  std::optional<std::size_t> n_max, k_max, s_max, m_max;
  std::optional<std::string> prime_text;
  std::optional<unsigned long> precision;
  detail::VerifyOptions verify_opts;
  std::string arg1, arg2, arg3, arg4, arg5;

  auto add_output_flags = [&](CLI::App* sub) {
    sub->add_option("--format", format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--out", out_path, "write output to a file instead of stdout");
  };

  auto* euler = app.add_subcommand("euler", "print the Euler number E_n");
  euler->add_option("n", arg1)->required();
  auto* epoly = app.add_subcommand("epoly", "print E_n(x) as a coefficient list, lowest degree first");
  epoly->add_option("n", arg1)->required();
  auto* bern = app.add_subcommand("bernstein", "print B_{k,n}(x) as a coefficient list");
  bern->add_option("k", arg1)->required();
  bern->add_option("n", arg2)->required();

  auto* integ = app.add_subcommand("integrate", "fermionic integral of a polynomial given as c0,c1,...");
  integ->add_option("poly", arg1)->required();
  integ->add_option("--prime", prime_text, "also reduce the value modulo p^precision");
  integ->add_option("--precision", precision)->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "verify identity suites against the expansion oracle");
  verify->add_option("suites", verify_opts.suites, "suite ids (T1 ... C15, EULER, ALL)")->required();
  verify->add_option("--n-max", n_max);
  verify->add_option("--k-max", k_max);
  verify->add_option("--s-max", s_max);
  verify->add_option("--m-max", m_max);
  verify->add_option("--variant", verify_opts.variant, "corrected, as-printed or both")
      ->check(CLI::IsMember({"corrected", "as-printed", "both"}));
  verify->add_flag("--deterministic", verify_opts.deterministic, "omit the timestamp");
  verify->add_flag("--expect-typos", verify_opts.expect_typos,
                   "as-printed failures of known typo checks do not fail the run");
  verify->add_option("--threads", verify_opts.threads, "run suites concurrently")->check(CLI::PositiveNumber);
  add_output_flags(verify);

  auto* trace = app.add_subcommand("padic-trace", "partial sums S_1..S_Nmax and their p-adic distance to the integral");
  trace->add_option("poly", arg1)->required();
  trace->add_option("p", arg2)->required();
  trace->add_option("N_max", arg3)->required();
  trace->add_option("--precision", precision, "add a residue column modulo p^precision")
      ->check(CLI::PositiveNumber);
  add_output_flags(trace);

  auto* qsum = app.add_subcommand("qsum", "q-deformed partial sum at level N, reduced modulo p^M");
  qsum->add_option("poly", arg1)->required();
  qsum->add_option("p", arg2)->required();
  qsum->add_option("q", arg3)->required();
  qsum->add_option("N", arg4)->required();
  qsum->add_option("M", arg5)->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return static_cast<int>(ExitCode::usage);
  }

  try {
    cfg.format = detail::parse_format(format);
    cfg.output_path = out_path;
    cfg.ranges = {n_max, k_max, s_max, m_max};
    cfg.precision = precision;
    if (prime_text) cfg.prime = detail::parse_odd_prime(*prime_text);

    if (euler->parsed()) {
      cfg.command = "euler";
      out << euler_number(detail::parse_natural(arg1, "n")) << '\n';
    } else if (epoly->parsed()) {
      cfg.command = "epoly";
      out << euler_poly(detail::parse_natural(arg1, "n")) << '\n';
    } else if (bern->parsed()) {
      cfg.command = "bernstein";
      out << bernstein_poly({detail::parse_natural(arg1, "k"), detail::parse_natural(arg2, "n")}) << '\n';
    } else if (integ->parsed()) {
      cfg.command = "integrate";
      if (cfg.prime.has_value() != cfg.precision.has_value()) {
        throw UsageError("--prime and --precision must be given together");
      }
      const Rational value = integrate(detail::parse_poly(arg1)).value;
      out << value << '\n';
      if (cfg.prime) out << reduce_mod(value, *cfg.prime, *cfg.precision) << '\n';
    } else if (verify->parsed()) {
      cfg.command = "verify";
      return static_cast<int>(detail::cmd_verify(cfg, verify_opts, out));
    } else if (trace->parsed()) {
      cfg.command = "padic-trace";
      const Poly f = detail::parse_poly(arg1);
      const auto p = detail::parse_odd_prime(arg2);
      const auto n = detail::parse_natural(arg3, "N_max");
      detail::emit(detail::render_trace(convergence_trace(f, p, n), cfg.format, cfg.precision), cfg, out);
    } else if (qsum->parsed()) {
      cfg.command = "qsum";
      const Poly f = detail::parse_poly(arg1);
      const auto p = detail::parse_odd_prime(arg2);
      Rational q;
      try {
        q = Rational::parse(arg3);
      } catch (const std::exception& e) {
        throw UsageError(std::string("bad q: ") + e.what());
      }
      const auto level = detail::parse_natural(arg4, "N");
      const auto m = detail::parse_natural(arg5, "M");
      if (m == 0) throw UsageError("M must be positive");
      out << q_partial_sum(f, p, q, level, m) << '\n';
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::usage);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::usage);
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::usage);
  }
  return 0;
}

}  // namespace eulerbern::cli
