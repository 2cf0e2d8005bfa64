#include "mhz/evaluators.hpp"
#include "mhz/parallel.hpp"
#include "mhz/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace mhz;
using nlohmann::ordered_json;

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream stream(text);
  std::string piece;
  while (std::getline(stream, piece, ',')) out.push_back(parse_rat(piece));
  if (out.empty()) throw std::invalid_argument("empty rational list");
  return out;
}

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream stream(text);
  std::string piece;
  while (std::getline(stream, piece, ',')) {
    size_t used = 0;
    long v = std::stol(piece, &used);
    if (used != piece.size()) throw std::invalid_argument("bad integer: " + piece);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + out_path);
  out << text;
}

// lexicographic in N: last coordinate varies fastest
std::vector<std::vector<long>> box_lex(int n, long bound) {
  std::vector<std::vector<long>> points;
  std::vector<long> N(n, 0);
  for (;;) {
    points.push_back(N);
    int pos = n - 1;
    while (pos >= 0 && N[pos] == bound) N[pos--] = 0;
    if (pos < 0) break;
    ++N[pos];
  }
  return points;
}

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\r\n") == std::string::npos) return raw;
  std::string quoted = "\"";
  for (char c : raw) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string latex_rational(const Rat& value) {
  if (value.get_den() == 1) return "$" + value.get_num().get_str() + "$";
  std::string sign = value < 0 ? "-" : "";
  Rat a = abs(value);
  return "$" + sign + "\\frac{" + a.get_num().get_str() + "}{" +
         a.get_den().get_str() + "}$";
}

struct CacheGuard {
  std::string path;
  unsigned long initial = 0;
  explicit CacheGuard(std::string path_) : path(std::move(path_)) {
    if (path.empty()) return;
    bernoulli_cache().load(path);
    initial = bernoulli_cache().computed();
  }
  ~CacheGuard() {
    if (!path.empty() && bernoulli_cache().computed() > initial)
      bernoulli_cache().save(path);
  }
};

int cmd_value(const std::string& alpha_text, const std::string& N_text,
              const std::string& variant_name_, const std::string& out_path) {
  AlphaVec alpha(parse_rat_list(alpha_text));
  MultiIndex N(parse_long_list(N_text));
  if (alpha.dim() != N.dim())
    throw std::invalid_argument("alpha and N dimensions differ");
  EvalReport report = zeta_value(alpha, N, parse_variant(variant_name_));
  emit(report_json(report).dump(2) + "\n", out_path);
  return report.polar ? 2 : 0;
}

int cmd_table(const std::string& alpha_text, int n_opt, long Nmax,
              const std::string& variant_name_, const std::string& format,
              const std::string& out_path) {
  if (Nmax < 0) throw std::invalid_argument("Nmax must be >= 0");
  std::vector<Rat> alphas = parse_rat_list(alpha_text);
  int n = n_opt > 0 ? n_opt : static_cast<int>(alphas.size());
  if (static_cast<int>(alphas.size()) == 1 && n > 1)
    alphas.assign(n, alphas[0]);
  if (static_cast<int>(alphas.size()) != n)
    throw std::invalid_argument("alpha length does not match n");
  AlphaVec alpha(alphas);
  Variant variant = parse_variant(variant_name_);

  auto points = box_lex(n, Nmax);
  std::vector<EvalReport> cells;
  cells.reserve(points.size());
  for (const auto& N : points)
    cells.push_back(EvalReport{n, alpha, MultiIndex(N), variant});
  parallel_for(static_cast<long>(points.size()), [&](long i) {
    cells[i] = zeta_value(alpha, MultiIndex(points[i]), variant);
  });

  std::ostringstream out;
  if (format == "json") {
    ordered_json j;
    j["n"] = n;
    ordered_json alpha_json = ordered_json::array();
    for (const Rat& a : alpha.alphas) alpha_json.push_back(rat_str(a));
    j["alpha"] = alpha_json;
    j["variant"] = variant_name(variant);
    j["Nmax"] = Nmax;
    ordered_json rows = ordered_json::array();
    for (const EvalReport& cell : cells) {
      ordered_json row;
      row["N"] = cell.N.entries;
      if (cell.polar) {
        row["value"] = "pole";
        if (cell.witness) row["witness"] = cell.witness->entries;
      } else {
        row["value"] = rat_str(*cell.value);
      }
      rows.push_back(row);
    }
    j["cells"] = rows;
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    for (int i = 1; i <= n; ++i) out << (i > 1 ? "," : "") << "N" << i;
    out << ",value\r\n";
    for (const EvalReport& cell : cells) {
      for (int i = 0; i < n; ++i)
        out << (i ? "," : "") << cell.N.entries[i];
      out << "," << csv_field(cell.polar ? "pole" : rat_str(*cell.value))
          << "\r\n";
    }
  } else if (format == "latex") {
    out << "\\begin{tabular}{";
    for (int i = 0; i < n; ++i) out << "r";
    out << "l}\n\\toprule\n";
    for (int i = 1; i <= n; ++i) out << "$N_" << i << "$ & ";
    out << "value \\\\\n\\midrule\n";
    for (const EvalReport& cell : cells) {
      for (int i = 0; i < n; ++i) out << cell.N.entries[i] << " & ";
      out << (cell.polar ? std::string("pole") : latex_rational(*cell.value))
          << " \\\\\n";
    }
    out << "\\bottomrule\n\\end{tabular}\n";
  } else {
    throw std::invalid_argument("unknown format: " + format);
  }
  emit(out.str(), out_path);
  return 0;
}

int cmd_poles(int n, long Nmax, const std::string& out_path) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (Nmax < 0) throw std::invalid_argument("Nmax must be >= 0");
  std::ostringstream out;
  long found = 0;
  for (const auto& N_entries : box_lex(n, Nmax)) {
    MultiIndex N(N_entries);
    PolarScan scan = is_polar(N);
    if (!scan.polar) continue;
    ++found;
    out << "N=(";
    for (size_t i = 0; i < N_entries.size(); ++i)
      out << (i ? "," : "") << N_entries[i];
    out << ") polar, witness k=(";
    for (size_t i = 0; i < scan.witness->entries.size(); ++i)
      out << (i ? "," : "") << scan.witness->entries[i];
    out << ")\n";
  }
  if (found == 0) out << "none found\n";
  emit(out.str(), out_path);
  return 0;
}

int cmd_verify(const std::string& suite_name, unsigned seed, double eps,
               long cutoff, const std::string& out_path) {
  std::vector<verify::Suite> suites;
  if (suite_name == "special" || suite_name == "all") {
    if (suite_name == "all") {
      suites.push_back(verify::classical_n1());
      suites.push_back(verify::oracle_grid());
      suites.push_back(verify::bernoulli_roundtrip(seed, 200));
      suites.push_back(verify::pipeline_agreement());
      suites.push_back(verify::variant_arbitration(eps, cutoff));
      suites.push_back(verify::specialization());
      suites.push_back(verify::raabe_suite(eps, cutoff, seed));
      suites.push_back(verify::pole_scan());
      suites.push_back(verify::regression_constants());
    } else {
      suites.push_back(verify::specialization());
      suites.push_back(verify::regression_constants());
    }
  } else if (suite_name == "oracle") {
    suites.push_back(verify::oracle_grid());
  } else if (suite_name == "variants") {
    suites.push_back(verify::variant_arbitration(eps, cutoff));
  } else if (suite_name == "raabe") {
    suites.push_back(verify::raabe_suite(eps, cutoff, seed));
  } else {
    throw std::invalid_argument("unknown suite: " + suite_name);
  }

  bool all_pass = true;
  long case_count = 0;
  for (const verify::Suite& suite : suites) {
    for (const verify::Case& c : suite.cases) {
      std::cout << "[" << suite.name << "] " << (c.pass ? "PASS" : "FAIL") << " "
                << c.name;
      if (!c.pass && !c.detail.empty()) std::cout << " (" << c.detail << ")";
      std::cout << "\n";
      ++case_count;
    }
    all_pass = all_pass && suite.ok();
  }
  std::cout << "verify " << suite_name << ": " << (all_pass ? "PASS" : "FAIL")
            << " (" << case_count << " cases)\n";

  if (!out_path.empty()) {
    ordered_json report;
    report["suite"] = suite_name;
    report["seed"] = seed;
    report["eps"] = eps;
    report["cutoff"] = cutoff;
    report["pass"] = all_pass;
    ordered_json parts = ordered_json::array();
    for (const verify::Suite& suite : suites)
      parts.push_back(verify::suite_json(suite));
    report["suites"] = parts;
    std::ofstream out(out_path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + out_path);
    out << report.dump(2) << "\n";
  }
  return all_pass ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact special values of generalized multiple Hurwitz zeta "
               "functions at non-positive integer arguments"};
  app.require_subcommand(1);

  std::string cache_path;
  if (const char* env = std::getenv("MHZ_CACHE")) cache_path = env;
  app.add_option("--cache", cache_path,
                 "Bernoulli cache file (overrides MHZ_CACHE)");

  auto* value = app.add_subcommand("value", "one zeta value as a JSON report");
  value->fallthrough();
  std::string v_alpha, v_N, v_variant = "corrected", v_out;
  value->add_option("--alpha", v_alpha, "shifts, e.g. 1,3/2")->required();
  value->add_option("--N", v_N, "point, e.g. 0,1")->required();
  value->add_option("--variant", v_variant)
      ->check(CLI::IsMember({"corrected", "paper"}));
  value->add_option("--out", v_out, "write to file instead of stdout");

  auto* table = app.add_subcommand("table", "all values in a box of points");
  table->fallthrough();
  std::string t_alpha, t_variant = "corrected", t_format = "json", t_out;
  int t_n = 0;
  long t_Nmax = 0;
  table->add_option("--alpha", t_alpha, "shifts, scalar broadcasts with --n")
      ->required();
  table->add_option("--n", t_n, "dimension (defaults to len(alpha))");
  table->add_option("--Nmax", t_Nmax, "per-coordinate bound")->required();
  table->add_option("--variant", t_variant)
      ->check(CLI::IsMember({"corrected", "paper"}));
  table->add_option("--format", t_format)
      ->check(CLI::IsMember({"json", "csv", "latex"}));
  table->add_option("--out", t_out, "write to file instead of stdout");

  auto* poles = app.add_subcommand("poles", "guarded polar scan of a box");
  poles->fallthrough();
  int p_n = 1;
  long p_Nmax = 0;
  std::string p_out;
  poles->add_option("--n", p_n, "dimension")->required();
  poles->add_option("--Nmax", p_Nmax, "per-coordinate bound")->required();
  poles->add_option("--out", p_out, "write to file instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "invariant suites");
  verify_cmd->fallthrough();
  std::string s_suite = "all", s_out;
  unsigned s_seed = 0;
  double s_eps = 1e-6;
  long s_cutoff = 10000;
  verify_cmd->add_option("suite", s_suite, "raabe|oracle|variants|special|all")
      ->check(CLI::IsMember({"raabe", "oracle", "variants", "special", "all"}));
  verify_cmd->add_option("--seed", s_seed, "seed for randomized checks");
  verify_cmd->add_option("--eps", s_eps, "numeric tolerance");
  verify_cmd->add_option("--cutoff", s_cutoff, "series truncation bound");
  verify_cmd->add_option("--out", s_out, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    CacheGuard cache(cache_path);
    if (value->parsed()) return cmd_value(v_alpha, v_N, v_variant, v_out);
    if (table->parsed())
      return cmd_table(t_alpha, t_n, t_Nmax, t_variant, t_format, t_out);
    if (poles->parsed()) return cmd_poles(p_n, p_Nmax, p_out);
    if (verify_cmd->parsed())
      return cmd_verify(s_suite, s_seed, s_eps, s_cutoff, s_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const mhz::pole_error& e) {
    std::cerr << "pole: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
