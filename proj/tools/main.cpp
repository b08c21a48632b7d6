// Command-line front end; talks to the library exclusively through the
// public C interface. Output is JSON lines on stdout (one record per line)
// or CSV with --format csv; everything on stdout is deterministic for a
// given invocation, diagnostics go to stderr.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "chevalley.h"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

int exit_code_for(chv_status st) {
  switch (st) {
    case CHV_OK:
      return kExitOk;
    case CHV_ERR_BUDGET:
      return kExitBudget;
    case CHV_ERR_VERIFY:
    case CHV_ERR_NOT_RATIONAL:
    case CHV_ERR_NON_INTEGRAL:
    case CHV_ERR_INTERNAL:
      return kExitVerifyFailure;
    default:
      return kExitUsage;
  }
}

int report(chv_status st) {
  std::cerr << "error (" << chv_status_name(st) << "): " << chv_last_error() << "\n";
  return exit_code_for(st);
}

// Takes ownership of the C string.
std::string consume(char* s) {
  std::string out(s);
  chv_string_free(s);
  return out;
}

// Approximation column: quotient of decimal strings at long double
// precision. Only ever shown under an explicit "approx" header.
std::string approx(const std::string& num, const std::string& den) {
  long double n = strtold(num.c_str(), nullptr);
  long double d = strtold(den.c_str(), nullptr);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12Lg", n / d);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_row(const std::vector<std::string>& cells) {
  for (size_t i = 0; i < cells.size(); ++i)
    std::cout << (i > 0 ? "," : "") << csv_escape(cells[i]);
  std::cout << "\n";
}

struct GroupHandle {
  chv_group* g = nullptr;
  ~GroupHandle() { chv_group_free(g); }
};

struct CommonArgs {
  std::string format = "json";
  bool csv() const { return format == "csv"; }
};

int emit_count(const std::string& label, int64_t q, int ext, const CommonArgs& common,
               bool want_series, int64_t cutoff) {
  GroupHandle h;
  chv_status st = chv_group_parse(label.c_str(), &h.g);
  if (st != CHV_OK) return report(st);
  char* raw = nullptr;
  st = want_series ? chv_count_series_json(h.g, q, ext, cutoff, &raw)
                   : chv_count_json(h.g, q, ext, &raw);
  if (st != CHV_OK) return report(st);
  std::string json = consume(raw);
  if (!common.csv()) {
    std::cout << json << "\n";
    return kExitOk;
  }
  ordered_json j = ordered_json::parse(json);
  if (want_series) {
    csv_row({"group", "q", "i", "cutoff", "partial_num", "partial_den", "tail_num",
             "tail_den", "closed_num", "closed_den", "within_tail_bound", "nested_checked"});
    csv_row({j["group"], std::to_string(static_cast<int64_t>(j["q"])),
             std::to_string(static_cast<int>(j["i"])),
             std::to_string(static_cast<int64_t>(j["cutoff"])), j["partial"]["num"],
             j["partial"]["den"], j["tail_bound"]["num"], j["tail_bound"]["den"],
             j["closed_form"]["num"], j["closed_form"]["den"],
             j["within_tail_bound"].get<bool>() ? "true" : "false",
             j["nested_checked"].get<bool>() ? "true" : "false"});
  } else {
    csv_row({"group", "q", "i", "order", "bg_num", "bg_den", "approx"});
    csv_row({j["group"], std::to_string(static_cast<int64_t>(j["q"])),
             std::to_string(static_cast<int>(j["i"])), j["order"], j["bg_count"]["num"],
             j["bg_count"]["den"], approx(j["bg_count"]["num"], j["bg_count"]["den"])});
  }
  return kExitOk;
}

int emit_zeta(const std::string& label, int64_t q, int order, bool euler, int64_t weight,
              const CommonArgs& common) {
  GroupHandle h;
  chv_status st = chv_group_parse(label.c_str(), &h.g);
  if (st != CHV_OK) return report(st);
  char* raw = nullptr;
  st = chv_zeta_json(h.g, q, order, &raw);
  if (st != CHV_OK) return report(st);
  std::string exp_json = consume(raw);
  std::string euler_json;
  if (euler) {
    raw = nullptr;
    st = chv_zeta_euler_json(h.g, q, order, weight, &raw);
    if (st != CHV_OK) return report(st);
    euler_json = consume(raw);
  }
  if (!common.csv()) {
    std::cout << exp_json << "\n";
    if (euler) std::cout << euler_json << "\n";
    return kExitOk;
  }
  csv_row({"group", "q", "mode", "W", "series", "m", "num", "den", "approx"});
  auto rows = [](const ordered_json& j, const std::string& mode, const std::string& w) {
    auto one = [&](const char* kind, const ordered_json& list) {
      int m = 0;
      for (const auto& c : list) {
        csv_row({j["group"], std::to_string(static_cast<int64_t>(j["q"])), mode, w, kind,
                 std::to_string(m), c["num"], c["den"], approx(c["num"], c["den"])});
        ++m;
      }
    };
    one("coefficient", j["coefficients"]);
    if (j.contains("discrepancies")) one("discrepancy", j["discrepancies"]);
    if (j.contains("tail_majorants")) one("tail_majorant", j["tail_majorants"]);
  };
  rows(ordered_json::parse(exp_json), "exp", "");
  if (euler) {
    ordered_json je = ordered_json::parse(euler_json);
    rows(je, "euler", std::to_string(static_cast<int64_t>(je["W"])));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact orders, classifying-stack point counts, Betti numbers and zeta "
               "series for reductive groups over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();
  CommonArgs common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  std::string label;
  int64_t q = 0;
  int ext = 1;
  int64_t cutoff = -1;

  CLI::App* cmd_order = app.add_subcommand("order", "Group order over F_{q^i}");
  cmd_order->add_option("group", label, "Group label, e.g. G2 or 2A4")->required();
  cmd_order->add_option("--q", q, "Field size, a prime power")->required();
  cmd_order->add_option("--ext", ext, "Extension degree i >= 1");

  CLI::App* cmd_bg = app.add_subcommand("bg", "Classifying-stack point count");
  cmd_bg->add_option("group", label)->required();
  cmd_bg->add_option("--q", q)->required();
  cmd_bg->add_option("--ext", ext);
  cmd_bg->add_option("--series", cutoff, "Also emit the truncated multi-sum at this cutoff");

  int coeffs = 0;
  bool euler = false;
  int64_t weight = 40;
  CLI::App* cmd_zeta = app.add_subcommand("zeta", "Zeta series coefficients");
  cmd_zeta->add_option("group", label)->required();
  cmd_zeta->add_option("--q", q)->required();
  cmd_zeta->add_option("--coeffs", coeffs, "Truncation order M")->required();
  cmd_zeta->add_flag("--euler", euler, "Also emit the truncated Euler product");
  CLI::Option* wopt =
      cmd_zeta->add_option("--weight", weight, "Euler factor weight cutoff")
          ->capture_default_str();
  wopt->needs("--euler");

  int max_half = 0;
  CLI::App* cmd_betti = app.add_subcommand("betti", "Even-degree Betti numbers");
  cmd_betti->add_option("group", label)->required();
  cmd_betti->add_option("--max", max_half, "Largest half-degree m")->required();

  std::string family;
  int n = 0;
  int threads = 1;
  CLI::App* cmd_oracle = app.add_subcommand("oracle", "Brute-force matrix-group order");
  cmd_oracle->add_option("--family", family, "sl, sp or so")
      ->required()
      ->check(CLI::IsMember({"sl", "sp", "so"}));
  cmd_oracle->add_option("--n", n, "Matrix size")->required();
  cmd_oracle->add_option("--q", q, "Field size")->required();
  cmd_oracle->add_option("--threads", threads, "Partition the enumeration");

  std::string suite = "all";
  int max_rank = 4;
  int64_t max_q = 9;
  CLI::App* cmd_verify = app.add_subcommand("verify", "Run invariant sweeps");
  cmd_verify->add_option("--suite", suite,
                         "integrality|reciprocity|oracle|series|zeta|all (comma-separated)")
      ->capture_default_str();
  cmd_verify->add_option("--max-rank", max_rank)->capture_default_str();
  cmd_verify->add_option("--max-q", max_q)->capture_default_str();

  int catalog_rank = 8;
  CLI::App* cmd_catalog = app.add_subcommand("catalog", "Catalog introspection");
  cmd_catalog->add_option("--max-rank", catalog_rank)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (cmd_order->parsed()) return emit_count(label, q, ext, common, false, 0);

  if (cmd_bg->parsed())
    return emit_count(label, q, ext, common, /*want_series=*/cutoff >= 0, cutoff);

  if (cmd_zeta->parsed()) return emit_zeta(label, q, coeffs, euler, weight, common);

  if (cmd_betti->parsed()) {
    GroupHandle h;
    chv_status st = chv_group_parse(label.c_str(), &h.g);
    if (st != CHV_OK) return report(st);
    char* raw = nullptr;
    st = chv_betti_json(h.g, max_half, &raw);
    if (st != CHV_OK) return report(st);
    std::string json = consume(raw);
    if (!common.csv()) {
      std::cout << json << "\n";
      return kExitOk;
    }
    csv_row({"group", "m", "b"});
    ordered_json arr = ordered_json::parse(json);
    for (size_t m = 0; m < arr.size(); ++m) {
      const auto& b = arr[m];
      csv_row({label, std::to_string(m),
               b.is_string() ? b.get<std::string>()
                             : std::to_string(static_cast<int64_t>(b))});
    }
    return kExitOk;
  }

  if (cmd_oracle->parsed()) {
    char* raw = nullptr;
    auto t0 = std::chrono::steady_clock::now();
    chv_status st = chv_oracle_json(family.c_str(), n, q, threads, 0, &raw);
    auto t1 = std::chrono::steady_clock::now();
    if (st != CHV_OK) return report(st);
    std::string json = consume(raw);
    // Timing is nondeterministic, so it stays off stdout.
    std::cerr << "elapsed_ms="
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
              << "\n";
    if (!common.csv()) {
      std::cout << json << "\n";
      return kExitOk;
    }
    ordered_json j = ordered_json::parse(json);
    csv_row({"family", "n", "q", "order"});
    csv_row({j["family"], std::to_string(static_cast<int>(j["n"])),
             std::to_string(static_cast<int64_t>(j["q"])),
             std::to_string(static_cast<int64_t>(j["order"]))});
    return kExitOk;
  }

  if (cmd_verify->parsed()) {
    char* raw = nullptr;
    chv_status st = chv_verify_json(suite.c_str(), max_rank, max_q, &raw);
    if (st != CHV_OK && st != CHV_ERR_VERIFY) return report(st);
    std::string json = consume(raw);
    ordered_json arr = ordered_json::parse(json);
    if (!common.csv()) {
      for (const auto& row : arr) std::cout << row.dump() << "\n";
    } else {
      csv_row({"suite", "cases", "failures"});
      for (const auto& row : arr)
        csv_row({row["suite"], std::to_string(static_cast<int64_t>(row["cases"])),
                 std::to_string(static_cast<int64_t>(row["failures"]))});
    }
    return st == CHV_OK ? kExitOk : kExitVerifyFailure;
  }

  if (cmd_catalog->parsed()) {
    char* raw = nullptr;
    chv_status st = chv_catalog_json(catalog_rank, &raw);
    if (st != CHV_OK) return report(st);
    std::string json = consume(raw);
    if (!common.csv()) {
      std::cout << json << "\n";
      return kExitOk;
    }
    ordered_json j = ordered_json::parse(json);
    csv_row({"spec", "family", "rank", "twist", "dim", "degrees", "eigenvalues"});
    for (const auto& e : j["entries"]) {
      std::string degrees, eigs;
      for (const auto& d : e["degrees"]) {
        if (!degrees.empty()) degrees += ";";
        degrees += std::to_string(static_cast<int>(d));
      }
      for (const auto& r : e["eigenvalues"]) {
        if (!eigs.empty()) eigs += ";";
        eigs += std::to_string(static_cast<int>(r["numerator"])) + "/" +
                std::to_string(static_cast<int>(r["order"]));
      }
      csv_row({e["spec"], e["family"], std::to_string(static_cast<int>(e["rank"])),
               e["twist"], std::to_string(static_cast<int64_t>(e["dim"])), degrees, eigs});
    }
    return kExitOk;
  }

  return kExitUsage;
}
