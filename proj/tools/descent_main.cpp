#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "descent/cache.hpp"
#include "descent/padic.hpp"
#include "descent/powersum.hpp"
#include "descent/table.hpp"
#include "descent/types.hpp"
#include "descent/verify.hpp"
#include "descent/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

std::pair<int, int> parse_range(const std::string& text) {
  const auto sep = text.find("..");
  try {
    if (sep == std::string::npos) {
      const int single = std::stoi(text);
      return {single, single};
    }
    return {std::stoi(text.substr(0, sep)), std::stoi(text.substr(sep + 2))};
  } catch (const std::exception&) {
    throw std::domain_error("malformed range '" + text + "' (expected A..B)");
  }
}

std::vector<int> parse_prime_list(const std::string& text) {
  std::vector<int> primes;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? comma : comma - start);
    if (!item.empty()) {
      const int p = std::stoi(item);
      descent::require_prime(p);
      primes.push_back(p);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (primes.empty()) throw std::domain_error("empty prime list");
  return primes;
}

std::filesystem::path resolve_cache_path(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("DESCENT_CACHE"); env && *env) return env;
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact descent-set statistics: power sums, valuations, and their verification"};
  app.set_version_flag("--version", std::string(descent::kEngineVersion));
  app.require_subcommand(1);
  app.fallthrough();  // lets --cache / --threads appear after the subcommand too

  std::string cache_flag;
  int threads = 0;
  app.add_option("--cache", cache_flag, "power-sum cache file (overrides DESCENT_CACHE)");
  app.add_option("--threads", threads, "worker count for subset sweeps (0 = hardware)");

  auto* apow_cmd = app.add_subcommand("apow", "print the exact power sum A(n, r)");
  int apow_n = 0, apow_r = 0;
  apow_cmd->add_option("n", apow_n, "order")->required();
  apow_cmd->add_option("r", apow_r, "exponent")->required();

  auto* val_cmd = app.add_subcommand("valuation", "print the p-adic valuation of A(n, r)");
  int val_n = 0, val_r = 0, val_p = 0;
  val_cmd->add_option("n", val_n, "order")->required();
  val_cmd->add_option("r", val_r, "exponent")->required();
  val_cmd->add_option("p", val_p, "prime")->required();

  auto* table_cmd = app.add_subcommand("table", "valuation grid: rows n, columns r");
  int table_p = 2;
  std::string table_n_range, table_r_range, table_format = "csv";
  table_cmd->add_option("--p", table_p, "prime")->required();
  table_cmd->add_option("--n", table_n_range, "order range A..B")->required();
  table_cmd->add_option("--r", table_r_range, "exponent range C..D")->required();
  table_cmd->add_option("--format", table_format, "csv | md | json");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  std::string report_path;
  descent::VerifyOptions verify_options;
  verify_cmd->add_option("suite", suite, "lemma | congruence | bounds | orbit | all")->required();
  verify_cmd->add_option("--n-max", verify_options.n_max, "largest order in suite grids");
  verify_cmd->add_option("--r-max", verify_options.r_max, "largest exponent in suite grids");
  std::string prime_list;
  verify_cmd->add_option("--p-list", prime_list, "comma-separated primes (default 2,3,5)");
  verify_cmd->add_flag("--extended", verify_options.extended, "raise the order cap to 20");
  verify_cmd->add_option("--report", report_path, "also write the JSON report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::CallForVersion& version) {
    return app.exit(version);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return kExitUsage;
  }

  try {
    descent::PowerSumOptions sum_options;
    sum_options.workers = threads > 0
                              ? threads
                              : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    descent::PowerSumCache cache(resolve_cache_path(cache_flag), sum_options);
    const descent::PowerProvider apow = cache.provider();

    if (apow_cmd->parsed()) {
      std::cout << apow(apow_n, apow_r).str() << "\n";
      return kExitOk;
    }

    if (val_cmd->parsed()) {
      std::cout << descent::valuation(apow(val_n, val_r), val_p) << "\n";
      return kExitOk;
    }

    if (table_cmd->parsed()) {
      descent::TableSpec spec;
      spec.prime = table_p;
      std::tie(spec.n_first, spec.n_last) = parse_range(table_n_range);
      std::tie(spec.r_first, spec.r_last) = parse_range(table_r_range);
      spec.format = descent::parse_table_format(table_format);
      std::cout << descent::render_table(spec, apow);
      return kExitOk;
    }

    // verify
    if (!prime_list.empty()) verify_options.primes = parse_prime_list(prime_list);
    const auto records = descent::run_suite(suite, verify_options, apow);
    std::cerr << descent::report_summary(records);
    const std::string json = descent::report_json(suite, records);
    std::cout << json;
    if (!report_path.empty()) {
      std::ofstream out(report_path, std::ios::trunc);
      if (!out) {
        std::cerr << "warning: cannot write report to " << report_path << "\n";
      } else {
        out << json;
      }
    }
    return descent::all_hold(records) ? kExitOk : kExitVerificationFailed;
  } catch (const descent::capacity_error& error) {
    std::cerr << "capacity exceeded: " << error.what() << "\n";
    return kExitCapacity;
  } catch (const std::domain_error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& error) {
    std::cerr << "internal error: " << error.what() << "\n";
    return kExitVerificationFailed;
  }
}
