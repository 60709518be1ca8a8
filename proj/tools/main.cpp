#include "CLI11.hpp"

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "sprigid/commands.hpp"

namespace {

int emit(const sprigid::Report &report, const std::string &format) {
  std::cout << sprigid::render_report(report, format);
  return sprigid::report_passed(report) ? 0 : 2;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact spectra and rigidity checks for compact symplectic groups"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  std::string group_text;
  long long max_dim = 0;
  int count = 6;
  int max_rank = 4;
  int n = 2;
  int trials = 100;
  std::uint64_t seed = 20260822;
  std::string spin_text;

  CLI::App *tables = app.add_subcommand("tables", "irrep table for sp(n)");
  tables->fallthrough();
  tables->add_option("group", group_text, "group selector, e.g. C2")->required();
  CLI::Option *max_dim_opt =
      tables->add_option("--max-dim", max_dim, "largest dimension to list");

  CLI::App *spectrum = app.add_subcommand("spectrum", "bi-invariant Laplace spectrum");
  spectrum->fallthrough();
  spectrum->add_option("group", group_text, "group selector, e.g. C2")->required();
  spectrum->add_option("--count", count, "number of distinct eigenvalues")
      ->capture_default_str();

  CLI::App *uniqueness =
      app.add_subcommand("uniqueness", "first-eigenvalue multiplicity case analysis");
  uniqueness->fallthrough();
  uniqueness->add_option("group", group_text, "group selector, e.g. C4")->required();

  CLI::App *scan = app.add_subcommand("scan", "case analysis across non-C groups");
  scan->fallthrough();
  scan->add_option("--max-rank", max_rank, "largest rank to include")
      ->capture_default_str();

  CLI::App *verify_gss = app.add_subcommand("verify-gss", "metric Casimir trace identity");
  verify_gss->fallthrough();
  verify_gss->add_option("n", n, "sp(n) with 1 <= n <= 4")->required();
  verify_gss->add_option("--trials", trials, "random metrics to test")
      ->capture_default_str();
  verify_gss->add_option("--seed", seed, "random seed")->capture_default_str();

  CLI::App *verify_parity =
      app.add_subcommand("verify-parity", "Kramers parity of spin-j Casimir spectra");
  verify_parity->fallthrough();
  verify_parity->add_option("j", spin_text, "spin, e.g. 3/2")->required();
  verify_parity->add_option("--trials", trials, "random metrics to test")
      ->capture_default_str();
  verify_parity->add_option("--seed", seed, "random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    // --help exits 0; every malformed invocation exits 1
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (tables->parsed()) {
      std::optional<sprigid::Integer> bound;
      if (max_dim_opt->count() > 0) bound = sprigid::Integer(max_dim);
      return emit(sprigid::cmd_tables(sprigid::parse_group(group_text), bound), format);
    }
    if (spectrum->parsed())
      return emit(sprigid::cmd_spectrum(sprigid::parse_group(group_text), count), format);
    if (uniqueness->parsed())
      return emit(sprigid::cmd_uniqueness(sprigid::parse_group(group_text)), format);
    if (scan->parsed()) return emit(sprigid::cmd_scan(max_rank), format);
    if (verify_gss->parsed())
      return emit(sprigid::cmd_verify_gss(n, trials, seed), format);
    if (verify_parity->parsed())
      return emit(sprigid::cmd_verify_parity(sprigid::parse_rational(spin_text), trials, seed),
                  format);
  } catch (const std::invalid_argument &err) {
    std::cerr << "usage error: " << err.what() << "\n";
    return 1;
  } catch (const std::exception &err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 1;
}
