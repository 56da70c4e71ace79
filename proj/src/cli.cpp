#include "f5c/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "f5c/bench.hpp"
#include "f5c/drivers.hpp"
#include "f5c/io.hpp"
#include "json.hpp"

namespace f5c::cli {

namespace {

struct RunOptions {
  std::string input;
  std::string algorithm = "f5";
  std::optional<std::uint32_t> characteristic;
  bool skip_rule_rebuild = false;
  bool certified = false;
  bool homogenize = false;
  bool verbose = false;
  std::string stats_json;
  std::size_t store_cap = PolyStore::kDefaultCap;
};

struct BenchOptions {
  std::string system;
  std::size_t n = 0;
  std::uint32_t characteristic = kDefaultCharacteristic;
  std::string algorithm = "all";
  std::string stats_json;
  bool skip_rule_rebuild = false;
  bool certified = false;
  bool no_oracle = false;
  std::size_t store_cap = PolyStore::kDefaultCap;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write '" + path + "'");
  f << content << '\n';
}

int do_run(const RunOptions& opt, std::ostream& out, std::ostream& err) {
  std::ifstream in(opt.input);
  if (!in) {
    err << "error: cannot open '" << opt.input << "'\n";
    return kUsage;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  ParsedSystem sys = parse_system(buffer.str(), opt.characteristic);
  Ring ring = sys.ring;
  std::vector<Polynomial> F = std::move(sys.polys);
  if (opt.homogenize) ring = homogenize(F, ring);

  std::vector<Polynomial> basis;
  RunStats stats;
  bool reduced = true;
  if (opt.algorithm == "buchberger") {
    StepCounter counter;
    basis = buchberger_reduced(F, ring, &counter);
    stats.algorithm = "buchberger";
    stats.basis_size_final = basis.size();
  } else {
    VariantConfig config;
    config.variant = parse_variant(opt.algorithm);
    config.skip_rule_rebuild = opt.skip_rule_rebuild;
    config.certified = opt.certified;
    config.store_cap = opt.store_cap;
    config.trace = opt.verbose ? &err : nullptr;
    BasisResult r = compute_basis(F, ring, config);
    basis = std::move(r.basis);
    stats = std::move(r.stats);
    reduced = r.reduced;
    if (opt.certified) {
      const CertificationReport& c = stats.certification;
      err << "certification: " << c.admissibility_checks << " checks, "
          << c.admissibility_violations << " admissibility violations, "
          << c.rule_order_violations << " rule-order violations, "
          << c.rewriter_order_violations << " rewriter-order violations\n";
    }
  }
  for (const Polynomial& g : basis) out << render(make_monic(g, ring), ring) << '\n';

  if (!opt.stats_json.empty()) {
    const auto oracle = buchberger_reduced(F, ring);
    const auto mine = reduced ? basis : interreduce(basis, ring);
    write_file(opt.stats_json, stats_json(stats, ring, mine == oracle));
  }
  return kSuccess;
}

int do_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  BenchmarkSystem sys = opt.system == "katsura" ? katsura(opt.n, opt.characteristic)
                                                : cyclic(opt.n, opt.characteristic);
  std::vector<Variant> variants;
  if (opt.algorithm == "all") {
    variants = {Variant::f5, Variant::f5r, Variant::f5c};
  } else if (opt.algorithm != "buchberger") {
    variants = {parse_variant(opt.algorithm)};
  }
  CompareOptions copt;
  copt.use_oracle = !opt.no_oracle || variants.empty();
  copt.skip_rule_rebuild = opt.skip_rule_rebuild;
  copt.certified = opt.certified;
  copt.store_cap = opt.store_cap;
  Comparison cmp = compare_variants(sys.generators, sys.ring, variants, copt);

  out << sys.name << " over GF(" << opt.characteristic << ")\n";
  out << std::left << std::setw(10) << "variant" << std::right << std::setw(10) << "basis"
      << std::setw(12) << "pairs" << std::setw(12) << "spolys" << std::setw(16) << "reductions"
      << std::setw(16) << "interreduction" << std::setw(8) << "zero" << '\n';
  for (const VariantRun& r : cmp.runs) {
    const IterationStats t = r.stats.totals();
    std::size_t pairs = 0;
    for (const auto& [d, n] : t.pairs_by_degree) pairs += n;
    out << std::left << std::setw(10) << to_string(r.variant) << std::right << std::setw(10)
        << r.stats.basis_size_final << std::setw(12) << pairs << std::setw(12) << t.spolys
        << std::setw(16) << t.reduction_steps << std::setw(16) << t.interreduction_steps
        << std::setw(8) << t.zero_reductions << '\n';
    err << to_string(r.variant) << ": " << std::fixed << std::setprecision(3) << r.seconds
        << " s\n";
  }
  if (variants.empty()) out << "buchberger: " << cmp.oracle_basis.size() << " polynomials\n";
  out << "reduced bases agree: " << (cmp.agreement ? "yes" : "no") << '\n';

  if (!opt.stats_json.empty()) {
    nlohmann::ordered_json j;
    j["system"] = sys.name;
    j["char"] = opt.characteristic;
    j["runs"] = nlohmann::ordered_json::array();
    for (const VariantRun& r : cmp.runs) {
      j["runs"].push_back(nlohmann::ordered_json::parse(stats_json(r.stats, sys.ring, cmp.agreement)));
    }
    j["agreement"] = cmp.agreement;
    write_file(opt.stats_json, j.dump(2));
  }
  return cmp.agreement ? kSuccess : kComputationError;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signature-based Gröbner basis computation (F5, F5R, F5C)", "f5c"};
  app.require_subcommand(1);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "compute a Gröbner basis of a system file");
  run_cmd->add_option("--input", run.input, "system file")->required();
  run_cmd->add_option("--algorithm", run.algorithm)
      ->check(CLI::IsMember({"buchberger", "f5", "f5r", "f5c"}));
  run_cmd->add_option("--char", run.characteristic, "override the file's characteristic");
  run_cmd->add_flag("--skip-rule-rebuild", run.skip_rule_rebuild, "f5c: no phantom rules");
  run_cmd->add_flag("--certified", run.certified, "track cofactors and audit admissibility");
  run_cmd->add_flag("--homogenize", run.homogenize, "homogenize with a fresh variable");
  run_cmd->add_flag("--verbose", run.verbose, "progress trace on stderr");
  run_cmd->add_option("--stats-json", run.stats_json, "write run statistics");
  run_cmd->add_option("--store-cap", run.store_cap, "maximum number of labeled polynomials");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "run a benchmark family");
  bench_cmd->add_option("--system", bench.system)
      ->required()
      ->check(CLI::IsMember({"katsura", "cyclic"}));
  bench_cmd->add_option("--n", bench.n)->required();
  bench_cmd->add_option("--char", bench.characteristic);
  bench_cmd->add_option("--algorithm", bench.algorithm)
      ->check(CLI::IsMember({"buchberger", "f5", "f5r", "f5c", "all"}));
  bench_cmd->add_option("--stats-json", bench.stats_json);
  bench_cmd->add_flag("--skip-rule-rebuild", bench.skip_rule_rebuild);
  bench_cmd->add_flag("--certified", bench.certified);
  bench_cmd->add_flag("--no-oracle", bench.no_oracle, "skip the Buchberger cross-check");
  bench_cmd->add_option("--store-cap", bench.store_cap);

  std::vector<std::string> argv_storage{"f5c"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (run_cmd->parsed()) {
      if (run.skip_rule_rebuild && run.algorithm != "f5c") {
        err << "error: --skip-rule-rebuild requires --algorithm f5c\n";
        return kUsage;
      }
      return do_run(run, out, err);
    }
    return do_bench(bench, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kComputationError;
  }
}

}  // namespace f5c::cli
