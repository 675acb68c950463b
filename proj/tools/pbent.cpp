// pbent: command-line front end for the p-ary bent function toolkit.
//
// Exit codes: 0 ok, 1 negative verdict (check), 2 input error, 3 cap exceeded.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pbent/bent.hpp"
#include "pbent/io.hpp"
#include "pbent/neighbors.hpp"
#include "pbent/quadform.hpp"
#include "pbent/verify.hpp"

namespace {

using namespace pbent;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Quadratic form file: "p n" header, then "i j a" lines (1-based coordinates).
QuadraticForm read_form_file(const std::string& path, const Limits& limits) {
  std::istringstream in(read_file(path));
  std::string line;
  std::size_t lineno = 0;
  std::optional<QuadraticForm> q;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (!q) {
      int p = 0;
      int n = 0;
      if (!(ls >> p >> n)) throw ParseError("malformed header: expected \"p n\"", lineno, 1);
      q.emplace(Params::make(p, n, limits.max_points));
      continue;
    }
    int i = 0;
    int j = 0;
    int a = 0;
    if (!(ls >> i >> j >> a) || i < 1 || j < 1 || i > q->params().n() || j > q->params().n()) {
      throw ParseError("expected \"i j a\" with 1 <= i, j <= n", lineno, 1);
    }
    q->set_coeff(i - 1, j - 1, q->coeff(i - 1, j - 1) + a);
  }
  if (!q) throw ParseError("malformed header: missing \"p n\" line", lineno, 1);
  return *q;
}

struct App {
  Limits limits;

  int check(const std::string& in, bool json) {
    const auto t = read_tt_file(in, limits);
    const auto s = walsh_spectrum(t);
    const bool bent = spectrum_is_flat(s);
    std::optional<TruthTable> d;
    if (bent && t.params.n() % 2 == 0) d = dual_from_spectrum(s);
    std::map<std::string, Index> norms;
    for (const auto& v : s.values) ++norms[v.norm_sq().to_string()];
    if (json) {
      nlohmann::ordered_json j;
      j["p"] = t.params.p();
      j["n"] = t.params.n();
      j["bent"] = bent;
      j["regular"] = d.has_value();
      j["dual"] = d ? nlohmann::ordered_json(tt_digits(*d)) : nlohmann::ordered_json(nullptr);
      j["spectrum_support"] = support_size(s);
      nlohmann::ordered_json hist = nlohmann::ordered_json::object();
      for (const auto& [k, c] : norms) hist[k] = c;
      j["norm_histogram"] = hist;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "bent: " << (bent ? "true" : "false") << ", regular: " << (d ? "true" : "false") << "\n";
      if (d) std::cout << "dual: " << tt_digits(*d) << "\n";
      std::cout << "spectrum: " << s.params.size() << " values, support " << support_size(s) << "\n";
      for (const auto& [k, c] : norms) std::cout << "  |S|^2 = " << k << " : " << c << "\n";
    }
    return bent ? kExitOk : kExitNegative;
  }

  int spectrum(const std::string& in, const std::string& out) {
    const auto t = read_tt_file(in, limits);
    write_output(out, spectrum_json_text(walsh_spectrum(t)) + "\n");
    return kExitOk;
  }

  int inverse(const std::string& in, const std::string& out, const std::string& format) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_file(in));
    } catch (const nlohmann::json::parse_error& e) {
      throw InvalidArgument(std::string("malformed spectrum JSON: ") + e.what());
    }
    const auto f = inverse_dft(spectrum_from_json(j, limits));
    if (format == "json") {
      write_output(out, signal_json_text(f) + "\n");
      return kExitOk;
    }
    std::vector<std::uint8_t> vals;
    for (const auto& v : f.values) {
      const auto root = v.as_scaled_root();
      if (!root || root->first != 1) throw InvalidArgument("signal is not xi^t for a truth table t; use --format json");
      vals.push_back(static_cast<std::uint8_t>(root->second));
    }
    write_output(out, format_tt(TruthTable(f.params, std::move(vals))));
    return kExitOk;
  }

  int neighbors(int p, int d, const std::string& form, const std::string& in, const std::string& out,
                const std::string& mode) {
    NeighborReport rep = [&] {
      if (!in.empty()) {
        const auto t = read_tt_file(in, limits);
        if (mode == "isotropic") throw InvalidArgument("--mode isotropic needs --form");
        return minimal_neighbor_census(t, limits);
      }
      if (form == "q0") {
        if (mode == "isotropic") {
          if (p == 2) throw InvalidArgument("the minimal-neighbor count around q0 requires p > 2");
          const auto prm = Params::make(p, 2 * d, limits.max_points);
          const auto q = q0(prm);
          auto r = minimal_neighbor_census(materialize(q), limits, CensusMode::isotropic_only, q);
          r.base_label = "q0";
          return r;
        }
        return q0_neighbor_report(p, d, limits);
      }
      const auto q = read_form_file(form, limits);
      auto r = minimal_neighbor_census(materialize(q), limits);
      r.base_label = form;
      return r;
    }();
    const auto text = neighbor_report_to_json(rep).dump() + "\n";
    if (out.empty()) {
      std::cout << text;
    } else {
      write_output(out, text);
      std::cout << "p=" << rep.p << " d=" << rep.d << " census_size=" << rep.census_size
                << " formula_value=" << rep.formula_value << " alt_value=" << rep.alt_value
                << " verdict=" << to_string(rep.verdict) << "\n";
    }
    return kExitOk;
  }

  int enumerate(int p, int n, const std::string& range, unsigned workers, const std::string& out) {
    const auto prm = Params::make(p, n, limits.max_points);
    const Index total = table_count(prm, limits);
    RankRange r{0, total};
    if (!range.empty()) {
      const auto colon = range.find(':');
      if (colon == std::string::npos) throw InvalidArgument("--range expects A:B");
      try {
        r.begin = std::stoull(range.substr(0, colon));
        r.end = colon + 1 < range.size() ? std::stoull(range.substr(colon + 1)) : total;
      } catch (const std::exception&) {
        throw InvalidArgument("--range expects A:B with integers");
      }
      if (r.begin > r.end || r.end > total) throw InvalidArgument("--range needs A <= B <= " + std::to_string(total));
    }
    workers = std::max(1u, workers);
    std::vector<std::vector<TruthTable>> parts(workers);
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      const Index span = r.end - r.begin;
      for (unsigned w = 0; w < workers; ++w) {
        const RankRange chunk{r.begin + span * w / workers, r.begin + span * (w + 1) / workers};
        pool.emplace_back([&, w, chunk] {
          try {
            parts[w] = enumerate_bent(prm, chunk, limits);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    std::string text;
    for (const auto& part : parts) {
      for (const auto& t : part) text += tt_digits(t) + "\n";
    }
    write_output(out, text);
    return kExitOk;
  }

  int verify(const std::string& suite, const std::vector<int>& primes, const std::string& json_path, bool no_timestamp,
             std::size_t signals, std::uint64_t seed) {
    VerifyOptions opt;
    opt.primes = primes;
    opt.limits = limits;
    opt.random_signals = signals;
    opt.seed = seed;
    const auto rep = run_verification(suite, opt);
    for (const auto& r : rep.records) {
      std::cout << std::left << std::setw(8) << to_string(r.status) << std::setw(36) << r.claim_id << std::setw(28)
                << r.parameters.dump() << r.computed << "\n";
    }
    std::cout << (rep.ok() ? "OK" : "FAILED") << ": " << rep.records.size() << " records\n";
    if (!json_path.empty()) write_output(json_path, rep.to_json(!no_timestamp).dump(2) + "\n");
    return rep.ok() ? kExitOk : kExitNegative;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Exact analysis of p-ary bent functions on Z_p^n"};
  cli.require_subcommand(1);
  App app;
  cli.add_option("--max-points", app.limits.max_points, "Cap on p^n")->capture_default_str();
  cli.add_option("--max-tables", app.limits.max_tables, "Cap on p^(p^n) for exhaustive table scans")->capture_default_str();
  cli.add_option("--max-subspaces", app.limits.max_subspaces, "Cap on one subspace stream")->capture_default_str();
  cli.add_option("--max-exhaustive-points", app.limits.max_exhaustive_points, "Cap on p^n for quadratic brute force")
      ->capture_default_str();
  cli.add_option("--max-hadamard-points", app.limits.max_hadamard_points, "Cap on p^n for the Hadamard matrix test")
      ->capture_default_str();
  cli.add_option("--max-census-candidates", app.limits.max_census_candidates, "Cap on (coset, shift) pairs per census")
      ->capture_default_str();

  std::string in;
  std::string out;
  bool json = false;
  auto* check = cli.add_subcommand("check", "Bentness, regularity and dual of a truth table");
  check->add_option("--in", in, "Truth-table file")->required();
  check->add_flag("--json", json, "Print the verdict as JSON");

  auto* spectrum = cli.add_subcommand("spectrum", "Write the Walsh spectrum of a truth table as JSON");
  spectrum->add_option("--in", in, "Truth-table file")->required();
  spectrum->add_option("--out", out, "Output file (default stdout)");

  std::string format = "tt";
  auto* inverse = cli.add_subcommand("inverse", "Invert a spectrum JSON back to a truth table or signal");
  inverse->add_option("--in", in, "Spectrum JSON file")->required();
  inverse->add_option("--out", out, "Output file (default stdout)");
  inverse->add_option("--format", format, "tt or json")->check(CLI::IsMember({"tt", "json"}))->capture_default_str();

  int p = 3;
  int d = 1;
  int n = 2;
  std::string form;
  std::string mode = "all";
  auto* neighbors = cli.add_subcommand("neighbors", "Census of bent functions at minimal distance");
  neighbors->add_option("--p", p, "Prime");
  neighbors->add_option("--d", d, "Half dimension, n = 2d");
  auto* form_opt = neighbors->add_option("--form", form, "q0 or a quadratic form file (\"p n\" then \"i j a\" lines)");
  neighbors->add_option("--in", in, "Truth-table file of a bent base")->excludes(form_opt);
  neighbors->add_option("--out", out, "JSON output file (default stdout)");
  neighbors->add_option("--mode", mode, "all (every coset) or isotropic (isotropic cosets only)")
      ->check(CLI::IsMember({"all", "isotropic"}))
      ->capture_default_str();

  std::string range;
  unsigned workers = 1;
  auto* enumerate = cli.add_subcommand("enumerate", "List every bent truth table in lexicographic order");
  enumerate->add_option("--p", p, "Prime")->required();
  enumerate->add_option("--n", n, "Dimension")->required();
  enumerate->add_option("--range", range, "Half-open rank window A:B");
  enumerate->add_option("--workers", workers, "Worker threads")->capture_default_str();
  enumerate->add_option("--out", out, "Output file (default stdout)");

  std::string suite = "all";
  std::vector<int> primes;
  std::string json_path;
  bool no_timestamp = false;
  std::size_t signals = 1000;
  std::uint64_t seed = VerifyOptions{}.seed;
  auto* verify = cli.add_subcommand("verify", "Run a verification suite and report every claim");
  verify->add_option("--suite", suite, "all|transforms|bent|quadform|neighbors")
      ->check(CLI::IsMember({"all", "transforms", "bent", "quadform", "neighbors"}))
      ->capture_default_str();
  verify->add_option("--p", primes, "Primes to run (repeatable; default per suite)");
  verify->add_option("--json", json_path, "Write the report as JSON");
  verify->add_flag("--no-timestamp", no_timestamp, "Omit generated_at and runtime_ms for byte-stable output");
  verify->add_option("--signals", signals, "Random signals per prime")->capture_default_str();
  verify->add_option("--seed", seed, "Corpus seed")->capture_default_str();

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*check) return app.check(in, json);
    if (*spectrum) return app.spectrum(in, out);
    if (*inverse) return app.inverse(in, out, format);
    if (*neighbors) {
      if (in.empty() && form.empty()) form = "q0";
      return app.neighbors(p, d, form, in, out, mode);
    }
    if (*enumerate) return app.enumerate(p, n, range, workers, out);
    if (*verify) return app.verify(suite, primes, json_path, no_timestamp, signals, seed);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
