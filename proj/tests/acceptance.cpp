// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
// Every comparison is exact: values live in Z[xi] or are integer counts, so the
// tolerance for each criterion is zero.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "pbent/bent.hpp"
#include "pbent/io.hpp"
#include "pbent/neighbors.hpp"
#include "pbent/quadform.hpp"
#include "pbent/random.hpp"

using namespace pbent;

namespace {

constexpr long long kTolerance = 0;  // exact equality everywhere
constexpr std::uint64_t kSeed = 0xacce97;
constexpr std::size_t kSignalsPerPrime = 1000;
constexpr int kMaxCorpusN = 4;

struct Result {
  bool ok;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Result()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  Result r{false, ""};
  try {
    r = fn();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!r.ok) ++failures;
  std::printf("%s %2d %s: %s (%.1fs)\n", r.ok ? "PASS" : "FAIL", id, name.c_str(), r.detail.c_str(), secs);
  std::fflush(stdout);
}

// 1000 signals per prime, split evenly over n = 1..4.
struct Corpus {
  std::vector<Signal> signals;
};

const std::vector<Corpus>& corpus_for(int p) {
  static std::map<int, std::vector<Corpus>> cache;
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  Rng rng(kSeed + static_cast<std::uint64_t>(p));
  std::vector<Corpus> out;
  for (int n = 1; n <= kMaxCorpusN; ++n) {
    out.push_back({signal_corpus(rng, Params::make(p, n), kSignalsPerPrime / kMaxCorpusN)});
  }
  return cache.emplace(p, std::move(out)).first->second;
}

const std::vector<int> kCorpusPrimes{2, 3, 5};

bool exact_eq(const CycInt& a, const CycInt& b) {
  const auto d = a - b;
  for (auto c : d.coeffs()) {
    if ((c < 0 ? -c : c) > kTolerance) return false;
  }
  return true;
}

std::vector<TruthTable> full_census(const Params& prm, bool naive) {
  std::vector<TruthTable> out;
  const Index total = table_count(prm);
  for (Index r = 0; r < total; ++r) {
    auto t = table_at(prm, r);
    if (naive ? is_bent_naive(t) : is_bent(t)) out.push_back(std::move(t));
  }
  return out;
}

const std::vector<TruthTable>& ternary_census() {
  static const auto c = full_census(Params::make(3, 2), false);
  return c;
}

const std::vector<TruthTable>& binary_census() {
  static const auto c = full_census(Params::make(2, 4), false);
  return c;
}

Result transform_identities() {
  std::size_t signals = 0;
  std::size_t subspace_checks = 0;
  for (int p : kCorpusPrimes) {
    for (const auto& c : corpus_for(p)) {
      for (const auto& f : c.signals) {
        ++signals;
        const auto s = dft_fast(f);
        if (!(inverse_dft(s) == f)) return {false, "inversion failed"};
        const auto [pl, pr] = parseval_check(f);
        if (!exact_eq(pl, pr)) return {false, "Parseval failed"};
      }
      // Convolution over consecutive pairs of the corpus.
      for (std::size_t i = 0; i + 1 < c.signals.size(); ++i) {
        const auto& f = c.signals[i];
        const auto& g = c.signals[i + 1];
        const auto lhs = dft_fast(convolve(f, g));
        const auto sf = dft_fast(f);
        const auto sg = dft_fast(g);
        for (Index z = 0; z < f.params.size(); ++z) {
          if (!exact_eq(lhs[z], sf[z] * sg[z])) return {false, "convolution theorem failed"};
        }
      }
    }
  }
  for (const auto& c : corpus_for(3)) {
    const auto& prm = c.signals.front().params;
    std::vector<AffineSubspace> subs;
    for (int k = 0; k <= prm.n(); ++k) {
      for (auto& u : enumerate_subspaces(prm, k)) subs.push_back(std::move(u));
    }
    for (const auto& f : c.signals) {
      const auto s = dft_fast(f);
      for (const auto& u : subs) {
        const auto [a, b] = subspace_sum_check(f, s, u);
        if (!exact_eq(a, b)) return {false, "subspace sum failed on " + u.to_string()};
        ++subspace_checks;
      }
    }
  }
  return {true, std::to_string(signals) + " signals; " + std::to_string(subspace_checks) +
                    " subspace-sum checks over every subspace for p=3, n<=4"};
}

Result uncertainty() {
  std::size_t checked = 0;
  std::size_t sharp = 0;
  for (int p : kCorpusPrimes) {
    for (const auto& c : corpus_for(p)) {
      for (const auto& f : c.signals) {
        if (support_size(f) == 0) continue;
        ++checked;
        const auto [a, b] = uncertainty_check(f);
        if (a * b < f.params.size()) return {false, "support product below p^n"};
        if (a * b == f.params.size()) {
          ++sharp;
          const auto e = classify_equality_case(f);
          if (!e || !(modulated_indicator(e->c, e->z, e->support) == f)) return {false, "sharp case not decomposed"};
        }
      }
    }
  }
  return {sharp > 0, std::to_string(checked) + " nonzero signals, " + std::to_string(sharp) + " sharp cases decomposed"};
}

Result ternary_min_distance() {
  const auto& census = ternary_census();
  const auto md = min_pairwise_distance(census);
  if (md.dmin != 3) return {false, "dmin " + std::to_string(md.dmin)};
  std::size_t affine = 0;
  for (const auto& [i, j] : md.pairs) {
    const auto pr = classify_min_distance_pair(census[i], census[j]);
    if (pr.gamma.dim() != 1) return {false, "difference support is not a line"};
    if (is_affine_on(census[i], pr.gamma) && is_affine_on(census[j], pr.gamma)) ++affine;
  }
  const bool ok = affine == md.pairs.size();
  return {ok, "19683 tables, census " + std::to_string(census.size()) + ", dmin 3, " + std::to_string(md.pairs.size()) +
                  " pairs of form c*chi^Gamma, " + std::to_string(affine) + " with the common part affine on Gamma"};
}

Result binary_cross_check() {
  const auto& census = binary_census();
  const auto naive = full_census(Params::make(2, 4), true);
  const auto md = min_pairwise_distance(census);
  const bool ok = census == naive && md.dmin == 4;
  return {ok, "65536 tables, census " + std::to_string(census.size()) + " (naive oracle " + std::to_string(naive.size()) +
                  "), dmin " + std::to_string(md.dmin)};
}

Result isotropic_counts() {
  struct Case {
    int p, d;
    Index listed;
  };
  const std::vector<Case> cases{{2, 2, 6}, {3, 1, 2}, {3, 2, 8}, {5, 1, 6}};
  bool ok = true;
  std::ostringstream os;
  for (const auto& c : cases) {
    const auto got = enumerate_max_isotropic(q0(Params::make(c.p, 2 * c.d)), c.d).size();
    const auto formula = isotropic_count_formula(c.p, c.d);
    ok = ok && got == formula;
    os << "(" << c.p << "," << c.d << ")=" << got << " formula " << formula;
    if (c.listed != formula) os << " [listed " << c.listed << "]";
    os << "; ";
  }
  auto s = os.str();
  s.resize(s.size() - 2);
  return {ok, s};
}

Result neighbor_construction() {
  std::size_t cosets = 0;
  for (auto [p, d] : {std::pair{3, 1}, {3, 2}, {5, 1}}) {
    const auto q = q0(Params::make(p, 2 * d));
    const auto b = materialize(q);
    const auto dist = checked_pow(static_cast<Index>(p), d);
    for (const auto& u : enumerate_max_isotropic(q, d)) {
      for (const auto& g : enumerate_cosets(u)) {
        ++cosets;
        const auto n = neighbors_on_subspace(b, g);
        if (n.members.size() != static_cast<std::size_t>(p - 1)) return {false, "short coset " + g.to_string()};
        for (const auto& t : n.members) {
          if (distance(b, t) != dist) return {false, "wrong distance on " + g.to_string()};
        }
      }
    }
  }
  return {true, std::to_string(cosets) + " isotropic cosets, p-1 bent shifts each at distance p^d"};
}

Result neighbor_count_adjudication() {
  std::ostringstream os;
  for (int d : {1, 2}) {
    const auto r = q0_neighbor_report(3, d);
    os << "(3," << d << ") census " << r.census_size << " vs formula " << r.formula_value << " / composite "
       << r.alt_value << " -> " << to_string(r.verdict) << "; ";
  }
  const auto prm = Params::make(3, 2);
  const auto q = q0(prm);
  const auto b = materialize(q);
  std::size_t bent_shifts = 0;
  std::size_t shifts = 0;
  for (const auto& u : enumerate_max_isotropic(q, 1)) {
    for (const auto& g : enumerate_cosets(u)) {
      for (int c = 1; c < 3; ++c) {
        ++shifts;
        bent_shifts += is_bent(shift_on_subspace(b, g, c)) ? 1 : 0;
      }
    }
  }
  os << bent_shifts << " of " << shifts << " isotropic-coset shifts bent";
  return {shifts == 12 && bent_shifts == 12, os.str()};
}

Result affine_dimension_bound() {
  int worst3 = 0;
  int worst2 = 0;
  for (const auto& t : ternary_census()) worst3 = std::max(worst3, max_affine_dimension(t));
  for (const auto& t : binary_census()) worst2 = std::max(worst2, max_affine_dimension(t));
  return {worst3 <= 1 && worst2 <= 2,
          "max over p=3,n=2 census " + std::to_string(worst3) + ", over p=2,n=4 census " + std::to_string(worst2)};
}

Result support_symmetry() {
  const auto& census = ternary_census();
  std::vector<Spectrum> spectra;
  for (const auto& t : census) spectra.push_back(walsh_spectrum(t));
  std::size_t pairs = 0;
  std::size_t bad = 0;
  std::string example;
  for (std::size_t i = 0; i < census.size(); ++i) {
    for (std::size_t j = i + 1; j < census.size(); ++j) {
      ++pairs;
      Index ds = 0;
      for (Index y = 0; y < 9; ++y) ds += exact_eq(spectra[i][y], spectra[j][y]) ? 0 : 1;
      const Index dt = distance(census[i], census[j]);
      if (ds != dt) {
        if (bad++ == 0) {
          example = tt_digits(census[i]) + " vs " + tt_digits(census[j]) + ": " + std::to_string(dt) + " vs " +
                    std::to_string(ds);
        }
      }
    }
  }
  return {bad == 0, std::to_string(pairs) + " pairs, " + std::to_string(bad) + " unequal" +
                        (bad ? ", e.g. " + example : std::string())};
}

Result determinism() {
  std::size_t n = 0;
  for (int p : kCorpusPrimes) {
    for (const auto& c : corpus_for(p)) {
      for (const auto& f : c.signals) {
        if (!(dft_fast(f) == dft(f))) return {false, "fast and naive transforms differ"};
        ++n;
      }
    }
  }
  auto dump = [](const std::vector<TruthTable>& ts) {
    std::string s;
    for (const auto& t : ts) s += tt_digits(t) + "\n";
    return s;
  };
  const auto prm = Params::make(3, 2);
  const std::string whole = dump(enumerate_bent(prm));
  std::string joined;
  const std::vector<Index> cuts{0, 1, 4000, 9841, 9842, 15000, 19683};
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) joined += dump(enumerate_bent(prm, RankRange{cuts[i], cuts[i + 1]}));
  const bool ok = joined == whole;
  return {ok, std::to_string(n) + " signals fast == naive; 6-way partition of p=3,n=2 " +
                  (ok ? "byte-identical" : "differs") + " (" + std::to_string(whole.size()) + " bytes)"};
}

}  // namespace

int main() {
  report(1, "transform identities", transform_identities);
  report(2, "uncertainty principle", uncertainty);
  report(3, "ternary minimal distance", ternary_min_distance);
  report(4, "binary cross-check", binary_cross_check);
  report(5, "isotropic subspace counts", isotropic_counts);
  report(6, "isotropic-coset neighbors", neighbor_construction);
  report(7, "neighbor count adjudication", neighbor_count_adjudication);
  report(8, "affine-restriction bound", affine_dimension_bound);
  report(9, "support symmetry", support_symmetry);
  report(10, "engineering determinism", determinism);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
