// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance            run every criterion
//   acceptance 5 7        run the listed criteria
//
// Exit status is nonzero if any selected criterion fails. A criterion also
// fails when it overruns its time budget.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "geometry_oracles.hpp"
#include "lomkit/bounds.hpp"
#include "lomkit/galerad.hpp"
#include "lomkit/verifier.hpp"
#include "oracles.hpp"

using namespace lomkit;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

const std::size_t workers = default_workers();

std::string join(const ColumnSet &s) {
  std::string out;
  for (auto c : s) out += (out.empty() ? "" : ",") + std::to_string(c);
  return "{" + out + "}";
}

// Checks a lower-bound report instance by instance and names any instance
// that falls short.
Outcome lower_bound_outcome(const VerificationReport &rep) {
  std::ostringstream s;
  bool ok = rep.passed();
  for (const auto &w : rep.witnesses) {
    if (w.interior.size() < w.required) {
      ok = false;
      s << "r=" << w.r << " n=" << w.n << (w.t ? " t=" + std::to_string(*w.t) : "") << " reaches "
        << w.interior.size() << " < " << w.required << " via " << to_text(w.travel) << " interior "
        << join(w.interior.elements) << "; ";
    }
  }
  s << rep.instances_checked << " instances, tightest min " << rep.min_interior_observed << " vs required "
    << rep.required_bound;
  return {ok, s.str()};
}

Outcome dim_two() {
  return lower_bound_outcome(verify_lower(Construction::dim2, {0, 6}, {3, 3}, {workers, false}));
}

Outcome dim_three() {
  return lower_bound_outcome(verify_lower(Construction::dim3, {0, 4}, {4, 4}, {workers, false}));
}

Outcome general_rank() {
  const auto rep = verify_lower(Construction::general, {2, 3}, {5, 6}, {workers, false});
  auto out = lower_bound_outcome(rep);
  std::size_t max_n = 0;
  for (const auto &w : rep.witnesses) max_n = std::max(max_n, w.n);
  out.pass = out.pass && max_n == 19;
  out.detail += ", largest n " + std::to_string(max_n);
  return out;
}

Outcome t_one() {
  return lower_bound_outcome(verify_lower(Construction::t1, {1, 1}, {5, 6}, {workers, false}));
}

Outcome even_rank() {
  Outcome out{true, ""};
  for (std::size_t r : {5, 7}) {
    const auto o = lower_bound_outcome(verify_lower(Construction::even_d, {2, 2}, {r, r}, {workers, false}));
    out.pass = out.pass && o.pass;
    out.detail += (out.detail.empty() ? "" : " | ") + ("r=" + std::to_string(r) + ": " + o.detail);
  }
  return out;
}

Outcome counterexamples() {
  Outcome out{true, ""};
  for (auto which : {Counterexample::a, Counterexample::b, Counterexample::c}) {
    const auto spec = counterexample_spec(which);
    const auto rep = reproduce_counterexample(which, {workers, false});
    const bool ok = rep.passed() && rep.witnesses.size() == 1 && rep.witnesses[0].interior.elements == spec.target &&
                    rep.witnesses[0].n == spec.n && rep.witnesses[0].r == spec.r;
    // the witness must be an acyclic reorientation with exactly that interior
    const auto &w = rep.witnesses.at(0);
    const auto b = reorient(w.matrix, w.flips);
    const bool replay = oracle::acyclic(b) && oracle::interior(b) == spec.target;
    out.pass = out.pass && ok && replay;
    out.detail += std::string(out.detail.empty() ? "" : ", ") + std::string(to_string(which)) + ": " +
                  join(w.interior.elements) + (ok && replay ? "" : " (expected " + join(spec.target) + ")");
  }
  return out;
}

Outcome rank_three_scan() {
  Outcome out{true, ""};
  for (std::size_t n = 5; n <= 8; ++n) {
    const auto scan = exhaustive_rank3_scan(n, {workers, false});
    const bool ok = scan.report.passed() && scan.report.min_interior_observed <= n - 5 &&
                    (n < 6 || (scan.attaining > 0 && scan.report.min_interior_observed == n - 5));
    out.pass = out.pass && ok;
    out.detail += (out.detail.empty() ? "" : ", ") + ("n=" + std::to_string(n) + " max " +
                                                       std::to_string(scan.report.min_interior_observed) +
                                                       " attained by " + std::to_string(scan.attaining));
  }
  return out;
}

Outcome two_rows() {
  // reorientations of 2 x n matrices are again 2 x n matrices, so checking
  // every acyclic matrix covers every acyclic reorientation
  Outcome out{true, ""};
  for (std::size_t n = 3; n <= 8; ++n) {
    std::size_t acyclic = 0, bad = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (2 * n)); ++bits) {
      const auto a = SignMatrix::from_bits(2, n, bits);
      if (!is_acyclic(a)) continue;
      ++acyclic;
      if (interior_elements(a).size() != n - 2) ++bad;
    }
    out.pass = out.pass && bad == 0 && acyclic > 0;
    out.detail += (out.detail.empty() ? "" : ", ") + ("n=" + std::to_string(n) + " " + std::to_string(acyclic) +
                                                       " acyclic" + (bad ? " " + std::to_string(bad) + " wrong" : ""));
  }
  return out;
}

Outcome circuit_oracle() {
  std::mt19937_64 rng(20240601);
  std::size_t checked = 0, mismatches = 0;
  while (checked < 200) {
    const std::size_t n = 3 + rng() % 4;
    const auto a = oracle::random_matrix(3, n, rng);
    if (!oracle::acyclic(a)) continue;
    ++checked;
    if (interior_elements(a).elements != oracle::interior(a)) ++mismatches;
  }
  return {mismatches == 0, std::to_string(checked) + " acyclic matrices, " + std::to_string(mismatches) + " mismatches"};
}

Outcome cyclic_facet_counts() {
  std::size_t cells = 0, wrong = 0;
  for (std::size_t d = 2; d <= 6; ++d)
    for (std::size_t n = d + 1; n <= 12; ++n) {
      ++cells;
      if (cyclic_facets(n, d) != oracle::gale_evenness_facets(n, d)) ++wrong;
    }
  const bool spots = cyclic_facets(6, 3) == 8 && cyclic_facets(7, 4) == 14;
  return {wrong == 0 && spots, std::to_string(cells) + " cells, " + std::to_string(wrong) +
                                   " disagreements; f(C_3(6))=" + std::to_string(cyclic_facets(6, 3)) +
                                   " f(C_4(7))=" + std::to_string(cyclic_facets(7, 4))};
}

Outcome duality_line() {
  const auto h = hd1_bound(5, 2);
  const bool table = h.kind == BoundKind::exact && h.upper == 5u;
  std::size_t ok = 0;
  std::string values;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto x = random_config(5, 1, 1100 + seed);
    const auto m = max_r(x, workers);
    ok += m.value == 5 && m.exhaustive;
    values += (values.empty() ? "" : ",") + std::to_string(m.value);
  }
  return {table && ok == 10, "r(X) over 10 configurations: " + values + "; table value " + to_text(h)};
}

Outcome small_values() {
  bool pass = true;
  std::string detail;
  std::size_t circuit_configs = 0;
  for (std::size_t d = 1; d <= 4; ++d)
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      ++circuit_configs;
      if (max_r(random_config(d + 2, d, 1200 + 10 * d + seed), workers).value != 1) pass = false;
    }
  detail = std::to_string(circuit_configs) + " configurations of d+2 points give 1";
  for (std::size_t d = 1; d <= 3; ++d) {
    std::size_t lowest = SIZE_MAX;
    bool all_at_least_two = true;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto v = max_r(random_config(d + 3, d, 1300 + 20 * d + seed), workers).value;
      all_at_least_two = all_at_least_two && v >= 2;
      lowest = std::min(lowest, v);
    }
    pass = pass && all_at_least_two && lowest == 2;
    detail += "; d=" + std::to_string(d) + " with d+3 points: min " + std::to_string(lowest);
  }
  return {pass, detail};
}

Outcome unbalanced_lift() {
  std::size_t sampled = 0, lifted = 0, bad = 0;
  for (auto [n, d] : {std::pair<std::size_t, std::size_t>{6, 2}, {7, 3}, {8, 3}, {6, 1}})
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      ++sampled;
      const auto x = random_config(n, d, 1400 + 100 * n + 10 * d + seed, 10);
      const auto m = max_r(x, workers);
      try {
        const auto l = lift_unbalanced(x, m.witness);
        ++lifted;
        const bool sizes = l.coloring.red_count() == 1 && l.points.size() == n && l.points.dim() == d;
        if (!sizes || count_induced(l.points, l.coloring) != m.value || l.count_before != m.value) ++bad;
      } catch (const NoSeparablePoint &) {
      }
    }
  return {lifted > 0 && bad == 0, std::to_string(sampled) + " sampled, " + std::to_string(lifted) +
                                      " with a separable point, " + std::to_string(bad) + " violations"};
}

Outcome sandwich() {
  std::size_t cells = 0, violations = 0;
  for (std::uint64_t d = 2; d <= 6; ++d)
    for (std::uint64_t n = d + 2; n <= 20; ++n) {
      ++cells;
      const BoundValue emitted[] = {hd1_bound(n, d), hd1_sandwich(n, d)};
      for (const auto &lo : emitted)
        for (const auto &hi : emitted)
          if (lo.lower && hi.upper && *lo.lower > *hi.upper) ++violations;
    }
  return {violations == 0, std::to_string(cells) + " cells, " + std::to_string(violations) + " violations"};
}

const std::vector<Criterion> &criteria() {
  static const std::vector<Criterion> all = {
      {1, "rank-3 one-black-per-column boards, t=0..6", 10, dim_two},
      {2, "sequence (2,t+3,2), t=0..4", 30, dim_three},
      {3, "sequence (2,t+3,2,t+1,...), r in {5,6}, t in {2,3}", 300, general_rank},
      {4, "sequence (2,4,2,3,...), r=5,6", 120, t_one},
      {5, "sequence (2,t+3,2,t+1,2,...), r in {5,7}, t=2", 300, even_rank},
      {6, "three counterexample boards reproduce their interior columns", 60, counterexamples},
      {7, "exhaustive rank-3 board scan, n=5..8", 600, rank_three_scan},
      {8, "acyclic 2 x n matrices have n-2 interior elements, n=3..8", 1, two_rows},
      {9, "travel interior sets match circuit signatures on 200 matrices", 60, circuit_oracle},
      {10, "cyclic polytope facet formula matches Gale evenness", 10, cyclic_facet_counts},
      {11, "five points on a line have r(X)=5", 10, duality_line},
      {12, "r(X)=1 for d+2 points, r(X)>=2 with 2 attained for d+3 points", 60, small_values},
      {13, "unbalanced lift keeps the induced count with one red point", 60, unbalanced_lift},
      {14, "facet bound table: lower bounds never exceed upper bounds", 1, sandwich},
  };
  return all;
}

} // namespace

int main(int argc, char **argv) {
  std::vector<int> selected;
  for (int k = 1; k < argc; ++k) {
    try {
      selected.push_back(std::stoi(argv[k]));
    } catch (const std::exception &) {
      std::cerr << "usage: acceptance [criterion ...]\n";
      return 2;
    }
  }
  if (selected.empty())
    for (const auto &c : criteria()) selected.push_back(c.id);

  int failures = 0;
  for (int id : selected) {
    const Criterion *c = nullptr;
    for (const auto &x : criteria())
      if (x.id == id) c = &x;
    if (!c) {
      std::cerr << "no criterion " << id << '\n';
      return 2;
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c->run();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c->budget_seconds;
    const bool pass = o.pass && in_time;
    failures += !pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", secs, c->budget_seconds);
    std::cout << "criterion " << c->id << ": " << (pass ? "PASS" : "FAIL") << "  " << c->title << "  [" << o.detail
              << "] (" << timing << (in_time ? "" : ", over budget") << ")" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
