#pragma once

// Verification engines: minimum-interior scans of the theorem boards,
// the three counterexample boards, the exhaustive rank-3 board scan and a
// small exploratory search for boards with many interior elements.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "lomkit/chessboard.hpp"
#include "lomkit/errors.hpp"
#include "lomkit/parallel.hpp"
#include "lomkit/sign_matrix.hpp"
#include "lomkit/travels.hpp"

namespace lomkit {

/// One checked instance: the travel, its interior set and everything needed
/// to replay it.
struct Witness {
  std::size_t r = 0;
  std::size_t n = 0;
  std::optional<std::size_t> t;
  Travel travel = staircase(1, 1, {});
  InteriorSet interior;
  ColumnSet flips;
  std::size_t required = 0;
  std::size_t travels_checked = 0;
  SignMatrix matrix = SignMatrix::constant(1, 1);
  Chessboard board = Chessboard::white(2, 2);
};

enum class Verdict { pass, fail };

struct VerificationReport {
  std::string theorem_id;
  nlohmann::json parameters = nlohmann::json::object();
  std::size_t instances_checked = 0;
  std::size_t min_interior_observed = 0;
  std::size_t required_bound = 0;
  std::vector<Witness> witnesses;
  Verdict verdict = Verdict::fail;
  std::optional<double> wall_time;

  [[nodiscard]] bool passed() const noexcept { return verdict == Verdict::pass; }
};

struct VerifyOptions {
  std::size_t workers = 1;
  /// Fill wall_time. Off by default so reports are reproducible byte for byte.
  bool timing = false;
};

struct Range {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

namespace detail {

class Stopwatch {
public:
  explicit Stopwatch(bool on) : on_(on), start_(std::chrono::steady_clock::now()) {}
  [[nodiscard]] std::optional<double> seconds() const {
    if (!on_) return std::nullopt;
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  bool on_;
  std::chrono::steady_clock::time_point start_;
};

inline Witness make_witness(const SignMatrix &a, const std::vector<std::size_t> &drops,
                            std::size_t required, std::optional<std::size_t> t) {
  Witness w;
  w.r = a.rows();
  w.n = a.cols();
  w.t = t;
  w.travel = staircase(a.rows(), a.cols(), drops, drops.empty() ? TravelKind::top : TravelKind::plain);
  w.flips = reorientation_for_drops(a, drops);
  w.interior = interior_elements(reorient(a, w.flips));
  w.required = required;
  w.matrix = a;
  w.board = board_of(a);
  return w;
}

} // namespace detail

/// Checks a construction on every (r, t) in the given ranges: each board's
/// minimum interior count over all acyclic reorientations must reach the
/// construction's bound. The report's minimum and required bound describe
/// the instance with the smallest margin; one witness per instance.
/// For dim2 and dim3 the rank range must be {3} and {4}; for t1 the t range
/// is ignored; for even-d only the odd ranks of the range are checked.
inline VerificationReport verify_lower(Construction which, Range t_range, Range r_range,
                                       const VerifyOptions &opt = {}) {
  if (t_range.lo > t_range.hi || r_range.lo > r_range.hi)
    throw InvalidArgument("verify_lower: empty range");
  if (which == Construction::t1) t_range = {1, 1};
  detail::Stopwatch clock(opt.timing);
  VerificationReport rep;
  rep.theorem_id = std::string(to_string(which));
  rep.parameters = {{"r", {r_range.lo, r_range.hi}}, {"t", {t_range.lo, t_range.hi}}};
  bool first = true;
  long long worst_margin = 0;
  bool all_pass = true;
  for (std::size_t r = r_range.lo; r <= r_range.hi; ++r) {
    if (which == Construction::even_d && r % 2 == 0 && r_range.lo != r_range.hi) continue;
    for (std::size_t t = t_range.lo; t <= t_range.hi; ++t) {
      const Chessboard board = corners_for(which, r, t);
      const SignMatrix a = realize_board(board);
      const std::size_t required = required_interior(which, t);
      const MinInteriorResult res = min_interior(a, opt.workers);
      Witness w = detail::make_witness(a, res.witness_drops, required,
                                       which == Construction::t1 ? std::nullopt
                                                                 : std::optional<std::size_t>(t));
      w.board = board;
      w.travels_checked = res.travels_checked;
      ++rep.instances_checked;
      const long long margin =
          static_cast<long long>(res.count) - static_cast<long long>(required);
      if (first || margin < worst_margin) {
        worst_margin = margin;
        rep.min_interior_observed = res.count;
        rep.required_bound = required;
        first = false;
      }
      all_pass = all_pass && res.count >= required;
      rep.witnesses.push_back(std::move(w));
    }
  }
  if (rep.instances_checked == 0) throw InvalidArgument("verify_lower: no instance in range");
  rep.verdict = all_pass ? Verdict::pass : Verdict::fail;
  rep.wall_time = clock.seconds();
  return rep;
}

// --- counterexample boards -----------------------------------------------

enum class Counterexample { a, b, c };

struct CounterexampleSpec {
  std::size_t r;
  std::size_t n;
  Sequence sequence;
  ColumnSet target;
};

inline CounterexampleSpec counterexample_spec(Counterexample which) {
  switch (which) {
  case Counterexample::a: return {5, 11, {2, 4, 2, 2}, {1}};
  case Counterexample::b: return {6, 15, {2, 5, 2, 3, 2}, {13, 15}};
  case Counterexample::c: return {5, 14, {2, 6, 2, 3}, {11, 13, 14}};
  }
  throw InvalidArgument("counterexample_spec: unknown board");
}

inline std::string_view to_string(Counterexample c) {
  switch (c) {
  case Counterexample::a: return "a";
  case Counterexample::b: return "b";
  case Counterexample::c: return "c";
  }
  return "?";
}

/// Searches every travel shape of the board for a reorientation whose
/// interior set is exactly the target columns. The witness is the
/// lexicographically first such travel; the observed minimum is the
/// board's minimum over all reorientations.
inline VerificationReport reproduce_counterexample(Counterexample which,
                                                   const VerifyOptions &opt = {}) {
  detail::Stopwatch clock(opt.timing);
  const auto spec = counterexample_spec(which);
  const Chessboard board = Chessboard::from_sequence(spec.r, spec.n, spec.sequence);
  const SignMatrix a = realize_board(board);

  VerificationReport rep;
  rep.theorem_id = "counterexample-" + std::string(to_string(which));
  rep.parameters = {{"r", spec.r},
                    {"n", spec.n},
                    {"sequence", spec.sequence},
                    {"target", spec.target}};
  rep.required_bound = spec.target.size();

  std::optional<std::vector<std::size_t>> hit;
  std::size_t checked = 0;
  for_each_travel_shape(
      spec.r, spec.n,
      [&](const std::vector<std::size_t> &d) {
        ++checked;
        if (interior_for_drops(a, d).elements == spec.target) {
          hit = d;
          return false;
        }
        return true;
      },
      true);
  const MinInteriorResult best = min_interior(a, opt.workers);
  rep.instances_checked = 1;
  rep.min_interior_observed = best.count;
  Witness w = detail::make_witness(a, hit ? *hit : best.witness_drops, spec.target.size(),
                                   std::nullopt);
  w.board = board;
  w.travels_checked = hit ? checked : best.travels_checked;
  rep.witnesses.push_back(std::move(w));
  rep.verdict = hit ? Verdict::pass : Verdict::fail;
  rep.wall_time = clock.seconds();
  return rep;
}

// --- exhaustive rank-3 scan ------------------------------------------------

struct RankThreeScan {
  VerificationReport report;
  /// Minimum interior count per board, indexed by the board bitmap.
  std::vector<std::uint8_t> minima;
  std::size_t attaining = 0;
};

namespace detail {

inline std::uint64_t board_bits(const Chessboard &b) {
  std::uint64_t v = 0;
  for (std::size_t i = 1; i < b.rows(); ++i)
    for (std::size_t j = 1; j < b.cols(); ++j)
      if (b.black(i, j)) v |= std::uint64_t{1} << ((i - 1) * (b.cols() - 1) + (j - 1));
  return v;
}

} // namespace detail

/// Every 2 x (n-1) board: realizes the canonical matrix and checks that
/// some acyclic reorientation has at most n-5 interior elements, and for
/// n >= 6 that some board needs exactly n-5. With `prune_symmetry` only one
/// board per mirror/flip orbit is scanned and the others copy its value.
inline RankThreeScan exhaustive_rank3_scan(std::size_t n, const VerifyOptions &opt = {},
                                           bool prune_symmetry = false) {
  if (n < 5 || n > 9) throw InvalidArgument("exhaustive_rank3_scan: n must be in 5..9");
  detail::Stopwatch clock(opt.timing);
  const std::size_t squares = 2 * (n - 1);
  const std::uint64_t total = std::uint64_t{1} << squares;
  RankThreeScan out;
  out.minima.assign(total, 0);

  std::vector<std::uint8_t> scanned(total, 1);
  if (prune_symmetry) {
    for (std::uint64_t b = 0; b < total; ++b) {
      const Chessboard c = Chessboard::from_bits(3, n, b);
      const std::uint64_t m = detail::board_bits(c.mirrored()), f = detail::board_bits(c.flipped()),
                          mf = detail::board_bits(c.mirrored().flipped());
      scanned[b] = b <= m && b <= f && b <= mf;
    }
  }

  const std::size_t chunk = 256;
  const std::size_t chunks = static_cast<std::size_t>((total + chunk - 1) / chunk);
  parallel_for(chunks, opt.workers, [&](std::size_t k) {
    const std::uint64_t lo = k * chunk, hi = std::min<std::uint64_t>(total, lo + chunk);
    for (std::uint64_t b = lo; b < hi; ++b) {
      if (!scanned[b]) continue;
      out.minima[b] = static_cast<std::uint8_t>(
          min_interior(realize_board(Chessboard::from_bits(3, n, b))).count);
    }
  });
  if (prune_symmetry) {
    for (std::uint64_t b = 0; b < total; ++b) {
      if (scanned[b]) continue;
      const Chessboard c = Chessboard::from_bits(3, n, b);
      std::uint64_t rep = b;
      for (const auto &o : {c.mirrored(), c.flipped(), c.mirrored().flipped()})
        rep = std::min(rep, detail::board_bits(o));
      out.minima[b] = out.minima[rep];
    }
  }

  const std::size_t ceiling = n - 5;
  std::size_t worst = 0;
  std::optional<std::uint64_t> first_attaining;
  for (std::uint64_t b = 0; b < total; ++b) {
    worst = std::max<std::size_t>(worst, out.minima[b]);
    if (out.minima[b] == ceiling) {
      ++out.attaining;
      if (!first_attaining) first_attaining = b;
    }
  }

  VerificationReport &rep = out.report;
  rep.theorem_id = "rank3-scan";
  rep.parameters = {{"r", 3},
                    {"n", n},
                    {"bound", "upper"},
                    {"boards", total},
                    {"attaining", out.attaining},
                    {"symmetryPruning", prune_symmetry}};
  rep.instances_checked = static_cast<std::size_t>(total);
  rep.min_interior_observed = worst;
  rep.required_bound = ceiling;
  const bool attained = n < 6 || out.attaining > 0;
  rep.verdict = worst <= ceiling && attained ? Verdict::pass : Verdict::fail;
  // witness: a board needing the most interior elements
  std::uint64_t shown = 0;
  for (std::uint64_t b = 0; b < total; ++b)
    if (out.minima[b] == worst) {
      shown = b;
      break;
    }
  const Chessboard board = Chessboard::from_bits(3, n, shown);
  const SignMatrix a = realize_board(board);
  const MinInteriorResult res = min_interior(a);
  Witness w = detail::make_witness(a, res.witness_drops, ceiling, std::nullopt);
  w.board = board;
  w.travels_checked = res.travels_checked;
  rep.witnesses.push_back(std::move(w));
  rep.wall_time = clock.seconds();
  return out;
}

// --- exploration -------------------------------------------------------------

struct Exploration {
  Chessboard board = Chessboard::white(2, 2);
  std::size_t value = 0;
  std::size_t boards_examined = 0;
  bool exhaustive = false;
  std::string source;
};

/// The construction board for an r x n matrix if one of the theorems
/// produces exactly that size.
inline std::optional<Chessboard> theorem_board(std::size_t r, std::size_t n) {
  auto try_make = [&](Construction c, std::size_t t) -> std::optional<Chessboard> {
    try {
      auto b = corners_for(c, r, t);
      if (b.cols() == n) return b;
    } catch (const InvalidArgument &) {
    }
    return std::nullopt;
  };
  for (std::size_t t = 0; t <= n; ++t)
    for (auto c : {Construction::dim2, Construction::dim3, Construction::general,
                   Construction::even_d})
      if (auto b = try_make(c, t)) return b;
  return try_make(Construction::t1, 1);
}

/// Looks for a board whose canonical matrix needs many interior elements.
/// With budget 0 the theorem board (or the white board) is evaluated alone.
/// When the whole board space fits in the budget it is scanned exhaustively;
/// otherwise a seeded hill climb flips one square at a time from the
/// starting board, keeping changes that do not lower the value.
inline Exploration search_small_topes(std::size_t r, std::size_t n, std::size_t budget,
                                      std::uint64_t seed = 1, std::size_t workers = 1) {
  if (r < 3) throw InvalidArgument("search_small_topes: needs r >= 3");
  if (n < r) throw InvalidArgument("search_small_topes: needs n >= r");
  auto value_of = [&](const Chessboard &b) { return min_interior(realize_board(b), workers).count; };

  Exploration best;
  const auto start = theorem_board(r, n);
  best.board = start ? *start : Chessboard::white(r, n);
  best.source = start ? "theorem board" : "white board";
  best.value = value_of(best.board);
  best.boards_examined = 1;
  if (budget == 0) return best;

  const std::size_t squares = (r - 1) * (n - 1);
  if (squares < 63 && (std::uint64_t{1} << squares) <= budget) {
    const std::uint64_t total = std::uint64_t{1} << squares;
    std::vector<std::size_t> values(total);
    parallel_for(static_cast<std::size_t>(total), workers, [&](std::size_t b) {
      values[b] = min_interior(realize_board(Chessboard::from_bits(r, n, b))).count;
    });
    std::uint64_t top = 0;
    for (std::uint64_t b = 1; b < total; ++b)
      if (values[b] > values[top]) top = b;
    best.value = values[top];
    best.board = Chessboard::from_bits(r, n, top);
    best.source = "exhaustive";
    best.boards_examined = static_cast<std::size_t>(total);
    best.exhaustive = true;
    return best;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_i(1, r - 1), pick_j(1, n - 1);
  Chessboard cur = best.board;
  std::size_t cur_value = best.value;
  for (std::size_t step = 0; step < budget; ++step) {
    const std::size_t i = pick_i(rng), j = pick_j(rng);
    std::vector<bool> bits;
    for (std::size_t a = 1; a < r; ++a)
      for (std::size_t b = 1; b < n; ++b) bits.push_back(cur.black(a, b) != (a == i && b == j));
    Chessboard next(r, n, std::move(bits));
    const std::size_t v = value_of(next);
    ++best.boards_examined;
    if (v >= cur_value) {
      cur = std::move(next);
      cur_value = v;
      if (v > best.value) {
        best.value = v;
        best.board = cur;
        best.source = "hill climb";
      }
    }
  }
  return best;
}

// --- serialization -----------------------------------------------------------

inline nlohmann::json to_json(const Witness &w) {
  nlohmann::json j = {{"r", w.r},
                      {"n", w.n},
                      {"travel", to_text(w.travel)},
                      {"interior", w.interior.elements},
                      {"count", w.interior.size()},
                      {"required", w.required},
                      {"flips", w.flips},
                      {"travelsChecked", w.travels_checked},
                      {"matrix", to_text(w.matrix)},
                      {"board", to_text(w.board)}};
  j["t"] = w.t ? nlohmann::json(*w.t) : nlohmann::json(nullptr);
  return j;
}

inline nlohmann::json to_json(const VerificationReport &rep) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto &w : rep.witnesses) witnesses.push_back(to_json(w));
  nlohmann::json j = {{"theoremId", rep.theorem_id},
                      {"parameters", rep.parameters},
                      {"instancesChecked", rep.instances_checked},
                      {"minInteriorObserved", rep.min_interior_observed},
                      {"requiredBound", rep.required_bound},
                      {"witnesses", witnesses},
                      {"verdict", rep.passed() ? "pass" : "fail"}};
  j["wallTime"] = rep.wall_time ? nlohmann::json(*rep.wall_time) : nlohmann::json(nullptr);
  return j;
}

inline nlohmann::json to_json(const Exploration &e) {
  return {{"label", "exploration"},
          {"rows", e.board.rows()},
          {"cols", e.board.cols()},
          {"value", e.value},
          {"boardsExamined", e.boards_examined},
          {"exhaustive", e.exhaustive},
          {"source", e.source},
          {"board", to_text(e.board)}};
}

} // namespace lomkit
