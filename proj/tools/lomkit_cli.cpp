// lomkit: command-line front end.
//
// Exit codes: 0 pass, 1 a check failed, 2 usage error, 3 bad input data.

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lomkit/bounds.hpp"
#include "lomkit/galerad.hpp"
#include "lomkit/verifier.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace lomkit;

namespace {

enum Exit { ok = 0, check_failed = 1, usage = 2, bad_input = 3 };

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::size_t workers = default_workers();
  std::uint64_t seed = 1;
  std::string out = "reports";
  std::string emit;
  bool timing = false;
};

/// "a..b" or "a" with non-negative integers.
Range parse_range(const std::string &text, const std::string &flag) {
  auto number = [&](const std::string &s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError(flag + ": expected a non-negative integer range like 2..5, got '" + text + "'");
    return static_cast<std::size_t>(std::stoull(s));
  };
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = number(text);
  } else {
    r.lo = number(text.substr(0, dots));
    r.hi = number(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw UsageError(flag + ": empty range '" + text + "'");
  return r;
}

Range range_or(const std::string &text, const std::string &flag, Range fallback) {
  return text.empty() ? fallback : parse_range(text, flag);
}

std::uint64_t fnv1a(const std::string &s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// Appends report lines to <out>/<command>-<hash>.jsonl, where the hash
/// covers the command and its parameters (including the seed).
class ReportFile {
public:
  ReportFile(const Common &common, const std::string &command, const json &parameters) {
    std::ostringstream name;
    name << command << '-' << std::hex << fnv1a(command + parameters.dump()) << ".jsonl";
    fs::create_directories(common.out);
    path_ = fs::path(common.out) / name.str();
  }

  void append(const json &line) const {
    std::ofstream f(path_, std::ios::app);
    if (!f) throw std::runtime_error("cannot write report " + path_.string());
    f << line.dump() << '\n';
  }

  [[nodiscard]] const fs::path &path() const { return path_; }

private:
  fs::path path_;
};

std::string slurp(const std::string &path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void write_file(const fs::path &path, const std::string &text) {
  fs::create_directories(path.parent_path().empty() ? fs::path(".") : path.parent_path());
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

std::string witness_text(const Witness &w) {
  std::ostringstream s;
  s << "travel " << to_text(w.travel) << "\nflips";
  for (auto c : w.flips) s << ' ' << c;
  s << "\ninterior";
  for (auto c : w.interior.elements) s << ' ' << c;
  s << '\n';
  return s.str();
}

void emit_witness(const Common &common, const std::string &stem, const Witness &w) {
  if (common.emit.empty()) return;
  const fs::path base = fs::path(common.out) / stem;
  if (common.emit == "matrix") write_file(base.string() + ".matrix", to_text(w.matrix));
  if (common.emit == "board") write_file(base.string() + ".board", to_text(w.board));
  if (common.emit == "witness") write_file(base.string() + ".witness", witness_text(w));
}

std::string stem_for(const std::string &id, const Witness &w) {
  std::string s = id + "-r" + std::to_string(w.r) + "-n" + std::to_string(w.n);
  if (w.t) s += "-t" + std::to_string(*w.t);
  return s;
}

// --- verify ------------------------------------------------------------------

struct VerifyArgs {
  std::string id;
  std::string t, r, n;
  std::string which;
  bool prune = false;
};

int cmd_verify(const Common &common, const VerifyArgs &args) {
  const VerifyOptions opt{common.workers, common.timing};
  std::vector<VerificationReport> reports;
  json parameters = {{"id", args.id}, {"t", args.t}, {"r", args.r}, {"n", args.n},
                     {"which", args.which}, {"prune", args.prune}, {"seed", common.seed}};

  if (const auto c = construction_from_string(args.id)) {
    Range t{}, r{};
    switch (*c) {
    case Construction::dim2:
      t = range_or(args.t, "--t", {0, 6});
      r = range_or(args.r, "--r", {3, 3});
      break;
    case Construction::dim3:
      t = range_or(args.t, "--t", {0, 4});
      r = range_or(args.r, "--r", {4, 4});
      break;
    case Construction::general:
      t = range_or(args.t, "--t", {2, 3});
      r = range_or(args.r, "--r", {5, 6});
      break;
    case Construction::t1:
      t = range_or(args.t, "--t", {1, 1});
      r = range_or(args.r, "--r", {5, 6});
      break;
    case Construction::even_d:
      t = range_or(args.t, "--t", {2, 2});
      r = range_or(args.r, "--r", {5, 7});
      break;
    }
    try {
      reports.push_back(verify_lower(*c, t, r, opt));
    } catch (const InvalidArgument &e) {
      throw UsageError(e.what());
    }
  } else if (args.id == "counterexamples") {
    std::vector<Counterexample> which;
    for (char ch : args.which.empty() ? std::string("abc") : args.which) {
      if (ch < 'a' || ch > 'c') throw UsageError("--which: letters a, b, c only");
      which.push_back(static_cast<Counterexample>(ch - 'a'));
    }
    for (auto w : which) reports.push_back(reproduce_counterexample(w, opt));
  } else if (args.id == "rank3-scan") {
    const Range n = range_or(args.n, "--n", {5, 8});
    if (n.lo < 5 || n.hi > 9) throw UsageError("--n: rank3-scan supports 5..9");
    for (std::size_t k = n.lo; k <= n.hi; ++k) reports.push_back(exhaustive_rank3_scan(k, opt, args.prune).report);
  } else {
    throw UsageError("unknown theorem id '" + args.id +
                     "'; expected dim2, dim3, general, t1, even-d, counterexamples or rank3-scan");
  }

  const ReportFile file(common, "verify", parameters);
  bool all = true;
  std::size_t witnesses = 0;
  for (auto &rep : reports) {
    json j = to_json(rep);
    j["parameters"]["seed"] = common.seed;
    file.append(j);
    for (const auto &w : rep.witnesses) emit_witness(common, stem_for(rep.theorem_id, w), w);
    witnesses += rep.witnesses.size();
    all = all && rep.passed();
    if (!rep.passed())
      for (const auto &w : rep.witnesses)
        if (w.interior.size() < w.required)
          std::cerr << rep.theorem_id << ": r=" << w.r << " n=" << w.n << " has " << w.interior.size()
                    << " interior (needs " << w.required << "), travel " << to_text(w.travel) << '\n';
  }
  std::cout << "verify " << args.id << ": " << (all ? "pass" : "FAIL") << ", " << reports.size() << " report(s), "
            << witnesses << " witness(es) -> " << file.path().string() << '\n';
  return all ? ok : check_failed;
}

// --- bounds ------------------------------------------------------------------

json cell_json(std::size_t d, std::size_t n, const BoundValue &b) {
  json j = {{"d", d}, {"n", n}, {"kind", std::string(to_string(b.kind))}, {"clause", b.clause}};
  j["lower"] = b.lower ? json(*b.lower) : json(nullptr);
  j["upper"] = b.upper ? json(*b.upper) : json(nullptr);
  if (b.note) j["note"] = *b.note;
  return j;
}

int cmd_bounds(const Common &common, const std::string &which, const std::string &d_text,
               const std::string &n_text) {
  const Range dr = parse_range(d_text, "--d"), nr = parse_range(n_text, "--n");
  if (dr.lo == 0) throw UsageError("--d: dimensions start at 1");
  if (dr.hi - dr.lo > 200 || nr.hi - nr.lo > 2000 || nr.hi > 100000) throw UsageError("bounds: grid too large");
  const json parameters = {{"which", which}, {"d", d_text}, {"n", n_text}, {"seed", common.seed}};
  json cells = json::array();
  for (std::size_t d = dr.lo; d <= dr.hi; ++d)
    for (std::size_t n = nr.lo; n <= nr.hi; ++n) {
      std::optional<BoundValue> b;
      std::string undefined;
      try {
        if (which == "h0") b = h0_bound(n, d);
        else if (which == "hd1") b = hd1_bound(n, d);
        else if (which == "r") b = r_bound(d, n);
        else if (which == "cyclic") b = BoundValue::exact(cyclic_facets(n, d), "closed form");
        else if (which == "stacked") b = BoundValue::exact(stacked_facets(n, d), "closed form");
        else throw UsageError("unknown table '" + which + "'; expected h0, hd1, r, cyclic or stacked");
      } catch (const InvalidArgument &e) {
        undefined = e.what();
      }
      if (b) {
        cells.push_back(cell_json(d, n, *b));
        std::cout << which << " d=" << d << " n=" << n << ": " << to_text(*b);
        if (b->note) std::cout << " (" << *b->note << ")";
        std::cout << '\n';
      } else {
        cells.push_back({{"d", d}, {"n", n}, {"kind", "undefined"}, {"clause", undefined}});
        std::cout << which << " d=" << d << " n=" << n << ": undefined (" << undefined << ")\n";
      }
    }
  const ReportFile file(common, "bounds", parameters);
  file.append({{"command", "bounds"}, {"parameters", parameters}, {"cells", cells}});
  return ok;
}

// --- radon -------------------------------------------------------------------

struct RadonArgs {
  std::string mode;
  std::string file;
  std::string coloring;
  std::uint64_t samples = 0;
  bool trace = false;
};

json points_json(const PointConfig &x) {
  json pts = json::array();
  for (const auto &p : x.points()) {
    json row = json::array();
    for (const auto &c : p) row.push_back(to_string(c));
    pts.push_back(row);
  }
  return pts;
}

int cmd_radon(const Common &common, const RadonArgs &args) {
  PointConfig x = [&] {
    try {
      return parse_points(slurp(args.file));
    } catch (const ParseError &e) {
      throw InputError(args.file + ": " + e.what());
    }
  }();
  auto coloring = [&]() -> std::optional<Coloring> {
    if (args.coloring.empty()) return std::nullopt;
    Coloring c;
    try {
      c = parse_coloring(args.coloring);
    } catch (const ParseError &e) {
      throw UsageError(e.what());
    }
    if (c.size() != x.size())
      throw UsageError("--coloring has " + std::to_string(c.size()) + " labels for " + std::to_string(x.size()) +
                       " points");
    return c;
  };
  const json parameters = {{"mode", args.mode},       {"points", points_json(x)}, {"dim", x.dim()},
                           {"coloring", args.coloring}, {"samples", args.samples}, {"seed", common.seed}};
  json result = {{"command", "radon"}, {"parameters", parameters}};
  int code = ok;

  if (args.mode == "count") {
    const auto c = coloring();
    if (!c) throw UsageError("radon count needs --coloring");
    if (x.size() < x.dim() + 2) throw UsageError("radon count needs n >= d+2");
    const std::size_t v = count_induced(x, *c);
    result["count"] = v;
    if (args.trace) {
      json trace = json::array();
      detail::for_each_subset(x.size(), x.dim() + 2, [&](const std::vector<std::size_t> &s) {
        trace.push_back({{"subset", detail::one_based(s)}, {"radon", is_radon_pair(x, s, *c)}});
      });
      result["trace"] = trace;
    }
    std::cout << "count " << to_string(*c) << ": " << v << '\n';
  } else if (args.mode == "maximize") {
    if (x.size() < x.dim() + 2) throw UsageError("radon maximize needs n >= d+2");
    MaxRadon m;
    if (x.size() <= max_r_exhaustive_limit && args.samples == 0) {
      m = max_r(x, common.workers);
    } else {
      if (args.samples == 0)
        throw UsageError("n > " + std::to_string(max_r_exhaustive_limit) + ": pass --samples for the sampled mode");
      m = max_r_sampled(x, args.samples, common.seed);
    }
    result["value"] = m.value;
    result["witness"] = to_string(m.witness);
    result["exhaustive"] = m.exhaustive;
    result["coloringsExamined"] = m.colorings_examined;
    std::cout << (m.exhaustive ? "r(X) = " : "r(X) >= ") << m.value << ", witness " << to_string(m.witness)
              << (m.exhaustive ? "" : " (sampled, approximate)") << '\n';
  } else if (args.mode == "lift") {
    if (x.size() < x.dim() + 2) throw UsageError("radon lift needs n >= d+2");
    if (x.size() > max_r_exhaustive_limit && args.coloring.empty())
      throw UsageError("radon lift: pass --coloring when n > " + std::to_string(max_r_exhaustive_limit));
    const Coloring c = args.coloring.empty() ? max_r(x, common.workers).witness : *coloring();
    result["coloring"] = to_string(c);
    try {
      const Lift l = lift_unbalanced(x, c);
      result["lifted"] = points_json(l.points);
      result["liftedColoring"] = to_string(l.coloring);
      result["separated"] = l.separated + 1;
      result["countBefore"] = l.count_before;
      result["countAfter"] = l.count_after;
      const bool equal = l.count_before == l.count_after && l.coloring.red_count() == 1;
      result["verified"] = equal;
      write_points(std::cout, l.points);
      std::cout << "coloring " << to_string(l.coloring) << ", induced " << l.count_before << " -> " << l.count_after
                << (equal ? " (equal)" : " (MISMATCH)") << '\n';
      code = equal ? ok : check_failed;
    } catch (const NoSeparablePoint &e) {
      result["verified"] = false;
      result["error"] = e.what();
      std::cout << "lift failed: " << e.what() << '\n';
      code = check_failed;
    }
  } else if (args.mode == "gale") {
    if (x.size() < x.dim() + 2) throw UsageError("radon gale needs n >= d+2");
    const auto g = gale_transform(x);
    json vectors = json::array();
    for (const auto &v : g.vectors) {
      json row = json::array();
      for (const auto &c : v) row.push_back(to_string(c));
      vectors.push_back(row);
      for (std::size_t k = 0; k < v.size(); ++k) std::cout << (k ? " " : "") << to_string(v[k]);
      std::cout << '\n';
    }
    result["transform"] = vectors;
    result["diagram"] = gale_diagram(g);
  } else {
    throw UsageError("unknown radon mode '" + args.mode + "'; expected count, maximize, lift or gale");
  }
  ReportFile(common, "radon", parameters).append(result);
  return code;
}

// --- matrix ------------------------------------------------------------------

int cmd_matrix(const Common &common, const std::string &file, bool is_board, bool with_min) {
  SignMatrix a = SignMatrix::constant(1, 1);
  try {
    a = is_board ? realize_board(parse_board(slurp(file))) : parse_matrix(slurp(file));
  } catch (const ParseError &e) {
    throw InputError(file + ": " + e.what());
  } catch (const InvalidArgument &e) {
    throw InputError(file + ": " + e.what());
  }
  const Travel tt = top_travel(a), bt = bottom_travel(a);
  const auto interior = interior_from_travels(tt, bt, a.cols());
  const json parameters = {{"file", file}, {"matrix", to_text(a)}, {"min", with_min}, {"seed", common.seed}};
  json result = {{"command", "matrix"},         {"parameters", parameters},
                 {"rows", a.rows()},            {"cols", a.cols()},
                 {"topTravel", to_text(tt)},    {"bottomTravel", to_text(bt)},
                 {"acyclic", tt.complete()},    {"interior", interior.elements},
                 {"board", a.rows() >= 2 && a.cols() >= 2 ? json(to_text(board_of(a))) : json(nullptr)}};
  std::cout << "top    " << to_text(tt) << "\nbottom " << to_text(bt) << "\nacyclic " << (tt.complete() ? "yes" : "no")
            << "\ninterior";
  for (auto c : interior.elements) std::cout << ' ' << c;
  std::cout << '\n';
  if (with_min) {
    const auto res = min_interior(a, common.workers);
    const Witness w = detail::make_witness(a, res.witness_drops, 0, std::nullopt);
    result["minInterior"] = res.count;
    result["witness"] = to_json(w);
    std::cout << "min interior " << res.count << " via " << to_text(w.travel) << '\n';
    emit_witness(common, fs::path(file).stem().string(), w);
  }
  ReportFile(common, "matrix", parameters).append(result);
  return ok;
}

// --- scan --------------------------------------------------------------------

int cmd_scan(const Common &common, std::size_t r, std::size_t n, std::size_t budget) {
  Exploration e;
  try {
    e = search_small_topes(r, n, budget, common.seed, common.workers);
  } catch (const InvalidArgument &ex) {
    throw UsageError(ex.what());
  }
  const json parameters = {{"r", r}, {"n", n}, {"budget", budget}, {"seed", common.seed}};
  json result = to_json(e);
  result["parameters"] = parameters;
  ReportFile(common, "scan", parameters).append(result);
  if (common.emit == "board") write_file(fs::path(common.out) / ("scan-r" + std::to_string(r) + "-n" + std::to_string(n) + ".board"), to_text(e.board));
  if (common.emit == "matrix") write_file(fs::path(common.out) / ("scan-r" + std::to_string(r) + "-n" + std::to_string(n) + ".matrix"), to_text(realize_board(e.board)));
  std::cout << "exploration r=" << r << " n=" << n << ": best min interior " << e.value << " over "
            << e.boards_examined << " board(s)" << (e.exhaustive ? " (exhaustive)" : "") << '\n'
            << to_text(e.board);
  return ok;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Lawrence oriented matroid travels, bound tables and Radon partition experiments"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--workers", common.workers, "worker threads (1 = sequential)")->check(CLI::PositiveNumber);
  app.add_option("--seed", common.seed, "random seed, recorded in every report");
  app.add_option("--out", common.out, "directory for reports and emitted fixtures");
  app.add_option("--emit", common.emit, "also write fixtures for witnesses")
      ->check(CLI::IsMember({"matrix", "board", "witness"}));
  app.add_flag("--timing", common.timing, "record wall time in verification reports");

  VerifyArgs va;
  auto *verify = app.add_subcommand("verify", "check a theorem on a finite parameter box");
  verify->add_option("id", va.id, "dim2, dim3, general, t1, even-d, counterexamples or rank3-scan")->required();
  verify->add_option("--t", va.t, "t range, e.g. 0..4");
  verify->add_option("--r", va.r, "rank range");
  verify->add_option("--n", va.n, "column range (rank3-scan)");
  verify->add_option("--which", va.which, "counterexamples to reproduce, e.g. ab");
  verify->add_flag("--prune", va.prune, "mirror/flip pruning in rank3-scan");

  std::string table, d_text, n_text;
  auto *bounds = app.add_subcommand("bounds", "emit a bound table with clause provenance");
  bounds->add_option("table", table, "h0, hd1, r, cyclic or stacked")->required();
  bounds->add_option("--d", d_text, "dimension range")->required();
  bounds->add_option("--n", n_text, "point-count range")->required();

  RadonArgs ra;
  auto *radon = app.add_subcommand("radon", "induced minimal Radon partitions of a point file");
  radon->add_option("mode", ra.mode, "count, maximize, lift or gale")->required();
  radon->add_option("points", ra.file, "point file: 'n d' then n rows of rationals")->required();
  radon->add_option("--coloring", ra.coloring, "R/B string, one label per point");
  radon->add_option("--samples", ra.samples, "random colorings for the sampled (approximate) mode");
  radon->add_flag("--trace", ra.trace, "list every (d+2)-subset in the report");

  std::string matrix_file;
  bool as_board = false, with_min = false;
  auto *matrix = app.add_subcommand("matrix", "travels, chessboard and interior elements of a matrix file");
  matrix->add_option("file", matrix_file, "matrix file ('r n' then rows of +/-)")->required();
  matrix->add_flag("--board", as_board, "the file is a chessboard; use its canonical matrix");
  matrix->add_flag("--min", with_min, "also minimize interior elements over all reorientations");

  std::size_t scan_r = 0, scan_n = 0, budget = 0;
  auto *scan = app.add_subcommand("scan", "exploratory search for boards needing many interior elements");
  scan->add_option("--r", scan_r, "rank")->required();
  scan->add_option("--n", scan_n, "columns")->required();
  scan->add_option("--budget", budget, "boards to examine (0 = theorem board only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return usage;
  }

  try {
    if (*verify) return cmd_verify(common, va);
    if (*bounds) return cmd_bounds(common, table, d_text, n_text);
    if (*radon) return cmd_radon(common, ra);
    if (*matrix) return cmd_matrix(common, matrix_file, as_board, with_min);
    if (*scan) return cmd_scan(common, scan_r, scan_n, budget);
  } catch (const UsageError &e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return usage;
  } catch (const DegenerateConfiguration &e) {
    std::cerr << "bad input: " << e.what() << '\n';
    return bad_input;
  } catch (const InputError &e) {
    std::cerr << "bad input: " << e.what() << '\n';
    return bad_input;
  } catch (const InvalidArgument &e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return usage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return bad_input;
  }
  return usage;
}
