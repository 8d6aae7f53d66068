// Command-line front end: graded ranks of cabled unlink homology, arc-ring
// centres, and skein modules of twisted disk bundles, with optional
// cross-checks by an independent second route.
//
// Exit codes: 0 success, 2 invalid configuration (including an uncertified
// truncation window without --allow-unstable), 3 resource cap exceeded,
// 4 oracle disagreement.

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lasagna/arcring.hpp"
#include "lasagna/cabled.hpp"
#include "lasagna/center.hpp"
#include "lasagna/colimit.hpp"
#include "lasagna/intlinalg.hpp"
#include "lasagna/partitions.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInvalidConfig = 2;
constexpr int kExitResourceCap = 3;
constexpr int kExitOracleMismatch = 4;

struct Row {
  int i = 0;
  int j = 0;
  long long rank = 0;
  std::vector<long long> torsion;
};

struct Report {
  std::string invariant;
  ordered_json parameters = ordered_json::object();
  std::vector<Row> rows;
  bool stable = true;
  std::string sign_convention = "n/a";
  std::optional<bool> oracle_agreement;
};

struct CommonOptions {
  std::string format = "json";
  std::string out_path;
  bool oracle = false;
  bool allow_unstable = false;
  std::string sign_convention = "conjectured";
};

void add_common(CLI::App* cmd, CommonOptions* opts, bool with_sign) {
  cmd->add_option("--format", opts->format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  cmd->add_option("--out", opts->out_path, "Write the report to a file");
  cmd->add_flag("--oracle", opts->oracle,
                "Recompute by an independent route and compare");
  cmd->add_flag("--allow-unstable", opts->allow_unstable,
                "Report uncertified windows instead of failing");
  if (with_sign) {
    cmd->add_option("--sign-convention", opts->sign_convention,
                    "Overall sign of the stabilization maps")
        ->check(CLI::IsMember({"conjectured", "flipped"}))
        ->capture_default_str();
  }
}

std::size_t resource_cap_from_env() {
  const char* raw = std::getenv("LASAGNA_MAX_DIM");
  if (raw == nullptr || *raw == '\0') {
    return lasagna::intlinalg::default_nonzero_cap;
  }
  std::string s(raw);
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("LASAGNA_MAX_DIM must be a positive integer");
    }
  }
  const unsigned long long v = std::stoull(s);
  if (v == 0) {
    throw std::invalid_argument("LASAGNA_MAX_DIM must be a positive integer");
  }
  return static_cast<std::size_t>(v);
}

long long to_ll(const lasagna::Int& v) { return v.convert_to<long long>(); }

std::string render_json(const Report& r) {
  ordered_json doc;
  doc["invariant"] = r.invariant;
  doc["parameters"] = r.parameters;
  ordered_json rows = ordered_json::array();
  for (const Row& row : r.rows) {
    ordered_json jr;
    jr["i"] = row.i;
    jr["j"] = row.j;
    jr["rank"] = row.rank;
    jr["torsion"] = row.torsion;
    rows.push_back(std::move(jr));
  }
  doc["graded_ranks"] = std::move(rows);
  doc["stable"] = r.stable;
  doc["sign_convention"] = r.sign_convention;
  if (r.oracle_agreement.has_value()) {
    doc["oracle_agreement"] = *r.oracle_agreement;
  }
  return doc.dump(2) + "\n";
}

std::string join_torsion(const std::vector<long long>& torsion,
                         const char* separator) {
  std::string s;
  for (std::size_t t = 0; t < torsion.size(); ++t) {
    if (t > 0) s += separator;
    s += std::to_string(torsion[t]);
  }
  return s;
}

std::string render_csv(const Report& r) {
  std::string s = "i,j,rank,torsion\n";
  for (const Row& row : r.rows) {
    s += std::to_string(row.i) + "," + std::to_string(row.j) + "," +
         std::to_string(row.rank) + "," + join_torsion(row.torsion, ";") +
         "\n";
  }
  return s;
}

std::string render_table(const Report& r) {
  std::ostringstream s;
  s << "# invariant: " << r.invariant << "\n";
  s << "# parameters: " << r.parameters.dump() << "\n";
  s << "# stable: " << (r.stable ? "yes" : "no")
    << "  sign_convention: " << r.sign_convention << "\n";
  if (r.oracle_agreement.has_value()) {
    s << "# oracle_agreement: " << (*r.oracle_agreement ? "yes" : "no")
      << "\n";
  }
  s << "     i      j   rank  torsion\n";
  for (const Row& row : r.rows) {
    char line[64];
    std::snprintf(line, sizeof(line), "%6d %6d %6lld  ", row.i, row.j,
                  row.rank);
    s << line
      << (row.torsion.empty() ? std::string("-")
                              : join_torsion(row.torsion, ";"))
      << "\n";
  }
  return s.str();
}

int emit(const Report& r, const CommonOptions& opts) {
  std::string text;
  if (opts.format == "json") {
    text = render_json(r);
  } else if (opts.format == "csv") {
    text = render_csv(r);
  } else {
    text = render_table(r);
  }
  if (!opts.out_path.empty()) {
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << opts.out_path << "\n";
      return kExitInvalidConfig;
    }
    out << text;
  } else {
    std::cout << text;
  }
  if (r.oracle_agreement.has_value() && !*r.oracle_agreement) {
    std::cerr << "error: oracle disagreement\n";
    return kExitOracleMismatch;
  }
  return kExitOk;
}

std::vector<long long> torsion_of(const lasagna::intlinalg::GradedPiece* p) {
  std::vector<long long> t;
  if (p != nullptr) {
    for (const auto& d : p->torsion) t.push_back(to_ll(d));
  }
  return t;
}

// ---------------------------------------------------------------------------

struct S2d2Config {
  int N = 2;
  std::vector<int> alpha = {0};
  int q_min = -10;
};

int run_s2d2(const S2d2Config& cfg, const CommonOptions& opts,
             std::size_t cap) {
  if (cfg.N < 1) throw std::invalid_argument("N must be at least 1");
  if (cfg.alpha.empty()) {
    throw std::invalid_argument("at least one component is required");
  }
  if (cfg.q_min > 0) {
    throw std::invalid_argument("the quantum window must be nonpositive");
  }

  // Closed form: the rank generating function of one component is the count
  // of partitions with parts below N; components multiply.
  const int weight_max = -cfg.q_min / 2;
  std::vector<lasagna::Int> ranks(weight_max + 1, 0);
  {
    std::vector<lasagna::Int> one(weight_max + 1);
    for (int q = 0; q <= weight_max; ++q) {
      one[q] = lasagna::partitions::count_bounded(q, cfg.N - 1);
    }
    ranks[0] = 1;
    for (std::size_t c = 0; c < cfg.alpha.size(); ++c) {
      std::vector<lasagna::Int> next(weight_max + 1, 0);
      for (int a = 0; a <= weight_max; ++a) {
        if (ranks[a] == 0) continue;
        for (int b = 0; a + b <= weight_max; ++b) {
          next[a + b] += ranks[a] * one[b];
        }
      }
      ranks = std::move(next);
    }
  }

  Report report;
  report.invariant = "s2d2";
  report.parameters["N"] = cfg.N;
  report.parameters["alpha"] = cfg.alpha;
  report.parameters["q_min"] = cfg.q_min;
  const int q_low = cfg.q_min % 2 == 0 ? cfg.q_min : cfg.q_min + 1;
  for (int j = q_low; j <= 0; j += 2) {
    Row row;
    row.j = j;
    row.rank = to_ll(ranks[-j / 2]);
    report.rows.push_back(std::move(row));
  }

  if (opts.oracle) {
    const int r_max = lasagna::cabled::required_r_max(cfg.alpha, cfg.q_min);
    report.parameters["oracle_r_max"] = r_max;
    const auto brute = lasagna::cabled::cabled_bruteforce(
        cfg.N, cfg.alpha, r_max, cfg.q_min, opts.allow_unstable, cap);
    bool agree = true;
    for (Row& row : report.rows) {
      const auto* piece = brute.find(0, row.j);
      const long long brute_rank =
          piece == nullptr ? 0 : static_cast<long long>(piece->free_rank);
      if (brute_rank != row.rank || !torsion_of(piece).empty()) agree = false;
    }
    report.oracle_agreement = agree;
  }
  return emit(report, opts);
}

// ---------------------------------------------------------------------------

struct DpConfig {
  int p = -1;
  int j_min = -8;
  int n_max = 0;  // 0 = choose automatically
};

int run_dp(const DpConfig& cfg, const CommonOptions& opts, std::size_t cap) {
  if (cfg.p == 0) {
    throw std::invalid_argument("the euler number must be nonzero (use s2d2)");
  }
  if (cfg.j_min > 0 || cfg.j_min % 2 != 0) {
    throw std::invalid_argument("j_min must be even and nonpositive");
  }
  lasagna::colimit::FramedUnknotOptions fo;
  fo.p_sign = cfg.p > 0 ? lasagna::colimit::PSign::positive
                        : lasagna::colimit::PSign::negative;
  fo.n_max = cfg.n_max > 0 ? cfg.n_max : std::max(3, -cfg.j_min / 2 + 1);
  fo.j_min = cfg.j_min;
  fo.sign = opts.sign_convention == "flipped"
                ? lasagna::center::SignConvention::flipped
                : lasagna::center::SignConvention::conjectured;
  fo.cap = cap;
  const auto result = lasagna::colimit::framed_unknot_module(fo);

  bool all_stable = true;
  for (const auto& [j, stable] : result.stable) all_stable &= stable;
  if (!all_stable && !opts.allow_unstable) {
    std::cerr << "error: window not certified stable at n_max=" << fo.n_max
              << "; raise --n-max or pass --allow-unstable\n";
    return kExitInvalidConfig;
  }

  Report report;
  report.invariant = "dp";
  report.parameters["p"] = cfg.p;
  report.parameters["j_min"] = cfg.j_min;
  report.parameters["n_max"] = fo.n_max;
  report.stable = all_stable;
  report.sign_convention = opts.sign_convention;
  for (int j = cfg.j_min; j <= 0; j += 2) {
    Row row;
    row.j = j;
    const auto* piece = result.groups.find(0, j);
    row.rank =
        piece == nullptr ? 0 : static_cast<long long>(piece->free_rank);
    row.torsion = torsion_of(piece);
    report.rows.push_back(std::move(row));
  }

  if (opts.oracle) {
    // Closed form: one copy of the integers in degree zero for negative
    // euler number, nothing at all for positive.
    bool agree = true;
    for (const Row& row : report.rows) {
      const long long expected = (cfg.p < 0 && row.j == 0) ? 1 : 0;
      if (row.rank != expected || !row.torsion.empty()) agree = false;
    }
    report.oracle_agreement = agree;
  }
  return emit(report, opts);
}

// ---------------------------------------------------------------------------

struct CenterConfig {
  int n = 2;
};

int run_center(const CenterConfig& cfg, const CommonOptions& opts,
               std::size_t cap) {
  if (cfg.n < 0 || cfg.n > 8) {
    throw std::invalid_argument("the strand pair count must be in 0..8");
  }
  const auto presented = lasagna::center::presented_center(cfg.n, cap);

  Report report;
  report.invariant = "center";
  report.parameters["n"] = cfg.n;
  for (int k = 0; k <= 2 * cfg.n; ++k) {
    Row row;
    row.j = 2 * k;
    const auto* piece = presented.find(0, 2 * k);
    row.rank =
        piece == nullptr ? 0 : static_cast<long long>(piece->free_rank);
    row.torsion = torsion_of(piece);
    report.rows.push_back(std::move(row));
  }

  if (opts.oracle) {
    if (cfg.n > 3) {
      throw std::invalid_argument(
          "--oracle recomputes by brute force, available for n <= 3");
    }
    const auto brute = lasagna::arcring::center_bruteforce(cfg.n, 3, cap);
    report.oracle_agreement = brute.ranks == presented;
  }
  return emit(report, opts);
}

// ---------------------------------------------------------------------------

struct UnlinkConfig {
  int r_minus = 1;
  int r_plus = 1;
  int N = 2;
};

int run_unlink(const UnlinkConfig& cfg, const CommonOptions& opts,
               std::size_t /*cap*/) {
  if (cfg.N < 1) throw std::invalid_argument("N must be at least 1");
  if (cfg.r_minus < 0 || cfg.r_plus < 0) {
    throw std::invalid_argument("strand counts must be nonnegative");
  }
  const auto homology =
      lasagna::cabled::unlink_homology(cfg.r_minus, cfg.r_plus, cfg.N);

  Report report;
  report.invariant = "unlink";
  report.parameters["r_minus"] = cfg.r_minus;
  report.parameters["r_plus"] = cfg.r_plus;
  report.parameters["N"] = cfg.N;
  const int strands = cfg.r_minus + cfg.r_plus;
  const int extent = strands * (cfg.N - 1);
  for (int j = -extent; j <= extent; j += 2) {
    Row row;
    row.j = j;
    const auto* piece = homology.find(0, j);
    row.rank =
        piece == nullptr ? 0 : static_cast<long long>(piece->free_rank);
    row.torsion = torsion_of(piece);
    report.rows.push_back(std::move(row));
  }
  if (opts.oracle) {
    // Property oracle: total dimension N^strands and palindromic ranks.
    lasagna::Int total = 0;
    bool agree = true;
    for (const Row& row : report.rows) {
      total += row.rank;
      if (!row.torsion.empty()) agree = false;
    }
    lasagna::Int expected = 1;
    for (int s = 0; s < strands; ++s) expected *= cfg.N;
    if (total != expected) agree = false;
    for (std::size_t a = 0, b = report.rows.size(); a < b--; ++a) {
      if (report.rows[a].rank != report.rows[b].rank) agree = false;
    }
    report.oracle_agreement = agree;
  }
  return emit(report, opts);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Graded ranks of cabled unlink homology, arc-ring centres, and skein "
      "modules of disk bundles over the two-sphere"};
  app.require_subcommand(1);

  S2d2Config s2d2_cfg;
  CommonOptions s2d2_opts;
  CLI::App* s2d2 = app.add_subcommand(
      "s2d2", "Skein module graded ranks of the untwisted bundle");
  s2d2->add_option("-N,--rank", s2d2_cfg.N, "Frobenius algebra rank")
      ->capture_default_str();
  s2d2->add_option("--alpha", s2d2_cfg.alpha,
                   "Framing offsets, one per unlink component")
      ->delimiter(',')
      ->capture_default_str();
  s2d2->add_option("--qmin", s2d2_cfg.q_min, "Lowest quantum degree reported")
      ->capture_default_str();
  add_common(s2d2, &s2d2_opts, false);

  DpConfig dp_cfg;
  CommonOptions dp_opts;
  CLI::App* dp = app.add_subcommand(
      "dp", "Skein module graded ranks of the twisted bundle D(p)");
  dp->add_option("-p,--euler", dp_cfg.p, "Euler number (nonzero)")
      ->capture_default_str();
  dp->add_option("--jmin", dp_cfg.j_min, "Lowest cabled degree reported")
      ->capture_default_str();
  dp->add_option("--nmax", dp_cfg.n_max,
                 "Truncation level (0 chooses automatically)")
      ->capture_default_str();
  add_common(dp, &dp_opts, true);

  CenterConfig center_cfg;
  CommonOptions center_opts;
  CLI::App* center =
      app.add_subcommand("center", "Graded ranks of the arc ring centre");
  center->add_option("-n,--pairs", center_cfg.n, "Number of strand pairs")
      ->capture_default_str();
  add_common(center, &center_opts, false);

  UnlinkConfig unlink_cfg;
  CommonOptions unlink_opts;
  CLI::App* unlink = app.add_subcommand(
      "unlink", "Graded ranks of the homology of a framed unlink");
  unlink->add_option("--r-minus", unlink_cfg.r_minus,
                     "Negatively oriented strands")
      ->capture_default_str();
  unlink->add_option("--r-plus", unlink_cfg.r_plus,
                     "Positively oriented strands")
      ->capture_default_str();
  unlink->add_option("-N,--rank", unlink_cfg.N, "Frobenius algebra rank")
      ->capture_default_str();
  add_common(unlink, &unlink_opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidConfig;
  }

  try {
    const std::size_t cap = resource_cap_from_env();
    if (s2d2->parsed()) return run_s2d2(s2d2_cfg, s2d2_opts, cap);
    if (dp->parsed()) return run_dp(dp_cfg, dp_opts, cap);
    if (center->parsed()) return run_center(center_cfg, center_opts, cap);
    if (unlink->parsed()) return run_unlink(unlink_cfg, unlink_opts, cap);
    std::cerr << "error: no subcommand\n";
    return kExitInvalidConfig;
  } catch (const lasagna::cabled::UnstableWindowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidConfig;
  } catch (const lasagna::intlinalg::ResourceCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidConfig;
  }
}
