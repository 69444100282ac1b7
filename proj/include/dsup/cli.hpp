// cli.hpp
// =======
// Command execution behind the dsup tool. The flag parsing itself lives in
// the tool binary; everything here takes a filled-in RunConfig so tests can
// drive commands without a process boundary.
//
// Documents: JSON is canonical (keys serialize in lexicographic order,
// schema_version "1", complex entries as [re, im]); CSV is a flat projection
// for plotting, one row per grid point or trial, with the envelope carried
// in '#' comment lines. Doubles are printed in shortest round-trip form in
// both formats. Seeds are always echoed. Exit status: 0 on success, 2 when
// the pair failed isometry verification (results still emitted, hypothesis
// not met), 1 on any error.

#pragma once

#include "dsup/matrix_io.hpp"
#include "dsup/search.hpp"

namespace dsup {

inline constexpr const char* kSchemaVersion = "1";

enum class Command { coherence, verify, support, search, picket, landscape };

inline const char* to_string(Command c) {
  switch (c) {
    case Command::coherence: return "coherence";
    case Command::verify: return "verify";
    case Command::support: return "support";
    case Command::search: return "search";
    case Command::picket: return "picket";
    case Command::landscape: return "landscape";
  }
  return "?";
}

inline Command command_from_string(const std::string& s) {
  if (s == "coherence") return Command::coherence;
  if (s == "verify") return Command::verify;
  if (s == "support") return Command::support;
  if (s == "search") return Command::search;
  if (s == "picket") return Command::picket;
  if (s == "landscape") return Command::landscape;
  throw std::invalid_argument("unknown command: " + s);
}

enum class OutputFormat { json, csv };

struct PairSource {
  enum class Kind { fourier, genperm, load } kind = Kind::fourier;
  int n = 0;            // fourier only
  std::string path;     // genperm / load
};

/// "fourier:<n>", "genperm:<file>" or "load:<file>".
inline PairSource parse_pair_source(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon + 1 == text.size()) {
    throw std::invalid_argument("bad --pair value, expected kind:argument: " + text);
  }
  const std::string kind = text.substr(0, colon);
  const std::string arg = text.substr(colon + 1);
  PairSource src;
  if (kind == "fourier") {
    src.kind = PairSource::Kind::fourier;
    std::size_t used = 0;
    try {
      src.n = std::stoi(arg, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad fourier dimension: " + arg);
    }
    if (used != arg.size()) throw std::invalid_argument("bad fourier dimension: " + arg);
  } else if (kind == "genperm") {
    src.kind = PairSource::Kind::genperm;
    src.path = arg;
  } else if (kind == "load") {
    src.kind = PairSource::Kind::load;
    src.path = arg;
  } else {
    throw std::invalid_argument("unknown pair kind: " + kind);
  }
  return src;
}

inline const char* to_string(PairSource::Kind k) {
  switch (k) {
    case PairSource::Kind::fourier: return "fourier";
    case PairSource::Kind::genperm: return "genperm";
    case PairSource::Kind::load: return "load";
  }
  return "?";
}

struct RunConfig {
  Command command = Command::coherence;
  PairSource pair_source;
  std::optional<double> p;          // overrides the source's exponent where legal
  double eps = 0.0;
  double delta = 0.0;
  int trials = 100;                 // search only
  std::uint64_t seed = 0;
  int picket_m = 0;                 // picket only
  std::optional<std::string> vector_json;  // verify/support/landscape input vector
  std::optional<std::string> grid;  // "e1,e2,...:d1,d2,..." or a bare eps list
  OutputFormat format = OutputFormat::json;
  std::optional<std::string> output_path;
  std::optional<std::string> write_pair_path;  // save the active pair's matrix
};

struct RunResult {
  int exit_code = 0;
  std::string document;
};

namespace detail {

inline std::vector<double> parse_level_list(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string tok =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad grid entry: " + tok);
    }
    if (used != tok.size()) throw std::invalid_argument("bad grid entry: " + tok);
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty grid");
  return out;
}

// "e1,e2,...:d1,d2,..."; a colon-less list means eps values only.
inline std::pair<std::vector<double>, std::vector<double>> parse_grid(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return {parse_level_list(text), {}};
  return {parse_level_list(text.substr(0, colon)),
          parse_level_list(text.substr(colon + 1))};
}

/// JSON array, entries either real numbers or [re, im] pairs.
inline Vector parse_vector_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("parse error: bad vector: ") + e.what());
  }
  if (!j.is_array() || j.empty()) {
    throw std::runtime_error("parse error: vector must be a nonempty array");
  }
  Vector x(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].is_number()) {
      x[static_cast<Eigen::Index>(i)] = Complex(j[i].get<double>(), 0.0);
    } else {
      x[static_cast<Eigen::Index>(i)] = complex_from_json(j[i], "vector entry");
    }
  }
  return x;
}

inline json vector_to_json(const Vector& x) {
  json out = json::array();
  for (Eigen::Index i = 0; i < x.size(); ++i) out.push_back(complex_to_json(x[i]));
  return out;
}

inline json support_to_json(const SupportSet& S) {
  json out = json::array();
  for (int j : S.indices()) out.push_back(j);
  return out;
}

inline json report_to_json(const VerificationReport& r) {
  json out;
  out["eps"] = r.eps;
  out["delta"] = r.delta;
  out["M"] = support_to_json(r.M);
  out["N"] = support_to_json(r.N);
  out["o_M"] = r.M.cardinality();
  out["o_N"] = r.N.cardinality();
  out["lhs_V"] = r.lhs_V;
  out["rhs_V"] = r.rhs_V;
  out["slack_V"] = r.slack_V;
  out["lhs_W"] = r.lhs_W;
  out["rhs_W"] = r.rhs_W;
  out["slack_W"] = r.slack_W;
  out["holds"] = r.holds;
  out["hypothesis_met"] = r.hypothesis_met;
  return out;
}

// The pair block never echoes file paths, only the source kind, so documents
// produced from a file and from its re-written copy stay byte-identical.
inline json pair_to_json(const BasisPair& pair, PairSource::Kind kind) {
  json out;
  out["source"] = to_string(kind);
  out["n"] = pair.n;
  out["p"] = pair.holder.p;
  out["q"] = pair.holder.q;
  out["mu_A"] = pair.mu_A;
  out["mu_B"] = pair.mu_B;
  out["isometry_status"] = to_string(pair.isometry_status);
  out["isometry_error"] = pair.isometry_error;
  out["inverse_residual"] = pair.inverse_residual;
  return out;
}

inline std::string fmt(double v) { return json(v).dump(); }

struct CsvWriter {
  std::string text;
  void comment(const std::string& line) { text += "# " + line + "\n"; }
  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) text += ",";
      text += cells[i];
    }
    text += "\n";
  }
};

inline std::vector<std::string> report_csv_cells(const VerificationReport& r) {
  return {fmt(r.eps),
          fmt(r.delta),
          std::to_string(r.M.cardinality()),
          std::to_string(r.N.cardinality()),
          fmt(r.lhs_V),
          fmt(r.rhs_V),
          fmt(r.slack_V),
          fmt(r.lhs_W),
          fmt(r.rhs_W),
          fmt(r.slack_W),
          r.holds ? "1" : "0",
          r.hypothesis_met ? "1" : "0"};
}

inline const std::vector<std::string>& report_csv_header() {
  static const std::vector<std::string> header = {
      "eps",    "delta",  "o_M",     "o_N",   "lhs_V", "rhs_V",
      "slack_V", "lhs_W", "rhs_W", "slack_W", "holds", "hypothesis_met"};
  return header;
}

inline Vector input_vector(const RunConfig& cfg, int n) {
  if (cfg.vector_json) {
    Vector x = parse_vector_json(*cfg.vector_json);
    if (x.size() != n) {
      throw std::invalid_argument("vector length " + std::to_string(x.size()) +
                                  " does not match pair dimension " + std::to_string(n));
    }
    return x;
  }
  std::mt19937_64 rng(cfg.seed);
  return random_dense_vector(n, rng);
}

}  // namespace detail

/// Builds the pair named by the config, honoring --p where the source allows
/// it. The Fourier pair is tied to p = 2.
inline BasisPair build_pair(const RunConfig& cfg) {
  switch (cfg.pair_source.kind) {
    case PairSource::Kind::fourier: {
      if (cfg.p && std::abs(*cfg.p - 2.0) > 1e-12) {
        throw std::domain_error("the fourier pair requires p = 2");
      }
      return make_fourier_pair(cfg.pair_source.n);
    }
    case PairSource::Kind::genperm:
      return load_genperm_spec(cfg.pair_source.path, cfg.p);
    case PairSource::Kind::load:
      return load_pair(cfg.pair_source.path, cfg.p);
  }
  throw std::logic_error("unreachable pair source");
}

/// Executes one command against one pair and renders the result document.
/// Throws on errors; callers map exceptions to exit status 1.
inline RunResult run_command(const RunConfig& cfg) {
  // picket builds its own pair; everything else uses the configured source.
  BasisPair pair;
  PairSource::Kind source_kind = cfg.pair_source.kind;
  Witness picket_witness;
  if (cfg.command == Command::picket) {
    picket_witness = picket_fence(cfg.picket_m);
    pair = make_fourier_pair(cfg.picket_m * cfg.picket_m);
    source_kind = PairSource::Kind::fourier;
  } else {
    pair = build_pair(cfg);
  }
  if (cfg.write_pair_path) save_pair(pair, *cfg.write_pair_path);

  json payload;
  detail::CsvWriter csv;
  csv.comment(std::string("schema_version: ") + kSchemaVersion);
  csv.comment(std::string("command: ") + to_string(cfg.command));
  csv.comment("seed: " + std::to_string(cfg.seed));
  csv.comment(std::string("pair: ") + to_string(source_kind) + " n=" + std::to_string(pair.n) +
              " p=" + detail::fmt(pair.holder.p) + " mu_A=" + detail::fmt(pair.mu_A) +
              " mu_B=" + detail::fmt(pair.mu_B) +
              " isometry=" + to_string(pair.isometry_status));

  switch (cfg.command) {
    case Command::coherence: {
      const auto [mu_A, mu_B] = coherence(pair);
      payload["mu_A"] = mu_A;
      payload["mu_B"] = mu_B;
      csv.row({"n", "p", "q", "mu_A", "mu_B"});
      csv.row({std::to_string(pair.n), detail::fmt(pair.holder.p), detail::fmt(pair.holder.q),
               detail::fmt(mu_A), detail::fmt(mu_B)});
      break;
    }
    case Command::verify: {
      const Vector x = detail::input_vector(cfg, pair.n);
      const VerificationReport report = verify_uncertainty(pair, x, cfg.eps, cfg.delta);
      payload["report"] = detail::report_to_json(report);
      payload["x"] = detail::vector_to_json(x);
      csv.row(detail::report_csv_header());
      csv.row(detail::report_csv_cells(report));
      break;
    }
    case Command::support: {
      const Vector x = detail::input_vector(cfg, pair.n);
      std::vector<double> grid = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5};
      if (cfg.grid) {
        auto [eps_grid, delta_grid] = detail::parse_grid(*cfg.grid);
        if (!delta_grid.empty()) {
          throw std::invalid_argument("support takes a plain eps list, not an eps:delta grid");
        }
        grid = std::move(eps_grid);
      }
      const Vector b = analysis_in_g(pair, x);
      const auto profile_f = support_profile(x, pair.holder.p, grid);
      const auto profile_g = support_profile(b, pair.holder.p, grid);
      payload["grid"] = grid;
      payload["x"] = detail::vector_to_json(x);
      json rows = json::array();
      csv.row({"eps", "o_f", "o_g"});
      for (std::size_t i = 0; i < grid.size(); ++i) {
        json row;
        row["eps"] = grid[i];
        row["o_f"] = profile_f[i].second;
        row["o_g"] = profile_g[i].second;
        rows.push_back(row);
        csv.row({detail::fmt(grid[i]), std::to_string(profile_f[i].second),
                 std::to_string(profile_g[i].second)});
      }
      payload["profile"] = rows;
      break;
    }
    case Command::search: {
      std::vector<VerificationReport> log;
      const Witness best =
          random_tightness_search(pair, cfg.eps, cfg.delta, cfg.trials, cfg.seed, &log);
      payload["trial_count"] = cfg.trials;
      json best_json;
      best_json["report"] = detail::report_to_json(best.report);
      best_json["x"] = detail::vector_to_json(best.x);
      payload["best"] = best_json;
      json trials = json::array();
      for (const auto& r : log) trials.push_back(detail::report_to_json(r));
      payload["trials"] = trials;
      auto header = detail::report_csv_header();
      header.insert(header.begin(), "trial");
      header.push_back("is_best");
      csv.row(header);
      int best_trial = -1;
      for (std::size_t t = 0; t < log.size(); ++t) {
        if (best_trial < 0 && log[t].slack_V == best.report.slack_V) {
          best_trial = static_cast<int>(t);
        }
      }
      for (std::size_t t = 0; t < log.size(); ++t) {
        auto cells = detail::report_csv_cells(log[t]);
        cells.insert(cells.begin(), std::to_string(t));
        cells.push_back(static_cast<int>(t) == best_trial ? "1" : "0");
        csv.row(cells);
      }
      break;
    }
    case Command::picket: {
      payload["m"] = cfg.picket_m;
      payload["report"] = detail::report_to_json(picket_witness.report);
      payload["x"] = detail::vector_to_json(picket_witness.x);
      auto header = detail::report_csv_header();
      header.insert(header.begin(), "m");
      csv.row(header);
      auto cells = detail::report_csv_cells(picket_witness.report);
      cells.insert(cells.begin(), std::to_string(cfg.picket_m));
      csv.row(cells);
      break;
    }
    case Command::landscape: {
      if (!cfg.grid) throw std::invalid_argument("landscape requires --grid eps-list:delta-list");
      auto [eps_grid, delta_grid] = detail::parse_grid(*cfg.grid);
      if (delta_grid.empty()) {
        throw std::invalid_argument("landscape requires --grid eps-list:delta-list");
      }
      const Vector x = detail::input_vector(cfg, pair.n);
      std::vector<std::pair<double, double>> grid;
      grid.reserve(eps_grid.size() * delta_grid.size());
      for (double e : eps_grid) {
        for (double d : delta_grid) grid.emplace_back(e, d);
      }
      const auto reports = slack_landscape(pair, x, grid);
      payload["eps_grid"] = eps_grid;
      payload["delta_grid"] = delta_grid;
      payload["x"] = detail::vector_to_json(x);
      json rows = json::array();
      csv.row(detail::report_csv_header());
      for (const auto& r : reports) {
        rows.push_back(detail::report_to_json(r));
        csv.row(detail::report_csv_cells(r));
      }
      payload["reports"] = rows;
      break;
    }
  }

  RunResult result;
  if (cfg.format == OutputFormat::json) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = to_string(cfg.command);
    doc["seed"] = cfg.seed;
    doc["pair"] = detail::pair_to_json(pair, source_kind);
    doc["payload"] = payload;
    result.document = doc.dump(2) + "\n";
  } else {
    result.document = csv.text;
  }
  result.exit_code = pair.isometry_status == IsometryStatus::failed ? 2 : 0;
  if (cfg.output_path) write_text_file(*cfg.output_path, result.document);
  return result;
}

}  // namespace dsup
