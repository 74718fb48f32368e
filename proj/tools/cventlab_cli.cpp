// Copyright 2026 The cventlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// cventlab command-line front end. Emits one table row per parameter grid
// point, as CSV or JSON. Links only against the C interface.

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "cventlab/cventlab.h"
#include "json.hpp"

namespace {

// Seed used when neither --seed nor CVENTLAB_SEED is given.
constexpr std::uint64_t kDefaultSeed = 24301;

constexpr int kExitOk = 0;
constexpr int kExitNumerical = 1;
constexpr int kExitUsage = 2;

struct CliError : std::runtime_error {
  CliError(int code, const std::string& what) : std::runtime_error(what), exit_code(code) {}
  int exit_code;
};

void check(cvl_status status, const char* what) {
  if (status == CVL_OK) return;
  std::string msg = std::string(what) + ": " + cvl_status_string(status);
  const char* detail = cvl_last_error_message();
  if (detail != nullptr && *detail != '\0') msg += " (" + std::string(detail) + ")";
  if (status == CVL_ERR_TRUNCATION && cvl_last_suggested_cutoff() >= 0) {
    msg += "; try dmax >= " + std::to_string(cvl_last_suggested_cutoff());
  }
  const bool usage = status == CVL_ERR_DOMAIN || status == CVL_ERR_INVALID_ARGUMENT;
  throw CliError(usage ? kExitUsage : kExitNumerical, msg);
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using FockPtr = std::unique_ptr<cvl_fock_state, Deleter<cvl_fock_state, cvl_fock_free>>;
using PolygonPtr = std::unique_ptr<cvl_polygon, Deleter<cvl_polygon, cvl_polygon_free>>;

// ---- Table ------------------------------------------------------------------

using Cell = std::variant<std::monostate, double, long long, bool, std::string>;
using Row = std::vector<std::pair<std::string, Cell>>;

Cell opt(const std::optional<double>& v) { return v ? Cell(*v) : Cell(); }

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_text(const Cell& c) {
  struct {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return v; }
  } visitor;
  return std::visit(visitor, c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
  struct {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(double v) const {
      if (!std::isfinite(v)) return nullptr;
      return v;
    }
    nlohmann::ordered_json operator()(long long v) const { return v; }
    nlohmann::ordered_json operator()(bool v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
  } visitor;
  return std::visit(visitor, c);
}

// ---- Parameters ---------------------------------------------------------------

struct Param {
  std::string name;
  double value = 0.0;
  bool integer = false;
  std::string help;
  CLI::Option* option = nullptr;
};

struct Range {
  std::string key;
  double start = 0.0;
  double stop = 0.0;
  long long steps = 1;

  double at(long long i) const {
    if (steps == 1) return start;
    if (i == steps - 1) return stop;
    // Weighted form keeps decimal grids such as 0.1:0.5:3 on their round values.
    const double t = static_cast<double>(i) / static_cast<double>(steps - 1);
    return start * (1.0 - t) + stop * t;
  }
};

double parse_number(const std::string& text, const std::string& what) {
  const char* begin = text.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  if (text.empty() || end != begin + text.size() || errno == ERANGE) {
    throw CliError(kExitUsage, "cannot parse " + what + " '" + text + "'");
  }
  return v;
}

Range parse_range(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw CliError(kExitUsage, "range must look like key=start:stop:steps, got '" + text + "'");
  }
  Range r;
  r.key = text.substr(0, eq);
  std::vector<std::string> parts;
  std::stringstream ss(text.substr(eq + 1));
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() != 3) {
    throw CliError(kExitUsage, "range must look like key=start:stop:steps, got '" + text + "'");
  }
  r.start = parse_number(parts[0], "range start");
  r.stop = parse_number(parts[1], "range stop");
  const double steps = parse_number(parts[2], "range steps");
  if (!(steps >= 1.0) || steps != std::floor(steps) || steps > 1e7) {
    throw CliError(kExitUsage, "range steps must be a positive integer");
  }
  r.steps = static_cast<long long>(steps);
  return r;
}

using ParamMap = std::map<std::string, double>;
using RowFn = std::function<Row(const ParamMap&)>;

struct Command {
  std::string name;  // as reported in meta.command
  CLI::App* app = nullptr;
  std::vector<Param> params;
  std::vector<std::string> range_args;
  RowFn row;

  Param& add(const std::string& name, double value, const std::string& help,
             bool integer = false) {
    params.push_back({name, value, integer, help, nullptr});
    return params.back();
  }

  // Registers the numeric parameters as --name options plus --range.
  void bind() {
    for (auto& p : params) {
      p.option = app->add_option("--" + p.name, p.value, p.help)->capture_default_str();
    }
    app->add_option("--range", range_args,
                    "Sweep a parameter: key=start:stop:steps (repeatable; Cartesian product)");
  }
};

std::uint64_t resolve_seed(const CLI::Option* seed_opt, std::uint64_t seed_flag) {
  if (seed_opt->count() > 0) return seed_flag;
  if (const char* env = std::getenv("CVENTLAB_SEED"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || errno == ERANGE || env[0] == '-') {
      throw CliError(kExitUsage, std::string("CVENTLAB_SEED is not a 64-bit integer: ") + env);
    }
    return v;
  }
  return kDefaultSeed;
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(const Row& row) {
    if (columns.empty()) {
      for (const auto& [k, v] : row) columns.push_back(k);
    }
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i >= columns.size() || row[i].first != columns[i]) {
        throw std::logic_error("inconsistent row layout");
      }
      cells.push_back(row[i].second);
    }
    rows.push_back(std::move(cells));
  }
};

std::string render_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    out += (i ? "," : "") + csv_field(t.columns[i]);
  }
  out += "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += (i ? "," : "") + csv_field(cell_text(row[i]));
    }
    out += "\n";
  }
  return out;
}

std::string render_json(const Table& t, const Command& cmd, std::uint64_t seed,
                        const std::vector<Range>& ranges, const std::string& extra_key,
                        const std::string& extra_value) {
  nlohmann::ordered_json meta;
  meta["tool"] = "cventlab";
  meta["version"] = cvl_version();
  meta["command"] = cmd.name;
  meta["seed"] = seed;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& p : cmd.params) {
    bool swept = false;
    for (const auto& r : ranges) swept = swept || r.key == p.name;
    if (swept) continue;
    if (p.integer) {
      params[p.name] = static_cast<long long>(p.value);
    } else {
      params[p.name] = p.value;
    }
  }
  if (!extra_key.empty()) params[extra_key] = extra_value;
  meta["params"] = params;
  nlohmann::ordered_json rj = nlohmann::ordered_json::array();
  for (const auto& r : ranges) {
    rj.push_back({{"key", r.key}, {"start", r.start}, {"stop", r.stop}, {"steps", r.steps}});
  }
  meta["ranges"] = rj;
  meta["columns"] = t.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = cell_json(row[i]);
    rows.push_back(std::move(obj));
  }
  nlohmann::ordered_json doc;
  doc["meta"] = meta;
  doc["rows"] = rows;
  return doc.dump(2) + "\n";
}

Table run_grid(const Command& cmd, const std::vector<Range>& ranges) {
  ParamMap base;
  for (const auto& p : cmd.params) base[p.name] = p.value;
  Table table;
  std::vector<long long> index(ranges.size(), 0);
  while (true) {
    ParamMap values = base;
    for (std::size_t i = 0; i < ranges.size(); ++i) values[ranges[i].key] = ranges[i].at(index[i]);
    table.add(cmd.row(values));
    // Last range varies fastest.
    std::size_t k = ranges.size();
    while (k > 0) {
      --k;
      if (++index[k] < ranges[k].steps) break;
      index[k] = 0;
      if (k == 0) return table;
    }
    if (ranges.empty()) return table;
  }
}

std::vector<Range> validate_ranges(const Command& cmd) {
  std::vector<Range> ranges;
  for (const auto& arg : cmd.range_args) {
    Range r = parse_range(arg);
    const Param* param = nullptr;
    for (const auto& p : cmd.params) {
      if (p.name == r.key) param = &p;
    }
    if (param == nullptr) {
      std::string known;
      for (const auto& p : cmd.params) known += (known.empty() ? "" : ", ") + p.name;
      throw CliError(kExitUsage, "unknown range key '" + r.key + "' for " + cmd.name +
                                     " (known: " + known + ")");
    }
    for (const auto& other : ranges) {
      if (other.key == r.key) throw CliError(kExitUsage, "range key '" + r.key + "' repeated");
    }
    if (param->option->count() > 0) {
      throw CliError(kExitUsage, "'" + r.key + "' given both as --" + r.key + " and as a range");
    }
    if (param->integer && (r.start != std::floor(r.start) || r.stop != std::floor(r.stop) ||
                           (r.steps > 1 && std::fmod(r.stop - r.start, r.steps - 1) != 0.0))) {
      throw CliError(kExitUsage, "range over integer key '" + r.key + "' must hit integers");
    }
    ranges.push_back(r);
  }
  for (const auto& p : cmd.params) {
    if (p.integer && p.value != std::floor(p.value)) {
      throw CliError(kExitUsage, "--" + p.name + " must be an integer");
    }
  }
  return ranges;
}

long long as_count(double v, const char* name, long long min_value) {
  if (!(v >= static_cast<double>(min_value)) || v != std::floor(v) || v > 9e15) {
    throw CliError(kExitUsage, std::string(name) + " must be an integer >= " +
                                   std::to_string(min_value));
  }
  return static_cast<long long>(v);
}

std::vector<double> parse_phases(const std::string& text) {
  std::vector<double> phases;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) {
    phases.push_back(parse_number(part, "phase"));
  }
  if (phases.empty()) throw CliError(kExitUsage, "--phases needs at least one value");
  return phases;
}

std::string join(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + format_double(v[i]);
  return out;
}

double helstrom(double overlap_sq) {
  return 0.5 * overlap_sq / (1.0 + std::sqrt(std::max(0.0, 1.0 - overlap_sq)));
}

double photons_of_schmidt(double x) {
  double r0 = 0.0, xs = 0.0, n = 0.0;
  check(cvl_twin_beam_params(CVL_TWIN_BEAM_SCHMIDT, x, &r0, &xs, &n), "twin-beam parameters");
  return n;
}

// ---- Rows ---------------------------------------------------------------------

Row estimate_row(const ParamMap& p, std::uint64_t seed) {
  const cvl_estimation_setting s{p.at("x"), p.at("nbar"), p.at("alpha-re"), p.at("alpha-im")};
  const long long trials = as_count(p.at("trials"), "trials", 1);
  double ent = 0.0, unent = 0.0, threshold = 0.0, rms_e = 0.0, rms_u = 0.0;
  int convenient = 0;
  check(cvl_conditional_variance(&s, &ent, &unent), "conditional variance");
  check(cvl_entanglement_convenient(&s, &convenient), "convenience");
  check(cvl_convenience_threshold(s.x, &threshold), "threshold");
  check(cvl_simulate_estimation(&s, static_cast<size_t>(trials), seed, &rms_e, &rms_u),
        "estimation simulation");
  const double mc_e = rms_e * rms_e;
  const double mc_u = rms_u * rms_u;
  return {{"x", s.x},
          {"nbar", s.nbar_total},
          {"trials", trials},
          {"threshold", threshold},
          {"var_entangled", ent},
          {"var_entangled_mc", mc_e},
          {"var_entangled_diff", ent - mc_e},
          {"var_unentangled", unent},
          {"var_unentangled_mc", mc_u},
          {"var_unentangled_diff", unent - mc_u},
          {"entanglement_convenient", convenient != 0}};
}

Row discriminate_row(const ParamMap& p, const std::vector<double>& phases, std::uint64_t seed) {
  const long long copies = as_count(p.at("copies"), "copies", 1);
  const long long samples = as_count(p.at("samples"), "samples", 1);
  cvl_polygon* raw = nullptr;
  check(cvl_polygon_create(phases.data(), phases.size(), &raw), "polygon");
  PolygonPtr single(raw);
  PolygonPtr power;
  if (copies > 1) {
    check(cvl_polygon_tensor_power(single.get(), static_cast<size_t>(copies), &raw),
          "tensor power");
    power.reset(raw);
  }
  const cvl_polygon* poly = power ? power.get() : single.get();
  size_t k = 0;
  double r = 0.0, spread = 0.0, pe = 0.0, pe_spread = 0.0, sampled = 0.0;
  double plain = 0.0, extended = 0.0;
  int equal = 0, bounded = 0;
  size_t exact = 0;
  check(cvl_polygon_size(poly, &k), "polygon size");
  check(cvl_polygon_distance(poly, &r), "hull distance");
  check(cvl_polygon_spread(poly, &spread), "spread");
  check(cvl_polygon_min_error_probability(poly, &pe), "error probability");
  check(cvl_spread_error_probability(spread, &pe_spread), "spread formula");
  check(cvl_polygon_sampled_min_overlap(poly, static_cast<size_t>(samples), seed, &sampled),
        "sampled overlap");
  check(cvl_polygon_single_copy_gain(poly, 3, &plain, &extended, &equal), "ancilla check");
  check(cvl_polygon_copies_for_exact(single.get(), &bounded, &exact), "copies for exact");
  const double pe_sampled = helstrom(sampled * sampled);
  return {{"phases", join(phases)},
          {"copies", copies},
          {"eigenphases", static_cast<long long>(k)},
          {"spread", spread},
          {"r", r},
          {"r_sampled", sampled},
          {"r_diff", r - sampled},
          {"pe", pe},
          {"pe_sampled", pe_sampled},
          {"pe_diff", pe - pe_sampled},
          {"pe_spread_formula", pe_spread},
          {"r_with_ancilla", extended},
          {"copies_for_exact", bounded ? Cell(static_cast<long long>(exact)) : Cell()}};
}

Row interfere_row(const ParamMap& p) {
  const double x = p.at("x");
  const double phi = p.at("phi");
  const double q0 = p.at("q0");
  const double gamma = p.at("gamma");
  const double tail_tol = p.at("tail");
  const long long dmax_opt = static_cast<long long>(p.at("dmax"));
  const double photons = photons_of_schmidt(x);

  int dmax = 0;
  if (dmax_opt >= 0) {
    dmax = static_cast<int>(dmax_opt);
  } else {
    check(cvl_fock_default_cutoff(x, tail_tol, &dmax), "default cutoff");
  }
  double tail = 0.0;
  check(cvl_fock_twin_beam_tail(x, dmax, &tail), "twin-beam tail");
  if (tail > tail_tol) {
    int suggested = 0;
    check(cvl_fock_default_cutoff(x, tail_tol, &suggested), "default cutoff");
    throw CliError(kExitNumerical, "truncation tail " + format_double(tail) + " exceeds " +
                                       format_double(tail_tol) + "; try dmax >= " +
                                       std::to_string(suggested));
  }

  double kappa_sq = 0.0;
  check(cvl_twin_beam_overlap_sq(photons, phi, &kappa_sq), "overlap");
  cvl_fock_state* raw = nullptr;
  check(cvl_fock_twin_beam(x, dmax, &raw), "Fock twin beam");
  FockPtr beam(raw);
  check(cvl_fock_jx_evolve(beam.get(), phi, &raw), "Fock evolution");
  FockPtr evolved(raw);
  double re = 0.0, im = 0.0;
  check(cvl_fock_overlap(beam.get(), evolved.get(), &re, &im), "Fock overlap");
  const double kappa_sq_fock = re * re + im * im;

  double q_ideal = 0.0, q_mz = 0.0, mz_min = 0.0;
  check(cvl_np_detection_probability(q0, kappa_sq, &q_ideal), "detection probability");
  check(cvl_mz_detection_probability(x, phi, dmax, tail_tol, &q_mz), "MZ detection");
  int detectable = 0;
  double phi_min = 0.0, lambda = 0.0, asymptotic = 0.0;
  check(cvl_min_detectable_phase_ideal(q0, gamma, photons, &detectable, &phi_min, &lambda,
                                       &asymptotic),
        "minimum detectable phase");
  const double target = gamma * q0;
  Cell mz_closed, mz_numeric, mz_diff;
  if (photons > 0.0) {
    check(cvl_mz_min_phase(target, photons, &mz_min), "MZ minimum phase");
    mz_closed = mz_min;
    int found = 0;
    double root = 0.0;
    check(cvl_mz_invert_phase(x, target, dmax, &found, &root), "MZ phase inversion");
    if (found) {
      mz_numeric = root;
      mz_diff = mz_min - root;
    }
  }
  return {{"x", x},
          {"photons", photons},
          {"phi", phi},
          {"dmax", static_cast<long long>(dmax)},
          {"tail", tail},
          {"kappa_sq", kappa_sq},
          {"kappa_sq_fock", kappa_sq_fock},
          {"kappa_sq_diff", kappa_sq - kappa_sq_fock},
          {"q0", q0},
          {"q_phi_ideal", q_ideal},
          {"q_phi_mz", q_mz},
          {"gamma", gamma},
          {"lambda", lambda},
          {"phi_min_ideal", detectable ? Cell(phi_min) : Cell()},
          {"phi_min_ideal_asymptotic", asymptotic},
          {"phi_min_mz", mz_closed},
          {"phi_min_mz_fock", mz_numeric},
          {"phi_min_mz_diff", mz_diff}};
}

Row crypto_analytic_row(const ParamMap& p) {
  const double x = p.at("x"), a = p.at("a"), kappa = p.at("kappa"), nbar = p.at("nbar");
  const double photons = photons_of_schmidt(x);
  double bob = 0.0, bob_asym = 0.0, coherent = 0.0, eve_u = 0.0, eve_g = 0.0, eve_g_asym = 0.0;
  double s_plus = 0.0, var = 0.0, var_quoted = 0.0, bob_het = 0.0, eve_het = 0.0;
  double bob_m = 0.0, eve_m = 0.0;
  int secure = 0;
  check(cvl_bob_ideal_error(x, -a, 0.0, a, 0.0, &bob), "Bob ideal error");
  check(cvl_bob_ideal_error_asymptote(x, -a, 0.0, a, 0.0, &bob_asym), "Bob asymptote");
  check(cvl_coherent_error(-a, 0.0, a, 0.0, &coherent), "coherent error");
  check(cvl_eve_error_uniform(&eve_u), "Eve uniform");
  check(cvl_eve_error_gaussian_key(a, kappa, &eve_g), "Eve Gaussian key");
  check(cvl_eve_error_gaussian_key_asymptote(a, kappa, &eve_g_asym), "Eve asymptote");
  check(cvl_positive_eigenvalue_sum(a, kappa, &s_plus), "positive sum");
  check(cvl_receiver_variance(x, &var), "receiver variance");
  check(cvl_quoted_receiver_variance(x, &var_quoted), "quoted variance");
  check(cvl_bob_heterodyne_error(x, a, nbar, &bob_het), "Bob heterodyne");
  check(cvl_eve_heterodyne_error(x, a, kappa, nbar, &eve_het), "Eve heterodyne");
  check(cvl_security_margin(x, kappa, a, &secure, &bob_m, &eve_m), "security margin");

  // Fock cross-check of the pure-state overlap of the two displaced beams.
  int cutoff = 0;
  check(cvl_fock_default_cutoff(x, 1e-14, &cutoff), "default cutoff");
  cutoff = std::max(cutoff, static_cast<int>(std::ceil(4.0 * a * a + 12.0 * a + 12.0)));
  cvl_fock_state* raw = nullptr;
  check(cvl_fock_twin_beam(x, cutoff, &raw), "Fock twin beam");
  FockPtr beam(raw);
  check(cvl_fock_displace(beam.get(), -a, 0.0, 1, &raw), "Fock displacement");
  FockPtr s0(raw);
  check(cvl_fock_displace(beam.get(), a, 0.0, 1, &raw), "Fock displacement");
  FockPtr s1(raw);
  double re = 0.0, im = 0.0;
  check(cvl_fock_overlap(s0.get(), s1.get(), &re, &im), "Fock overlap");
  const double bob_fock = helstrom(re * re + im * im);

  return {{"x", x},
          {"a", a},
          {"kappa", kappa},
          {"nbar", nbar},
          {"photons", photons},
          {"bob_ideal", bob},
          {"bob_ideal_fock", bob_fock},
          {"bob_ideal_diff", bob - bob_fock},
          {"bob_ideal_asymptote", bob_asym},
          {"coherent", coherent},
          {"eve_uniform_key", eve_u},
          {"eve_gaussian_key", eve_g},
          {"eve_gaussian_key_asymptote", eve_g_asym},
          {"positive_eigenvalue_sum", s_plus},
          {"receiver_variance", var},
          {"receiver_variance_quoted", var_quoted},
          {"bob_heterodyne", bob_het},
          {"eve_heterodyne", eve_het},
          {"secure", secure != 0}};
}

Row crypto_simulate_row(const ParamMap& p, std::uint64_t seed) {
  const cvl_protocol_config c{p.at("x"), p.at("a"), p.at("kappa"), p.at("nbar")};
  const long long bits = as_count(p.at("bits"), "bits", 1);
  std::uint64_t bob_errors = 0, eve_errors = 0;
  check(cvl_simulate_binary_protocol(&c, static_cast<std::uint64_t>(bits), seed, &bob_errors,
                                     &eve_errors),
        "protocol simulation");
  double bob_closed = 0.0, eve_closed = 0.0, eve_bound = 0.0;
  check(cvl_bob_heterodyne_error(c.x, c.a, c.nbar, &bob_closed), "Bob heterodyne");
  check(cvl_eve_heterodyne_error(c.x, c.a, c.kappa_key, c.nbar, &eve_closed), "Eve heterodyne");
  check(cvl_eve_error_gaussian_key(c.a, c.kappa_key, &eve_bound), "Eve bound");
  const double n = static_cast<double>(bits);
  const double bob_rate = static_cast<double>(bob_errors) / n;
  const double eve_rate = static_cast<double>(eve_errors) / n;
  return {{"x", c.x},
          {"a", c.a},
          {"kappa", c.kappa_key},
          {"nbar", c.nbar},
          {"bits", bits},
          {"bob_errors", static_cast<long long>(bob_errors)},
          {"bob_rate", bob_rate},
          {"bob_closed", bob_closed},
          {"bob_diff", bob_closed - bob_rate},
          {"bob_sigma", std::sqrt(bob_closed * (1.0 - bob_closed) / n)},
          {"eve_errors", static_cast<long long>(eve_errors)},
          {"eve_rate", eve_rate},
          {"eve_closed", eve_closed},
          {"eve_diff", eve_closed - eve_rate},
          {"eve_sigma", std::sqrt(eve_closed * (1.0 - eve_closed) / n)},
          {"eve_bound", eve_bound}};
}

Row fiber_row(const ParamMap& p) {
  const double damping = p.at("gamma"), m = p.at("M"), photons = p.at("N");
  const double tau_max = p.at("tau-max");
  const long long steps = as_count(p.at("steps"), "steps", 2);
  double r0 = 0.0, x = 0.0, n = 0.0;
  check(cvl_twin_beam_params(CVL_TWIN_BEAM_PHOTONS, photons, &r0, &x, &n), "twin beam");
  int finite_t = 0, finite_tau = 0, finite_tau_n = 0, found = 0;
  double t_s = 0.0, tau_s = 0.0, tau_s_n = 0.0, t_limit = 0.0, tau_scan = 0.0, t_scan = 0.0;
  size_t grid_index = 0;
  check(cvl_fiber_separability_time(damping, m, photons, &finite_t, &t_s), "separability time");
  check(cvl_fiber_separability_time_rescaled(m, r0, &finite_tau, &tau_s), "rescaled time");
  check(cvl_fiber_separability_time_rescaled_from_photons(m, photons, &finite_tau_n, &tau_s_n),
        "rescaled time");
  check(cvl_fiber_separability_time_large_photon_limit(damping, m, &t_limit), "large-N limit");
  check(cvl_fiber_scan_separability(r0, m, tau_max, static_cast<size_t>(steps), &found,
                                    &tau_scan, &grid_index),
        "separability scan");
  if (found) check(cvl_fiber_physical_time(damping, m, tau_scan, &t_scan), "physical time");
  const auto maybe = [](int ok, double v) { return ok ? std::optional<double>(v) : std::nullopt; };
  const auto ts = maybe(finite_t, t_s);
  const auto tscan = maybe(found, t_scan);
  return {{"gamma", damping},
          {"M", m},
          {"N", photons},
          {"r0", r0},
          {"t_s", opt(ts)},
          {"t_s_scan", opt(tscan)},
          {"t_s_diff", ts && tscan ? Cell(*ts - *tscan) : Cell()},
          {"tau_s", opt(maybe(finite_tau, tau_s))},
          {"tau_s_from_photons", opt(maybe(finite_tau_n, tau_s_n))},
          {"t_s_large_n_limit", t_limit},
          {"separable_within_tau_max", found != 0}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cventlab: continuous-variable entanglement toolkit"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format = "csv";
  std::string output;
  std::uint64_t seed_flag = kDefaultSeed;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--output,-o", output, "Write to this file instead of standard output");
  CLI::Option* seed_opt = app.add_option(
      "--seed", seed_flag,
      "RNG seed (default " + std::to_string(kDefaultSeed) + ", or $CVENTLAB_SEED when set)");

  std::vector<std::unique_ptr<Command>> commands;
  const auto make = [&](CLI::App* sub, const std::string& name) {
    commands.push_back(std::make_unique<Command>());
    commands.back()->name = name;
    commands.back()->app = sub;
    return commands.back().get();
  };

  std::uint64_t seed = kDefaultSeed;
  std::string phases_text;
  std::vector<double> phases;

  Command* estimate = make(
      app.add_subcommand("estimate", "Displacement estimation: twin-beam vs vacuum probe"),
      "estimate");
  estimate->add("x", 0.9, "Schmidt parameter of the probe");
  estimate->add("nbar", 0.05, "Total Gaussian noise");
  estimate->add("alpha-re", 1.0, "Real part of the displacement");
  estimate->add("alpha-im", 0.0, "Imaginary part of the displacement");
  estimate->add("trials", 100000, "Monte Carlo trials", true);
  estimate->row = [&](const ParamMap& p) { return estimate_row(p, seed); };

  Command* discriminate = make(
      app.add_subcommand("discriminate", "Minimum-error discrimination of two unitaries"),
      "discriminate");
  discriminate->app->add_option("--phases", phases_text, "Eigenphases of U2^dag U1, comma separated")
      ->required();
  discriminate->add("copies", 1, "Number of copies of the unitary", true);
  discriminate->add("samples", 100000, "Random simplex samples for the oracle", true);
  discriminate->row = [&](const ParamMap& p) { return discriminate_row(p, phases, seed); };

  Command* interfere = make(
      app.add_subcommand("interfere", "Phase-perturbation detection with twin beams"),
      "interfere");
  interfere->add("x", 0.5, "Schmidt parameter");
  interfere->add("phi", 0.05, "Perturbation phase");
  interfere->add("q0", 0.01, "False-alarm probability");
  interfere->add("gamma", 10.0, "Acceptance ratio Q_phi / Q0");
  interfere->add("dmax", -1, "Fock cutoff (negative: chosen from --tail)", true);
  interfere->add("tail", 1e-10, "Largest acceptable truncation tail");
  interfere->row = [&](const ParamMap& p) { return interfere_row(p); };

  CLI::App* crypto = app.add_subcommand("crypto", "Key distribution with displaced twin beams");
  crypto->require_subcommand(1);
  Command* analytic =
      make(crypto->add_subcommand("analytic", "Closed-form error probabilities"), "crypto analytic");
  Command* simulate =
      make(crypto->add_subcommand("simulate", "End-to-end Monte Carlo of the binary protocol"),
           "crypto simulate");
  for (Command* c : {analytic, simulate}) {
    c->add("x", 0.8, "Schmidt parameter");
    c->add("a", 0.5, "Symbol amplitude (symbols are +a and -a)");
    c->add("kappa", 1.0, "Variance of the Gaussian displacement key");
    c->add("nbar", 0.0, "Channel noise on each beam");
  }
  simulate->add("bits", 100000, "Number of transmitted bits", true);
  analytic->row = [&](const ParamMap& p) { return crypto_analytic_row(p); };
  simulate->row = [&](const ParamMap& p) { return crypto_simulate_row(p, seed); };

  Command* fiber =
      make(app.add_subcommand("fiber", "Separability time of twin beams in noisy fibers"), "fiber");
  fiber->add("gamma", 1.0, "Fiber damping rate");
  fiber->add("M", 0.5, "Thermal photons per mode");
  fiber->add("N", 2.0, "Twin-beam photon number");
  fiber->add("tau-max", 100.0, "End of the rescaled-time scan");
  fiber->add("steps", 10001, "Grid points of the scan", true);
  fiber->row = [&](const ParamMap& p) { return fiber_row(p); };

  for (auto& c : commands) c->bind();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    seed = resolve_seed(seed_opt, seed_flag);
    Command* active = nullptr;
    for (auto& c : commands) {
      if (c->app->parsed()) active = c.get();
    }
    if (active == nullptr) throw CliError(kExitUsage, "no command given");
    if (active == discriminate) phases = parse_phases(phases_text);

    const std::vector<Range> ranges = validate_ranges(*active);
    const Table table = run_grid(*active, ranges);
    const std::string text =
        format == "json" ? render_json(table, *active, seed, ranges,
                                       active == discriminate ? "phases" : "",
                                       active == discriminate ? join(phases) : "")
                         : render_csv(table);
    if (output.empty()) {
      std::cout << text << std::flush;
    } else {
      std::ofstream file(output, std::ios::binary);
      if (!file) throw CliError(kExitUsage, "cannot open output file " + output);
      file << text;
      if (!file.flush()) throw CliError(kExitNumerical, "write failed: " + output);
    }
  } catch (const CliError& e) {
    std::cerr << "cventlab: " << e.what() << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "cventlab: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}
