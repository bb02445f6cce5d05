#include "hodgeheat/cli_impl.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "hodgeheat/bounds.hpp"
#include "hodgeheat/cochain.hpp"
#include "hodgeheat/complex.hpp"
#include "hodgeheat/form_bound.hpp"
#include "hodgeheat/forman.hpp"
#include "hodgeheat/generators.hpp"
#include "hodgeheat/growth.hpp"
#include "hodgeheat/heat.hpp"
#include "hodgeheat/io.hpp"
#include "hodgeheat/laplacian.hpp"
#include "hodgeheat/metric.hpp"
#include "hodgeheat/norms.hpp"
#include "hodgeheat/report.hpp"
#include "hodgeheat/resolvent.hpp"
#include "hodgeheat/schrodinger.hpp"
#include "hodgeheat/spectral.hpp"

namespace hodgeheat {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string complex_path;
  std::string generate_spec;
  int degree = 0;
  std::string variant = "hodge";
  std::string metric;  // empty -> degree default
  std::string metric_file;
  std::string t_grid_spec, p_grid_spec, beta_grid_spec, z_grid_spec;
  std::uint64_t seed = 1;
  std::string output;
  std::string series;
  std::string augmented;  // "", "auto", "on", "off"
  double m_empty = 1.0;
  bool m_empty_set = false;
  double tolerance = -1.0;  // < 0: keep each check's own tolerance
  double eps = 0.5;
  double kappa = 0.5;
  double t_single = 1.0;
};

std::string csv_num(double v) {
  if (v == kInf) return "inf";
  if (v == -kInf) return "-inf";
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

double to_num(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": cannot parse number '" + s + "'");
  }
}

Vec random_state(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  Vec f(n);
  for (int i = 0; i < n; ++i) f(i) = cplx(g(rng), g(rng));
  return f;
}

// ---- input plumbing --------------------------------------------------------

std::string slurp(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// Re-route a complex through its JSON form to apply augmentation overrides.
WeightedComplex override_modes(const WeightedComplex& cx, const RunConfig& cfg) {
  json doc = json::parse(complex_to_json(cx));
  if (cfg.augmented == "auto")
    doc["augmented"] = "auto";
  else if (cfg.augmented == "on")
    doc["augmented"] = true;
  else if (cfg.augmented == "off")
    doc["augmented"] = false;
  if (cfg.m_empty_set) {
    if (!doc.contains("weights"))
      throw std::invalid_argument("--m-empty applies only to weighted complexes");
    doc["weights"][""] = cfg.m_empty;
  }
  std::istringstream ss(doc.dump());
  return load_complex(ss, "<override>");
}

WeightedComplex load_input(const RunConfig& cfg, std::istream& in) {
  const bool wants_override = !cfg.augmented.empty() || cfg.m_empty_set;
  if (!cfg.generate_spec.empty()) {
    WeightedComplex cx = parse_generator_spec(cfg.generate_spec);
    return wants_override ? override_modes(cx, cfg) : cx;
  }
  std::string text;
  std::string origin;
  if (!cfg.complex_path.empty()) {
    std::ifstream f(cfg.complex_path);
    if (!f) throw ParseError(cfg.complex_path + ": cannot open file");
    text = slurp(f);
    origin = cfg.complex_path;
  } else {
    text = slurp(in);
    origin = "<stdin>";
  }
  if (wants_override) {
    json doc = json::parse(text, nullptr, false);
    if (!doc.is_discarded() && doc.is_object()) {
      if (cfg.augmented == "auto")
        doc["augmented"] = "auto";
      else if (cfg.augmented == "on")
        doc["augmented"] = true;
      else if (cfg.augmented == "off")
        doc["augmented"] = false;
      if (cfg.m_empty_set) {
        if (!doc.contains("weights"))
          throw std::invalid_argument("--m-empty applies only to weighted complexes");
        doc["weights"][""] = cfg.m_empty;
      }
      text = doc.dump();
    }
  }
  std::istringstream ss(text);
  return load_complex(ss, origin);
}

// ---- grids -----------------------------------------------------------------

std::vector<double> grid_or(const std::string& spec, std::vector<double> dflt) {
  if (spec.empty()) return dflt;
  return parse_grid(spec);
}

ZRect parse_z_rect(const std::string& spec) {
  ZRect rect;
  if (spec.empty()) return rect;
  const auto parts = split(spec, ':');
  if (parts.size() != 6)
    throw std::invalid_argument("--z-grid expects relo:rehi:nre:imlo:imhi:nim");
  rect.re_lo = to_num(parts[0], "--z-grid");
  rect.re_hi = to_num(parts[1], "--z-grid");
  rect.nre = static_cast<int>(to_num(parts[2], "--z-grid"));
  rect.im_lo = to_num(parts[3], "--z-grid");
  rect.im_hi = to_num(parts[4], "--z-grid");
  rect.nim = static_cast<int>(to_num(parts[5], "--z-grid"));
  if (rect.nre < 1 || rect.nim < 1)
    throw std::invalid_argument("--z-grid: grid counts must be at least 1");
  return rect;
}

// ---- degree-block setup ----------------------------------------------------

MetricData select_metric(const WeightedComplex& cx, const RunConfig& cfg);

struct DegreeSetup {
  LaplacianMatrix H;
  SchrodingerData sd;
  MetricData md;
  double lambda2 = 0;
  GrowthFit fit;
};

DegreeSetup setup_block(const WeightedComplex& cx, const RunConfig& cfg) {
  DegreeSetup d;
  d.H = assemble_laplacian(cx, cfg.degree, LapVariant::hodge);
  if (d.H.size() == 0)
    throw std::invalid_argument("degree " + std::to_string(cfg.degree) + " block is empty");
  d.sd = extract_schrodinger(d.H);
  d.md = certify_intrinsic(d.sd, select_metric(cx, cfg));
  d.lambda2 = spectrum(d.H).lambda2;
  d.fit = fit_growth(d.md, d.sd.m);
  return d;
}

MetricData metric_from_csv(const std::string& path, const WeightedComplex& cx, int k) {
  std::ifstream f(path);
  if (!f) throw ParseError(path + ": cannot open metric file");
  const std::vector<std::string> keys = cx.keys(k);
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < keys.size(); ++i) index[keys[i]] = static_cast<int>(i);
  const int n = static_cast<int>(keys.size());
  MetricData md;
  md.degree = k;
  md.keys = keys;
  md.dist = RMat::Constant(n, n, kInf);
  for (int i = 0; i < n; ++i) md.dist(i, i) = 0.0;
  md.note = "loaded from " + path;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (lineno == 1 && line.rfind("key_a", 0) == 0) continue;
    const auto parts = split(line, ',');
    if (parts.size() != 3)
      throw ParseError(path + ":" + std::to_string(lineno) + ": expected key_a,key_b,distance");
    const auto ia = index.find(parts[0]);
    const auto ib = index.find(parts[1]);
    if (ia == index.end() || ib == index.end())
      throw ParseError(path + ":" + std::to_string(lineno) + ": unknown simplex key '" +
                       (ia == index.end() ? parts[0] : parts[1]) + "'");
    double v;
    if (parts[2] == "inf")
      v = kInf;
    else
      v = to_num(parts[2], path + ":" + std::to_string(lineno));
    if (v < 0)
      throw ParseError(path + ":" + std::to_string(lineno) + ": negative distance");
    md.dist(ia->second, ib->second) = v;
    md.dist(ib->second, ia->second) = v;
  }
  return md;
}

MetricData select_metric(const WeightedComplex& cx, const RunConfig& cfg) {
  const std::string name =
      cfg.metric.empty() ? (cfg.degree == 0 ? "scaled" : "simplex-rho") : cfg.metric;
  if (name == "combinatorial") {
    if (cfg.degree != 0)
      throw std::invalid_argument("--metric combinatorial is a vertex metric (degree 0)");
    return combinatorial_metric(cx);
  }
  if (name == "scaled") {
    if (cfg.degree != 0)
      throw std::invalid_argument("--metric scaled is a vertex metric (degree 0)");
    return scaled_intrinsic_metric(cx);
  }
  if (name == "simplex-rho") return simplex_metric(cx, cfg.degree);
  if (name == "file") {
    if (cfg.metric_file.empty())
      throw std::invalid_argument("--metric file requires --metric-file PATH");
    return metric_from_csv(cfg.metric_file, cx, cfg.degree);
  }
  throw std::invalid_argument("unknown metric '" + name +
                              "' (combinatorial|scaled|simplex-rho|file)");
}

// ---- output plumbing -------------------------------------------------------

void emit_text(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty()) {
    out << text << "\n";
    return;
  }
  std::ofstream f(cfg.output);
  if (!f) throw std::invalid_argument("cannot open output file " + cfg.output);
  f << text << "\n";
}

void write_combined_series(std::ostream& os, const std::vector<BoundReport>& reps) {
  bool any_label = false;
  for (const auto& rep : reps)
    for (const auto& row : rep.series)
      if (!row.label.empty()) any_label = true;
  os << "check,t,lhs,rhs,slack" << (any_label ? ",label" : "") << "\n";
  for (const auto& rep : reps)
    for (const auto& row : rep.series) {
      os << rep.check << ',' << csv_num(row.t) << ',' << csv_num(row.lhs) << ','
         << csv_num(row.rhs) << ',' << csv_num(row.slack);
      if (any_label) os << ',' << row.label;
      os << "\n";
    }
}

void maybe_write_series(const RunConfig& cfg, const std::vector<BoundReport>& reps) {
  if (cfg.series.empty()) return;
  std::ofstream f(cfg.series);
  if (!f) throw std::invalid_argument("cannot open series file " + cfg.series);
  write_combined_series(f, reps);
}

/// Apply the tolerance override, emit JSON (+ optional CSV), pick the exit code.
int finish_reports(std::vector<BoundReport> reps, const RunConfig& cfg, std::ostream& out,
                   std::ostream& err) {
  if (cfg.tolerance >= 0)
    for (auto& rep : reps) {
      rep.tolerance = cfg.tolerance;
      rep.finalize();
    }
  std::string text;
  if (reps.size() == 1) {
    text = bound_report_to_json(reps[0]);
  } else {
    json arr = json::array();
    for (const auto& rep : reps) arr.push_back(json::parse(bound_report_to_json(rep)));
    text = arr.dump(2);
  }
  emit_text(cfg, out, text);
  maybe_write_series(cfg, reps);
  for (const auto& rep : reps)
    if (!rep.pass) {
      err << "check '" << rep.check << "' failed: violation " << csv_num(rep.max_violation)
          << " > tolerance " << csv_num(rep.tolerance) << " at sample lhs="
          << csv_num(rep.worst_lhs) << " rhs=" << csv_num(rep.worst_rhs) << "\n";
      return 1;
    }
  return 0;
}

// ---- commands --------------------------------------------------------------

int cmd_validate(const WeightedComplex& cx, const RunConfig& cfg, std::ostream& out,
                 std::ostream& err) {
  double dd = 0;
  for (int k = cx.min_degree(); k <= cx.dim() - 2; ++k) {
    const SpMat prod = coboundary_matrix(cx, k + 1) * coboundary_matrix(cx, k);
    for (int c = 0; c < prod.outerSize(); ++c)
      for (SpMat::InnerIterator it(prod, c); it; ++it)
        dd = std::max(dd, std::abs(it.value()));
  }
  double stokes = 0;
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int k = cx.min_degree(); k <= cx.dim() - 1; ++k) {
    if (cx.block_size(k) == 0 || cx.block_size(k + 1) == 0) continue;
    for (int rep = 0; rep < 5; ++rep) {
      Cochain w(cx), eta(cx);
      for (int i = 0; i < cx.block_size(k); ++i) w.block(k)(i) = cplx(g(rng), g(rng));
      for (int i = 0; i < cx.block_size(k + 1); ++i) eta.block(k + 1)(i) = cplx(g(rng), g(rng));
      const cplx a = inner_product(coboundary(w), eta);
      const cplx b = inner_product(w, boundary(eta));
      stokes = std::max(stokes, std::abs(a - b) / std::max(1.0, std::abs(a)));
    }
  }
  const bool ok = dd == 0.0 && stokes <= tol::identity;
  json doc;
  doc["valid"] = ok;
  doc["coboundary_squared_max"] = dd;
  doc["adjointness_residual"] = stokes;
  doc["dim"] = cx.dim();
  doc["total_simplices"] = cx.total_simplices();
  doc["augmented"] = cx.augmented();
  emit_text(cfg, out, doc.dump(2));
  if (!ok) {
    err << "validate failed: delta.delta max " << csv_num(dd) << ", adjointness residual "
        << csv_num(stokes) << "\n";
    return 1;
  }
  return 0;
}

int cmd_laplacian(const WeightedComplex& cx, const RunConfig& cfg, std::ostream& out) {
  const LaplacianMatrix H =
      assemble_laplacian(cx, cfg.degree, lap_variant_from_string(cfg.variant));
  json doc;
  doc["degree"] = H.degree;
  doc["variant"] = to_string(H.variant);
  doc["keys"] = H.keys;
  std::vector<double> m(H.m.data(), H.m.data() + H.m.size());
  doc["m"] = m;
  json rows = json::array();
  for (int i = 0; i < H.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < H.size(); ++j)
      row.push_back(json::array({H.A(i, j).real(), H.A(i, j).imag()}));
    rows.push_back(row);
  }
  doc["matrix"] = rows;
  doc["self_adjointness_defect"] = H.self_adjointness_defect();
  emit_text(cfg, out, doc.dump(2));
  return 0;
}

int cmd_curvature(const WeightedComplex& cx, const RunConfig& cfg, std::ostream& out,
                  std::ostream& err) {
  const int k = cfg.degree;
  if (!cx.has_block(k) || cx.block_size(k) == 0)
    throw std::invalid_argument("degree " + std::to_string(k) + " block is empty");
  const LaplacianMatrix H = assemble_laplacian(cx, k, LapVariant::hodge);
  const SchrodingerData sd = extract_schrodinger(H);
  json values = json::object();
  double residual = 0;
  const auto& simplices = cx.simplices(k);
  for (int i = 0; i < cx.block_size(k); ++i) {
    const double f = forman_curvature(cx, simplices[i]);
    values[H.keys[i]] = f;
    residual = std::max(residual, std::abs(f - sd.c(i) / sd.m(i)));
  }
  json doc;
  doc["degree"] = k;
  doc["values"] = values;
  doc["potential_residual"] = residual;
  emit_text(cfg, out, doc.dump(2));
  if (residual > tol::identity) {
    err << "curvature does not match the extracted potential: residual "
        << csv_num(residual) << "\n";
    return 1;
  }
  return 0;
}

int cmd_spectrum(const WeightedComplex& cx, const RunConfig& cfg, std::ostream& out) {
  const LaplacianMatrix H =
      assemble_laplacian(cx, cfg.degree, lap_variant_from_string(cfg.variant));
  const SpectralReport sp = spectrum(H);
  emit_text(cfg, out, spectral_report_to_json(sp));
  if (!cfg.series.empty()) {
    std::ofstream f(cfg.series);
    if (!f) throw std::invalid_argument("cannot open series file " + cfg.series);
    write_eigenvalues_csv(f, sp);
  }
  return 0;
}

int cmd_betti(const WeightedComplex& cx, const RunConfig& cfg, std::ostream& out,
              std::ostream& err) {
  std::vector<int> harmonic, oracle;
  for (int k = 0; k <= cx.dim(); ++k) {
    harmonic.push_back(betti(cx, k));
    oracle.push_back(betti_rank_oracle(cx, k));
  }
  json doc;
  doc["betti"] = harmonic;
  doc["rank_oracle"] = oracle;
  doc["dim"] = cx.dim();
  doc["augmented"] = cx.augmented();
  emit_text(cfg, out, doc.dump(2));
  if (harmonic != oracle) {
    err << "harmonic kernel dimensions disagree with the rank oracle\n";
    return 1;
  }
  return 0;
}

int cmd_growth(const WeightedComplex& cx, const RunConfig& cfg, std::ostream& out) {
  const DegreeSetup d = setup_block(cx, cfg);
  const std::vector<double> betas = grid_or(cfg.beta_grid_spec, linspace(0.5, 3.0, 6));
  json doc;
  json metric = json::object();
  metric["degree"] = d.md.degree;
  metric["jump_size"] = d.md.jump_size;
  metric["rescale"] = d.md.rescale;
  metric["intrinsic_certified"] = d.md.intrinsic_certified;
  metric["note"] = d.md.note;
  doc["metric"] = metric;
  doc["fit"] = json::parse(growth_fit_to_json(d.fit));
  json summ = json::array();
  for (double beta : betas) {
    json row = json::object();
    row["beta"] = beta;
    row["value"] = summability(d.md, d.sd.m, beta);
    summ.push_back(row);
  }
  doc["summability"] = summ;
  const DegreeGrowthReport dg = degree_growth_consistency(d.md, d.sd.m, d.fit, d.sd.b);
  doc["max_count_ratio"] = dg.max_count_ratio;
  doc["max_degree"] = dg.max_degree;
  doc["degree_bound"] = dg.degree_bound;
  emit_text(cfg, out, doc.dump(2));
  return 0;
}

std::vector<std::vector<int>> prefix_windows(int n) {
  std::vector<std::vector<int>> out;
  for (int part = 1; part <= 3; ++part) {
    const int len = part == 3 ? n : std::max(1, (n * part) / 3);
    std::vector<int> w(len);
    for (int i = 0; i < len; ++i) w[i] = i;
    out.push_back(std::move(w));
  }
  return out;
}

int run_one_check(const std::string& cmd, const WeightedComplex& cx, const RunConfig& cfg,
                  std::ostream& out, std::ostream& err) {
  const DegreeSetup d = setup_block(cx, cfg);
  const int n = d.H.size();
  const std::vector<double> ts = grid_or(cfg.t_grid_spec, default_time_grid());

  if (cmd == "heat") {
    const Vec f = random_state(n, cfg.seed);
    const double h = 1e-4;
    const SpectralReport sp = spectrum(d.H);
    const double fd_scale =
        std::pow(sp.eigenvalues(sp.eigenvalues.size() - 1), 3) *
        lp_vector_norm(f, d.H.m, 2.0) / (6.0 * std::sqrt(d.H.m.minCoeff()));
    const double fd_tol = std::max(1e-7, 2.0 * fd_scale * h * h);
    return finish_reports({verify_heat_equation(d.H, f, ts, h, fd_tol)}, cfg, out, err);
  }
  if (cmd == "dgg-check")
    return finish_reports({dgg_check(d.H, d.md, d.lambda2, ts, d.fit.nu, cfg.seed)}, cfg,
                          out, err);
  if (cmd == "energy-check") {
    RVec omega(n);
    for (int v = 0; v < n; ++v) {
      const double d0 = d.md.dist(v, 0);
      omega(v) =
          cfg.kappa * std::min(std::isfinite(d0) ? d0 : d.fit.diameter, d.fit.diameter);
    }
    return finish_reports(
        {energy_monotonicity(d.H, d.md, random_state(n, cfg.seed), omega, cfg.kappa, ts)},
        cfg, out, err);
  }
  if (cmd == "contraction-check") {
    const FormBoundEstimate fb = estimate_form_bound(d.sd, {0.0, 0.5, 1.0, 2.0, 5.0});
    const std::vector<double> ps = grid_or(cfg.p_grid_spec, {1.5, 2.0, 3.0, 4.0});
    return finish_reports({contraction_check(d.H, fb.M_pair, fb.C_pair, ps, ts)}, cfg, out,
                          err);
  }
  if (cmd == "domination-check") {
    double K = -kInf;
    for (int x = 0; x < n; ++x) K = std::max(K, -d.sd.c(x) / d.sd.m(x));
    return finish_reports({domination_check(d.sd, K, ts)}, cfg, out, err);
  }
  if (cmd == "l1-check")
    return finish_reports({l1_extension_check(d.sd, d.md, d.fit, ts)}, cfg, out, err);
  if (cmd == "resolvent-check") {
    const ZRect rect = parse_z_rect(cfg.z_grid_spec);
    const double Ceps = c_beta(cfg.eps, d.md.jump_size);
    std::vector<BoundReport> reps;
    reps.push_back(resolvent_decay_check(d.H, d.md, cfg.eps, -(1.0 + Ceps)));
    reps.push_back(weighted_resolvent_check(d.H, d.md, rect, cfg.eps, 10, cfg.seed));
    reps.push_back(squared_resolvent_check(d.H, d.md, rect, cfg.eps));
    return finish_reports(std::move(reps), cfg, out, err);
  }
  if (cmd == "exhaust") {
    Vec f = random_state(n, cfg.seed);
    for (int i = 0; i < n; ++i) f(i) = std::abs(f(i));
    return finish_reports(
        {exhaustion_convergence(d.sd, prefix_windows(n), f, cfg.t_single)}, cfg, out, err);
  }
  throw std::invalid_argument("unknown check command '" + cmd + "'");
}

int cmd_report(const WeightedComplex& cx, const RunConfig& cfg, std::ostream& out,
               std::ostream& err) {
  const std::vector<double> ts = grid_or(cfg.t_grid_spec, default_time_grid());
  ComplexVerdict v = run_all_checks(cx, ts, cfg.seed);
  if (cfg.tolerance >= 0) {
    for (auto& rep : v.reports) {
      rep.tolerance = cfg.tolerance;
      rep.finalize();
    }
    v.all_pass = std::all_of(v.reports.begin(), v.reports.end(),
                             [](const BoundReport& r) { return r.pass; });
  }
  emit_text(cfg, out, verdict_to_json(v));
  maybe_write_series(cfg, v.reports);
  if (!v.all_pass) {
    for (const auto& rep : v.reports)
      if (!rep.pass) {
        err << "check '" << rep.check << "' failed: violation "
            << csv_num(rep.max_violation) << " > tolerance " << csv_num(rep.tolerance)
            << " at sample lhs=" << csv_num(rep.worst_lhs)
            << " rhs=" << csv_num(rep.worst_rhs) << "\n";
        break;
      }
    return 1;
  }
  return 0;
}

int cmd_generate(const std::vector<std::string>& parts, const RunConfig& cfg,
                 std::ostream& out) {
  if (parts.empty()) throw std::invalid_argument("generate: missing family name");
  std::string spec = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) spec += ":" + parts[i];
  if (parts[0] == "random-flag" && parts.size() == 3)
    spec += ":" + std::to_string(cfg.seed);
  if (parts[0] == "random-weighted" && parts.size() == 1)
    spec += ":" + std::to_string(cfg.seed);
  WeightedComplex cx = parse_generator_spec(spec);
  if (!cfg.augmented.empty() || cfg.m_empty_set) cx = override_modes(cx, cfg);
  emit_text(cfg, out, complex_to_json(cx));
  return 0;
}

}  // namespace

std::vector<double> parse_grid(const std::string& spec) {
  if (spec.empty()) throw std::invalid_argument("empty grid spec");
  if (spec.find(',') != std::string::npos) {
    std::vector<double> out;
    for (const auto& tok : split(spec, ','))
      out.push_back(to_num(tok, "grid"));
    if (out.empty()) throw std::invalid_argument("empty grid spec");
    return out;
  }
  const auto parts = split(spec, ':');
  if (parts.size() == 1) return {to_num(parts[0], "grid")};
  std::size_t base = 0;
  bool log = false;
  if (parts[0] == "lin" || parts[0] == "log") {
    log = parts[0] == "log";
    base = 1;
  }
  if (parts.size() - base != 3)
    throw std::invalid_argument("grid spec '" + spec +
                                "': expected [lin|log:]start:stop:count");
  const double a = to_num(parts[base], "grid");
  const double b = to_num(parts[base + 1], "grid");
  const int count = static_cast<int>(to_num(parts[base + 2], "grid"));
  if (count < 1) throw std::invalid_argument("grid spec '" + spec + "': count must be >= 1");
  return log ? logspace(a, b, count) : linspace(a, b, count);
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"weighted simplicial complexes: Hodge operators, curvature, heat flow"};
  app.require_subcommand(1);

  std::vector<std::string> gen_parts;
  std::map<std::string, CLI::App*> subs;
  const std::vector<std::pair<std::string, std::string>> command_set = {
      {"validate", "load a complex and verify its structural identities"},
      {"laplacian", "emit one operator block as JSON"},
      {"curvature", "emit the weighted curvature of every simplex of one degree"},
      {"spectrum", "full eigenvalue report of one operator block"},
      {"betti", "harmonic kernel dimensions against the rank oracle"},
      {"heat", "verify the semigroup solves the heat equation"},
      {"dgg-check", "Gaussian-type kernel bounds over the time grid"},
      {"energy-check", "weighted energy monotonicity along the flow"},
      {"contraction-check", "Lp contraction rates from the fitted form bound"},
      {"domination-check", "kernel domination by the free semigroup"},
      {"l1-check", "l1 extension and interpolation bounds under volume growth"},
      {"resolvent-check", "resolvent decay, weighted norms, squared-kernel decay"},
      {"growth", "metric, volume-growth fit and summability table"},
      {"exhaust", "nested-truncation convergence study"},
      {"generate", "emit a built-in complex family as JSON"},
      {"report", "aggregate every check into a single verdict"},
  };
  for (const auto& [name, desc] : command_set) {
    CLI::App* sub = app.add_subcommand(name, desc);
    subs[name] = sub;
    if (name == "generate") {
      sub->add_option("family", gen_parts,
                      "family and arguments, e.g. cycle 3 hollow | path 10 | "
                      "full-simplex 4 | torus-triangulation | random-flag 8 0.4 7 | "
                      "tree 2 3 | grid 4 5 | random-weighted 11");
    } else {
      sub->add_option("--complex", cfg.complex_path, "complex JSON file (default: stdin)");
      sub->add_option("--generate", cfg.generate_spec,
                      "generator spec family:arg:... instead of a file");
    }
    sub->add_option("--degree", cfg.degree, "degree block (default 0)");
    sub->add_option("--metric", cfg.metric, "combinatorial|scaled|simplex-rho|file");
    sub->add_option("--metric-file", cfg.metric_file, "distance CSV for --metric file");
    sub->add_option("--variant", cfg.variant, "up|down|hodge (default hodge)");
    sub->add_option("--t-grid", cfg.t_grid_spec, "[lin|log:]start:stop:count");
    sub->add_option("--p-grid", cfg.p_grid_spec, "[lin|log:]start:stop:count");
    sub->add_option("--beta-grid", cfg.beta_grid_spec, "[lin|log:]start:stop:count");
    sub->add_option("--z-grid", cfg.z_grid_spec, "relo:rehi:nre:imlo:imhi:nim");
    sub->add_option("--seed", cfg.seed, "master seed for all randomness");
    sub->add_option("--output", cfg.output, "write JSON here instead of stdout");
    sub->add_option("--series", cfg.series, "write the sweep series CSV here");
    sub->add_option("--augmented", cfg.augmented, "auto|on|off override")
        ->check(CLI::IsMember({"auto", "on", "off"}));
    sub->add_option("--m-empty", cfg.m_empty, "empty-simplex weight override")
        ->each([&cfg](const std::string&) { cfg.m_empty_set = true; });
    sub->add_option("--tolerance", cfg.tolerance, "override every check tolerance");
    sub->add_option("--eps", cfg.eps, "resolvent decay rate (default 0.5)");
    sub->add_option("--kappa", cfg.kappa, "energy-check Lipschitz budget (default 0.5)");
    sub->add_option("--t", cfg.t_single, "single evolution time (exhaust; default 1)");
  }

  try {
    std::vector<std::string> tokens(args);
    std::reverse(tokens.begin(), tokens.end());
    app.parse(tokens);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "generate") return cmd_generate(gen_parts, cfg, out);
    const WeightedComplex cx = load_input(cfg, in);
    if (cmd == "validate") return cmd_validate(cx, cfg, out, err);
    if (cmd == "laplacian") return cmd_laplacian(cx, cfg, out);
    if (cmd == "curvature") return cmd_curvature(cx, cfg, out, err);
    if (cmd == "spectrum") return cmd_spectrum(cx, cfg, out);
    if (cmd == "betti") return cmd_betti(cx, cfg, out, err);
    if (cmd == "growth") return cmd_growth(cx, cfg, out);
    if (cmd == "report") return cmd_report(cx, cfg, out, err);
    return run_one_check(cmd, cx, cfg, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    err << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hodgeheat
