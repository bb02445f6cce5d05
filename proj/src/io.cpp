#include "hodgeheat/io.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace hodgeheat {

namespace {

using nlohmann::json;

json parse_checked(std::istream& in, const std::string& origin) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

std::string csv_num(double v) {
  if (v == kInf) return "inf";
  if (v == -kInf) return "-inf";
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace

WeightedComplex load_complex(std::istream& in, const std::string& origin) {
  const json doc = parse_checked(in, origin);
  if (!doc.is_object()) throw ParseError(origin + ": top level must be an object");

  BuildOptions opt;
  if (doc.contains("combinatorial")) {
    if (!doc["combinatorial"].is_boolean())
      throw ParseError(origin + ": 'combinatorial' must be a boolean");
    opt.combinatorial = doc["combinatorial"].get<bool>();
  }
  if (doc.contains("augmented")) {
    const auto& a = doc["augmented"];
    if (a.is_boolean())
      opt.augment = a.get<bool>() ? AugmentMode::on : AugmentMode::off;
    else if (a.is_string() && a.get<std::string>() == "auto")
      opt.augment = AugmentMode::automatic;
    else
      throw ParseError(origin + ": 'augmented' must be true, false or \"auto\"");
  }
  if (!doc.contains("top_simplices") || !doc["top_simplices"].is_array())
    throw ParseError(origin + ": missing or non-array 'top_simplices'");

  std::vector<std::vector<int>> tops;
  int idx = 0;
  for (const auto& entry : doc["top_simplices"]) {
    if (!entry.is_array())
      throw ParseError(origin + ": top_simplices[" + std::to_string(idx) + "] is not an array");
    std::vector<int> verts;
    for (const auto& v : entry) {
      if (!v.is_number_integer())
        throw ParseError(origin + ": top_simplices[" + std::to_string(idx) +
                         "] contains a non-integer vertex");
      verts.push_back(v.get<int>());
    }
    tops.push_back(std::move(verts));
    ++idx;
  }

  std::map<std::string, double> weights;
  if (doc.contains("weights")) {
    if (!doc["weights"].is_object())
      throw ParseError(origin + ": 'weights' must be an object");
    for (const auto& [key, val] : doc["weights"].items()) {
      if (!val.is_number())
        throw ParseError(origin + ": weight '" + key + "' is not a number");
      weights[key] = val.get<double>();
    }
  }
  if (!opt.combinatorial && weights.empty())
    throw ParseError(origin + ": weighted complex requires a 'weights' table");
  if (opt.combinatorial && doc.contains("weights"))
    throw ParseError(origin + ": combinatorial complex must not carry a 'weights' table");
  auto empty_weight = weights.find("");
  if (empty_weight != weights.end()) {
    opt.m_empty = empty_weight->second;
    weights.erase(empty_weight);
  }

  try {
    return build_complex(tops, weights, opt);
  } catch (const std::invalid_argument& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

WeightedComplex load_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  return load_complex(in, path);
}

std::string complex_to_json(const WeightedComplex& cx) {
  json doc;
  doc["combinatorial"] = cx.combinatorial();
  doc["augmented"] = cx.augmented();
  json tops = json::array();
  json weights = json::object();
  for (int k = cx.min_degree(); k <= cx.dim(); ++k) {
    for (int i = 0; i < cx.block_size(k); ++i) {
      const Simplex& s = cx.simplices(k)[i];
      if (!s.empty() && cx.cofaces(k, i).empty()) tops.push_back(s.verts);
      if (!cx.combinatorial()) weights[s.key()] = cx.weights(k)(i);
    }
  }
  doc["top_simplices"] = tops;
  if (!cx.combinatorial()) doc["weights"] = weights;
  return doc.dump(2);
}

std::string bound_report_to_json(const BoundReport& rep) {
  json doc;
  doc["check"] = rep.check;
  json params = json::object();
  for (const auto& [k, v] : rep.params) params[k] = v;
  doc["params"] = params;
  doc["samples"] = rep.samples;
  doc["max_violation"] = rep.max_violation;
  doc["tolerance"] = rep.tolerance;
  doc["pass"] = rep.pass;
  doc["notes"] = rep.notes;
  return doc.dump(2);
}

std::string spectral_report_to_json(const SpectralReport& rep) {
  json doc;
  doc["variant"] = to_string(rep.variant);
  doc["degree"] = rep.degree;
  std::vector<double> evs(rep.eigenvalues.data(),
                          rep.eigenvalues.data() + rep.eigenvalues.size());
  doc["eigenvalues"] = evs;
  doc["lambda2"] = rep.lambda2;
  doc["kernel_dim"] = rep.kernel_dim;
  doc["rank_tol_abs"] = rep.rank_tol_abs;
  doc["spectral_gap"] = rep.spectral_gap;
  return doc.dump(2);
}

std::string growth_fit_to_json(const GrowthFit& fit) {
  json doc;
  doc["nu"] = fit.nu;
  doc["C"] = fit.C;
  doc["c_cap"] = fit.c_cap;
  doc["jump_size"] = fit.jump_size;
  doc["diameter"] = fit.diameter;
  json table = json::array();
  for (const auto& [nu, C] : fit.table) table.push_back({{"nu", nu}, {"C", C}});
  doc["table"] = table;
  return doc.dump(2);
}

void write_series_csv(std::ostream& out, const BoundReport& rep) {
  bool labeled = false;
  for (const auto& row : rep.series)
    if (!row.label.empty()) labeled = true;
  out << (labeled ? "t,lhs,rhs,slack,label\n" : "t,lhs,rhs,slack\n");
  for (const auto& row : rep.series) {
    out << csv_num(row.t) << ',' << csv_num(row.lhs) << ',' << csv_num(row.rhs)
        << ',' << csv_num(row.slack);
    if (labeled) out << ',' << row.label;
    out << '\n';
  }
}

void write_metric_csv(std::ostream& out, const MetricData& md) {
  out << "key_a,key_b,distance\n";
  for (int a = 0; a < md.size(); ++a)
    for (int b = a; b < md.size(); ++b)
      out << '"' << md.keys[a] << "\",\"" << md.keys[b] << "\","
          << csv_num(md.dist(a, b)) << '\n';
}

void write_eigenvalues_csv(std::ostream& out, const SpectralReport& rep) {
  out << "index,eigenvalue\n";
  for (int i = 0; i < rep.eigenvalues.size(); ++i)
    out << i << ',' << csv_num(rep.eigenvalues(i)) << '\n';
}

}  // namespace hodgeheat
