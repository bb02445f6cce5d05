#include "hodgeheat/metric.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>

namespace hodgeheat {

RMat shortest_paths(int n, const std::vector<std::vector<std::pair<int, double>>>& adj) {
  RMat d = RMat::Constant(n, n, kInf);
  using Item = std::pair<double, int>;
  for (int s = 0; s < n; ++s) {
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    d(s, s) = 0;
    pq.emplace(0.0, s);
    while (!pq.empty()) {
      auto [dist, u] = pq.top();
      pq.pop();
      if (dist > d(s, u)) continue;
      for (const auto& [v, w] : adj[u]) {
        if (d(s, u) + w < d(s, v)) {
          d(s, v) = d(s, u) + w;
          pq.emplace(d(s, v), v);
        }
      }
    }
  }
  return ((d + d.transpose()) / 2.0).eval();  // symmetrize exact ties
}

namespace {
std::vector<std::vector<std::pair<int, double>>> vertex_adjacency(const WeightedComplex& cx,
                                                                 double step) {
  const int n = cx.block_size(0);
  std::vector<std::vector<std::pair<int, double>>> adj(n);
  if (cx.has_block(1)) {
    for (int e = 0; e < cx.block_size(1); ++e) {
      const auto& fs = cx.faces(1, e);
      // an edge has exactly two vertex faces
      adj[fs[0].idx].emplace_back(fs[1].idx, step);
      adj[fs[1].idx].emplace_back(fs[0].idx, step);
    }
  }
  return adj;
}

int max_vertex_degree(const WeightedComplex& cx) {
  int dmax = 0;
  for (int v = 0; v < cx.block_size(0); ++v)
    dmax = std::max(dmax, static_cast<int>(cx.cofaces(0, v).size()));
  return dmax;
}
}  // namespace

MetricData combinatorial_metric(const WeightedComplex& cx) {
  MetricData md;
  md.degree = 0;
  md.keys = cx.keys(0);
  md.dist = shortest_paths(cx.block_size(0), vertex_adjacency(cx, 1.0));
  md.note = "combinatorial hop metric";
  return md;
}

MetricData scaled_intrinsic_metric(const WeightedComplex& cx) {
  const int dmax = max_vertex_degree(cx);
  const double scale = dmax > 0 ? 1.0 / std::sqrt(static_cast<double>(dmax)) : 1.0;
  MetricData md;
  md.degree = 0;
  md.keys = cx.keys(0);
  md.dist = shortest_paths(cx.block_size(0), vertex_adjacency(cx, scale));
  md.note = dmax > 0
                ? "hop metric scaled by 1/sqrt(max degree " + std::to_string(dmax) + ")"
                : "hop metric (edgeless complex, scale 1)";
  return md;
}

MetricData simplex_metric(const WeightedComplex& cx, int k) {
  if (!cx.has_block(k))
    throw std::invalid_argument("simplex_metric: no degree-" + std::to_string(k) + " block");
  if (k < 1)
    throw std::invalid_argument(
        "simplex_metric: degree must be >= 1 (vertex blocks use the scaled hop metric)");
  const int n = cx.block_size(k);
  const auto& simps = cx.simplices(k);

  std::vector<int> vdeg(cx.block_size(0));
  for (int v = 0; v < cx.block_size(0); ++v)
    vdeg[v] = static_cast<int>(cx.cofaces(0, v).size());
  auto vertex_index = [&](int vid) {
    auto i = cx.find(Simplex::of({vid}));
    return *i;
  };

  const double pref = 1.0 / std::sqrt(static_cast<double>(cx.dim() + 1));
  std::vector<std::vector<std::pair<int, double>>> adj(n);
  // group degree-k simplices by shared codimension-1 face
  for (int rho = 0; rho < cx.block_size(k - 1); ++rho) {
    const auto& ups = cx.cofaces(k - 1, rho);
    for (size_t a = 0; a < ups.size(); ++a)
      for (size_t bb = a + 1; bb < ups.size(); ++bb) {
        int i = ups[a].idx, j = ups[bb].idx;
        // step cost: max over shared vertices of deg^{-1/2} = min shared degree
        int dmin = INT32_MAX;
        for (int v : simps[i].verts)
          if (simps[j].contains_vertex(v)) dmin = std::min(dmin, vdeg[vertex_index(v)]);
        double w = pref / std::sqrt(static_cast<double>(dmin));
        adj[i].emplace_back(j, w);
        adj[j].emplace_back(i, w);
      }
  }
  MetricData md;
  md.degree = k;
  md.keys = cx.keys(k);
  md.dist = shortest_paths(n, adj);
  md.note = "chain metric, adjacency = shared codimension-1 face";
  return md;
}

IntrinsicReport verify_intrinsic(const SchrodingerData& sd, const MetricData& md) {
  const int n = sd.size();
  if (md.size() != n)
    throw std::invalid_argument("verify_intrinsic: metric/site size mismatch");
  IntrinsicReport rep;
  for (int x = 0; x < n; ++x) {
    double acc = 0;
    for (int y = 0; y < n; ++y) {
      if (sd.b(x, y) <= 0 || y == x) continue;
      if (std::isinf(md.dist(x, y))) {
        rep.max_lhs = kInf;
        rep.pass = false;
        rep.suggested_rescale = kInf;
        return rep;
      }
      acc += sd.b(x, y) * md.dist(x, y) * md.dist(x, y);
    }
    rep.max_lhs = std::max(rep.max_lhs, acc / sd.m(x));
  }
  rep.pass = rep.max_lhs <= 1.0 + tol::bound;
  rep.suggested_rescale = rep.pass ? 1.0 : std::sqrt(rep.max_lhs);
  return rep;
}

MetricData certify_intrinsic(const SchrodingerData& sd, MetricData md) {
  IntrinsicReport rep = verify_intrinsic(sd, md);
  if (std::isinf(rep.suggested_rescale))
    throw std::invalid_argument(
        "certify_intrinsic: coupled sites at infinite distance; no rescale works");
  if (!rep.pass) {
    md.dist /= rep.suggested_rescale;
    md.rescale = rep.suggested_rescale;
    md.note += "; rescaled by 1/" + std::to_string(rep.suggested_rescale);
  }
  double s = 0;
  for (int x = 0; x < sd.size(); ++x)
    for (int y = 0; y < sd.size(); ++y)
      if (x != y && sd.b(x, y) > 0) s = std::max(s, md.dist(x, y));
  md.jump_size = s > 0 ? s : 1.0;  // convention: s = 1 with no coupled pairs
  md.intrinsic_certified = true;
  return md;
}

std::vector<int> ball(const MetricData& md, int x, double r) {
  if (x < 0 || x >= md.size()) throw std::invalid_argument("ball: site out of range");
  std::vector<int> out;
  for (int y = 0; y < md.size(); ++y)
    if (md.dist(x, y) <= r) out.push_back(y);
  return out;
}

double ball_volume(const MetricData& md, const RVec& m, int x, double r) {
  double acc = 0;
  for (int y : ball(md, x, r)) acc += m(y);
  return acc;
}

}  // namespace hodgeheat
