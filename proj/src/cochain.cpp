#include "hodgeheat/cochain.hpp"

#include <cmath>
#include <stdexcept>

namespace hodgeheat {

Cochain::Cochain(const WeightedComplex& cx) : cx_(&cx) {
  blocks_.resize(cx.dim() + 2);
  for (int k = cx.min_degree(); k <= cx.dim(); ++k)
    blocks_[k + 1] = Vec::Zero(cx.block_size(k));
}

Vec& Cochain::block(int k) {
  if (!cx_->has_block(k)) throw std::out_of_range("no degree-" + std::to_string(k) + " block");
  return blocks_[k + 1];
}

const Vec& Cochain::block(int k) const {
  if (!cx_->has_block(k)) throw std::out_of_range("no degree-" + std::to_string(k) + " block");
  return blocks_[k + 1];
}

cplx Cochain::value(const Simplex& s) const {
  auto i = cx_->find(s);
  if (!i) throw std::invalid_argument("simplex '" + s.key() + "' not in complex");
  return blocks_[s.dim() + 1](*i);
}

void Cochain::set(const Simplex& s, cplx v) {
  auto i = cx_->find(s);
  if (!i) throw std::invalid_argument("simplex '" + s.key() + "' not in complex");
  blocks_[s.dim() + 1](*i) = v;
}

Cochain Cochain::indicator(const WeightedComplex& cx, const Simplex& s) {
  Cochain w(cx);
  w.set(s, 1.0);
  return w;
}

Cochain coboundary(const Cochain& w) {
  const WeightedComplex& cx = w.complex();
  Cochain out(cx);
  for (int k = cx.min_degree(); k < cx.dim(); ++k) {
    const Vec& src = w.block(k);
    Vec& dst = out.block(k + 1);
    for (int i = 0; i < cx.block_size(k); ++i) {
      if (src(i) == cplx{}) continue;
      for (const auto& cf : cx.cofaces(k, i))
        dst(cf.idx) += static_cast<double>(cf.sign) * src(i);
    }
  }
  return out;
}

Cochain boundary(const Cochain& w) {
  const WeightedComplex& cx = w.complex();
  Cochain out(cx);
  for (int k = cx.min_degree() + 1; k <= cx.dim(); ++k) {
    const Vec& src = w.block(k);
    const RVec& m_src = cx.weights(k);
    const RVec& m_dst = cx.weights(k - 1);
    Vec& dst = out.block(k - 1);
    for (int i = 0; i < cx.block_size(k); ++i) {
      if (src(i) == cplx{}) continue;
      for (const auto& f : cx.faces(k, i))
        dst(f.idx) += m_src(i) / m_dst(f.idx) * static_cast<double>(f.sign) * src(i);
    }
  }
  return out;
}

double lp_norm(const Cochain& w, double p) {
  if (p < 1.0) throw std::invalid_argument("lp_norm requires p >= 1");
  const WeightedComplex& cx = w.complex();
  if (std::isinf(p)) {
    double mx = 0;
    for (int k = cx.min_degree(); k <= cx.dim(); ++k)
      for (int i = 0; i < cx.block_size(k); ++i)
        mx = std::max(mx, std::abs(w.block(k)(i)));
    return mx;
  }
  double acc = 0;
  for (int k = cx.min_degree(); k <= cx.dim(); ++k) {
    const RVec& m = cx.weights(k);
    for (int i = 0; i < cx.block_size(k); ++i)
      acc += m(i) * std::pow(std::abs(w.block(k)(i)), p);
  }
  return std::pow(acc, 1.0 / p);
}

cplx inner_product(const Cochain& w, const Cochain& v) {
  const WeightedComplex& cx = w.complex();
  if (&cx != &v.complex())
    throw std::invalid_argument("inner_product: cochains live on different complexes");
  cplx acc{};
  for (int k = cx.min_degree(); k <= cx.dim(); ++k) {
    const RVec& m = cx.weights(k);
    for (int i = 0; i < cx.block_size(k); ++i)
      acc += m(i) * w.block(k)(i) * std::conj(v.block(k)(i));
  }
  return acc;
}

}  // namespace hodgeheat
