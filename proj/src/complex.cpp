#include "hodgeheat/complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hodgeheat {

int WeightedComplex::block_size(int k) const {
  if (!has_block(k)) return 0;
  return static_cast<int>(simplices_[slot(k)].size());
}

const std::vector<Simplex>& WeightedComplex::simplices(int k) const {
  if (!has_block(k)) throw std::out_of_range("no simplices of degree " + std::to_string(k));
  return simplices_[slot(k)];
}

std::vector<std::string> WeightedComplex::keys(int k) const {
  std::vector<std::string> out;
  for (const auto& s : simplices(k)) out.push_back(s.key());
  return out;
}

std::optional<int> WeightedComplex::find(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const RVec& WeightedComplex::weights(int k) const {
  if (!has_block(k)) throw std::out_of_range("no weights of degree " + std::to_string(k));
  return weights_[slot(k)];
}

double WeightedComplex::weight(const Simplex& s) const {
  auto i = find(s);
  if (!i) throw std::invalid_argument("simplex '" + s.key() + "' not in complex");
  return weights_[slot(s.dim())](*i);
}

double WeightedComplex::gamma(int k, int i) const { return gamma_[slot(k)](i); }

double WeightedComplex::gamma(const Simplex& s) const {
  auto i = find(s);
  if (!i) throw std::invalid_argument("simplex '" + s.key() + "' not in complex");
  return gamma(s.dim(), *i);
}

const std::vector<WeightedComplex::Incidence>& WeightedComplex::faces(int k, int i) const {
  return faces_[slot(k)][i];
}

const std::vector<WeightedComplex::Incidence>& WeightedComplex::cofaces(int k, int i) const {
  return cofaces_[slot(k)][i];
}

int WeightedComplex::total_simplices() const {
  int n = 0;
  for (const auto& blk : simplices_) n += static_cast<int>(blk.size());
  return n;
}

WeightedComplex build_complex(const std::vector<std::vector<int>>& top_simplices,
                              const std::map<std::string, double>& weights,
                              const BuildOptions& opt) {
  if (opt.combinatorial && !weights.empty())
    throw std::invalid_argument("weights given for a combinatorial complex");
  if (top_simplices.empty())
    throw std::invalid_argument("empty complex: no top simplices");

  // Face closure.
  std::set<Simplex> closure;
  for (const auto& raw : top_simplices) {
    Simplex top = Simplex::of(raw);
    if (top.empty()) throw std::invalid_argument("empty top simplex");
    std::vector<Simplex> stack = {top};
    while (!stack.empty()) {
      Simplex s = std::move(stack.back());
      stack.pop_back();
      if (!closure.insert(s).second || s.dim() == 0) continue;
      for (int pos = 0; pos < s.nverts(); ++pos) stack.push_back(s.face_dropping(pos));
    }
  }

  WeightedComplex cx;
  cx.combinatorial_ = opt.combinatorial;
  for (const auto& s : closure) cx.dim_ = std::max(cx.dim_, s.dim());

  bool augment = opt.augment == AugmentMode::on;
  if (opt.augment == AugmentMode::automatic) {
    // Include the empty simplex when the total vertex weight is finite; a
    // finite complex always qualifies.
    augment = true;
  }
  cx.augmented_ = augment;

  const int nslots = cx.dim_ + 2;  // slot 0 holds degree -1
  cx.simplices_.resize(nslots);
  cx.weights_.resize(nslots);
  cx.gamma_.resize(nslots);
  cx.faces_.resize(nslots);
  cx.cofaces_.resize(nslots);

  if (augment) cx.simplices_[0].push_back(Simplex{});
  for (const auto& s : closure) cx.simplices_[s.dim() + 1].push_back(s);
  // std::set iteration is already lexicographic; blocks stay sorted.

  for (int slot = 0; slot < nslots; ++slot) {
    for (size_t i = 0; i < cx.simplices_[slot].size(); ++i)
      cx.index_[cx.simplices_[slot][i]] = static_cast<int>(i);
  }

  // Weights.
  size_t used = 0;
  for (int slot = 0; slot < nslots; ++slot) {
    const auto& blk = cx.simplices_[slot];
    RVec m(blk.size());
    for (size_t i = 0; i < blk.size(); ++i) {
      if (blk[i].empty()) {
        if (opt.m_empty <= 0) throw std::invalid_argument("nonpositive weight for the empty simplex");
        m(i) = opt.m_empty;
        continue;
      }
      if (opt.combinatorial) {
        m(i) = 1.0;
      } else {
        auto it = weights.find(blk[i].key());
        if (it == weights.end())
          throw std::invalid_argument("missing weight for closure simplex '" + blk[i].key() + "'");
        if (!(it->second > 0))
          throw std::invalid_argument("nonpositive weight for simplex '" + blk[i].key() + "'");
        m(i) = it->second;
        ++used;
      }
    }
    cx.weights_[slot] = std::move(m);
  }
  if (!opt.combinatorial && used != weights.size()) {
    for (const auto& [key, w] : weights) {
      (void)w;
      if (!cx.contains(Simplex::parse_key(key)))
        throw std::invalid_argument("weight given for simplex '" + key + "' not in the closure");
    }
  }

  // Incidence (faces with orientation signs) and gamma.
  for (int slot = 0; slot < nslots; ++slot) {
    const auto& blk = cx.simplices_[slot];
    cx.faces_[slot].resize(blk.size());
    cx.cofaces_[slot].resize(blk.size());
  }
  for (int slot = 1; slot < nslots; ++slot) {
    const auto& blk = cx.simplices_[slot];
    for (size_t i = 0; i < blk.size(); ++i) {
      const Simplex& s = blk[i];
      if (s.dim() == 0 && !augment) continue;
      for (int pos = 0; pos < s.nverts(); ++pos) {
        Simplex f = s.face_dropping(pos);
        auto fi = cx.find(f);
        if (!fi) throw std::logic_error("closure missing face '" + f.key() + "'");
        int sign = (pos % 2 == 0) ? 1 : -1;
        cx.faces_[slot][i].push_back({*fi, sign});
        cx.cofaces_[slot - 1][*fi].push_back({static_cast<int>(i), sign});
      }
    }
  }
  for (int slot = 0; slot < nslots; ++slot) {
    const auto& blk = cx.simplices_[slot];
    RVec g = RVec::Zero(blk.size());
    for (size_t i = 0; i < blk.size(); ++i)
      for (const auto& cf : cx.cofaces_[slot][i])
        g(i) += cx.weights_[slot + 1](cf.idx);
    cx.gamma_[slot] = std::move(g);
  }
  return cx;
}

int orientation_sign(const WeightedComplex& cx, const Simplex& tau, const Simplex& sigma) {
  if (!cx.contains(tau)) throw std::invalid_argument("simplex '" + tau.key() + "' not in complex");
  if (!cx.contains(sigma)) throw std::invalid_argument("simplex '" + sigma.key() + "' not in complex");
  if (sigma.dim() != tau.dim() + 1) return 0;
  int missing = -1;
  size_t ti = 0;
  for (int pos = 0; pos < sigma.nverts(); ++pos) {
    if (ti < tau.verts.size() && tau.verts[ti] == sigma.verts[pos]) {
      ++ti;
    } else if (missing < 0) {
      missing = pos;
    } else {
      return 0;  // two vertices of sigma missing from tau
    }
  }
  if (ti != tau.verts.size()) return 0;  // tau not contained in sigma
  return (missing % 2 == 0) ? 1 : -1;
}

}  // namespace hodgeheat
