#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hodgeheat/simplex.hpp"
#include "hodgeheat/types.hpp"

namespace hodgeheat {

enum class AugmentMode { off, on, automatic };

struct BuildOptions {
  bool combinatorial = true;    ///< all weights identically 1
  AugmentMode augment = AugmentMode::off;
  double m_empty = 1.0;         ///< weight of the empty simplex when augmented
};

/// A finite weighted simplicial complex (face-closed, strictly positive
/// weights).  Simplices are grouped by dimension and stored in lexicographic
/// vertex order; the empty simplex occupies degree -1 in augmented mode.
/// Immutable after construction.
class WeightedComplex {
 public:
  struct Incidence {
    int idx;   ///< index in the adjacent degree block
    int sign;  ///< orientation sign theta between the two simplices
  };

  int dim() const { return dim_; }
  bool augmented() const { return augmented_; }
  bool combinatorial() const { return combinatorial_; }
  int min_degree() const { return augmented_ ? -1 : 0; }

  bool has_block(int k) const { return k >= min_degree() && k <= dim_; }
  int block_size(int k) const;
  const std::vector<Simplex>& simplices(int k) const;
  std::vector<std::string> keys(int k) const;

  /// Index of a simplex inside its degree block, or nullopt.
  std::optional<int> find(const Simplex& s) const;
  bool contains(const Simplex& s) const { return find(s).has_value(); }

  const RVec& weights(int k) const;           ///< m per simplex of degree k
  double weight(const Simplex& s) const;
  double gamma(int k, int i) const;           ///< sum of coface weights
  double gamma(const Simplex& s) const;

  /// Codimension-1 faces of simplex i of degree k (entries live in degree k-1).
  const std::vector<Incidence>& faces(int k, int i) const;
  /// Codimension-1 cofaces (entries live in degree k+1).
  const std::vector<Incidence>& cofaces(int k, int i) const;

  int total_simplices() const;

  friend WeightedComplex build_complex(const std::vector<std::vector<int>>&,
                                       const std::map<std::string, double>&,
                                       const BuildOptions&);

 private:
  int slot(int k) const { return k + 1; }  // degree -1 stored at slot 0

  int dim_ = -1;
  bool augmented_ = false;
  bool combinatorial_ = true;
  std::vector<std::vector<Simplex>> simplices_;       // by slot
  std::vector<RVec> weights_;                         // by slot
  std::vector<RVec> gamma_;                           // by slot
  std::vector<std::vector<std::vector<Incidence>>> faces_;    // by slot, index
  std::vector<std::vector<std::vector<Incidence>>> cofaces_;  // by slot, index
  std::map<Simplex, int> index_;                      // simplex -> block index
};

/// Builds the face closure of `top_simplices`, attaches weights and computes
/// incidence data.  `weights` must be empty when opt.combinatorial is true,
/// and must otherwise cover exactly the closure (keyed by Simplex::key).
/// AugmentMode::automatic includes the empty simplex whenever the total vertex
/// weight is finite, which for a finite complex is always.
WeightedComplex build_complex(const std::vector<std::vector<int>>& top_simplices,
                              const std::map<std::string, double>& weights = {},
                              const BuildOptions& opt = {});

/// Orientation sign theta(tau, sigma): (-1)^{position of the vertex of sigma
/// missing from tau}; 0 when tau is not a codimension-1 face of sigma.
/// Throws if either simplex is absent from the complex.
int orientation_sign(const WeightedComplex& cx, const Simplex& tau,
                     const Simplex& sigma);

}  // namespace hodgeheat
