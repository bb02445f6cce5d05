#pragma once

#include <cstdint>
#include <string>

#include "hodgeheat/complex.hpp"

namespace hodgeheat {

/// Path on n vertices (n-1 edges), unit weights.
WeightedComplex generate_path(int n);
/// n-cycle; filled adds the fan triangles {0, i, i+1} (n = 3 gives the full
/// triangle), hollow keeps edges only.
WeightedComplex generate_cycle(int n, bool filled);
/// The (n-1)-simplex on n vertices with its full closure.
WeightedComplex generate_full_simplex(int n);
/// Minimal 7-vertex triangulated torus (21 edges, 14 triangles).
WeightedComplex generate_torus();
/// Flag complex of a seeded Erdos-Renyi graph, cliques kept up to dimension 3.
WeightedComplex generate_random_flag(int n, double p, std::uint64_t seed);
/// Rooted tree with the given branching factor and depth, unit weights.
WeightedComplex generate_tree(int branching, int depth);
/// nx x ny grid graph (vertices indexed row-major, axis-aligned edges).
WeightedComplex generate_grid(int nx, int ny);

/// Seeded random weighted complex: random flag topology capped at 60 closure
/// simplices, weights uniform in [0.5, 2].
WeightedComplex random_weighted_complex(std::uint64_t seed);

/// Parse "family:arg:arg" (e.g. "path:10", "cycle:3:hollow",
/// "random-flag:8:0.4:7", "tree:2:3", "grid:4:5", "torus-triangulation").
WeightedComplex parse_generator_spec(const std::string& spec);

}  // namespace hodgeheat
