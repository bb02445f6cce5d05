#include "hodgeheat/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hodgeheat {

namespace {

using Tops = std::vector<std::vector<int>>;

WeightedComplex combinatorial(const Tops& tops) {
  BuildOptions opt;
  opt.combinatorial = true;
  return build_complex(tops, {}, opt);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

}  // namespace

WeightedComplex generate_path(int n) {
  if (n < 1) throw std::invalid_argument("generate_path: need at least one vertex");
  Tops tops;
  if (n == 1) tops.push_back({0});
  for (int i = 0; i + 1 < n; ++i) tops.push_back({i, i + 1});
  return combinatorial(tops);
}

WeightedComplex generate_cycle(int n, bool filled) {
  if (n < 3) throw std::invalid_argument("generate_cycle: need at least three vertices");
  Tops tops;
  if (filled) {
    for (int i = 1; i + 1 < n; ++i) tops.push_back({0, i, i + 1});
  } else {
    for (int i = 0; i < n; ++i) tops.push_back({i, (i + 1) % n});
  }
  return combinatorial(tops);
}

WeightedComplex generate_full_simplex(int n) {
  if (n < 1) throw std::invalid_argument("generate_full_simplex: need at least one vertex");
  std::vector<int> verts(n);
  for (int i = 0; i < n; ++i) verts[i] = i;
  return combinatorial({verts});
}

WeightedComplex generate_torus() {
  // Vertices 0..6; faces {i, i+1, i+3} and {i, i+2, i+3} mod 7 give the
  // classical 7-vertex triangulation (every pair is an edge).
  Tops tops;
  for (int i = 0; i < 7; ++i) {
    tops.push_back({i, (i + 1) % 7, (i + 3) % 7});
    tops.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return combinatorial(tops);
}

WeightedComplex generate_random_flag(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("generate_random_flag: need at least one vertex");
  if (p < 0 || p > 1) throw std::invalid_argument("generate_random_flag: p must be in [0,1]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < p) adj[i][j] = adj[j][i] = true;

  Tops tops;
  for (int i = 0; i < n; ++i) tops.push_back({i});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!adj[i][j]) continue;
      tops.push_back({i, j});
      for (int k = j + 1; k < n; ++k) {
        if (!(adj[i][k] && adj[j][k])) continue;
        tops.push_back({i, j, k});
        for (int l = k + 1; l < n; ++l)
          if (adj[i][l] && adj[j][l] && adj[k][l])
            tops.push_back({i, j, k, l});  // dimension cap 3
      }
    }
  return combinatorial(tops);
}

WeightedComplex generate_tree(int branching, int depth) {
  if (branching < 1 || depth < 0)
    throw std::invalid_argument("generate_tree: need branching >= 1 and depth >= 0");
  Tops tops;
  std::vector<int> frontier = {0};
  int next = 1;
  if (depth == 0) tops.push_back({0});
  for (int level = 0; level < depth; ++level) {
    std::vector<int> fresh;
    for (int parent : frontier)
      for (int b = 0; b < branching; ++b) {
        tops.push_back({parent, next});
        fresh.push_back(next++);
      }
    frontier = fresh;
  }
  return combinatorial(tops);
}

WeightedComplex generate_grid(int nx, int ny) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("generate_grid: need positive extents");
  auto id = [&](int i, int j) { return i * ny + j; };
  Tops tops;
  if (nx == 1 && ny == 1) tops.push_back({0});
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      if (i + 1 < nx) tops.push_back({id(i, j), id(i + 1, j)});
      if (j + 1 < ny) tops.push_back({id(i, j), id(i, j + 1)});
    }
  return combinatorial(tops);
}

WeightedComplex random_weighted_complex(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> nverts(4, 8);
  std::uniform_real_distribution<double> pdist(0.30, 0.60);
  std::uniform_real_distribution<double> wdist(0.5, 2.0);

  int n = nverts(rng);
  double p = pdist(rng);
  WeightedComplex shape = generate_random_flag(n, p, rng());
  for (int attempt = 0; attempt < 12 && shape.total_simplices() > 60; ++attempt) {
    p *= 0.75;
    if (attempt % 3 == 2 && n > 4) --n;
    shape = generate_random_flag(n, p, rng());
  }

  Tops tops;
  std::map<std::string, double> weights;
  for (int k = 0; k <= shape.dim(); ++k)
    for (const Simplex& s : shape.simplices(k)) {
      tops.push_back(s.verts);
      weights[s.key()] = wdist(rng);
    }
  BuildOptions opt;
  opt.combinatorial = false;
  return build_complex(tops, weights, opt);
}

WeightedComplex parse_generator_spec(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.empty()) throw std::invalid_argument("generator spec is empty");
  const std::string& family = parts[0];
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (parts.size() - 1 < lo || parts.size() - 1 > hi)
      throw std::invalid_argument("generator '" + family + "': wrong number of arguments");
  };
  auto num = [&](std::size_t i) { return std::stod(parts.at(i)); };
  auto inum = [&](std::size_t i) { return std::stoi(parts.at(i)); };
  try {
    if (family == "path") {
      arity(1, 1);
      return generate_path(inum(1));
    }
    if (family == "cycle") {
      arity(1, 2);
      bool filled = false;
      if (parts.size() == 3) {
        if (parts[2] == "filled")
          filled = true;
        else if (parts[2] == "hollow")
          filled = false;
        else
          throw std::invalid_argument("cycle: expected 'filled' or 'hollow'");
      }
      return generate_cycle(inum(1), filled);
    }
    if (family == "full-simplex") {
      arity(1, 1);
      return generate_full_simplex(inum(1));
    }
    if (family == "torus-triangulation") {
      arity(0, 0);
      return generate_torus();
    }
    if (family == "random-flag") {
      arity(2, 3);
      const std::uint64_t seed = parts.size() == 4 ? std::stoull(parts[3]) : 1;
      return generate_random_flag(inum(1), num(2), seed);
    }
    if (family == "tree") {
      arity(2, 2);
      return generate_tree(inum(1), inum(2));
    }
    if (family == "grid") {
      arity(2, 2);
      return generate_grid(inum(1), inum(2));
    }
    if (family == "random-weighted") {
      arity(1, 1);
      return random_weighted_complex(std::stoull(parts[1]));
    }
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    throw std::invalid_argument("generator '" + spec + "': " + e.what());
  }
  throw std::invalid_argument("unknown generator family '" + family + "'");
}

}  // namespace hodgeheat
