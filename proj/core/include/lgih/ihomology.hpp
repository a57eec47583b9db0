#ifndef LGIH_IHOMOLOGY_HPP
#define LGIH_IHOMOLOGY_HPP

#include <cstddef>
#include <vector>

#include "lgih/complex.hpp"
#include "lgih/linalg.hpp"

namespace lgih {

/// Per-degree dimensions; ranks[i] = cycles[i] - boundaries[i].
struct BettiReport {
  std::vector<std::size_t> ranks;
  std::vector<std::size_t> cycles;
  std::vector<std::size_t> boundaries;
  std::vector<std::size_t> allowable;  // number of allowable i-simplices
};

/// Boundary of every k-simplex as a column over the (k-1)-simplices, with
/// d[v0..vk] = sum (-1)^j [v0..^vj..vk] in sorted vertex order.
std::vector<SparseColumn> boundary_columns(const StratifiedComplex& k, int degree);

/// Simplicial intersection homology ranks for the complex's perversity.
///
/// IC_i = { xi in A_i : d xi in A_{i-1} } where A_i spans the allowable
/// i-simplices. With N the non-allowable rows of d restricted to A_{i+1},
/// dim d(IC_{i+1}) = rank(d|A_{i+1}) - rank(N).
BettiReport ih_ranks(const StratifiedComplex& k);

/// Ordinary simplicial homology ranks (every simplex allowable).
BettiReport ordinary_ranks(const StratifiedComplex& k);

}  // namespace lgih

#endif  // LGIH_IHOMOLOGY_HPP
