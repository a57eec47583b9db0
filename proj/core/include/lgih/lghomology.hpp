#ifndef LGIH_LGHOMOLOGY_HPP
#define LGIH_LGHOMOLOGY_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "lgih/complex.hpp"
#include "lgih/stratsimplex.hpp"

namespace lgih {

/*
 * Affine map of sigma_0 x C(sigma_i): the cone point goes to `apex`, base
 * vertex p goes to base[p]. Canonical cells have a strictly increasing base;
 * other orderings are the canonical cell times the permutation sign.
 */
struct ConeCell {
  VertexId apex;
  std::vector<VertexId> base;

  int base_dim() const noexcept { return static_cast<int>(base.size()) - 1; }
  friend auto operator<=>(const ConeCell&, const ConeCell&) = default;
};

/*
 * Multi-affine map of sigma_1 x C(sigma_i), given by its two end maps. Column
 * p is the pair (start.base[p], end.base[p]); canonical cells have strictly
 * increasing columns. The apex path runs from start.apex to end.apex.
 */
struct PrismCell {
  ConeCell start;
  ConeCell end;

  int base_dim() const noexcept { return start.base_dim(); }
  friend auto operator<=>(const PrismCell&, const PrismCell&) = default;
};

using Cell = std::variant<ConeCell, PrismCell>;

enum class CellKind { cone, prism };

bool is_degenerate(const ConeCell& c);
bool is_degenerate(const PrismCell& c);

/// Canonical representative and sign, or nullopt for a degenerate cell.
std::optional<std::pair<ConeCell, int>> canonical(ConeCell c);
std::optional<std::pair<PrismCell, int>> canonical(PrismCell c);

StratifiedShape shape_of(const Cell& c);

/// Formal integer combination of canonical cells; zero coefficients removed.
struct CellChain {
  std::map<ConeCell, long> cones;
  std::map<PrismCell, long> prisms;

  void add(const ConeCell& c, long coeff);
  void add(const PrismCell& c, long coeff);
  bool empty() const noexcept { return cones.empty() && prisms.empty(); }
  friend bool operator==(const CellChain&, const CellChain&) = default;
};

/*
 * Boundary in the lambda directions only; there is no facet in the coning
 * direction.
 *
 *   d(a; b_0..b_i)  = sum_l (-1)^l (a; b_0..^b_l..b_i)
 *   d(g_0, g_1)     = (g_0) - (g_1) - sum_l (-1)^l (g_0, g_1 without column l)
 *
 * These are the stratified-simplex facet signs of shapes (i,0) and (i,1)
 * times -1, the orientation under which a cone cell's boundary matches the
 * boundary of its base simplex. Degenerate summands are dropped.
 */
CellChain cell_boundary(const ConeCell& c);
CellChain cell_boundary(const PrismCell& c);
CellChain cell_boundary(const Cell& c);
CellChain boundary(const CellChain& chain);

/// Non-degenerate canonical cells whose images span exactly one simplex of K,
/// sorted.
std::vector<ConeCell> enumerate_cone_cells(const StratifiedComplex& k, int base_dim);
std::vector<PrismCell> enumerate_prism_cells(const StratifiedComplex& k, int base_dim);
std::vector<Cell> enumerate_cells(const StratifiedComplex& k, int base_dim, CellKind kind);

/// Required lower bounds (w_1, ..., w_r) on apex-locus strata, in real
/// dimension units.
struct WSequence {
  std::vector<int> values;
};

struct AllowedReport {
  bool perversity_ok;
  int w_of_cell;  // stratum of the relative interior of the apex image
  bool w_ok;

  bool allowed() const noexcept { return perversity_ok && w_ok; }
};

/// Largest preimage dimension, inside the parameter domain of a t-slice, of
/// the filtration piece X_{m - codim}; -1 when empty. Taken over t in (0,1]
/// by support-pattern enumeration.
int slice_preimage_dim(const StratifiedComplex& k, const Cell& c, int codim);

AllowedReport cell_allowed(const StratifiedComplex& k, const Cell& c, const WSequence& w);

struct LgReport {
  std::size_t rank;
  std::size_t cycles;
  std::size_t boundaries;
  std::size_t cone_cells;         // allowed (i,0) cells
  std::size_t higher_cone_cells;  // allowed (i+1,0) cells
  std::size_t prism_cells;        // allowed (i,1) cells
};

/*
 * Rank of H_{(i,0);(w)}.
 *
 * Z is the kernel of d on the span of allowed (i,0) cells. B collects
 * psi = (i,0)-part of d xi for xi over allowed (i+1,0) and (i,1) cells, subject
 * to the (i-1,1)-part of d xi vanishing and psi using allowed cells only.
 * Throws std::logic_error if B is not contained in Z.
 */
LgReport lg_ranks(const StratifiedComplex& k, int base_dim, const WSequence& w);

}  // namespace lgih

#endif  // LGIH_LGHOMOLOGY_HPP
