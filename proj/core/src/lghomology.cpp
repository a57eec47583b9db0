#include "lgih/lghomology.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "lgih/error.hpp"
#include "lgih/linalg.hpp"

namespace lgih {

namespace {

// Sorts `keys` and returns the sign of the sorting permutation.
template <class Key>
int sort_with_sign(std::vector<Key>& keys) {
  int sign = 1;
  for (std::size_t a = 0; a < keys.size(); ++a)
    for (std::size_t b = a + 1; b < keys.size(); ++b)
      if (keys[b] < keys[a]) sign = -sign;
  std::sort(keys.begin(), keys.end());
  return sign;
}

using Column = std::pair<VertexId, VertexId>;

std::vector<Column> columns_of(const PrismCell& c) {
  std::vector<Column> cols;
  for (std::size_t p = 0; p < c.start.base.size(); ++p) cols.emplace_back(c.start.base[p], c.end.base[p]);
  return cols;
}

PrismCell from_columns(VertexId a0, VertexId a1, const std::vector<Column>& cols) {
  PrismCell c{{a0, {}}, {a1, {}}};
  for (auto [x, y] : cols) {
    c.start.base.push_back(x);
    c.end.base.push_back(y);
  }
  return c;
}

}  // namespace

bool is_degenerate(const ConeCell& c) {
  std::set<VertexId> seen(c.base.begin(), c.base.end());
  return seen.size() != c.base.size();
}

bool is_degenerate(const PrismCell& c) {
  if (c.start.base.size() != c.end.base.size())
    throw ValidationError("PrismCell: end maps have different base lengths");
  if (c.start == c.end) return true;
  auto cols = columns_of(c);
  std::set<Column> seen(cols.begin(), cols.end());
  return seen.size() != cols.size();
}

std::optional<std::pair<ConeCell, int>> canonical(ConeCell c) {
  if (is_degenerate(c)) return std::nullopt;
  int sign = sort_with_sign(c.base);
  return std::pair{std::move(c), sign};
}

std::optional<std::pair<PrismCell, int>> canonical(PrismCell c) {
  if (is_degenerate(c)) return std::nullopt;
  auto cols = columns_of(c);
  int sign = sort_with_sign(cols);
  return std::pair{from_columns(c.start.apex, c.end.apex, cols), sign};
}

StratifiedShape shape_of(const Cell& c) {
  return std::visit(
      [](const auto& cell) {
        using T = std::decay_t<decltype(cell)>;
        int order_dim = std::is_same_v<T, PrismCell> ? 1 : 0;
        return StratifiedShape({cell.base_dim(), order_dim});
      },
      c);
}

void CellChain::add(const ConeCell& c, long coeff) {
  if (coeff == 0) return;
  auto can = canonical(c);
  if (!can) return;
  auto& slot = cones[can->first];
  slot += coeff * can->second;
  if (slot == 0) cones.erase(can->first);
}

void CellChain::add(const PrismCell& c, long coeff) {
  if (coeff == 0) return;
  auto can = canonical(c);
  if (!can) return;
  auto& slot = prisms[can->first];
  slot += coeff * can->second;
  if (slot == 0) prisms.erase(can->first);
}

CellChain cell_boundary(const ConeCell& c) {
  CellChain out;
  if (is_degenerate(c) || c.base.size() < 2) return out;
  for (std::size_t l = 0; l < c.base.size(); ++l) {
    ConeCell face = c;
    face.base.erase(face.base.begin() + static_cast<std::ptrdiff_t>(l));
    out.add(face, (l % 2 == 0) ? 1 : -1);
  }
  return out;
}

CellChain cell_boundary(const PrismCell& c) {
  CellChain out;
  if (is_degenerate(c)) return out;
  out.add(c.start, 1);
  out.add(c.end, -1);
  if (c.start.base.size() < 2) return out;
  for (std::size_t l = 0; l < c.start.base.size(); ++l) {
    PrismCell face = c;
    face.start.base.erase(face.start.base.begin() + static_cast<std::ptrdiff_t>(l));
    face.end.base.erase(face.end.base.begin() + static_cast<std::ptrdiff_t>(l));
    out.add(face, (l % 2 == 0) ? -1 : 1);
  }
  return out;
}

CellChain cell_boundary(const Cell& c) {
  return std::visit([](const auto& cell) { return cell_boundary(cell); }, c);
}

CellChain boundary(const CellChain& chain) {
  CellChain out;
  for (const auto& [cell, coeff] : chain.cones)
    for (const auto& [face, k] : cell_boundary(cell).cones) out.add(face, coeff * k);
  for (const auto& [cell, coeff] : chain.prisms) {
    auto d = cell_boundary(cell);
    for (const auto& [face, k] : d.cones) out.add(face, coeff * k);
    for (const auto& [face, k] : d.prisms) out.add(face, coeff * k);
  }
  return out;
}

std::vector<ConeCell> enumerate_cone_cells(const StratifiedComplex& k, int base_dim) {
  std::vector<ConeCell> out;
  if (base_dim < 0) return out;
  // the span of apex and base is either the base itself or one dimension more
  for (const auto& s : k.simplices(base_dim))
    for (auto a : s) out.push_back({a, s});
  for (const auto& s : k.simplices(base_dim + 1))
    for (std::size_t j = 0; j < s.size(); ++j) {
      Simplex base = s;
      base.erase(base.begin() + static_cast<std::ptrdiff_t>(j));
      out.push_back({s[j], std::move(base)});
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PrismCell> enumerate_prism_cells(const StratifiedComplex& k, int base_dim) {
  std::vector<PrismCell> out;
  if (base_dim < 0) return out;
  const auto width = static_cast<std::size_t>(base_dim) + 1;
  for (int d = 0; d <= std::min(k.dim(), 2 * base_dim + 3); ++d) {
    for (const auto& s : k.simplices(d)) {
      std::vector<Column> pairs;
      for (auto x : s)
        for (auto y : s) pairs.emplace_back(x, y);
      if (pairs.size() < width) continue;
      // choose `width` strictly increasing columns
      std::vector<bool> pick(pairs.size(), false);
      std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(width), true);
      do {
        std::vector<Column> cols;
        std::set<VertexId> image;
        for (std::size_t q = 0; q < pairs.size(); ++q)
          if (pick[q]) {
            cols.push_back(pairs[q]);
            image.insert(pairs[q].first);
            image.insert(pairs[q].second);
          }
        for (auto a0 : s)
          for (auto a1 : s) {
            std::set<VertexId> all = image;
            all.insert(a0);
            all.insert(a1);
            if (all.size() != s.size()) continue;
            PrismCell cell = from_columns(a0, a1, cols);
            if (!is_degenerate(cell)) out.push_back(std::move(cell));
          }
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cell> enumerate_cells(const StratifiedComplex& k, int base_dim, CellKind kind) {
  std::vector<Cell> out;
  if (kind == CellKind::cone)
    for (auto& c : enumerate_cone_cells(k, base_dim)) out.emplace_back(std::move(c));
  else
    for (auto& c : enumerate_prism_cells(k, base_dim)) out.emplace_back(std::move(c));
  return out;
}

namespace {

struct Piece {
  int max_label;  // stratum of the piece's image: largest support label
  int dim;        // dimension inside the slice parameter domain
};

// Relatively open pieces of the t-slice domain, for t in (0,1) and t = 1.
// A point lies in X_d iff every vertex in its barycentric support has label
// <= d, so each piece sits in a single stratum.
std::vector<Piece> slice_pieces(const StratifiedComplex& k, const Cell& cell) {
  std::vector<Piece> pieces;
  auto max_label = [&](const std::vector<VertexId>& support) {
    int m = -1;
    for (auto v : support) m = std::max(m, k.label(v));
    return m;
  };
  if (const auto* c = std::get_if<ConeCell>(&cell)) {
    const std::size_t n = c->base.size();
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
      std::vector<VertexId> support;
      for (std::size_t p = 0; p < n; ++p)
        if (mask & (std::uint32_t{1} << p)) support.push_back(c->base[p]);
      int dim = static_cast<int>(support.size()) - 1;
      pieces.push_back({max_label(support), dim});  // t = 1
      support.push_back(c->apex);
      pieces.push_back({max_label(support), dim});  // 0 < t < 1
    }
    return pieces;
  }
  const auto& c = std::get<PrismCell>(cell);
  const std::size_t n = c.start.base.size();
  const std::vector<const ConeCell*> ends{&c.start, &c.end};
  // s = 0, s = 1, 0 < s < 1
  const std::vector<std::vector<std::size_t>> s_pieces{{0}, {1}, {0, 1}};
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    int lambda_dim = std::popcount(mask) - 1;
    for (std::size_t sp = 0; sp < s_pieces.size(); ++sp) {
      for (bool t_interior : {false, true}) {
        std::vector<VertexId> support;
        for (auto e : s_pieces[sp]) {
          for (std::size_t p = 0; p < n; ++p)
            if (mask & (std::uint32_t{1} << p)) support.push_back(ends[e]->base[p]);
          if (t_interior) support.push_back(ends[e]->apex);
        }
        pieces.push_back({max_label(support), lambda_dim + (sp == 2 ? 1 : 0)});
      }
    }
  }
  return pieces;
}

int slice_dim(const Cell& c) {
  if (const auto* cone = std::get_if<ConeCell>(&c)) return cone->base_dim();
  return std::get<PrismCell>(c).base_dim() + 1;
}

int apex_stratum(const StratifiedComplex& k, const Cell& c) {
  if (const auto* cone = std::get_if<ConeCell>(&c)) return k.label(cone->apex);
  const auto& p = std::get<PrismCell>(c);
  return std::max(k.label(p.start.apex), k.label(p.end.apex));
}

bool perversity_ok(const StratifiedComplex& k, const Cell& c) {
  const auto pieces = slice_pieces(k, c);
  const int m = k.dim();
  const int sd = slice_dim(c);
  for (int codim = 2; codim <= m; ++codim) {
    int pre = -1;
    for (const auto& piece : pieces)
      if (piece.max_label <= m - codim) pre = std::max(pre, piece.dim);
    if (!within_perversity_bound(k, codim, pre, sd)) return false;
  }
  return true;
}

}  // namespace

int slice_preimage_dim(const StratifiedComplex& k, const Cell& c, int codim) {
  int pre = -1;
  for (const auto& piece : slice_pieces(k, c))
    if (piece.max_label <= k.dim() - codim) pre = std::max(pre, piece.dim);
  return pre;
}

AllowedReport cell_allowed(const StratifiedComplex& k, const Cell& c, const WSequence& w) {
  if (w.values.size() != 1)
    throw DomainError("cell_allowed: order-one cells take a w-sequence of length 1");
  AllowedReport r{};
  r.perversity_ok = perversity_ok(k, c);
  r.w_of_cell = apex_stratum(k, c);
  r.w_ok = w.values[0] <= r.w_of_cell;
  return r;
}

namespace {

template <class C>
std::map<C, std::size_t> allowed_index(const StratifiedComplex& k, const std::vector<C>& cells,
                                       const WSequence& w) {
  std::map<C, std::size_t> index;
  for (const auto& c : cells)
    if (cell_allowed(k, Cell{c}, w).allowed()) index.emplace(c, index.size());
  return index;
}

// Assigns dense row numbers to cells on first sight.
template <class C>
std::size_t row_of(std::map<C, std::size_t>& rows, const C& c) {
  return rows.emplace(c, rows.size()).first->second;
}

}  // namespace

LgReport lg_ranks(const StratifiedComplex& k, int base_dim, const WSequence& w) {
  if (base_dim < 0) throw DomainError("lg_ranks: base dimension must be non-negative");
  if (w.values.size() != 1) throw DomainError("lg_ranks: only order-one w-sequences are supported");

  const auto cones = allowed_index(k, enumerate_cone_cells(k, base_dim), w);
  const auto higher = allowed_index(k, enumerate_cone_cells(k, base_dim + 1), w);
  const auto prisms = allowed_index(k, enumerate_prism_cells(k, base_dim), w);

  LgReport report{};
  report.cone_cells = cones.size();
  report.higher_cone_cells = higher.size();
  report.prism_cells = prisms.size();

  // Z
  std::map<ConeCell, std::size_t> lower_rows;
  ColumnReducer cycle_reducer;
  for (const auto& [cell, idx] : cones) {
    std::vector<std::pair<std::size_t, Rational>> entries;
    for (const auto& [face, coeff] : cell_boundary(cell).cones) entries.emplace_back(row_of(lower_rows, face), coeff);
    cycle_reducer.add(make_column(std::move(entries)));
  }
  report.cycles = cones.size() - cycle_reducer.rank();

  // B. Row keys mod 3: 0 = non-allowed (i,0) cells, 1 = (i-1,1) cells,
  // 2 = allowed (i,0) cells (or their boundaries in the closure check)
  std::map<ConeCell, std::size_t> blocked_cone_rows;
  std::map<PrismCell, std::size_t> prism_rows;
  ColumnReducer constraint_only, stacked, closure;
  auto add_generator = [&](const CellChain& d) {
    std::vector<std::pair<std::size_t, Rational>> constraint, psi_rows;
    CellChain psi;
    for (const auto& [face, coeff] : d.cones) {
      auto it = cones.find(face);
      if (it != cones.end()) {
        psi_rows.emplace_back(3 * it->second + 2, coeff);
        psi.add(face, coeff);
      } else {
        constraint.emplace_back(3 * row_of(blocked_cone_rows, face), coeff);
      }
    }
    for (const auto& [face, coeff] : d.prisms) constraint.emplace_back(3 * row_of(prism_rows, face) + 1, coeff);

    auto both = constraint;
    both.insert(both.end(), psi_rows.begin(), psi_rows.end());
    auto closure_col = constraint;
    for (const auto& [face, coeff] : boundary(psi).cones)
      closure_col.emplace_back(3 * row_of(lower_rows, face) + 2, coeff);

    constraint_only.add(make_column(std::move(constraint)));
    stacked.add(make_column(std::move(both)));
    closure.add(make_column(std::move(closure_col)));
  };
  for (const auto& [cell, idx] : higher) add_generator(cell_boundary(cell));
  for (const auto& [cell, idx] : prisms) add_generator(cell_boundary(cell));

  if (closure.rank() != constraint_only.rank())
    throw std::logic_error("lg_ranks: boundary space is not contained in the cycle space");
  report.boundaries = stacked.rank() - constraint_only.rank();
  report.rank = report.cycles - report.boundaries;
  return report;
}

}  // namespace lgih
