#include "lgih/ihomology.hpp"

namespace lgih {

std::vector<SparseColumn> boundary_columns(const StratifiedComplex& k, int degree) {
  std::vector<SparseColumn> cols;
  for (const auto& s : k.simplices(degree)) {
    std::vector<std::pair<std::size_t, Rational>> entries;
    if (degree > 0) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
        entries.emplace_back(*k.index_of(face), (j % 2 == 0) ? 1 : -1);
      }
    }
    cols.push_back(make_column(std::move(entries)));
  }
  return cols;
}

namespace {

BettiReport ranks_with(const StratifiedComplex& k, bool use_perversity) {
  const int m = k.dim();
  BettiReport report;
  if (m < 0) return report;

  std::vector<std::vector<bool>> allowed(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) {
    std::size_t count = 0;
    for (const auto& s : k.simplices(i)) {
      bool ok = !use_perversity || allowable_simplex(k, s, i);
      allowed[static_cast<std::size_t>(i)].push_back(ok);
      if (ok) ++count;
    }
    report.allowable.push_back(count);
  }

  // full_rank[i] = rank of d on A_i; blocked_rank[i] = rank of its rows
  // outside A_{i-1}
  std::vector<std::size_t> full_rank(static_cast<std::size_t>(m) + 2, 0);
  std::vector<std::size_t> blocked_rank(static_cast<std::size_t>(m) + 2, 0);
  for (int i = 1; i <= m; ++i) {
    const auto& rows_ok = allowed[static_cast<std::size_t>(i - 1)];
    ColumnReducer full, blocked;
    auto cols = boundary_columns(k, i);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (!allowed[static_cast<std::size_t>(i)][c]) continue;
      SparseColumn outside;
      for (const auto& e : cols[c])
        if (!rows_ok[e.row]) outside.push_back(e);
      full.add(std::move(cols[c]));
      blocked.add(std::move(outside));
    }
    full_rank[static_cast<std::size_t>(i)] = full.rank();
    blocked_rank[static_cast<std::size_t>(i)] = blocked.rank();
  }

  for (int i = 0; i <= m; ++i) {
    auto u = static_cast<std::size_t>(i);
    std::size_t cycles = report.allowable[u] - full_rank[u];
    std::size_t boundaries = full_rank[u + 1] - blocked_rank[u + 1];
    report.cycles.push_back(cycles);
    report.boundaries.push_back(boundaries);
    report.ranks.push_back(cycles - boundaries);
  }
  return report;
}

}  // namespace

BettiReport ih_ranks(const StratifiedComplex& k) { return ranks_with(k, true); }

BettiReport ordinary_ranks(const StratifiedComplex& k) { return ranks_with(k, false); }

}  // namespace lgih
