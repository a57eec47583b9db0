#include "lgih/facelattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "lgih/error.hpp"

namespace lgih {

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw ValidationError("FaceLattice invariant violated: " + what);
}

std::vector<FaceLattice::Face> numbered(const std::vector<int>& dims) {
  std::vector<FaceLattice::Face> faces;
  faces.reserve(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) faces.push_back({std::to_string(i), dims[i]});
  return faces;
}

}  // namespace

FaceLattice::FaceLattice(int dim, std::vector<Face> faces,
                         std::vector<std::pair<std::size_t, std::size_t>> covers)
    : dim_(dim), faces_(std::move(faces)), up_(faces_.size()), down_(faces_.size()) {
  if (dim_ < 0) invalid("dimension must be non-negative");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [lo, hi] : covers) {
    if (lo >= faces_.size() || hi >= faces_.size()) invalid("cover references an unknown face");
    if (!seen.insert({lo, hi}).second) continue;
    up_[lo].push_back(hi);
    down_[hi].push_back(lo);
  }
  for (auto& v : up_) std::sort(v.begin(), v.end());
  for (auto& v : down_) std::sort(v.begin(), v.end());
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    if (faces_[f].dim == -1) bottom_ = f;
    if (faces_[f].dim == dim_) top_ = f;
  }
  validate();
}

FaceLattice FaceLattice::from_ids(int dim, std::vector<Face> faces,
                                  const std::vector<std::pair<std::string, std::string>>& covers) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (!index.emplace(faces[i].id, i).second) invalid("duplicate face id '" + faces[i].id + "'");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  edges.reserve(covers.size());
  for (const auto& [lo, hi] : covers) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end()) invalid("cover references unknown face '" + lo + "'");
    if (b == index.end()) invalid("cover references unknown face '" + hi + "'");
    edges.emplace_back(a->second, b->second);
  }
  return FaceLattice(dim, std::move(faces), std::move(edges));
}

FaceLattice FaceLattice::point() {
  return FaceLattice(0, {{"empty", -1}, {"p", 0}}, {{0, 1}});
}

void FaceLattice::validate() const {
  std::size_t bottoms = 0, tops = 0;
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    int d = faces_[f].dim;
    if (d < -1 || d > dim_)
      invalid("face '" + faces_[f].id + "' has dimension outside [-1, n]");
    if (d == -1) ++bottoms;
    if (d == dim_) ++tops;
  }
  if (bottoms != 1) invalid("exactly one face of dimension -1 required");
  if (tops != 1) invalid("exactly one face of dimension n required");

  for (std::size_t f = 0; f < faces_.size(); ++f) {
    for (auto g : up_[f])
      if (faces_[g].dim != faces_[f].dim + 1)
        invalid("cover '" + faces_[f].id + "' < '" + faces_[g].id +
                "' does not increase dimension by exactly 1");
    if (f != top_ && up_[f].empty())
      invalid("face '" + faces_[f].id + "' has no upper cover (maximal chains must reach the top)");
    if (f != bottom_ && down_[f].empty())
      invalid("face '" + faces_[f].id + "' has no lower cover (maximal chains must reach the bottom)");
  }

  // diamond property: each length-2 interval has exactly two middle elements
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    std::map<std::size_t, int> middles;
    for (auto g : up_[f])
      for (auto h : up_[g]) ++middles[h];
    for (auto [h, count] : middles)
      if (count != 2)
        invalid("diamond property fails on interval ['" + faces_[f].id + "', '" + faces_[h].id +
                "'] with " + std::to_string(count + 2) + " elements");
  }
}

std::vector<std::pair<std::size_t, std::size_t>> FaceLattice::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t f = 0; f < faces_.size(); ++f)
    for (auto g : up_[f]) out.emplace_back(f, g);
  return out;
}

std::vector<std::size_t> FaceLattice::face_counts() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(dim_) + 2, 0);
  for (const auto& f : faces_) ++counts[static_cast<std::size_t>(f.dim + 1)];
  return counts;
}

FaceLattice pyramid(const FaceLattice& lattice) {
  // face F keeps index F; F joined with the apex becomes index N + F
  const std::size_t n = lattice.size();
  std::vector<int> dims(2 * n);
  for (std::size_t f = 0; f < n; ++f) {
    dims[f] = lattice.face(f).dim;
    dims[n + f] = lattice.face(f).dim + 1;
  }
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (auto [lo, hi] : lattice.covers()) {
    covers.emplace_back(lo, hi);
    covers.emplace_back(n + lo, n + hi);
  }
  for (std::size_t f = 0; f < n; ++f) covers.emplace_back(f, n + f);
  // the old top is a facet now and the joined top is the new top
  return FaceLattice(lattice.dim() + 1, numbered(dims), std::move(covers));
}

FaceLattice prism(const FaceLattice& lattice) {
  // index layout: 0 = empty face; for each nonempty face F (old index f),
  // F x {0}, F x {1}, F x I at 3(f') + 1 .. 3(f') + 3 where f' enumerates
  // the nonempty faces
  const std::size_t n = lattice.size();
  const std::size_t empty = lattice.bottom();
  std::vector<std::size_t> slot(n, 0);
  std::vector<int> dims{-1};
  for (std::size_t f = 0; f < n; ++f) {
    if (f == empty) continue;
    slot[f] = dims.size();
    int d = lattice.face(f).dim;
    dims.insert(dims.end(), {d, d, d + 1});
  }
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (auto [lo, hi] : lattice.covers()) {
    if (lo == empty) {
      covers.emplace_back(0, slot[hi]);
      covers.emplace_back(0, slot[hi] + 1);
      continue;
    }
    for (std::size_t k = 0; k < 3; ++k) covers.emplace_back(slot[lo] + k, slot[hi] + k);
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (f == empty) continue;
    covers.emplace_back(slot[f], slot[f] + 2);
    covers.emplace_back(slot[f] + 1, slot[f] + 2);
  }
  return FaceLattice(lattice.dim() + 1, numbered(dims), std::move(covers));
}

FaceLattice dual(const FaceLattice& lattice) {
  std::vector<FaceLattice::Face> faces;
  for (std::size_t f = 0; f < lattice.size(); ++f)
    faces.push_back({lattice.face(f).id, lattice.dim() - 1 - lattice.face(f).dim});
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (auto [lo, hi] : lattice.covers()) covers.emplace_back(hi, lo);
  return FaceLattice(lattice.dim(), std::move(faces), std::move(covers));
}

void check_word(std::string_view word) {
  for (std::size_t i = 0; i < word.size(); ++i)
    if (word[i] != 'I' && word[i] != 'C')
      throw ParseError(std::string("invalid character '") + word[i] + "' in IC word", i);
}

FaceLattice from_word(std::string_view word) {
  check_word(word);
  FaceLattice out = FaceLattice::point();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = (*it == 'I') ? prism(out) : pyramid(out);
  return out;
}

std::vector<std::string> ic_words(int n) {
  std::vector<std::string> out;
  if (n < 0) return out;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    std::string w(static_cast<std::size_t>(n), 'C');
    for (int k = 0; k < n; ++k)
      if (bits & (std::uint64_t{1} << (n - 1 - k))) w[static_cast<std::size_t>(k)] = 'I';
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

FlagVector::FlagVector(int dim, std::vector<std::uint64_t> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ < 0 || entries_.size() != (std::size_t{1} << dim_))
    throw ValidationError("FlagVector: expected 2^n entries");
  if (entries_[0] != 1) throw ValidationError("FlagVector: empty-flag entry must be 1");
}

std::uint64_t FlagVector::entry(std::span<const int> dims) const {
  std::uint32_t mask = 0;
  for (int d : dims) {
    if (d < 0 || d >= dim_) throw DomainError("FlagVector::entry: dimension outside [0, n)");
    mask |= std::uint32_t{1} << d;
  }
  return entries_[mask];
}

std::vector<Rational> FlagVector::as_rationals() const {
  std::vector<Rational> out;
  out.reserve(entries_.size());
  for (auto e : entries_) out.emplace_back(static_cast<unsigned long>(e));
  return out;
}

std::string FlagVector::mask_key(std::uint32_t mask) {
  std::string key;
  for (int k = 0; mask >> k; ++k) {
    if (!(mask & (std::uint32_t{1} << k))) continue;
    if (!key.empty()) key += ',';
    key += std::to_string(k);
  }
  return key;
}

FlagVector flag_vector(const FaceLattice& lattice) {
  const std::size_t n = lattice.size();
  const int d = lattice.dim();

  // strict containment, built bottom-up along covers
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lattice.face(a).dim < lattice.face(b).dim;
  });
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (auto f : order)
    for (auto g : lattice.lower_covers(f)) {
      below[f][g] = true;
      for (std::size_t h = 0; h < n; ++h)
        if (below[g][h]) below[f][h] = true;
    }

  std::vector<std::vector<std::size_t>> by_dim(static_cast<std::size_t>(d) + 2);
  for (std::size_t f = 0; f < n; ++f) by_dim[static_cast<std::size_t>(lattice.face(f).dim + 1)].push_back(f);
  auto faces_of = [&](int k) -> const std::vector<std::size_t>& {
    return by_dim[static_cast<std::size_t>(k + 1)];
  };

  std::vector<std::uint64_t> entries(std::size_t{1} << d, 0);
  entries[0] = 1;
  for (std::uint32_t mask = 1; mask < entries.size(); ++mask) {
    std::vector<std::uint64_t> ways(n, 0);
    int prev = -2;
    for (int k = 0; k < d; ++k) {
      if (!(mask & (std::uint32_t{1} << k))) continue;
      for (auto g : faces_of(k)) {
        if (prev == -2) {
          ways[g] = 1;
          continue;
        }
        std::uint64_t sum = 0;
        for (auto f : faces_of(prev))
          if (below[g][f]) sum += ways[f];
        ways[g] = sum;
      }
      prev = k;
    }
    std::uint64_t total = 0;
    for (auto f : faces_of(prev)) total += ways[f];
    entries[mask] = total;
  }
  return FlagVector(d, std::move(entries));
}

std::size_t flag_rank(std::span<const FlagVector> vectors) {
  if (vectors.empty()) throw DomainError("flag_rank: empty list");
  DenseMatrix m;
  for (const auto& v : vectors) {
    if (v.dim() != vectors.front().dim()) throw DomainError("flag_rank: mixed dimensions");
    m.append_row(v.as_rationals());
  }
  return rank(std::move(m));
}

std::size_t flag_rank(std::span<const FaceLattice> lattices) {
  std::vector<FlagVector> vectors;
  for (const auto& l : lattices) {
    if (l.dim() != lattices.front().dim()) throw DomainError("flag_rank: mixed dimensions");
    vectors.push_back(flag_vector(l));
  }
  return flag_rank(vectors);
}

std::uint64_t fibonacci(int k) {
  std::uint64_t a = 0, b = 1;
  for (int i = 0; i < k; ++i) {
    auto next = a + b;
    a = b;
    b = next;
  }
  return a;
}

}  // namespace lgih
