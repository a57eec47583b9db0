#include "lgih/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "lgih/error.hpp"

namespace lgih {

Perversity Perversity::middle() { return Perversity{}; }

Perversity Perversity::table(std::map<int, int> values) {
  int expected = 2;
  for (auto [c, v] : values) {
    if (c != expected)
      throw ValidationError("perversity: codimensions must run contiguously from 2 (missing " +
                            std::to_string(expected) + ")");
    ++expected;
  }
  if (!values.empty() && values.begin()->second != 0)
    throw ValidationError("perversity: p(2) must be 0");
  for (auto it = values.begin(); it != values.end(); ++it) {
    auto next = std::next(it);
    if (next == values.end()) break;
    int step = next->second - it->second;
    if (step != 0 && step != 1)
      throw ValidationError("perversity: growth condition p(c+1) - p(c) in {0,1} fails at c = " +
                            std::to_string(it->first));
  }
  Perversity p;
  p.middle_ = false;
  p.values_ = std::move(values);
  return p;
}

bool Perversity::defined_up_to(int codim) const noexcept {
  if (middle_ || codim < 2) return true;
  return !values_.empty() && values_.rbegin()->first >= codim;
}

int Perversity::operator()(int codim) const {
  if (codim < 2) throw DomainError("perversity is defined for codimension >= 2");
  if (middle_) return (codim - 2) / 2;
  auto it = values_.find(codim);
  if (it == values_.end())
    throw DomainError("perversity undefined at codimension " + std::to_string(codim));
  return it->second;
}

StratifiedComplex::StratifiedComplex(int dim, std::vector<Vertex> vertices,
                                     const std::vector<std::vector<VertexId>>& maximal,
                                     Perversity perversity)
    : dim_(dim), vertices_(std::move(vertices)), perversity_(std::move(perversity)) {
  std::unordered_set<std::string> names;
  for (const auto& v : vertices_) {
    if (v.name.empty()) throw ValidationError("complex: vertex names must be nonempty");
    if (!names.insert(v.name).second) throw ValidationError("complex: duplicate vertex '" + v.name + "'");
    if (v.label < 0) throw ValidationError("complex: vertex '" + v.name + "' has a negative stratum label");
  }

  std::set<Simplex> all;
  for (VertexId v = 0; v < vertices_.size(); ++v) all.insert({v});
  for (const auto& raw : maximal) {
    Simplex s(raw.begin(), raw.end());
    std::sort(s.begin(), s.end());
    if (s.empty()) throw ValidationError("complex: empty maximal simplex");
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw ValidationError("complex: repeated vertex in a maximal simplex");
    if (s.back() >= vertices_.size()) throw ValidationError("complex: simplex references an unknown vertex");
    if (s.size() > 24) throw ValidationError("complex: simplex dimension too large");
    const std::uint32_t subsets = std::uint32_t{1} << s.size();
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
      Simplex face;
      for (std::size_t b = 0; b < s.size(); ++b)
        if (mask & (std::uint32_t{1} << b)) face.push_back(s[b]);
      all.insert(std::move(face));
    }
  }

  int actual = -1;
  for (const auto& s : all) actual = std::max(actual, static_cast<int>(s.size()) - 1);
  if (actual != dim_)
    throw ValidationError("complex: declared dim " + std::to_string(dim_) +
                          " but the simplices have dimension " + std::to_string(actual));

  by_dim_.resize(static_cast<std::size_t>(dim_ + 1));
  index_.resize(static_cast<std::size_t>(dim_ + 1));
  for (const auto& s : all) {
    auto k = s.size() - 1;
    index_[k].emplace(s, by_dim_[k].size());
    by_dim_[k].push_back(s);
  }

  for (int d = 0; d < dim_; ++d) {
    int fd = filtration_dim(d);
    if (fd > d)
      throw ValidationError("complex: filtration piece X_" + std::to_string(d) + " has dimension " +
                            std::to_string(fd) + " > " + std::to_string(d) +
                            "; strata closures must be full subcomplexes, barycentrically subdivide the input");
  }
  if (!perversity_.defined_up_to(dim_))
    throw ValidationError("complex: perversity must be defined for every codimension up to " +
                          std::to_string(dim_));
}

std::optional<VertexId> StratifiedComplex::find(const std::string& name) const {
  for (VertexId v = 0; v < vertices_.size(); ++v)
    if (vertices_[v].name == name) return v;
  return std::nullopt;
}

const std::vector<Simplex>& StratifiedComplex::simplices(int k) const {
  static const std::vector<Simplex> none;
  if (k < 0 || k > dim_) return none;
  return by_dim_[static_cast<std::size_t>(k)];
}

std::optional<std::size_t> StratifiedComplex::index_of(const Simplex& s) const {
  if (s.empty() || static_cast<int>(s.size()) - 1 > dim_) return std::nullopt;
  const auto& idx = index_[s.size() - 1];
  auto it = idx.find(s);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::size_t StratifiedComplex::simplex_count() const {
  std::size_t n = 0;
  for (const auto& v : by_dim_) n += v.size();
  return n;
}

std::vector<Simplex> StratifiedComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (int k = dim_; k >= 0; --k) {
    for (const auto& s : simplices(k)) {
      bool covered = false;
      for (const auto& m : out)
        if (std::includes(m.begin(), m.end(), s.begin(), s.end())) {
          covered = true;
          break;
        }
      if (!covered) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int StratifiedComplex::filtration_dim(int d) const {
  for (int k = dim_; k >= 0; --k)
    for (const auto& s : simplices(k))
      if (std::all_of(s.begin(), s.end(), [&](VertexId v) { return vertices_[v].label <= d; })) return k;
  return -1;
}

StratifiedComplex StratifiedComplex::relabeled(std::vector<int> labels) const {
  if (labels.size() != vertices_.size()) throw ValidationError("relabeled: one label per vertex required");
  auto verts = vertices_;
  for (std::size_t v = 0; v < verts.size(); ++v) verts[v].label = labels[v];
  return StratifiedComplex(dim_, std::move(verts), maximal_simplices(), perversity_);
}

StratifiedComplex StratifiedComplex::with_perversity(Perversity p) const {
  return StratifiedComplex(dim_, vertices_, maximal_simplices(), std::move(p));
}

StratifiedComplex empty_complex() { return StratifiedComplex(-1, {}, {}); }

namespace {

std::string fresh_name(const StratifiedComplex& k, std::string base) {
  if (!k.find(base)) return base;
  for (int n = 1;; ++n) {
    auto candidate = base + std::to_string(n);
    if (!k.find(candidate)) return candidate;
  }
}

std::vector<StratifiedComplex::Vertex> vertex_list(const StratifiedComplex& k) {
  std::vector<StratifiedComplex::Vertex> out;
  for (VertexId v = 0; v < k.vertex_count(); ++v) out.push_back(k.vertex(v));
  return out;
}

}  // namespace

StratifiedComplex cone(const StratifiedComplex& k, int apex_label, std::string apex_name) {
  auto verts = vertex_list(k);
  const auto apex = static_cast<VertexId>(verts.size());
  verts.push_back({fresh_name(k, std::move(apex_name)), apex_label});
  std::vector<std::vector<VertexId>> maximal;
  for (auto s : k.maximal_simplices()) {
    s.push_back(apex);
    maximal.push_back(std::move(s));
  }
  if (maximal.empty()) maximal.push_back({apex});
  return StratifiedComplex(k.dim() + 1, std::move(verts), maximal, k.perversity());
}

StratifiedComplex suspension(const StratifiedComplex& k, std::pair<int, int> apex_labels,
                             std::pair<std::string, std::string> apex_names) {
  auto verts = vertex_list(k);
  const auto north = static_cast<VertexId>(verts.size());
  const auto south = north + 1;
  auto north_name = fresh_name(k, std::move(apex_names.first));
  auto south_name = std::move(apex_names.second);
  if (south_name == north_name || k.find(south_name)) south_name = fresh_name(k, south_name + "'");
  verts.push_back({std::move(north_name), apex_labels.first});
  verts.push_back({std::move(south_name), apex_labels.second});
  std::vector<std::vector<VertexId>> maximal;
  for (const auto& s : k.maximal_simplices()) {
    auto a = s;
    a.push_back(north);
    auto b = s;
    b.push_back(south);
    maximal.push_back(std::move(a));
    maximal.push_back(std::move(b));
  }
  if (maximal.empty()) {
    maximal.push_back({north});
    maximal.push_back({south});
  }
  return StratifiedComplex(k.dim() + 1, std::move(verts), maximal, k.perversity());
}

StratifiedComplex link(const StratifiedComplex& k, VertexId v) {
  if (v >= k.vertex_count()) throw ValidationError("link: unknown vertex");
  std::vector<Simplex> faces;
  std::set<VertexId> used;
  for (const auto& m : k.maximal_simplices()) {
    if (!std::binary_search(m.begin(), m.end(), v)) continue;
    Simplex f;
    for (auto u : m)
      if (u != v) f.push_back(u);
    if (f.empty()) continue;
    used.insert(f.begin(), f.end());
    faces.push_back(std::move(f));
  }
  std::vector<StratifiedComplex::Vertex> verts;
  std::map<VertexId, VertexId> renumber;
  for (auto u : used) {
    renumber[u] = static_cast<VertexId>(verts.size());
    verts.push_back(k.vertex(u));
  }
  int dim = -1;
  std::vector<std::vector<VertexId>> maximal;
  for (const auto& f : faces) {
    std::vector<VertexId> g;
    for (auto u : f) g.push_back(renumber[u]);
    dim = std::max(dim, static_cast<int>(g.size()) - 1);
    maximal.push_back(std::move(g));
  }
  return StratifiedComplex(dim, std::move(verts), maximal, k.perversity());
}

StratifiedComplex barycentric_subdivision(const StratifiedComplex& k) {
  // vertex of the subdivision per simplex, original vertices first
  std::map<Simplex, VertexId> bary;
  std::vector<StratifiedComplex::Vertex> verts;
  for (int d = 0; d <= k.dim(); ++d) {
    for (const auto& s : k.simplices(d)) {
      int label = 0;
      std::string name;
      for (auto v : s) {
        label = std::max(label, k.label(v));
        if (!name.empty()) name += "|";
        name += k.name(v);
      }
      if (d > 0) name = "[" + name + "]";
      bary.emplace(s, static_cast<VertexId>(verts.size()));
      verts.push_back({std::move(name), label});
    }
  }
  std::vector<std::vector<VertexId>> maximal;
  for (const auto& m : k.maximal_simplices()) {
    std::vector<VertexId> perm = m;
    do {
      std::vector<VertexId> flag;
      Simplex prefix;
      for (auto v : perm) {
        prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
        flag.push_back(bary.at(prefix));
      }
      maximal.push_back(std::move(flag));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return StratifiedComplex(k.dim(), std::move(verts), maximal, k.perversity());
}

bool within_perversity_bound(const StratifiedComplex& k, int codim, int preimage_dim, int slice_dim) {
  if (preimage_dim < 0) return true;
  return preimage_dim <= slice_dim - codim + k.perversity()(codim);
}

bool allowable_simplex(const StratifiedComplex& k, std::span<const VertexId> simplex, int degree) {
  const int m = k.dim();
  for (int c = 2; c <= m; ++c) {
    int count = 0;
    for (auto v : simplex)
      if (k.label(v) <= m - c) ++count;
    if (!within_perversity_bound(k, c, count - 1, degree)) return false;
  }
  return true;
}

StratifiedComplex cycle_complex(std::size_t n, int label, const std::string& prefix) {
  if (n < 3) throw ValidationError("cycle_complex: need at least 3 vertices");
  std::vector<StratifiedComplex::Vertex> verts;
  std::vector<std::vector<VertexId>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    verts.push_back({prefix + std::to_string(i), label});
    edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n)});
  }
  return StratifiedComplex(1, std::move(verts), edges);
}

StratifiedComplex minimal_torus(int label) {
  std::vector<StratifiedComplex::Vertex> verts;
  std::vector<std::vector<VertexId>> triangles;
  for (VertexId i = 0; i < 7; ++i) {
    verts.push_back({"t" + std::to_string(i), label});
    triangles.push_back({i, (i + 1) % 7, (i + 3) % 7});
    triangles.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return StratifiedComplex(2, std::move(verts), triangles);
}

}  // namespace lgih
