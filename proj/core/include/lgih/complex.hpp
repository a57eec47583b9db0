#ifndef LGIH_COMPLEX_HPP
#define LGIH_COMPLEX_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lgih {

using VertexId = std::uint32_t;

/// Sorted, duplicate-free vertex list.
using Simplex = std::vector<VertexId>;

/*
 * Goresky-MacPherson perversity p(c) for real codimension c >= 2.
 *
 * Either the middle perversity floor((c - 2) / 2), defined for every c, or an
 * explicit table p(2..cmax) satisfying p(2) = 0 and p(c+1) - p(c) in {0, 1}.
 */
class Perversity {
 public:
  static Perversity middle();
  static Perversity table(std::map<int, int> values);

  bool is_middle() const noexcept { return middle_; }
  bool defined_up_to(int codim) const noexcept;
  int operator()(int codim) const;
  const std::map<int, int>& values() const noexcept { return values_; }

 private:
  bool middle_ = true;
  std::map<int, int> values_;
};

/*
 * Finite abstract simplicial complex with a stratum label per vertex.
 *
 * label(v) is the real dimension of the stratum containing v. Labels at or
 * above dim() mean the regular part; constructions such as cone() keep the
 * labels of their input, so a base complex may carry labels of its eventual
 * ambient space. The closed filtration piece X_d is the full subcomplex on
 * {v : label(v) <= d}; validation requires dim X_d <= d for all d < dim().
 */
class StratifiedComplex {
 public:
  struct Vertex {
    std::string name;
    int label;
  };

  /// Validates and closes under faces. An empty complex has dim -1.
  StratifiedComplex(int dim, std::vector<Vertex> vertices,
                    const std::vector<std::vector<VertexId>>& maximal,
                    Perversity perversity = Perversity::middle());

  int dim() const noexcept { return dim_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const Vertex& vertex(VertexId v) const { return vertices_.at(v); }
  int label(VertexId v) const { return vertices_.at(v).label; }
  const std::string& name(VertexId v) const { return vertices_.at(v).name; }
  std::optional<VertexId> find(const std::string& name) const;
  const Perversity& perversity() const noexcept { return perversity_; }

  /// All k-simplices in lexicographic order (empty for k outside [0, dim]).
  const std::vector<Simplex>& simplices(int k) const;
  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }
  std::size_t simplex_count() const;
  std::vector<Simplex> maximal_simplices() const;

  /// Dimension of X_d, or -1 when empty.
  int filtration_dim(int d) const;

  /// Copy with the given labels; revalidated.
  StratifiedComplex relabeled(std::vector<int> labels) const;
  StratifiedComplex with_perversity(Perversity p) const;

 private:
  int dim_;
  std::vector<Vertex> vertices_;
  Perversity perversity_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::map<Simplex, std::size_t>> index_;
};

StratifiedComplex empty_complex();

/// Joins a new vertex to every simplex; dimension grows by one.
StratifiedComplex cone(const StratifiedComplex& k, int apex_label, std::string apex_name = "apex");

/// Two cone vertices over the same base.
StratifiedComplex suspension(const StratifiedComplex& k, std::pair<int, int> apex_labels,
                             std::pair<std::string, std::string> apex_names = {"north", "south"});

/// Simplicial link of v; labels inherited, dimension = dim of the link.
StratifiedComplex link(const StratifiedComplex& k, VertexId v);

/// Barycentric subdivision; the barycenter of a simplex gets the largest label
/// among its vertices, so original vertices keep their labels.
StratifiedComplex barycentric_subdivision(const StratifiedComplex& k);

/// Perversity condition for an i-simplex: for 2 <= c <= m, the face spanned by
/// vertices with label <= m - c has dimension <= i - c + p(c).
bool allowable_simplex(const StratifiedComplex& k, std::span<const VertexId> simplex, int degree);

/// The single-codimension bound preimage_dim <= slice_dim - c + p(c); an
/// empty preimage (preimage_dim < 0) always passes.
bool within_perversity_bound(const StratifiedComplex& k, int codim, int preimage_dim, int slice_dim);

/// Helpers for the JSON-free construction of small test spaces.
StratifiedComplex cycle_complex(std::size_t n, int label, const std::string& prefix = "v");
StratifiedComplex minimal_torus(int label);

}  // namespace lgih

#endif  // LGIH_COMPLEX_HPP
