#ifndef LGIH_STRATSIMPLEX_HPP
#define LGIH_STRATSIMPLEX_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lgih {

/*
 * Standard stratified simplex sigma(i_0, ..., i_r) = sigma_{i_r} x C(sigma(i_0..i_{r-1})).
 *
 * dims()[j] is i_j; order r = dims().size() - 1. The total dimension counts
 * one coning direction per order.
 */
class StratifiedShape {
 public:
  explicit StratifiedShape(std::vector<int> dims);

  /// Parses "i0,i1,...,ir".
  static StratifiedShape parse(std::string_view text);

  const std::vector<int>& dims() const noexcept { return dims_; }
  int order() const noexcept { return static_cast<int>(dims_.size()) - 1; }
  int total_dim() const noexcept;
  std::string to_string() const;

  friend bool operator==(const StratifiedShape&, const StratifiedShape&) = default;
  friend auto operator<=>(const StratifiedShape&, const StratifiedShape&) = default;

 private:
  std::vector<int> dims_;
};

struct FacetRef {
  StratifiedShape parent;
  std::size_t factor;  // j
  int local;           // l, the deleted vertex of sigma(i_j)
  int sign;
  StratifiedShape child;
};

/*
 * Signed facets. Factors are laid out as sigma(i_r) x ... x sigma(i_0); a
 * factor contributes i_j + 1 barycentric coordinates, and deleting the l-th
 * vertex of factor j has sign (-1)^q where q is that vertex's position in the
 * concatenated coordinate list. Zero-dimensional factors have no facets and
 * there are no facets in coning directions.
 */
std::vector<FacetRef> facets(const StratifiedShape& shape);

struct ApexLocus {
  int index;               // j in 1..r
  std::string descriptor;  // nested product/cone description
  int dim;
};

/// A_r, A_{r-1}, ..., A_1 (innermost apex first). Empty for order 0.
std::vector<ApexLocus> apex_loci(const StratifiedShape& shape);

/// Applies the signed facet rule twice and checks that all terms cancel.
bool dd_check(const StratifiedShape& shape);

/// Every shape with total dimension <= max_total_dim.
std::vector<StratifiedShape> shapes_up_to(int max_total_dim);

}  // namespace lgih

#endif  // LGIH_STRATSIMPLEX_HPP
