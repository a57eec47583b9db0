#ifndef LGIH_FACELATTICE_HPP
#define LGIH_FACELATTICE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lgih/linalg.hpp"

namespace lgih {

/*
 * Face lattice of a convex polytope, stored as an abstract graded poset.
 *
 * Faces are indexed 0..size()-1. The lattice always contains the empty face
 * (dimension -1) and the polytope itself (dimension n). Instances are
 * validated on construction and immutable afterwards.
 */
class FaceLattice {
 public:
  struct Face {
    std::string id;
    int dim;
  };

  /// Validates and builds a lattice; throws ValidationError naming the
  /// violated invariant.
  FaceLattice(int dim, std::vector<Face> faces,
              std::vector<std::pair<std::size_t, std::size_t>> covers);

  /// Same, with covers given by face id.
  static FaceLattice from_ids(int dim, std::vector<Face> faces,
                              const std::vector<std::pair<std::string, std::string>>& covers);

  static FaceLattice point();

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return faces_.size(); }
  const Face& face(std::size_t f) const { return faces_[f]; }
  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t top() const noexcept { return top_; }

  std::span<const std::size_t> upper_covers(std::size_t f) const { return up_[f]; }
  std::span<const std::size_t> lower_covers(std::size_t f) const { return down_[f]; }
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  /// Number of faces of each dimension -1..n (entry k+1 counts k-faces).
  std::vector<std::size_t> face_counts() const;

 private:
  void validate() const;

  int dim_;
  std::vector<Face> faces_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

/// Pyramid (cone) over the polytope.
FaceLattice pyramid(const FaceLattice& lattice);

/// Prism (product with a segment).
FaceLattice prism(const FaceLattice& lattice);

/// Polar dual: dimensions reflected, covers reversed.
FaceLattice dual(const FaceLattice& lattice);

/// Evaluates a word over {I, C} on the point, rightmost letter first.
FaceLattice from_word(std::string_view word);

/// All 2^n words of length n over {I, C}, in lexicographic order.
std::vector<std::string> ic_words(int n);

/// Throws ParseError at the first character outside {I, C}.
void check_word(std::string_view word);

/*
 * Flag vector indexed by subsets S of {0..n-1}, encoded as bitmasks
 * (bit k set means k in S). The empty set has entry 1.
 */
class FlagVector {
 public:
  FlagVector(int dim, std::vector<std::uint64_t> entries);

  int dim() const noexcept { return dim_; }
  std::uint64_t operator[](std::uint32_t mask) const { return entries_.at(mask); }
  std::uint64_t entry(std::span<const int> dims) const;
  std::span<const std::uint64_t> entries() const noexcept { return entries_; }
  std::vector<Rational> as_rationals() const;

  /// "0,1" style key used in JSON output; "" for the empty set.
  static std::string mask_key(std::uint32_t mask);

  friend bool operator==(const FlagVector&, const FlagVector&) = default;

 private:
  int dim_;
  std::vector<std::uint64_t> entries_;
};

FlagVector flag_vector(const FaceLattice& lattice);

/// Rank over Q of the stacked flag vectors; throws on mixed dimensions.
std::size_t flag_rank(std::span<const FlagVector> vectors);
std::size_t flag_rank(std::span<const FaceLattice> lattices);

/// Fibonacci numbers with F_1 = F_2 = 1.
std::uint64_t fibonacci(int k);

}  // namespace lgih

#endif  // LGIH_FACELATTICE_HPP
