#ifndef LGIH_HCALC_HPP
#define LGIH_HCALC_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lgih/facelattice.hpp"
#include "lgih/linalg.hpp"

namespace lgih {

/// Even-degree Betti numbers h_0..h_d of a word variety.
class HVector {
 public:
  HVector() = default;
  explicit HVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
  HVector(std::initializer_list<long> values);

  std::size_t size() const noexcept { return entries_.size(); }
  const Rational& operator[](std::size_t k) const { return entries_[k]; }
  std::span<const Rational> entries() const noexcept { return entries_; }

  bool is_palindromic() const;
  Rational sum() const;

  friend HVector operator-(const HVector& a, const HVector& b);
  friend bool operator==(const HVector& a, const HVector& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<Rational> entries_;
};

std::string to_string(const HVector& h);

/// Convolution with (1, 1): the product with a projective line.
HVector rule_I(const HVector& h);

/// Repeats the middle term; defined on palindromes only (DomainError otherwise).
HVector rule_C(const HVector& h);

/// Applies the rules right to left starting from (1).
HVector eval_word(std::string_view word);

struct IcReport {
  bool holds;
  HVector lhs;  // I (I - C) C h
  HVector rhs;  // (I - C) C I h
};

IcReport ic_check(const HVector& h);

/*
 * Per-degree linear forms over flag-vector coordinates. coefficients[k] has
 * 2^n entries and maps a flag vector to h_k.
 */
struct LinearFit {
  int dim;
  std::vector<std::vector<Rational>> coefficients;

  HVector apply(const FlagVector& f) const;
};

using TrainingPair = std::pair<FlagVector, HVector>;

/// Solves for forms reproducing every training pair exactly; throws
/// DomainError("no linear function fits") when the system is inconsistent.
LinearFit fit(std::span<const TrainingPair> training);

/// Fits and evaluates at `query`. Throws DomainError("prediction not
/// determined") when the query is outside the span of training flag vectors.
HVector fit_and_predict(std::span<const TrainingPair> training, const FlagVector& query);

/// Training set of all IC polytopes of dimension n paired with eval_word.
std::vector<TrainingPair> ic_training(int n);

}  // namespace lgih

#endif  // LGIH_HCALC_HPP
