#include "lgih/hcalc.hpp"

#include <algorithm>

#include "lgih/error.hpp"

namespace lgih {

HVector::HVector(std::initializer_list<long> values) {
  for (long v : values) entries_.emplace_back(v);
}

bool HVector::is_palindromic() const {
  return std::equal(entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(entries_.size() / 2),
                    entries_.rbegin());
}

Rational HVector::sum() const {
  Rational s = 0;
  for (const auto& e : entries_) s += e;
  return s;
}

HVector operator-(const HVector& a, const HVector& b) {
  std::vector<Rational> out(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] -= b[k];
  return HVector(std::move(out));
}

std::string to_string(const HVector& h) {
  std::string s = "(";
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (k) s += ",";
    s += to_string(h[k]);
  }
  return s + ")";
}

HVector rule_I(const HVector& h) {
  std::vector<Rational> out(h.size() + 1);
  for (std::size_t k = 0; k < h.size(); ++k) {
    out[k] += h[k];
    out[k + 1] += h[k];
  }
  return HVector(std::move(out));
}

HVector rule_C(const HVector& h) {
  if (h.size() == 0) throw DomainError("rule_C: empty h-vector");
  if (!h.is_palindromic())
    throw DomainError("rule_C: defined only on palindromic h-vectors, got " + to_string(h));
  const std::size_t len = h.size();
  const std::size_t keep = (len - 1) / 2;
  std::vector<Rational> out(len + 1);
  for (std::size_t j = 0; j <= len; ++j) out[j] = (j <= keep) ? h[j] : h[j - 1];
  return HVector(std::move(out));
}

HVector eval_word(std::string_view word) {
  check_word(word);
  HVector h{1};
  for (auto it = word.rbegin(); it != word.rend(); ++it) h = (*it == 'I') ? rule_I(h) : rule_C(h);
  return h;
}

IcReport ic_check(const HVector& h) {
  const HVector c = rule_C(h);
  HVector lhs = rule_I(rule_I(c) - rule_C(c));
  const HVector i = rule_I(h);
  const HVector ci = rule_C(i);
  HVector rhs = rule_I(ci) - rule_C(ci);
  bool holds = lhs == rhs;
  return {holds, std::move(lhs), std::move(rhs)};
}

HVector LinearFit::apply(const FlagVector& f) const {
  if (f.dim() != dim) throw DomainError("LinearFit::apply: flag vector has the wrong dimension");
  const auto x = f.as_rationals();
  std::vector<Rational> out;
  for (const auto& m : coefficients) {
    Rational s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += m[j] * x[j];
    out.push_back(std::move(s));
  }
  return HVector(std::move(out));
}

namespace {

DenseMatrix training_matrix(std::span<const TrainingPair> training) {
  if (training.empty()) throw DomainError("fit: empty training set");
  const int n = training.front().first.dim();
  DenseMatrix a;
  for (const auto& [f, h] : training) {
    if (f.dim() != n) throw DomainError("fit: training flag vectors of mixed dimension");
    if (h.size() != training.front().second.size())
      throw DomainError("fit: training h-vectors of mixed length");
    a.append_row(f.as_rationals());
  }
  return a;
}

}  // namespace

LinearFit fit(std::span<const TrainingPair> training) {
  const DenseMatrix a = training_matrix(training);
  LinearFit result{training.front().first.dim(), {}};
  const std::size_t degrees = training.front().second.size();
  for (std::size_t k = 0; k < degrees; ++k) {
    std::vector<Rational> b;
    for (const auto& pair : training) b.push_back(pair.second[k]);
    auto x = solve(a, b);
    if (!x) throw DomainError("no linear function fits (degree " + std::to_string(k) + ")");
    result.coefficients.push_back(std::move(*x));
  }
  return result;
}

HVector fit_and_predict(std::span<const TrainingPair> training, const FlagVector& query) {
  DenseMatrix a = training_matrix(training);
  if (query.dim() != training.front().first.dim())
    throw DomainError("fit_and_predict: query has the wrong dimension");
  const std::size_t before = rank(a);
  a.append_row(query.as_rationals());
  if (rank(std::move(a)) != before) throw DomainError("prediction not determined");
  return fit(training).apply(query);
}

std::vector<TrainingPair> ic_training(int n) {
  std::vector<TrainingPair> out;
  for (const auto& w : ic_words(n)) out.emplace_back(flag_vector(from_word(w)), eval_word(w));
  return out;
}

}  // namespace lgih
