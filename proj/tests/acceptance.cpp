#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "lgih/complex.hpp"
#include "lgih/error.hpp"
#include "lgih/facelattice.hpp"
#include "lgih/hcalc.hpp"
#include "lgih/ihomology.hpp"
#include "lgih/lghomology.hpp"
#include "lgih/stratsimplex.hpp"
#include "oracle.hpp"

using namespace lgih;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;  // 0 for none
  std::function<Outcome()> check;
};

template <class T>
std::string seq(const std::vector<T>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ')';
  return os.str();
}

// First regular vertex that can become a point stratum without breaking the filtration.
std::optional<StratifiedComplex> mark_point(const StratifiedComplex& k) {
  std::vector<int> labels;
  for (VertexId v = 0; v < k.vertex_count(); ++v) labels.push_back(k.label(v));
  for (VertexId v = 0; v < k.vertex_count(); ++v) {
    if (labels[v] < k.dim()) continue;
    auto trial = labels;
    trial[v] = 0;
    try {
      return k.relabeled(trial);
    } catch (const ValidationError&) {
    }
  }
  return std::nullopt;
}

StratifiedComplex all_regular(const StratifiedComplex& k) {
  return k.relabeled(std::vector<int>(k.vertex_count(), k.dim()));
}

Outcome rule_c_table() {
  const long a = 1, b = 2, c = 3;
  std::vector<std::pair<HVector, HVector>> rows{{HVector{a}, HVector{a, a}},
                                                {HVector{a, a}, HVector{a, a, a}},
                                                {HVector{a, b, a}, HVector{a, b, b, a}},
                                                {HVector{a, b, b, a}, HVector{a, b, b, b, a}},
                                                {HVector{a, b, c, b, a}, HVector{a, b, c, c, b, a}}};
  for (const auto& [in, want] : rows)
    if (rule_C(in) != want) return {false, to_string(in) + " -> " + to_string(rule_C(in))};
  return {true, "5 rows"};
}

Outcome segment() {
  auto i = eval_word("I"), c = eval_word("C");
  return {i == HVector{1, 1} && c == i, "I=" + to_string(i) + " C=" + to_string(c)};
}

Outcome ic_equation() {
  std::size_t n = 0, bad = 0;
  for (int len = 1; len <= 6; ++len)
    for (const auto& w : ic_words(len)) {
      ++n;
      if (!ic_check(eval_word(w)).holds) ++bad;
    }
  return {n == 126 && bad == 0, std::to_string(n) + " words, " + std::to_string(bad) + " failures"};
}

Outcome fibonacci_rank() {
  std::vector<std::size_t> got;
  for (int n = 1; n <= 5; ++n) {
    std::vector<FaceLattice> ls;
    for (const auto& w : ic_words(n)) ls.push_back(from_word(w));
    got.push_back(flag_rank(std::span<const FaceLattice>(ls)));
  }
  return {got == std::vector<std::size_t>{1, 2, 3, 5, 8}, "ranks " + seq(got)};
}

Outcome octahedron_fit() {
  auto training = ic_training(3);
  auto h = fit_and_predict(training, flag_vector(corpus::lattice("octahedron")));
  return {h == HVector{1, 3, 3, 1}, "want (1,3,3,1), got " + to_string(h)};
}

Outcome dd_everywhere() {
  std::size_t shapes = 0;
  for (const auto& s : shapes_up_to(6)) {
    ++shapes;
    if (!dd_check(s)) return {false, "shape " + s.to_string()};
  }
  std::size_t cells = 0;
  for (const auto& name : corpus::all_complexes()) {
    auto k = corpus::complex(name);
    if (k.vertex_count() > 8) continue;
    for (int i = 0; i <= 2; ++i) {
      for (const auto& c : enumerate_cone_cells(k, i)) {
        CellChain ch;
        ch.add(c, 1);
        ++cells;
        if (!boundary(boundary(ch)).empty()) return {false, name + " cone cell"};
      }
      for (const auto& c : enumerate_prism_cells(k, i)) {
        CellChain ch;
        ch.add(c, 1);
        ++cells;
        if (!boundary(boundary(ch)).empty()) return {false, name + " prism cell"};
      }
    }
  }
  return {true, std::to_string(shapes) + " shapes, " + std::to_string(cells) + " cells"};
}

Outcome trivial_filtration() {
  std::size_t n = 0;
  for (const auto& name : corpus::all_complexes()) {
    auto k = all_regular(corpus::complex(name));
    auto ih = ih_ranks(k).ranks;
    if (ih != oracle::ordinary_betti(k)) return {false, name + " " + seq(ih)};
    ++n;
  }
  return {n >= 5, std::to_string(n) + " complexes"};
}

Outcome suspended_torus() {
  auto k = corpus::complex("suspension_torus");
  auto ih = ih_ranks(k).ranks;
  auto ord = ordinary_ranks(k).ranks;
  bool ok = ih == std::vector<std::size_t>{1, 2, 2, 1} && ord == std::vector<std::size_t>{1, 0, 2, 1};
  return {ok, "IH want (1,2,2,1), got " + seq(ih) + "; H got " + seq(ord)};
}

Outcome palindromic() {
  std::string bad;
  for (const auto& name : corpus::pseudomanifolds()) {
    auto r = ih_ranks(corpus::complex(name)).ranks;
    std::vector<std::size_t> rev(r.rbegin(), r.rend());
    if (r != rev) bad += (bad.empty() ? "" : ", ") + name + seq(r);
  }
  return {bad.empty(), bad.empty() ? std::to_string(corpus::pseudomanifolds().size()) + " spaces" : bad};
}

Outcome local_global() {
  auto k = corpus::complex("cone_hexagon");
  auto r0 = lg_ranks(k, 0, WSequence{{0}}).rank;
  auto r1 = lg_ranks(k, 1, WSequence{{0}}).rank;
  if (r0 != 1 || r1 != 0) return {false, "cone_hexagon " + seq(std::vector<std::size_t>{r0, r1})};
  if (r0 != oracle::lg_rank(k, 0, 0).rank || r1 != oracle::lg_rank(k, 1, 0).rank) return {false, "oracle disagrees"};

  std::size_t comparisons = 0;
  auto same = [&](const StratifiedComplex& a, const StratifiedComplex& b, const std::string& what) -> std::string {
    for (int i = 0; i <= 1; ++i) {
      ++comparisons;
      auto x = lg_ranks(a, i, WSequence{{0}}).rank, y = lg_ranks(b, i, WSequence{{0}}).rank;
      if (x != y) return what + " i=" + std::to_string(i) + ": " + std::to_string(x) + " vs " + std::to_string(y);
    }
    return {};
  };
  for (const auto& name : corpus::all_complexes()) {
    auto base = corpus::complex(name);
    std::string err;
    if (auto alt = mark_point(base)) {
      err = same(base, *alt, name + " marked point");
    } else {
      auto sd = barycentric_subdivision(base);
      auto alt_sd = mark_point(sd);
      if (!alt_sd) return {false, name + ": no refinement"};
      err = same(base, *alt_sd, name + " subdivided marked point");
    }
    if (err.empty() && (name == "cone_hexagon" || name == "suspension_hexagon"))
      err = same(base, all_regular(base), name + " unstratified");
    if (err.empty() && base.vertex_count() <= 8)
      err = same(base, barycentric_subdivision(base), name + " subdivision");
    if (!err.empty()) return {false, err};
  }
  return {true, "ranks 1,0; " + std::to_string(comparisons) + " comparisons"};
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "rule C table at (a,b,c)=(1,2,3)", 1.0, rule_c_table},
      {2, "segment h from I and C", 0, segment},
      {3, "IC equation on all words of length 1..6", 0, ic_equation},
      {4, "flag span of IC words is Fibonacci for n=1..5", 30.0, fibonacci_rank},
      {5, "fitted linear h predicts octahedron (1,3,3,1)", 0, octahedron_fit},
      {6, "d squared vanishes on shapes and complex cells", 60.0, dd_everywhere},
      {7, "trivial filtration recovers ordinary homology", 0, trivial_filtration},
      {8, "suspended torus IH (1,2,2,1), H (1,0,2,1)", 0, suspended_torus},
      {9, "IH palindromic on closed pseudomanifolds", 0, palindromic},
      {10, "local-global ranks, refinement and subdivision invariance", 120.0, local_global},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && s > c.limit_s) {
      o.pass = false;
      o.detail += " (over time limit)";
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %2d %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), o.detail.c_str(), s);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}
