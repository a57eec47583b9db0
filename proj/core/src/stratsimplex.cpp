#include "lgih/stratsimplex.hpp"

#include <charconv>
#include <map>
#include <numeric>

#include "lgih/error.hpp"

namespace lgih {

StratifiedShape::StratifiedShape(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw ValidationError("StratifiedShape: empty dimension sequence");
  for (int d : dims_)
    if (d < 0) throw ValidationError("StratifiedShape: dimensions must be non-negative");
}

StratifiedShape StratifiedShape::parse(std::string_view text) {
  std::vector<int> dims;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    auto field = text.substr(pos, end - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
      throw ParseError("expected a non-negative integer in dimension sequence", pos);
    if (value < 0) throw ParseError("negative dimension in dimension sequence", pos);
    dims.push_back(value);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return StratifiedShape(std::move(dims));
}

int StratifiedShape::total_dim() const noexcept {
  return std::accumulate(dims_.begin(), dims_.end(), 0) + order();
}

std::string StratifiedShape::to_string() const {
  std::string s;
  for (std::size_t j = 0; j < dims_.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(dims_[j]);
  }
  return s;
}

namespace {

// A face of a standard stratified simplex: the surviving vertices of each
// factor, indexed like StratifiedShape::dims().
using Face = std::vector<std::vector<int>>;

struct SignedFace {
  std::size_t factor;
  int local;
  int sign;
  Face face;
};

std::vector<SignedFace> signed_facets(const Face& face) {
  std::vector<SignedFace> out;
  int offset = 0;
  for (std::size_t j = face.size(); j-- > 0;) {
    const auto& verts = face[j];
    if (verts.size() >= 2) {
      for (std::size_t l = 0; l < verts.size(); ++l) {
        Face child = face;
        child[j].erase(child[j].begin() + static_cast<std::ptrdiff_t>(l));
        int q = offset + static_cast<int>(l);
        out.push_back({j, static_cast<int>(l), (q % 2 == 0) ? 1 : -1, std::move(child)});
      }
    }
    offset += static_cast<int>(verts.size());
  }
  return out;
}

Face standard_face(const StratifiedShape& shape) {
  Face face;
  for (int d : shape.dims()) {
    std::vector<int> verts(static_cast<std::size_t>(d) + 1);
    std::iota(verts.begin(), verts.end(), 0);
    face.push_back(std::move(verts));
  }
  return face;
}

StratifiedShape shape_of(const Face& face) {
  std::vector<int> dims;
  for (const auto& v : face) dims.push_back(static_cast<int>(v.size()) - 1);
  return StratifiedShape(std::move(dims));
}

}  // namespace

std::vector<FacetRef> facets(const StratifiedShape& shape) {
  std::vector<FacetRef> out;
  for (auto& f : signed_facets(standard_face(shape)))
    out.push_back({shape, f.factor, f.local, f.sign, shape_of(f.face)});
  return out;
}

std::vector<ApexLocus> apex_loci(const StratifiedShape& shape) {
  std::vector<ApexLocus> out;
  const auto& d = shape.dims();
  const int r = shape.order();
  // A_j of sigma(i_0..i_k) for j <= k, built outward from its defining factor
  for (int j = r; j >= 1; --j) {
    std::string desc = "sigma" + std::to_string(d[static_cast<std::size_t>(j)]) + " x {0}";
    int dim = d[static_cast<std::size_t>(j)];
    for (int k = j + 1; k <= r; ++k) {
      desc = "sigma" + std::to_string(d[static_cast<std::size_t>(k)]) + " x C(" + desc + ")";
      dim += d[static_cast<std::size_t>(k)] + 1;
    }
    out.push_back({j, std::move(desc), dim});
  }
  return out;
}

bool dd_check(const StratifiedShape& shape) {
  std::map<Face, int> total;
  for (const auto& f : signed_facets(standard_face(shape)))
    for (const auto& g : signed_facets(f.face)) total[g.face] += f.sign * g.sign;
  for (const auto& [face, coeff] : total)
    if (coeff != 0) return false;
  return true;
}

namespace {

void extend(std::vector<int>& prefix, int budget, std::size_t length,
            std::vector<StratifiedShape>& out) {
  if (prefix.size() == length) {
    out.emplace_back(prefix);
    return;
  }
  for (int d = 0; d <= budget; ++d) {
    prefix.push_back(d);
    extend(prefix, budget - d, length, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<StratifiedShape> shapes_up_to(int max_total_dim) {
  std::vector<StratifiedShape> out;
  for (int r = 0; r <= max_total_dim; ++r) {
    std::vector<int> prefix;
    extend(prefix, max_total_dim - r, static_cast<std::size_t>(r) + 1, out);
  }
  return out;
}

}  // namespace lgih
