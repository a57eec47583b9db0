#include "lgih/json_io.hpp"

#include <fstream>
#include <sstream>

#include "lgih/error.hpp"

namespace lgih {

namespace {

template <class T>
T field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw ValidationError(std::string(what) + ": missing field \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ValidationError(std::string(what) + ": field \"" + key + "\" has the wrong type");
  }
}

}  // namespace

Json rational_to_json(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1 && c.get_num().fits_slong_p()) return c.get_num().get_si();
  return to_string(c);
}

Json to_json(const HVector& h) {
  Json out = Json::array();
  for (const auto& e : h.entries()) out.push_back(rational_to_json(e));
  return out;
}

Json to_json(const FlagVector& f) {
  Json out = Json::object();
  for (std::uint32_t mask = 0; mask < f.entries().size(); ++mask) out[FlagVector::mask_key(mask)] = f[mask];
  return out;
}

FlagVector flag_vector_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("flag vector: expected an object");
  const std::size_t n = j.size();
  int dim = 0;
  while ((std::size_t{1} << dim) < n) ++dim;
  if ((std::size_t{1} << dim) != n) throw ValidationError("flag vector: expected 2^n entries");
  std::vector<std::uint64_t> entries(n, 0);
  std::vector<bool> seen(n, false);
  for (const auto& [key, value] : j.items()) {
    std::uint32_t mask = 0;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
      int k = -1;
      try {
        k = std::stoi(part);
      } catch (const std::exception&) {
        throw ValidationError("flag vector: bad key \"" + key + "\"");
      }
      if (k < 0 || k >= dim) throw ValidationError("flag vector: key \"" + key + "\" out of range");
      mask |= std::uint32_t{1} << k;
    }
    if (seen[mask]) throw ValidationError("flag vector: duplicate key \"" + key + "\"");
    seen[mask] = true;
    if (!value.is_number_unsigned()) throw ValidationError("flag vector: entries must be non-negative integers");
    entries[mask] = value.get<std::uint64_t>();
  }
  return FlagVector(dim, std::move(entries));
}

Json to_json(const FaceLattice& lattice) {
  Json faces = Json::array();
  for (std::size_t f = 0; f < lattice.size(); ++f)
    faces.push_back({{"id", lattice.face(f).id}, {"dim", lattice.face(f).dim}});
  Json covers = Json::array();
  for (auto [lo, hi] : lattice.covers()) covers.push_back({lattice.face(lo).id, lattice.face(hi).id});
  return {{"dim", lattice.dim()}, {"faces", std::move(faces)}, {"covers", std::move(covers)}};
}

FaceLattice lattice_from_json(const Json& j) {
  const char* what = "lattice";
  int dim = field<int>(j, "dim", what);
  std::vector<FaceLattice::Face> faces;
  for (const auto& f : field<Json>(j, "faces", what))
    faces.push_back({field<std::string>(f, "id", "lattice face"), field<int>(f, "dim", "lattice face")});
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& c : field<Json>(j, "covers", what)) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      throw ValidationError("lattice: each cover must be a pair of face ids");
    covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  return FaceLattice::from_ids(dim, std::move(faces), covers);
}

Json perversity_to_json(const Perversity& p) {
  if (p.is_middle()) return "middle";
  Json out = Json::object();
  for (auto [c, v] : p.values()) out[std::to_string(c)] = v;
  return out;
}

Json to_json(const StratifiedComplex& k) {
  Json vertices = Json::array();
  Json strata = Json::object();
  for (VertexId v = 0; v < k.vertex_count(); ++v) {
    vertices.push_back(k.name(v));
    strata[k.name(v)] = k.label(v);
  }
  Json maximal = Json::array();
  for (const auto& s : k.maximal_simplices()) {
    Json names = Json::array();
    for (auto v : s) names.push_back(k.name(v));
    maximal.push_back(std::move(names));
  }
  return {{"dim", k.dim()},
          {"vertices", std::move(vertices)},
          {"strata", std::move(strata)},
          {"maximal_simplices", std::move(maximal)},
          {"perversity", perversity_to_json(k.perversity())}};
}

StratifiedComplex complex_from_json(const Json& j) {
  const char* what = "complex";
  int dim = field<int>(j, "dim", what);
  auto names = field<std::vector<std::string>>(j, "vertices", what);
  auto strata = field<Json>(j, "strata", what);
  if (!strata.is_object()) throw ValidationError("complex: \"strata\" must be an object");

  std::vector<StratifiedComplex::Vertex> vertices;
  std::map<std::string, VertexId> index;
  for (const auto& name : names) {
    if (!strata.contains(name)) throw ValidationError("complex: no stratum label for vertex '" + name + "'");
    if (!strata[name].is_number_integer()) throw ValidationError("complex: stratum label of '" + name + "' must be an integer");
    if (!index.emplace(name, static_cast<VertexId>(vertices.size())).second)
      throw ValidationError("complex: duplicate vertex '" + name + "'");
    vertices.push_back({name, strata[name].get<int>()});
  }
  for (const auto& [name, value] : strata.items())
    if (!index.count(name)) throw ValidationError("complex: stratum label for unknown vertex '" + name + "'");

  std::vector<std::vector<VertexId>> maximal;
  for (const auto& s : field<Json>(j, "maximal_simplices", what)) {
    if (!s.is_array()) throw ValidationError("complex: each maximal simplex must be an array of vertex names");
    std::vector<VertexId> ids;
    for (const auto& v : s) {
      if (!v.is_string()) throw ValidationError("complex: vertex references must be strings");
      auto it = index.find(v.get<std::string>());
      if (it == index.end()) throw ValidationError("complex: unknown vertex '" + v.get<std::string>() + "'");
      ids.push_back(it->second);
    }
    maximal.push_back(std::move(ids));
  }

  Perversity perversity = Perversity::middle();
  if (j.contains("perversity")) {
    const auto& p = j["perversity"];
    if (p.is_string()) {
      if (p.get<std::string>() != "middle")
        throw ValidationError("complex: perversity must be \"middle\" or a codimension table");
    } else if (p.is_object()) {
      std::map<int, int> table;
      for (const auto& [key, value] : p.items()) {
        int c = 0;
        try {
          c = std::stoi(key);
        } catch (const std::exception&) {
          throw ValidationError("complex: perversity key \"" + key + "\" is not an integer");
        }
        if (!value.is_number_integer()) throw ValidationError("complex: perversity values must be integers");
        table[c] = value.get<int>();
      }
      perversity = Perversity::table(std::move(table));
    } else {
      throw ValidationError("complex: perversity must be \"middle\" or a codimension table");
    }
  }
  return StratifiedComplex(dim, std::move(vertices), maximal, std::move(perversity));
}

Json to_json(const LinearFit& fit) {
  Json out = Json::object();
  for (std::size_t k = 0; k < fit.coefficients.size(); ++k) {
    Json row = Json::array();
    for (const auto& c : fit.coefficients[k]) row.push_back(rational_to_json(c));
    out[std::to_string(k)] = std::move(row);
  }
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

}  // namespace lgih
