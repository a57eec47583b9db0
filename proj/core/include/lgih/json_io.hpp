#ifndef LGIH_JSON_IO_HPP
#define LGIH_JSON_IO_HPP

#include <filesystem>

#include <nlohmann/json.hpp>

#include "lgih/complex.hpp"
#include "lgih/facelattice.hpp"
#include "lgih/hcalc.hpp"
#include "lgih/linalg.hpp"

namespace lgih {

using Json = nlohmann::ordered_json;

/// Integers as JSON numbers, other rationals as "p/q" strings.
Json rational_to_json(const Rational& q);
Json to_json(const HVector& h);

/// {"": 1, "0": f_0, "0,1": f_01, ...} keyed by FlagVector::mask_key.
Json to_json(const FlagVector& f);
FlagVector flag_vector_from_json(const Json& j);

/// {"dim": n, "faces": [{"id", "dim"}...], "covers": [[lo, hi]...]}
Json to_json(const FaceLattice& lattice);
FaceLattice lattice_from_json(const Json& j);

/// {"dim": m, "vertices": [...], "strata": {v: s}, "maximal_simplices": [[...]],
///  "perversity": "middle" | {"2": 0, ...}}
Json to_json(const StratifiedComplex& k);
StratifiedComplex complex_from_json(const Json& j);

Json perversity_to_json(const Perversity& p);

/// {degree: [coefficients]}
Json to_json(const LinearFit& fit);

/// Reads a file and parses it; ValidationError on I/O or syntax errors.
Json read_json_file(const std::filesystem::path& path);

}  // namespace lgih

#endif  // LGIH_JSON_IO_HPP
