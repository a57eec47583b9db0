#include "cli.hpp"

#include <algorithm>
#include <exception>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lgih/complex.hpp"
#include "lgih/error.hpp"
#include "lgih/facelattice.hpp"
#include "lgih/hcalc.hpp"
#include "lgih/ihomology.hpp"
#include "lgih/json_io.hpp"
#include "lgih/lghomology.hpp"
#include "lgih/stratsimplex.hpp"

namespace lgih::cli {
namespace {

Json sizes_to_json(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

Json cmd_word(const std::string& word) {
  check_word(word);
  return Json{{"h", to_json(eval_word(word))}};
}

Json cmd_iccheck(int max_len) {
  if (max_len < 0) throw ValidationError("iccheck: --max-len must be non-negative");
  std::size_t words = 0;
  Json failures = Json::array();
  for (int n = 0; n <= max_len; ++n)
    for (const auto& w : ic_words(n)) {
      ++words;
      auto r = ic_check(eval_word(w));
      if (!r.holds) failures.push_back(Json{{"word", w}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}});
    }
  return Json{{"words", words}, {"all_hold", failures.empty()}, {"failures", failures}};
}

Json cmd_flag(const std::string& path) {
  auto lattice = lattice_from_json(read_json_file(path));
  return Json{{"dim", lattice.dim()}, {"flag", to_json(flag_vector(lattice))}};
}

Json cmd_fibrank(int dim) {
  if (dim < 0 || dim > 12) throw ValidationError("fibrank: --dim must lie in 0..12");
  std::vector<FaceLattice> lattices;
  for (const auto& w : ic_words(dim)) lattices.push_back(from_word(w));
  auto r = flag_rank(std::span<const FaceLattice>(lattices));
  auto fib = fibonacci(dim + 1);
  return Json{{"rank", r}, {"fibonacci", fib}, {"match", r == fib}};
}

// Accepts either a lattice document or a bare flag vector.
FlagVector query_from_json(const Json& j) {
  if (j.is_object() && j.contains("faces")) return flag_vector(lattice_from_json(j));
  return flag_vector_from_json(j);
}

Json cmd_fit(int dim, const std::string& predict) {
  if (dim < 0 || dim > 10) throw ValidationError("fit: --dim must lie in 0..10");
  auto training = ic_training(dim);
  auto f = fit(training);
  Json out{{"dim", dim}, {"training", training.size()}, {"fit", to_json(f)}};
  if (!predict.empty()) {
    auto query = query_from_json(read_json_file(predict));
    if (query.dim() != dim) throw DomainError("fit: query dimension differs from --dim");
    out["h"] = to_json(fit_and_predict(training, query));
  }
  return out;
}

Json cmd_ih(const std::string& path) {
  auto k = complex_from_json(read_json_file(path));
  auto r = ih_ranks(k);
  return Json{{"ranks", sizes_to_json(r.ranks)},
              {"perversity", perversity_to_json(k.perversity())},
              {"cycles", sizes_to_json(r.cycles)},
              {"boundaries", sizes_to_json(r.boundaries)},
              {"allowable", sizes_to_json(r.allowable)}};
}

Json cmd_lg(const std::string& path, const std::string& dim_seq, int w1) {
  auto shape = StratifiedShape::parse(dim_seq);
  if (shape.order() != 1 || shape.dims()[1] != 0)
    throw DomainError("lg: --dim-seq must have the form i,0");
  auto k = complex_from_json(read_json_file(path));
  if (w1 < 0 || w1 > k.dim()) throw ValidationError("lg: --w must lie in 0..dim");
  auto r = lg_ranks(k, shape.dims()[0], WSequence{{w1}});
  return Json{{"rank", r.rank},
              {"cells", Json{{"cone", r.cone_cells}, {"higher_cone", r.higher_cone_cells}, {"prism", r.prism_cells}}},
              {"w", Json::array({w1})},
              {"cycles", r.cycles},
              {"boundaries", r.boundaries}};
}

Json cmd_shapes(bool dd, int max_total_dim) {
  if (max_total_dim < 0 || max_total_dim > 10) throw ValidationError("shapes: --max-total-dim must lie in 0..10");
  auto shapes = shapes_up_to(max_total_dim);
  if (dd) {
    bool all = std::all_of(shapes.begin(), shapes.end(), [](const auto& s) { return dd_check(s); });
    return Json{{"all_zero", all}};
  }
  Json list = Json::array();
  for (const auto& s : shapes) {
    Json loci = Json::array();
    for (const auto& a : apex_loci(s)) loci.push_back(Json{{"index", a.index}, {"locus", a.descriptor}, {"dim", a.dim}});
    list.push_back(Json{{"shape", s.to_string()}, {"total_dim", s.total_dim()}, {"facets", facets(s).size()}, {"apex_loci", loci}});
  }
  return Json{{"shapes", list}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Intersection and local-global homology toolkit", "lgih"};
  app.require_subcommand(1);

  std::string word;
  auto* word_cmd = app.add_subcommand("word", "h-vector of an IC word");
  word_cmd->add_option("--word", word, "word over {I,C}")->required();

  int max_len = 6;
  auto* ic_cmd = app.add_subcommand("iccheck", "verify the IC-equation on all words");
  ic_cmd->add_option("--max-len", max_len, "longest word length")->capture_default_str();

  std::string flag_in;
  auto* flag_cmd = app.add_subcommand("flag", "flag vector of a face lattice");
  flag_cmd->add_option("--in", flag_in, "lattice JSON")->required();

  int fib_dim = 0;
  auto* fib_cmd = app.add_subcommand("fibrank", "flag rank of all IC lattices of a dimension");
  fib_cmd->add_option("--dim", fib_dim, "polytope dimension")->required();

  int fit_dim = 0;
  std::string predict;
  auto* fit_cmd = app.add_subcommand("fit", "fit h as a linear function of the flag vector");
  fit_cmd->add_option("--dim", fit_dim, "polytope dimension")->required();
  fit_cmd->add_option("--predict", predict, "lattice or flag vector JSON to evaluate");

  std::string ih_in;
  auto* ih_cmd = app.add_subcommand("ih", "intersection homology ranks");
  ih_cmd->add_option("--in", ih_in, "complex JSON")->required();

  std::string lg_in, dim_seq;
  int w1 = 0;
  auto* lg_cmd = app.add_subcommand("lg", "local-global homology rank");
  lg_cmd->add_option("--in", lg_in, "complex JSON")->required();
  lg_cmd->add_option("--dim-seq", dim_seq, "dimension sequence i,0")->required();
  lg_cmd->add_option("--w", w1, "w-sequence entry w1")->required();

  bool dd = false;
  int max_total = 0;
  auto* shapes_cmd = app.add_subcommand("shapes", "stratified simplex shapes");
  shapes_cmd->add_flag("--dd-check", dd, "check d∘d = 0 on every shape");
  shapes_cmd->add_option("--max-total-dim", max_total, "largest total dimension")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return user_error;
  }

  try {
    Json result;
    if (*word_cmd) result = cmd_word(word);
    else if (*ic_cmd) result = cmd_iccheck(max_len);
    else if (*flag_cmd) result = cmd_flag(flag_in);
    else if (*fib_cmd) result = cmd_fibrank(fib_dim);
    else if (*fit_cmd) result = cmd_fit(fit_dim, predict);
    else if (*ih_cmd) result = cmd_ih(ih_in);
    else if (*lg_cmd) result = cmd_lg(lg_in, dim_seq, w1);
    else result = cmd_shapes(dd, max_total);
    out << result.dump() << '\n';
    return ok;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return user_error;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return user_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return internal_error;
  }
}

}  // namespace lgih::cli
