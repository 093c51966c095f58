#pragma once

// Command-line dispatch. Kept in a header so the test suite can call
// run() directly with in-memory streams.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fieldwork/algebras.hpp"
#include "fieldwork/cobordism.hpp"
#include "fieldwork/facthom.hpp"
#include "fieldwork/factline.hpp"
#include "fieldwork/fieldtheory.hpp"
#include "fieldwork/io/json.hpp"
#include "fieldwork/koszulduality.hpp"
#include "fieldwork/operads.hpp"
#include "fieldwork/vertex.hpp"
#include "fieldwork/weiss.hpp"

namespace fieldwork::cli {

using io::Json;

enum ExitCode : int { kOk = 0, kValidation = 1, kParse = 2 };

namespace detail {

inline std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

/// Inline JSON if the argument looks like JSON, otherwise a file path.
inline Json json_argument(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{')) return io::parse_json_text(arg, "argument");
  return io::read_json_file(arg);
}

inline Json window(std::size_t lo, std::size_t hi) { return Json::array({lo, hi}); }

inline Json dims_json(const std::vector<std::size_t>& v) { return Json(v); }

// --- human-readable rendering for --pretty ---------------------------------------

inline bool is_scalar(const Json& j) { return !j.is_array() && !j.is_object(); }

inline std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

inline bool is_flat_array(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return is_scalar(x); });
}

inline bool is_table(const Json& j) {
  return j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), [](const Json& x) { return is_flat_array(x); });
}

inline std::string flat_text(const Json& j) {
  std::string s;
  for (const auto& x : j) s += (s.empty() ? "" : " ") + scalar_text(x);
  return "[" + s + "]";
}

inline void render(const Json& j, std::ostream& out, const std::string& indent) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_scalar(value)) {
        out << indent << key << ": " << scalar_text(value) << '\n';
      } else if (is_flat_array(value)) {
        out << indent << key << ": " << flat_text(value) << '\n';
      } else {
        out << indent << key << ":\n";
        render(value, out, indent + "  ");
      }
    }
  } else if (is_table(j)) {
    std::size_t width = 0;
    for (const auto& row : j) {
      for (const auto& x : row) width = std::max(width, scalar_text(x).size());
    }
    for (const auto& row : j) {
      out << indent;
      for (const auto& x : row) out << std::setw(static_cast<int>(width + 1)) << scalar_text(x);
      out << '\n';
    }
  } else if (j.is_array()) {
    for (const auto& x : j) {
      if (is_scalar(x)) {
        out << indent << "- " << scalar_text(x) << '\n';
      } else if (is_flat_array(x)) {
        out << indent << "- " << flat_text(x) << '\n';
      } else {
        out << indent << "-\n";
        render(x, out, indent + "  ");
      }
    }
  } else {
    out << indent << scalar_text(j) << '\n';
  }
}

inline std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const cobordism::BoundaryMismatch*>(&e)) return "BoundaryMismatch";
  if (dynamic_cast<const algebras::DegeneratePairing*>(&e)) return "DegeneratePairing";
  if (dynamic_cast<const algebras::AxiomError*>(&e)) return "AxiomError";
  if (dynamic_cast<const ScaleError*>(&e)) return "ScaleError";
  if (dynamic_cast<const vertex::NegativePowersPresent*>(&e)) return "NegativePowersPresent";
  if (dynamic_cast<const ValidationError*>(&e)) return "ValidationError";
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const InternalError*>(&e)) return "InternalError";
  return "Error";
}

}  // namespace detail

/// Runs one invocation. argv[0] is the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with finite models of factorization algebras and field theories", "fieldwork"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Human-readable output instead of JSON");

  // Option storage shared by the subcommands.
  std::string algebra, expr, word, f_arg, g_arg, cover, table, vertex_file, ring_file, config, outer;
  std::vector<std::string> inners;
  int tft_dim = 2;
  std::size_t vdim = 1, genus = 0, nmax = 4, dim_v = 1, imax = 4, cap = 6, k = 2, points = 0, weight = 0;
  std::size_t truncation_n = 0, free_arity = 0;
  int truncation = 6, delta = 0;
  bool uncorrected = false, count_only = false;

  std::map<std::string, std::function<Json()>> handlers;
  auto sub = [&](const std::string& name, const std::string& help, std::function<Json()> h) {
    handlers[name] = std::move(h);
    return app.add_subcommand(name, help);
  };
  auto load_spec = [&] { return io::load_algebra_spec(algebra); };

  // --- cobordism ---
  auto* eval = sub("eval", "Evaluate a cobordism expression in a 1d or 2d TFT", [&]() -> Json {
    if (tft_dim != 1 && tft_dim != 2) throw ValidationError("--dim must be 1 or 2");
    if (tft_dim == 2 && algebra.empty()) throw ValidationError("--algebra is required for --dim 2");
    const cobordism::TFTData z = tft_dim == 1
                                     ? cobordism::TFTData{cobordism::Tft1d{vdim}}
                                     : cobordism::TFTData{cobordism::Tft2d(io::frobenius_algebra(load_spec()))};
    Json o;
    o["matrix"] = io::to_json(cobordism::evaluate_tft(expr, z));
    return o;
  });
  eval->add_option("--dim", tft_dim, "TFT dimension (1 or 2)")->required();
  eval->add_option("--algebra", algebra, "Frobenius algebra spec (dimension 2)");
  eval->add_option("--vdim", vdim, "dim V for the 1d theory")->check(CLI::PositiveNumber);
  eval->add_option("--expr", expr, "Cobordism expression")->required();

  auto* surface = sub("surface", "Closed genus-g surface invariant", [&]() -> Json {
    Json o;
    o["value"] = cobordism::closed_surface_invariant(io::frobenius_algebra(load_spec()), genus).str();
    return o;
  });
  surface->add_option("--algebra", algebra)->required();
  surface->add_option("--genus", genus)->required();

  // --- factorization homology ---
  auto* hh = sub("hochschild", "Hochschild homology dimensions", [&]() -> Json {
    if (nmax == 0) throw ValidationError("--nmax must be positive");
    Json o;
    o["dims"] = facthom::hochschild_dims(io::associative_algebra(load_spec()), nmax);
    o["window"] = {{"degrees", detail::window(0, nmax - 1)}, {"complex_built_to", nmax}};
    return o;
  });
  hh->add_option("--algebra", algebra)->required();
  hh->add_option("--nmax", nmax, "Number of degrees reported");

  auto* exc = sub("excision-hh0", "HH_0 as A tensored with itself over A (x) A^op", [&]() -> Json {
    Json o;
    o["hh0"] = facthom::hh0_via_excision(io::associative_algebra(load_spec()));
    return o;
  });
  exc->add_option("--algebra", algebra)->required();

  auto* fvh = sub("free-vs-hh", "Configuration-space side against Hochschild of T(V) on the circle", [&]() -> Json {
    const auto cmp = facthom::free_factorization_homology_s1(dim_v, imax);
    Json o;
    o["configuration"] = io::to_json(cmp.configuration);
    o["hochschild"] = io::to_json(cmp.hochschild);
    o["agree"] = cmp.agree;
    o["window"] = {{"weights", detail::window(0, imax)}, {"degrees", detail::window(0, 2)}};
    return o;
  });
  fvh->add_option("--dim-v", dim_v)->required();
  fvh->add_option("--imax", imax, "Largest weight");

  // --- Lie algebras and Koszul duality ---
  auto* ce = sub("ce", "Chevalley-Eilenberg homology and cohomology", [&]() -> Json {
    const auto g = io::lie_algebra(load_spec());
    Json o;
    o["homology"] = algebras::ce_complex_homology(g);
    o["cohomology"] = algebras::ce_cochain_cohomology(g);
    return o;
  });
  ce->add_option("--algebra", algebra)->required();

  auto* uea = sub("uea", "PBW normal form of a word in U(g)", [&]() -> Json {
    const auto g = io::lie_algebra(load_spec());
    std::vector<std::size_t> w;
    for (const auto& name : detail::words(word)) {
      const auto& names = g.basis_names();
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) throw ParseError("unknown generator '" + name + "'");
      w.push_back(static_cast<std::size_t>(it - names.begin()));
    }
    const std::size_t t = truncation_n ? truncation_n : std::max<std::size_t>(w.size(), 1);
    const auto nf = algebras::uea_normal_form(g, w, t);
    Json terms = Json::array();
    for (const auto& [m, c] : nf.terms()) {
      Json mono = Json::array();
      for (auto i : m) mono.push_back(g.basis_names()[i]);
      terms.push_back(Json::array({mono, c.str()}));
    }
    Json o;
    o["normal_form"] = nf.str(g.basis_names());
    o["terms"] = std::move(terms);
    o["window"] = {{"word_length", detail::window(0, t)}};
    return o;
  });
  uea->add_option("--algebra", algebra)->required();
  uea->add_option("--word", word, "Generators separated by spaces")->required();
  uea->add_option("--truncation", truncation_n, "Largest admissible word length");

  auto* kz = sub("koszul", "Tor^A(Q, Q) from the reduced bar complex", [&]() -> Json {
    const auto spec = load_spec();
    Json o;
    if (spec.kind == "lie") {
      const std::size_t w = weight ? weight : nmax + 1;
      o["tor"] = koszul::bar_tor_dims(koszul::TruncatedEnveloping(io::lie_algebra(spec), w), nmax);
      o["window"] = {{"degrees", detail::window(0, nmax)}, {"pbw_weight", w}};
    } else {
      const koszul::AugmentedAlgebra a(io::associative_algebra(spec),
                                       io::vector_from_json(io::field(spec.extra, "augmentation")));
      o["tor"] = koszul::bar_tor_dims(a, nmax);
      o["window"] = {{"degrees", detail::window(0, nmax)}};
    }
    return o;
  });
  kz->add_option("--algebra", algebra, "Augmented algebra, or a Lie algebra for U(g)")->required();
  kz->add_option("--nmax", nmax);
  kz->add_option("--weight", weight, "PBW weight truncation for U(g); default nmax + 1");

  auto* kce = sub("koszul-ce", "Bar complex of U(g) against Lie algebra cochains", [&]() -> Json {
    const auto g = io::lie_algebra(load_spec());
    const auto cmp = koszul::koszul_dual_compare_ce(g, nmax);
    Json o;
    o["bar"] = cmp.bar;
    o["cochains"] = cmp.cochains;
    o["equal"] = cmp.equal;
    o["window"] = {{"degrees", detail::window(0, std::min(nmax, g.dim()))}, {"pbw_weight", nmax + 1}};
    return o;
  });
  kce->add_option("--algebra", algebra)->required();
  kce->add_option("--nmax", nmax);

  // --- quantization and critical loci ---
  auto* weyl = sub("weyl", "Normal-ordered form of a Weyl algebra word", [&]() -> Json {
    const auto nf = fieldtheory::weyl_normal_form(fieldtheory::parse_weyl_word(word));
    Json terms = Json::array();
    for (const auto& [m, c] : nf.terms()) terms.push_back(Json::array({Json(m), c.str()}));
    Json o;
    o["normal_form"] = nf.str();
    o["terms"] = std::move(terms);
    return o;
  });
  weyl->add_option("--word", word, "Word in p, q, hbar")->required();

  auto* poisson = sub("poisson", "Poisson bracket on Q[p, q]", [&]() -> Json {
    const auto b = fieldtheory::poisson_bracket(io::polynomial_from_json(detail::json_argument(f_arg)),
                                                io::polynomial_from_json(detail::json_argument(g_arg)));
    Json o;
    o["bracket"] = io::to_json(b);
    o["text"] = b.str({"p", "q"});
    return o;
  });
  poisson->add_option("--f", f_arg, "Polynomial (inline JSON or file)")->required();
  poisson->add_option("--g", g_arg, "Polynomial (inline JSON or file)")->required();

  auto* semi = sub("semiclassical", "Check [f, g] = hbar {f, g} mod hbar^2", [&]() -> Json {
    // The letters of the word name a normal-ordered monomial q^a p^b.
    auto symbol = [](const std::string& w) {
      unsigned qa = 0, pb = 0;
      for (auto letter : fieldtheory::parse_weyl_word(w)) {
        if (letter == fieldtheory::WeylLetter::Hbar) throw ValidationError("semiclassical check needs hbar-free symbols");
        (letter == fieldtheory::WeylLetter::Q ? qa : pb) += 1;
      }
      return fieldtheory::WeylElement::monomial(qa, pb);
    };
    const auto f = symbol(f_arg);
    const auto g = symbol(g_arg);
    const auto r = fieldtheory::semiclassical_check(f, g);
    Json o;
    o["holds"] = r.holds;
    o["commutator"] = r.commutator.str();
    o["bracket"] = r.bracket.str({"p", "q"});
    o["difference"] = r.difference.str();
    return o;
  });
  semi->add_option("--f", f_arg, "Monomial in p, q, read as the normal-ordered symbol")->required();
  semi->add_option("--g", g_arg, "Monomial in p, q, read as the normal-ordered symbol")->required();

  auto* dcrit = sub("dcrit", "Koszul homology of the Jacobian ideal of S", [&]() -> Json {
    const auto r = fieldtheory::dcrit_koszul_dims(io::polynomial_from_json(detail::json_argument(f_arg)), cap);
    Json o;
    o["nvars"] = r.nvars;
    o["partial_degree"] = r.partial_degree;
    o["zero_differential"] = r.zero_differential;
    o["complex_dims"] = r.complex_dims;
    o["homology"] = r.homology;
    o["window"] = {{"polynomial_degrees", detail::window(0, r.faithful_max)}, {"degree_cap", r.degree_cap}};
    return o;
  });
  dcrit->add_option("--poly", f_arg, "Homogeneous polynomial S (inline JSON or file)")->required();
  dcrit->add_option("--cap", cap, "Polynomial degree cap");

  // --- Weiss covers and Ran space ---
  auto* weiss_cmd = sub("weiss", "Weiss cover test with witness", [&]() -> Json {
    const auto spec = io::cover_spec_from_json(io::read_json_file(cover));
    const auto r = weiss::is_weiss_cover(spec.model, spec.family, k);
    const auto ran = weiss::weiss_ran_correspondence(spec.model, spec.family, k);
    Json o;
    o["weiss"] = r.is_weiss;
    o["witness"] = r.witness ? io::labels_of(spec.model, *r.witness) : Json(nullptr);
    o["ran_covered"] = ran.ran_covered;
    o["agree"] = ran.agree;
    o["k"] = k;
    return o;
  });
  weiss_cmd->add_option("--cover", cover, "Point model and cover family")->required();
  weiss_cmd->add_option("--k", k)->required()->check(CLI::PositiveNumber);

  auto* ran = sub("ran", "Enumerate Ran_{<=k} of a point model", [&]() -> Json {
    if (!points && cover.empty()) throw ValidationError("give --points or --cover");
    weiss::FinitePointModel m = points ? weiss::FinitePointModel::numbered(points)
                                       : io::cover_spec_from_json(io::read_json_file(cover)).model;
    const auto subsets = weiss::ran_points(m, k);
    Json o;
    o["count"] = subsets.size();
    if (!count_only) {
      Json list = Json::array();
      for (const auto& s : subsets) list.push_back(io::labels_of(m, s));
      o["subsets"] = std::move(list);
    }
    return o;
  });
  ran->add_option("--points", points, "Use points labelled 1..n");
  ran->add_option("--cover", cover, "Take the point model from a cover file");
  ran->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  ran->add_flag("--count-only", count_only);

  // --- operads ---
  auto* operad = sub("operad", "Compose little-intervals operations; free algebra dimensions", [&]() -> Json {
    auto element = [](const std::string& s) {
      std::vector<std::size_t> order;
      for (const auto& w : detail::words(s)) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
          v = std::stoul(w, &pos);
        } catch (const std::exception&) {
          pos = 0;
        }
        if (pos != w.size() || v == 0) throw ParseError("operation must list labels 1..k, got '" + w + "'");
        order.push_back(v - 1);
      }
      try {
        return operads::AssocOperadElement(order);
      } catch (const std::exception& e) {
        throw ValidationError(std::string("not a permutation: ") + s);
      }
    };
    Json o;
    if (!outer.empty()) {
      std::vector<operads::AssocOperadElement> in;
      for (const auto& s : inners) in.push_back(element(s));
      o["composite"] = operads::compose_assoc(element(outer), in).str();
    }
    if (free_arity) {
      o["free_algebra"] = {
          {"arity", free_arity},
          {"dim_v", dim_v},
          {"assoc", operads::free_algebra_component_dim(operads::assoc_sequence(free_arity), free_arity, dim_v)},
          {"comm", operads::free_algebra_component_dim(operads::comm_sequence(free_arity), free_arity, dim_v)}};
    }
    if (o.is_null()) throw ValidationError("give --outer with --inner, or --free-arity");
    return o;
  });
  operad->add_option("--outer", outer, "Outer operation as a 1-based order, e.g. \"2 1\"");
  operad->add_option("--inner", inners, "Inner operations, one per outer input");
  operad->add_option("--free-arity", free_arity, "Arity of the free algebra component");
  operad->add_option("--dim-v", dim_v, "dim V for the free algebra");

  auto* eh = sub("eckmann-hilton", "Interchange and units for two operations on a finite set", [&]() -> Json {
    const auto t = io::double_monoid_from_json(io::read_json_file(table));
    const auto r = operads::eckmann_hilton_check(t);
    auto name = [&](std::size_t x) { return t.names.empty() ? Json(x) : Json(t.names[x]); };
    Json o;
    o["verdict"] = operads::verdict_name(r.verdict);
    o["failing_operation"] = r.failing_operation ? Json(*r.failing_operation) : Json(nullptr);
    o["unit_witness"] = r.unit_witness ? name(*r.unit_witness) : Json(nullptr);
    if (r.quadruple) {
      Json q = Json::array();
      for (auto x : *r.quadruple) q.push_back(name(x));
      o["quadruple"] = std::move(q);
    } else {
      o["quadruple"] = nullptr;
    }
    return o;
  });
  eh->add_option("--table", table)->required();

  // --- vertex algebras ---
  auto vertex_input = [&]() -> vertex::VertexData {
    const int given = !vertex_file.empty() + !ring_file.empty() + (delta > 0);
    if (given != 1) throw ValidationError("give exactly one of --vertex, --ring, --delta");
    if (!vertex_file.empty()) return io::vertex_data_from_json(io::read_json_file(vertex_file));
    if (delta > 0) return vertex::truncated_delta_example(delta);
    const auto r = io::derivation_ring(io::load_algebra_spec(ring_file));
    return uncorrected ? vertex::vertex_from_comm_ring_uncorrected(r, truncation)
                       : vertex::vertex_from_comm_ring(r, truncation);
  };

  auto* vcheck = sub("vertex-check", "Vacuum, translation and locality on a truncation window", [&]() -> Json {
    const auto rep = vertex::check_vertex_axioms(vertex_input(), nmax);
    auto fail = [](bool ok, const std::string& why) { return ok ? Json(nullptr) : Json(why); };
    Json o;
    o["truncation"] = rep.truncation;
    o["vacuum"] = {{"pass", rep.vacuum}, {"failure", fail(rep.vacuum, rep.vacuum_failure)}};
    o["translation"] = {{"pass", rep.translation},
                        {"window", Json::array({rep.translation_window.lo, rep.translation_window.hi})},
                        {"failure", fail(rep.translation, rep.translation_failure)}};
    o["locality"] = {{"pass", rep.locality},
                     {"n", rep.locality_n ? Json(*rep.locality_n) : Json(nullptr)},
                     {"nmax", nmax},
                     {"window", Json::array({rep.locality_window.lo, rep.locality_window.hi})},
                     {"failure", fail(rep.locality, rep.locality_failure)}};
    o["all_pass"] = rep.all_pass();
    return o;
  });
  vcheck->add_option("--vertex", vertex_file, "Vertex data file");
  vcheck->add_option("--ring", ring_file, "Commutative ring with derivation");
  vcheck->add_option("--delta", delta, "Built-in truncated delta example with this truncation");
  vcheck->add_option("--truncation", truncation, "Truncation K for --ring");
  vcheck->add_flag("--uncorrected", uncorrected, "Use Y(u, z) v = u v without e^{zT}");
  vcheck->add_option("--nmax", nmax, "Largest locality exponent tried");

  auto* vround = sub("vertex-roundtrip", "Ring with derivation -> vertex data -> ring", [&]() -> Json {
    Json o;
    if (!ring_file.empty()) {
      const auto r = io::derivation_ring(io::load_algebra_spec(ring_file));
      const auto back = vertex::comm_ring_from_vertex(vertex::vertex_from_comm_ring(r, truncation));
      o["recovered"] = io::to_json(back);
      o["agree"] = back.derivation() == r.derivation() &&
                   back.ring().multiplication_matrix() == r.ring().multiplication_matrix() &&
                   back.ring().unit() == r.ring().unit();
      o["truncation"] = truncation;
    } else if (!vertex_file.empty()) {
      o["recovered"] = io::to_json(vertex::comm_ring_from_vertex(io::vertex_data_from_json(io::read_json_file(vertex_file))));
    } else {
      throw ValidationError("give --ring or --vertex");
    }
    return o;
  });
  vround->add_option("--ring", ring_file);
  vround->add_option("--vertex", vertex_file);
  vround->add_option("--truncation", truncation);

  // --- factorization algebras on the line ---
  auto* fl = sub("factline-check", "Prefactorization compatibility on a nested configuration", [&]() -> Json {
    const Json j = io::read_json_file(config);
    factline::LineFactAlg f(io::associative_algebra(io::algebra_spec_from_json(io::field(j, "algebra"))));
    const auto nested = io::nested_config_from_json(io::field(j, "nested"));
    const auto rep = factline::check_prefactorization_axioms(f, nested);
    Json o;
    o["compatible"] = rep.compatible;
    o["tuples_checked"] = rep.tuples_checked;
    if (rep.failure) {
      Json tuple = Json::array();
      for (const auto& v : rep.failure->tuple) tuple.push_back(io::to_json(v));
      o["failure"] = {{"nesting", rep.failure->nesting},
                      {"tuple", std::move(tuple)},
                      {"composed", io::to_json(rep.failure->composed)},
                      {"direct", io::to_json(rep.failure->direct)}};
    }
    if (j.contains("left_module") || j.contains("right_module")) {
      f.with_modules(io::module_from_json(io::field(j, "left_module")),
                     io::module_from_json(io::field(j, "right_module")));
      const auto gs = factline::interval_global_sections(f);
      o["global_sections"] = {{"dimension", gs.dimension}, {"basis", gs.basis}};
    }
    return o;
  });
  fl->add_option("--config", config, "Algebra, nested configuration and optional boundary modules")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParse;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  auto emit = [&](const Json& doc) {
    if (pretty) {
      detail::render(doc, out, "");
    } else {
      out << doc.dump() << '\n';
    }
  };
  auto fail = [&](const std::exception& e, int code) {
    Json doc;
    doc["error"] = {{"kind", detail::error_kind(e)}, {"message", e.what()}};
    emit(doc);
    err << "fieldwork " << name << ": " << e.what() << '\n';
    return code;
  };
  try {
    emit(handlers.at(name)());
    return kOk;
  } catch (const ParseError& e) {
    return fail(e, kParse);
  } catch (const ValidationError& e) {
    return fail(e, kValidation);
  } catch (const InternalError& e) {
    return fail(e, kValidation);
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace fieldwork::cli
