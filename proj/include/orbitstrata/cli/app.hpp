#pragma once

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "orbitstrata/orbitstrata.hpp"

namespace orbitstrata::cli {

using Json = nlohmann::json;

enum class Subcommand {
  classify,
  witness,
  invariants,
  sample,
  reduce,
  radical_check,
  gauge_fix,
  energy,
  measure_density
};

inline const std::vector<std::pair<std::string, Subcommand>>& subcommand_names() {
  static const std::vector<std::pair<std::string, Subcommand>> names{
      {"classify", Subcommand::classify},           {"witness", Subcommand::witness},
      {"invariants", Subcommand::invariants},       {"sample", Subcommand::sample},
      {"reduce", Subcommand::reduce},               {"radical-check", Subcommand::radical_check},
      {"gauge-fix", Subcommand::gauge_fix},         {"energy", Subcommand::energy},
      {"measure-density", Subcommand::measure_density}};
  return names;
}

inline std::string to_string(Subcommand s) {
  for (const auto& [name, v] : subcommand_names())
    if (v == s) return name;
  return {};
}

/// Default tolerance; ORBITSTRATA_TOL overrides it when set to a positive number.
inline double default_tolerance() {
  if (const char* env = std::getenv("ORBITSTRATA_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1e-9;
}

struct CommandConfig {
  Subcommand subcommand = Subcommand::classify;
  bool print_schema = false;

  std::string input;       ///< tuple / phase point / SL(2,C) list JSON
  std::string poly;        ///< polynomial text file
  std::string lattice = "3x3";
  std::string lattice_file;
  std::string config_file;    ///< link values JSON
  std::string electric_file;  ///< link electric field JSON

  double tol = default_tolerance();
  double hbar = 1.0;
  double coupling = 1.0;
  double spacing = 1.0;
  double bound = 1.0;
  std::uint64_t seed = 0;
  int n = 0;
  int count = 1;
  int trials = 200;
  std::vector<int> mu;
  std::string kind = "sl2c";

  bool exact = false;
  bool phase_point = false;

  /// Returns the schema text for a subcommand name, if one is shipped.
  std::function<std::optional<std::string>(const std::string&)> schema_lookup;
};

namespace detail {

inline Json read_json_file(const std::string& path) {
  if (path.empty()) throw ParseError("missing --input file");
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// A tuple file is an array of matrices or {"tuple": [...]}.
inline const Json& tuple_array(const Json& j) {
  if (j.is_object() && j.contains("tuple")) return j.at("tuple");
  return j;
}

template <Scalar S>
invariants::Tuple<S> read_tuple(const Json& j, double tol) {
  auto raw = json_io::decode_matrix_list<S>(tuple_array(j));
  if (raw.empty()) throw ParseError("tuple must contain at least one matrix");
  Tolerance t;
  t.scalar_rel = tol;
  for (const auto& m : raw) SL2CElement<S>::from_matrix(m, t);
  return raw;
}

inline lattice::PhasePoint read_phase_point(const Json& j, double tol) {
  if (!j.is_object() || !j.contains("a") || !j.contains("A"))
    throw ParseError("phase point must be an object with \"a\" and \"A\" arrays");
  Tolerance t;
  t.matrix_abs = std::max(tol, t.matrix_abs);
  lattice::PhasePoint p;
  for (const auto& m : j.at("a")) p.a.push_back(json_io::decode_su2(m, t));
  for (const auto& m : j.at("A")) p.A.push_back(json_io::decode_su2_algebra(m, t));
  if (p.a.size() != p.A.size()) throw ParseError("\"a\" and \"A\" must have equal length");
  return p;
}

inline Json encode_phase_point(const lattice::PhasePoint& p) {
  return Json{{"a", json_io::encode_list(p.a)}, {"A", json_io::encode_list(p.A)}};
}

inline Json encode_label(const strata::StratumLabel& s) {
  Json out{{"stratum", s.name()}};
  if (s.kind() == strata::StratumLabel::Kind::point) out["nu"] = s.nu();
  return out;
}

template <Scalar S>
Json encode_table(const invariants::InvariantTable<S>& tab) {
  auto key = [](const std::string& prefix, std::initializer_list<int> idx) {
    std::string k = prefix + "[";
    bool first = true;
    for (int v : idx) {
      if (!first) k += ",";
      k += std::to_string(v);
      first = false;
    }
    return k + "]";
  };
  Json out = Json::object();
  for (const auto& [i, v] : tab.t1) out[key("t", {i})] = json_io::encode(v);
  for (const auto& [p, v] : tab.t2) out[key("t", {p[0], p[1]})] = json_io::encode(v);
  for (const auto& [t, v] : tab.t3) out[key("t", {t[0], t[1], t[2]})] = json_io::encode(v);
  for (const auto& [p, v] : tab.pT2) out[key("pT", {p[0], p[1]})] = json_io::encode(v);
  for (const auto& [t, v] : tab.pT3) out[key("pT", {t[0], t[1], t[2]})] = json_io::encode(v);
  return out;
}

inline Json encode_pairs(const tracepoly::PairSeq& k) {
  Json out = Json::array();
  for (const auto& p : k) out.push_back({p[0], p[1]});
  return out;
}

inline Json encode_triples(const tracepoly::TripleSeq& l) {
  Json out = Json::array();
  for (const auto& t : l) out.push_back({t[0], t[1], t[2]});
  return out;
}

inline std::string mode_name(bool exact) { return exact ? "exact" : "float"; }

// ---- subcommands ---------------------------------------------------------

inline Json run_classify(const CommandConfig& c) {
  const Json in = read_json_file(c.input);
  Json out;
  if (c.phase_point) {
    const auto p = read_phase_point(in, c.tol);
    out = encode_label(strata::orbit_type(p, c.tol));
    out["qualifiers"] = Json::array({"orbit-type"});
    out["n"] = p.size();
  } else {
    strata::TupleClassification cls;
    std::size_t n = 0;
    if (c.exact) {
      const auto x = read_tuple<GaussianRational>(in, c.tol);
      cls = strata::classify_tuple(x, c.tol);
      n = x.size();
    } else {
      const auto x = read_tuple<Complex>(in, c.tol);
      cls = strata::classify_tuple(x, c.tol);
      n = x.size();
    }
    out = encode_label(cls.stratum);
    Json q = Json::array({"orbit-closure-class"});
    if (cls.in_torus_closure) q.push_back("closure-of-torus");
    out["qualifiers"] = q;
    out["n"] = n;
  }
  out["mode"] = mode_name(c.exact);
  return out;
}

template <Scalar S>
Json witness_json(const strata::ClosureWitness<S>& w) {
  return Json{{"conjugator", json_io::encode(w.conjugator)},
              {"conjugated", json_io::encode_list(w.conjugated)},
              {"diagonal_limit", json_io::encode_list(w.diagonal_limit)},
              {"first_noncentral", w.first_noncentral ? Json(*w.first_noncentral) : Json(nullptr)},
              {"defective", w.defective},
              {"scaling", w.scaling}};
}

inline Json run_witness(const CommandConfig& c) {
  const Json in = read_json_file(c.input);
  Json out = c.exact ? witness_json(strata::closure_witness(read_tuple<GaussianRational>(in, c.tol), c.tol))
                     : witness_json(strata::closure_witness(read_tuple<Complex>(in, c.tol), c.tol));
  out["mode"] = mode_name(c.exact);
  return out;
}

inline Json run_invariants(const CommandConfig& c) {
  const Json in = read_json_file(c.input);
  Json out;
  if (c.exact) {
    const auto x = read_tuple<GaussianRational>(in, c.tol);
    out = Json{{"n", x.size()}, {"invariants", encode_table(invariants::trace_invariants(x))}};
  } else {
    const auto x = read_tuple<Complex>(in, c.tol);
    out = Json{{"n", x.size()}, {"invariants", encode_table(invariants::trace_invariants(x))}};
  }
  out["mode"] = mode_name(c.exact);
  return out;
}

inline Json run_sample(const CommandConfig& c) {
  if (c.count < 0) throw InvalidParams("--count must be nonnegative");
  if (!(c.bound > 0)) throw InvalidParams("--bound must be positive");
  Json samples = Json::array();
  Rng rng(c.seed);
  const std::string& k = c.kind;
  if (k == "mu0" || k == "diagonal") {
    if (c.n < 1) throw InvalidParams("--n must be at least 1 for phase-point samples");
    lattice::Mu0SamplerOptions opt;
    opt.algebra_bound = c.bound;
    for (int i = 0; i < c.count; ++i) {
      const std::uint64_t sub = rng();
      samples.push_back(encode_phase_point(k == "mu0" ? lattice::sample_mu0(c.n, sub, opt)
                                                      : lattice::sample_diagonal_sector(c.n, sub, c.bound)));
    }
  } else {
    for (int i = 0; i < c.count; ++i) {
      if (k == "su2") {
        samples.push_back(json_io::encode(sample_su2(rng)));
      } else if (k == "su2-algebra") {
        samples.push_back(json_io::encode(sample_su2_algebra(rng, c.bound)));
      } else if (k == "sl2c") {
        if (c.exact) {
          samples.push_back(json_io::encode(sample_exact_sl2c(rng)));
        } else {
          samples.push_back(json_io::encode(sample_sl2c(rng, std::max(c.bound, 1.0 + 1e-12))));
        }
      } else {
        throw InvalidParams("unknown sample kind '" + k + "'");
      }
    }
  }
  return Json{{"kind", k},
              {"count", c.count},
              {"bound", c.bound},
              {"mode", mode_name(c.exact && k == "sl2c")},
              {"samples", samples},
              {"metadata", {{"seed", c.seed}}}};
}

inline Json run_reduce(const CommandConfig& c) {
  if (c.poly.empty()) throw ParseError("missing --poly file");
  const std::string text = read_text_file(c.poly);
  const auto p = tracepoly::parse_poly(text, c.n);
  const auto adapted = tracepoly::to_adapted(p);
  Json terms = Json::array();
  for (const auto& [idx, coeff] : adapted) {
    terms.push_back(Json{{"I", idx.I},
                         {"hatK", encode_pairs(idx.hatK)},
                         {"checkK", encode_pairs(idx.checkK)},
                         {"L", encode_triples(idx.L)},
                         {"coefficient", orbitstrata::to_string(coeff)}});
  }
  const auto x = tracepoly::x_part(adapted);
  return Json{{"n", c.n},
              {"input", tracepoly::format_poly(p)},
              {"adapted", terms},
              {"x_part", tracepoly::format_poly(x)},
              {"ideal_member", x.is_zero()}};
}

inline Json run_radical_check(const CommandConfig& c) {
  if (c.n < 2) throw InvalidParams("--n must be at least 2");
  tracepoly::DegreeVector mu(c.mu.begin(), c.mu.end());
  if (mu.empty()) throw DegreeInfeasible("missing --mu");
  if (static_cast<int>(mu.size()) < c.n) mu.resize(static_cast<std::size_t>(c.n), 0);
  const auto rep = tracepoly::radical_spot_check(c.n, mu, c.trials, c.seed);
  return Json{{"n", rep.n},
              {"mu", rep.mu},
              {"trials", rep.trials},
              {"contrapositive_checks", rep.contrapositive_checks},
              {"proof_path_checks", rep.proof_path_checks},
              {"proof_path_coefficients", rep.proof_path_coefficients},
              {"partition_identity_checks", rep.partition_identity_checks},
              {"violations", rep.violations},
              {"metadata", {{"seed", rep.seed}}}};
}

inline lattice::LatticeGraph read_lattice(const CommandConfig& c) {
  if (!c.lattice_file.empty()) return lattice::lattice_from_json(read_json_file(c.lattice_file));
  return lattice::parse_lattice_spec(c.lattice);
}

inline Json lattice_summary(const lattice::LatticeGraph& lat) {
  return Json{{"sites", lat.num_sites()},
              {"links", lat.num_links()},
              {"plaquettes", lat.num_plaquettes()},
              {"n", lat.num_off_tree()},
              {"off_tree", lat.off_tree()}};
}

inline lattice::GaugeConfig read_or_sample_config(const CommandConfig& c, const lattice::LatticeGraph& lat,
                                                  Rng& rng) {
  if (c.config_file.empty()) return lattice::random_config(lat, rng);
  const Json j = read_json_file(c.config_file);
  const Json& arr = j.is_object() && j.contains("links") ? j.at("links") : j;
  if (!arr.is_array()) throw ParseError("gauge configuration must be an array of matrices");
  Tolerance t;
  t.matrix_abs = std::max(c.tol, t.matrix_abs);
  lattice::GaugeConfig a;
  for (const auto& m : arr) a.values.push_back(json_io::decode_su2(m, t));
  if (static_cast<int>(a.values.size()) != lat.num_links())
    throw LatticeMismatch("configuration has " + std::to_string(a.values.size()) + " values for " +
                          std::to_string(lat.num_links()) + " links");
  return a;
}

inline Json run_gauge_fix(const CommandConfig& c) {
  const auto lat = read_lattice(c);
  Rng rng(c.seed);
  const auto a = read_or_sample_config(c, lat, rng);
  const auto res = lattice::tree_gauge_fix(lat, a);
  return Json{{"lattice", lattice_summary(lat)},
              {"tuple", json_io::encode_list(res.tuple)},
              {"gauge", json_io::encode_list(res.gauge.values)},
              {"metadata", {{"seed", c.seed}, {"sampled", c.config_file.empty()}}}};
}

inline Json run_energy(const CommandConfig& c) {
  const auto lat = read_lattice(c);
  Rng rng(c.seed);
  const auto a = read_or_sample_config(c, lat, rng);
  lattice::ElectricField e;
  if (c.electric_file.empty()) {
    e = lattice::random_electric(lat, rng, c.bound);
  } else {
    const Json j = read_json_file(c.electric_file);
    Tolerance t;
    t.matrix_abs = std::max(c.tol, t.matrix_abs);
    for (const auto& m : j) e.values.push_back(json_io::decode_su2_algebra(m, t));
  }
  const double h = lattice::kogut_susskind_energy(lat, a, e, c.coupling, c.spacing);
  return Json{{"lattice", lattice_summary(lat)},
              {"energy", h},
              {"coupling", c.coupling},
              {"spacing", c.spacing},
              {"metadata", {{"seed", c.seed}, {"sampled", c.config_file.empty() || c.electric_file.empty()}}}};
}

inline Json run_measure_density(const CommandConfig& c) {
  std::vector<SL2CElement<Complex>> gs;
  Tolerance t;
  t.scalar_rel = std::max(c.tol, t.scalar_rel);
  if (!c.input.empty()) {
    for (const auto& m : read_tuple<Complex>(read_json_file(c.input), c.tol))
      gs.push_back(SL2CElement<Complex>::from_matrix(m, t));
  } else {
    if (c.n < 1) throw InvalidParams("give --input or --n with --seed");
    Rng rng(c.seed);
    for (int i = 0; i < c.n; ++i) gs.push_back(sample_sl2c(rng, c.bound));
  }
  const auto d = lattice::measure_density(gs, c.hbar, t);
  return Json{{"kappa", d.kappa},
              {"eta", d.eta},
              {"density", d.density},
              {"hbar", c.hbar},
              {"n", gs.size()},
              {"metadata", {{"seed", c.seed}, {"sampled", c.input.empty()}}}};
}

inline Json error_json(const std::string& kind, const std::string& detail, std::optional<std::size_t> loc) {
  return Json{{"error", kind}, {"detail", detail}, {"location", loc ? Json(*loc) : Json(nullptr)}};
}

inline bool is_io_error(const Error& e) { return e.kind() == "ParseError" || e.kind() == "SyntaxError"; }

}  // namespace detail

/// Executes one subcommand. JSON goes to out, diagnostics to err.
/// Exit codes: 0 success, 1 domain error, 2 I/O or parse error.
inline int run(const CommandConfig& c, std::ostream& out, std::ostream& err) {
  if (c.print_schema) {
    const auto text = c.schema_lookup ? c.schema_lookup(to_string(c.subcommand)) : std::nullopt;
    if (!text) {
      err << "no schema available for '" << to_string(c.subcommand) << "'\n";
      return 2;
    }
    out << *text;
    if (text->empty() || text->back() != '\n') out << '\n';
    return 0;
  }
  try {
    if (!(c.tol > 0)) throw InvalidParams("--tol must be positive");
    Json result;
    switch (c.subcommand) {
      case Subcommand::classify: result = detail::run_classify(c); break;
      case Subcommand::witness: result = detail::run_witness(c); break;
      case Subcommand::invariants: result = detail::run_invariants(c); break;
      case Subcommand::sample: result = detail::run_sample(c); break;
      case Subcommand::reduce: result = detail::run_reduce(c); break;
      case Subcommand::radical_check: result = detail::run_radical_check(c); break;
      case Subcommand::gauge_fix: result = detail::run_gauge_fix(c); break;
      case Subcommand::energy: result = detail::run_energy(c); break;
      case Subcommand::measure_density: result = detail::run_measure_density(c); break;
    }
    result["command"] = to_string(c.subcommand);
    out << result.dump(2) << '\n';
    return 0;
  } catch (const Error& e) {
    err << e.kind() << ": " << e.detail() << '\n';
    out << detail::error_json(e.kind(), e.detail(), e.location()).dump(2) << '\n';
    return detail::is_io_error(e) ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    out << detail::error_json("InternalError", e.what(), std::nullopt).dump(2) << '\n';
    return 1;
  }
}

/// Parses argv into a CommandConfig and runs it.
inline int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                      std::function<std::optional<std::string>(const std::string&)> schema_lookup = {}) {
  CLI::App app{"Orbit-type strata of SU(2) lattice gauge models"};
  app.require_subcommand(1);
  CommandConfig c;
  c.schema_lookup = std::move(schema_lookup);

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--schema", c.print_schema, "Print the JSON schema of this subcommand's output");
    sub->add_option("--tol", c.tol, "Tolerance (default 1e-9 or $ORBITSTRATA_TOL)");
  };
  auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", c.seed, "Random seed (default 0)"); };

  std::vector<std::pair<CLI::App*, Subcommand>> subs;
  auto make = [&](const std::string& name, const std::string& help, Subcommand s) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    subs.emplace_back(sub, s);
    return sub;
  };

  auto* classify = make("classify", "Stratum of a tuple or phase point", Subcommand::classify);
  classify->add_option("--input", c.input, "Tuple or phase point JSON");
  classify->add_flag("--phase-point", c.phase_point, "Input is a phase point {a, A}");
  classify->add_flag("--exact", c.exact, "Exact Gaussian-rational arithmetic");

  auto* witness = make("witness", "Orbit-closure witness of a torus-closure tuple", Subcommand::witness);
  witness->add_option("--input", c.input, "Tuple JSON");
  witness->add_flag("--exact", c.exact, "Exact Gaussian-rational arithmetic");

  auto* inv = make("invariants", "Trace invariants and defining functions", Subcommand::invariants);
  inv->add_option("--input", c.input, "Tuple JSON");
  inv->add_flag("--exact", c.exact, "Exact Gaussian-rational arithmetic");

  auto* sample = make("sample", "Seeded random elements", Subcommand::sample);
  sample->add_option("--kind", c.kind, "su2 | su2-algebra | sl2c | mu0 | diagonal")
      ->check(CLI::IsMember({"su2", "su2-algebra", "sl2c", "mu0", "diagonal"}));
  sample->add_option("--count", c.count, "Number of samples");
  sample->add_option("--n", c.n, "Tuple length for phase-point kinds");
  sample->add_option("--bound", c.bound, "Algebra norm bound / SL(2,C) scale bound");
  sample->add_flag("--exact", c.exact, "Exact Gaussian-rational SL(2,C) samples");
  add_seed(sample);

  auto* reduce = make("reduce", "Adapted-basis reduction of a trace polynomial", Subcommand::reduce);
  reduce->add_option("--poly", c.poly, "Polynomial text file");
  reduce->add_option("--n", c.n, "Index bound N (0: unbounded)");

  auto* radical = make("radical-check", "Radical-ideal falsification campaign", Subcommand::radical_check);
  radical->add_option("--n", c.n, "Number of indices N");
  radical->add_option("--mu", c.mu, "Degree vector, e.g. 2,1,1")->delimiter(',');
  radical->add_option("--trials", c.trials, "Trials (default 200)");
  add_seed(radical);

  auto add_lattice = [&](CLI::App* sub) {
    sub->add_option("--lattice", c.lattice, "LxW[,periodic] (default 3x3)");
    sub->add_option("--lattice-file", c.lattice_file, "Lattice JSON");
    sub->add_option("--config", c.config_file, "Link values JSON (sampled from --seed if absent)");
    add_seed(sub);
  };
  auto* gauge = make("gauge-fix", "Maximal-tree gauge fixing", Subcommand::gauge_fix);
  add_lattice(gauge);

  auto* energy = make("energy", "Kogut-Susskind energy", Subcommand::energy);
  add_lattice(energy);
  energy->add_option("--electric", c.electric_file, "Electric field JSON (sampled if absent)");
  energy->add_option("--coupling", c.coupling, "Coupling g");
  energy->add_option("--spacing", c.spacing, "Lattice spacing");
  energy->add_option("--bound", c.bound, "Norm bound for sampled electric fields");

  auto* density = make("measure-density", "Half-form measure density", Subcommand::measure_density);
  density->add_option("--input", c.input, "SL(2,C) tuple JSON");
  density->add_option("--hbar", c.hbar, "Planck constant");
  density->add_option("--n", c.n, "Tuple length when sampling");
  density->add_option("--bound", c.bound, "Entry modulus bound when sampling (1 gives SU(2) points)");
  add_seed(density);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    out << detail::error_json("UsageError", e.what(), std::nullopt).dump(2) << '\n';
    return 2;
  }
  for (const auto& [sub, s] : subs)
    if (sub->parsed()) c.subcommand = s;
  return run(c, out, err);
}

}  // namespace orbitstrata::cli
