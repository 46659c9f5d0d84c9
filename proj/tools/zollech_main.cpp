// Command-line front end: capacity sequences, chain-complex data, embedding
// obstructions, and the moment-map reconstructions, with exact or float
// output in table, CSV, or JSON form.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zollech/capacity_sequence.hpp"
#include "zollech/chain_complex.hpp"
#include "zollech/curve_io.hpp"
#include "zollech/exact.hpp"
#include "zollech/moment_map.hpp"
#include "zollech/obstruction.hpp"

namespace {

using nlohmann::json;
using zollech::CapacitySequence;
using zollech::ExactQuantity;
using zollech::Model;
using zollech::OrbitSet;
using zollech::PerturbParams;
using zollech::PlanarCurve;
using zollech::Surface;
using zollech::Variant;

constexpr const char* kSchema = "zoll-ech/1";
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnstable = 3;

std::string format_float(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.15g", v);
  return buffer;
}

json exact_to_json(const ExactQuantity& q) {
  return json{{"num", q.coeff().num()}, {"den", q.coeff().den()}, {"pi", q.pi_power()}};
}

struct DomainSpec {
  std::string name;
  CapacitySequence sequence;
};

// Grammar: ball:a | ellipsoid:a,b | dstar-s2 | dstar-rp2 with exact
// quantities like 7, 3/4, 2pi, 201/100pi.
DomainSpec parse_domain(const std::string& text) {
  if (text == "dstar-s2") return {text, zollech::dstar_capacities(Surface::S2)};
  if (text == "dstar-rp2") return {text, zollech::dstar_capacities(Surface::RP2)};
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    std::string kind = text.substr(0, colon);
    std::string args = text.substr(colon + 1);
    if (kind == "ball") {
      return {text, zollech::ball_capacities(ExactQuantity::parse(args))};
    }
    if (kind == "ellipsoid") {
      auto comma = args.find(',');
      if (comma == std::string::npos) {
        throw zollech::DomainError("ellipsoid spec needs two capacities: " + text);
      }
      return {text, zollech::ellipsoid_capacities(
                        ExactQuantity::parse(args.substr(0, comma)),
                        ExactQuantity::parse(args.substr(comma + 1)))};
    }
  }
  throw zollech::DomainError("unknown domain spec '" + text +
                             "' (expected ball:a, ellipsoid:a,b, dstar-s2, dstar-rp2)");
}

Model parse_model(const std::string& text) {
  if (text == "s3") return Model::S3;
  if (text == "sstar-s2") return Model::SstarS2;
  if (text == "sstar-rp2") return Model::SstarRP2;
  throw zollech::DomainError("unknown model '" + text +
                             "' (expected s3, sstar-s2, sstar-rp2)");
}

OrbitSet parse_orbit_set(const std::string& text) {
  auto comma = text.find(',');
  try {
    if (comma != std::string::npos) {
      std::size_t used1 = 0, used2 = 0;
      OrbitSet a{std::stoll(text.substr(0, comma), &used1),
                 std::stoll(text.substr(comma + 1), &used2)};
      if (used1 == comma && comma + 1 + used2 == text.size() && a.m1 >= 0 && a.m2 >= 0) {
        return a;
      }
    }
  } catch (const std::exception&) {
  }
  throw zollech::DomainError("orbit set must be m1,m2 with nonnegative entries: " + text);
}

Variant parse_variant(const std::string& text) {
  if (text == "full") return Variant::Full;
  if (text == "hemisphere") return Variant::Hemisphere;
  throw zollech::DomainError("unknown variant '" + text + "' (expected full, hemisphere)");
}

std::string value_string(const ExactQuantity& q, bool exact) {
  return exact ? q.to_string() : format_float(q.to_double());
}

void print_values(const std::string& command, const std::vector<ExactQuantity>& values,
                  const std::string& format, bool exact) {
  if (format == "json") {
    json doc{{"schema", kSchema}, {"command", command}};
    json terms = json::array();
    for (const auto& v : values) {
      terms.push_back(exact ? exact_to_json(v) : json(v.to_double()));
    }
    doc["values"] = terms;
    std::cout << doc.dump() << "\n";
    return;
  }
  if (format == "csv") {
    std::cout << "k,value\n";
    for (std::size_t k = 0; k < values.size(); ++k) {
      std::cout << k << ',' << value_string(values[k], exact) << '\n';
    }
    return;
  }
  // Plain table: the comma-separated list.
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) std::cout << ", ";
    std::cout << value_string(values[k], exact);
  }
  std::cout << "\n";
}

std::vector<double> parse_ladder(const std::string& text) {
  if (text == "default") return zollech::default_epsilon_ladder();
  std::vector<double> ladder;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    ladder.push_back(std::stod(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  if (ladder.empty()) throw zollech::DomainError("empty epsilon ladder");
  return ladder;
}

// Chebyshev-distributed symmetric grid for single-epsilon boundary curves.
std::vector<double> boundary_grid(std::size_t samples) {
  if (samples < 4 || samples % 2 != 0) {
    throw zollech::DomainError("samples must be an even count of at least 4");
  }
  std::size_t per_side = samples / 2;
  const double j_lo = 0.02, j_hi = 0.95;
  std::vector<double> grid;
  for (std::size_t k = 0; k < per_side; ++k) {
    double t = std::cos((2.0 * k + 1.0) * M_PI / (4.0 * per_side));
    grid.push_back(-(j_lo + (j_hi - j_lo) * t));
  }
  std::sort(grid.begin(), grid.end());
  for (std::size_t k = per_side; k-- > 0;) grid.push_back(-grid[k]);
  return grid;
}

json curve_to_document(const PlanarCurve& curve) {
  json doc{{"schema", kSchema}};
  doc["samples"] = json::parse(zollech::curve_to_json(curve));
  return doc;
}

void save_curve_document(const std::string& path, const PlanarCurve& curve,
                         const json& extra) {
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) {
    zollech::save_curve(path, curve);
    return;
  }
  json doc = curve_to_document(curve);
  for (auto it = extra.begin(); it != extra.end(); ++it) doc[it.key()] = it.value();
  std::ofstream out(path);
  if (!out) throw zollech::DomainError("cannot open " + path + " for writing");
  out << doc.dump() << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"ECH capacities of disk cotangent bundles over the round S2 and RP2"};
  app.require_subcommand(1);

  // capacities
  std::string cap_domain, cap_format = "table";
  std::size_t cap_count = 10;
  bool cap_exact = false, cap_float = false;
  auto* capacities = app.add_subcommand("capacities", "Capacity sequence of a domain");
  capacities->add_option("--domain", cap_domain)->required();
  capacities->add_option("--count", cap_count)->check(CLI::PositiveNumber);
  capacities->add_option("--format", cap_format)
      ->check(CLI::IsMember({"table", "json", "csv"}));
  capacities->add_flag("--exact", cap_exact);
  capacities->add_flag("--float", cap_float);

  // spectrum
  std::string spec_model, spec_format = "table";
  std::size_t spec_count = 10;
  auto* spectrum_cmd =
      app.add_subcommand("spectrum", "Chain-complex spectrum vs the capacity route");
  spectrum_cmd->add_option("--model", spec_model)->required();
  spectrum_cmd->add_option("--count", spec_count)->check(CLI::PositiveNumber);
  spectrum_cmd->add_option("--format", spec_format)
      ->check(CLI::IsMember({"table", "json", "csv"}));

  // index
  std::string idx_model, idx_alpha, idx_beta = "0,0";
  auto* index_cmd = app.add_subcommand("index", "ECH index pieces of a pair of orbit sets");
  index_cmd->add_option("--model", idx_model)->required();
  index_cmd->add_option("--alpha", idx_alpha)->required();
  index_cmd->add_option("--beta", idx_beta);

  // generators
  std::string gen_model;
  std::int64_t gen_max = 0;
  auto* generators_cmd = app.add_subcommand("generators", "Class-0 generators by grading");
  generators_cmd->add_option("--model", gen_model)->required();
  generators_cmd->add_option("--max-grading", gen_max)->required();

  // umap
  std::string umap_model, umap_alpha;
  std::size_t umap_steps = 1;
  auto* umap_cmd = app.add_subcommand("umap", "Iterate the U map");
  umap_cmd->add_option("--model", umap_model)->required();
  umap_cmd->add_option("--alpha", umap_alpha)->required();
  umap_cmd->add_option("--steps", umap_steps);

  // obstruct
  std::string obs_inner, obs_outer;
  std::size_t obs_upto = 100;
  auto* obstruct_cmd = app.add_subcommand("obstruct", "Capacity dominance test");
  obstruct_cmd->add_option("--inner", obs_inner)->required();
  obstruct_cmd->add_option("--outer", obs_outer)->required();
  obstruct_cmd->add_option("--upto", obs_upto)->check(CLI::PositiveNumber);

  // width
  std::string width_domain;
  std::size_t width_upto = 100;
  auto* width_cmd = app.add_subcommand("width", "Gromov width with certificate");
  width_cmd->add_option("--domain", width_domain)->required();
  width_cmd->add_option("--upto", width_upto)->check(CLI::PositiveNumber);

  // moment-boundary
  std::string mb_variant, mb_out;
  double mb_epsilon = 1e-4;
  std::size_t mb_samples = 32;
  auto* boundary_cmd =
      app.add_subcommand("moment-boundary", "Boundary curve of the moment image");
  boundary_cmd->add_option("--variant", mb_variant)->required();
  boundary_cmd->add_option("--epsilon", mb_epsilon)->required();
  boundary_cmd->add_option("--samples", mb_samples);
  boundary_cmd->add_option("--out", mb_out)->required();

  // moment-limit
  std::string ml_variant, ml_ladder = "default", ml_out;
  std::size_t ml_per_side = 16;
  auto* limit_cmd =
      app.add_subcommand("moment-limit", "Extrapolated limit of the moment images");
  limit_cmd->add_option("--variant", ml_variant)->required();
  limit_cmd->add_option("--ladder", ml_ladder);
  limit_cmd->add_option("--samples-per-side", ml_per_side);
  limit_cmd->add_option("--out", ml_out)->required();

  // area
  std::string area_file;
  auto* area_cmd = app.add_subcommand("area", "Area enclosed by a curve and the axes");
  area_cmd->add_option("--curve", area_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (capacities->parsed()) {
    if (cap_exact && cap_float) throw zollech::DomainError("--exact conflicts with --float");
    DomainSpec domain = parse_domain(cap_domain);
    bool exact = !cap_float;  // exact is the default for combinatorial output
    print_values("capacities " + cap_domain, domain.sequence.prefix(cap_count), cap_format,
                 exact);
    return 0;
  }

  if (spectrum_cmd->parsed()) {
    Model model = parse_model(spec_model);
    auto chain_route = zollech::spectrum(model, spec_count);
    CapacitySequence cap_route =
        model == Model::S3        ? zollech::ball_capacities(ExactQuantity::integer(1))
        : model == Model::SstarS2 ? zollech::dstar_capacities(Surface::S2)
                                  : zollech::dstar_capacities(Surface::RP2);
    auto cap_terms = cap_route.prefix(spec_count);
    std::size_t mismatches = 0;
    if (spec_format == "json") {
      json rows = json::array();
      for (std::size_t k = 0; k < spec_count; ++k) {
        bool equal = chain_route[k] == cap_terms[k];
        mismatches += equal ? 0 : 1;
        rows.push_back({{"k", k},
                        {"spectrum", exact_to_json(chain_route[k])},
                        {"capacity", exact_to_json(cap_terms[k])},
                        {"equal", equal}});
      }
      json doc{{"schema", kSchema}, {"command", "spectrum " + spec_model}, {"rows", rows}};
      doc["mismatches"] = mismatches;
      std::cout << doc.dump() << "\n";
    } else {
      const char* sep = spec_format == "csv" ? "," : "  ";
      std::cout << "k" << sep << "spectrum" << sep << "capacities" << sep << "equal\n";
      for (std::size_t k = 0; k < spec_count; ++k) {
        bool equal = chain_route[k] == cap_terms[k];
        mismatches += equal ? 0 : 1;
        std::cout << k << sep << chain_route[k].to_string() << sep
                  << cap_terms[k].to_string() << sep << (equal ? "yes" : "NO") << "\n";
      }
      std::cout << (mismatches == 0 ? "all terms agree\n"
                                    : std::to_string(mismatches) + " mismatches\n");
    }
    return mismatches == 0 ? 0 : kExitFailure;
  }

  if (index_cmd->parsed()) {
    Model model = parse_model(idx_model);
    OrbitSet alpha = parse_orbit_set(idx_alpha);
    OrbitSet beta = parse_orbit_set(idx_beta);
    auto parts = zollech::index_components(model, alpha, beta);
    std::int64_t index = zollech::ech_index(model, alpha, beta);
    std::cout << "c_tau = " << parts.c_tau.to_string() << "\n"
              << "Q_tau = " << parts.q_tau.to_string() << "\n"
              << "CZ(alpha) = " << parts.cz_sum_alpha << "\n"
              << "CZ(beta) = " << parts.cz_sum_beta << "\n"
              << "I = " << index << "\n";
    return 0;
  }

  if (generators_cmd->parsed()) {
    Model model = parse_model(gen_model);
    auto gens = zollech::generators_by_grading(model, gen_max);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      std::cout << 2 * k << "  " << gens[k].to_string() << "\n";
    }
    return 0;
  }

  if (umap_cmd->parsed()) {
    Model model = parse_model(umap_model);
    OrbitSet current = parse_orbit_set(umap_alpha);
    std::cout << current.to_string() << "\n";
    for (std::size_t s = 0; s < umap_steps; ++s) {
      current = zollech::u_map(model, current);
      std::cout << current.to_string() << "\n";
      if (current.is_empty()) break;
    }
    return 0;
  }

  if (obstruct_cmd->parsed()) {
    DomainSpec inner = parse_domain(obs_inner);
    DomainSpec outer = parse_domain(obs_outer);
    auto result = zollech::dominates_mixed_units(inner.sequence, outer.sequence, obs_upto);
    if (result.holds) {
      std::cout << "holds for k <= " << obs_upto << "\n";
      return 0;
    }
    std::cout << "fails_at k=" << result.witness_k << ": "
              << result.inner_term.to_string() << " > " << result.outer_term.to_string()
              << "\n";
    return kExitFailure;
  }

  if (width_cmd->parsed()) {
    Surface surface;
    if (width_domain == "dstar-s2") {
      surface = Surface::S2;
    } else if (width_domain == "dstar-rp2") {
      surface = Surface::RP2;
    } else {
      throw zollech::DomainError("width expects --domain dstar-s2 or dstar-rp2");
    }
    auto cert = zollech::gromov_width(surface, width_upto);
    std::cout << cert.width.to_string() << "\n"
              << "upper: " << cert.upper_description << " = " << cert.upper.to_string()
              << "\n"
              << "lower: " << cert.lower_description << " = " << cert.lower.to_string()
              << "\n";
    return 0;
  }

  if (boundary_cmd->parsed()) {
    Variant variant = parse_variant(mb_variant);
    PerturbParams params = variant == Variant::Full ? PerturbParams::full(mb_epsilon)
                                                    : PerturbParams::hemisphere(mb_epsilon);
    auto grid = boundary_grid(mb_samples);
    PlanarCurve curve = zollech::close_by_continuity(zollech::boundary_curve(params, grid));
    save_curve_document(mb_out, curve,
                        json{{"command", "moment-boundary"},
                             {"variant", mb_variant},
                             {"epsilon", mb_epsilon}});
    std::cout << "wrote " << curve.samples.size() << " samples to " << mb_out << "\n";
    return 0;
  }

  if (limit_cmd->parsed()) {
    Variant variant = parse_variant(ml_variant);
    auto ladder = parse_ladder(ml_ladder);
    auto grid = zollech::default_j_grid(ladder, ml_per_side);
    auto result = zollech::limit_domain(variant, ladder, grid);
    json report{{"epsilons", result.report.epsilons},
                {"sup_steps", result.report.sup_steps},
                {"max_extrapolation_correction",
                 result.report.max_extrapolation_correction}};
    save_curve_document(ml_out, result.curve,
                        json{{"command", "moment-limit"},
                             {"variant", ml_variant},
                             {"report", report}});
    std::cout << "wrote " << result.curve.samples.size() << " samples to " << ml_out << "\n"
              << "max extrapolation correction: "
              << format_float(result.report.max_extrapolation_correction) << "\n";
    return 0;
  }

  if (area_cmd->parsed()) {
    PlanarCurve curve = zollech::load_curve(area_file);
    std::cout << format_float(zollech::toric_area(curve)) << "\n";
    return 0;
  }

  throw zollech::DomainError("no subcommand selected");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const zollech::NumericalInstabilityError& e) {
    std::cerr << "numerical instability: " << e.what() << "\n";
    return kExitUnstable;
  } catch (const zollech::ConsistencyError& e) {
    std::cerr << "consistency check failed: " << e.what() << "\n";
    return kExitFailure;
  } catch (const zollech::ExhaustionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
