#include "itop/homology.hpp"
#include "itop/io.hpp"
#include "itop/maps.hpp"
#include "itop/pointcloud.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace itop;

std::string render(const OutJson& j) { return j.dump(2) + "\n"; }

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw input_error("cannot write file: " + output_path);
  out << text;
}

CoefficientRing resolve_field(const std::string& field, long long prime, bool allow_z,
                              const std::string& sub) {
  if (prime >= 0 && field != "gfp") throw input_error("--prime is only valid with --field gfp");
  if (field == "q") return CoefficientRing::rationals();
  if (field == "gfp") {
    if (prime < 0) throw input_error("--field gfp requires --prime");
    return CoefficientRing::prime_field(prime);
  }
  if (field == "z") {
    if (!allow_z) throw input_error(sub + " requires a field: use --field q or --field gfp");
    return CoefficientRing::integers();
  }
  throw input_error("unknown field: " + field);
}

int resolve_p_max(int requested, const InteractionSpace& space) {
  if (requested >= 0) return requested;
  return std::max(0, max_tuple_degree(space));
}

// Joint validation of an ambient covering and a sub-covering, including the
// componentwise containment required by the relative constructions.
ValidationReport validate_pair(const InteractionSpace& space, const InteractionSpace& sub) {
  ValidationReport out;
  auto absorb = [&out](const ValidationReport& r, const std::string& prefix) {
    for (const auto& v : r.violations) out.violations.push_back({v.kind, prefix + v.detail});
    for (const auto& w : r.warnings) out.warnings.push_back({w.kind, prefix + w.detail});
  };
  absorb(validate_interaction_space(space), "space: ");
  absorb(validate_interaction_space(sub), "sub: ");
  if (sub.arity() != space.arity()) {
    out.violations.push_back({"arity_mismatch",
                              "space has " + std::to_string(space.arity()) + " parts, sub has " +
                                  std::to_string(sub.arity())});
    return out;
  }
  for (std::size_t i = 0; i < space.arity(); ++i)
    for (const Simplex& s : sub.parts[i].simplices())
      if (!space.parts[i].contains(s))
        out.violations.push_back({"sub_not_contained",
                                  "sub part " + std::to_string(i) + " contains " + s.to_string() +
                                      " outside the ambient part"});
  if (!sub.total.is_subcomplex_of(space.total))
    out.violations.push_back({"sub_not_contained", "sub complex is not inside the total complex"});
  return out;
}

struct CommonOpts {
  std::string input;
  std::string sub;
  std::string output;
  std::string field = "q";
  long long prime = -1;
  int p_max = -1;
  int degree = 0;
  // rips-curve specific
  std::vector<std::string> scales;
  int max_dim = 2;
  std::string mode = "self";
  int parts = 2;
  std::string format = "tsv";
};

int run(int argc, char** argv) {
  CLI::App app{"interaction homology of simplicial complexes with coverings"};
  app.require_subcommand(1);
  CommonOpts o;

  auto add_io = [&o](CLI::App* sub, bool with_sub = false) {
    sub->add_option("-i,--input", o.input, "input file")->required();
    if (with_sub) sub->add_option("-s,--sub", o.sub, "sub-covering file")->required();
    sub->add_option("-o,--output", o.output, "write the report here instead of stdout");
  };
  auto add_field = [&o](CLI::App* sub, bool with_z) {
    std::vector<std::string> allowed = {"q", "gfp"};
    if (with_z) allowed.push_back("z");
    sub->add_option("--field", o.field, "coefficient ring")->check(CLI::IsMember(allowed));
    sub->add_option("--prime", o.prime, "prime for --field gfp");
  };
  auto add_pmax = [&o](CLI::App* sub, const char* help) {
    sub->add_option("--p-max", o.p_max, help);
  };

  CLI::App* c_validate = app.add_subcommand("validate", "check a covering");
  add_io(c_validate);

  CLI::App* c_betti = app.add_subcommand("betti", "interaction Betti numbers");
  add_io(c_betti);
  add_field(c_betti, true);
  add_pmax(c_betti, "top degree (default: full range)");

  CLI::App* c_homology = app.add_subcommand("homology", "integer interaction homology");
  add_io(c_homology);
  add_pmax(c_homology, "top degree (default: full range)");

  CLI::App* c_wu = app.add_subcommand("wu", "Wu characteristic of a complex");
  add_io(c_wu);

  CLI::App* c_euler = app.add_subcommand("euler", "interaction Euler characteristic");
  add_io(c_euler);

  CLI::App* c_cohomology = app.add_subcommand("cohomology", "interaction cohomology Betti numbers");
  add_io(c_cohomology);
  add_field(c_cohomology, false);
  add_pmax(c_cohomology, "top degree (default: full range)");

  CLI::App* c_relative = app.add_subcommand("relative", "relative interaction homology");
  add_io(c_relative, true);
  add_field(c_relative, true);
  add_pmax(c_relative, "top degree (default: full range)");

  CLI::App* c_les = app.add_subcommand("les-check", "long exact sequence of a pair");
  add_io(c_les, true);
  add_field(c_les, false);
  add_pmax(c_les, "top degree (default: full range)");

  CLI::App* c_mapcheck = app.add_subcommand("map-check", "validate an interaction map");
  add_io(c_mapcheck);

  CLI::App* c_mapind = app.add_subcommand("map-induced", "induced map on homology");
  add_io(c_mapind);
  add_field(c_mapind, false);
  c_mapind->add_option("--degree", o.degree, "homology degree")->required();

  CLI::App* c_rips = app.add_subcommand("rips-curve", "interaction Betti curves of a point cloud");
  add_io(c_rips);
  add_field(c_rips, false);
  c_rips->add_option("--scales", o.scales, "comma-separated scales")->required()->delimiter(',');
  c_rips->add_option("--max-dim", o.max_dim, "top simplex dimension (default 2)");
  c_rips->add_option("--p-max", o.p_max, "top homology degree (default 2)");
  c_rips->add_option("--mode", o.mode, "covering mode (default self)")
      ->check(CLI::IsMember({"by_label", "self"}));
  CLI::Option* parts_opt =
      c_rips->add_option("--parts", o.parts, "number of parts for self mode (default 2)");
  c_rips->add_option("--format", o.format, "output format (default tsv)")
      ->check(CLI::IsMember({"tsv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (app.got_subcommand(c_validate)) {
    InteractionSpace space = space_from_file(o.input);
    ValidationReport report = validate_interaction_space(space);
    emit(render(to_json(report)), o.output);
    return report.valid() ? 0 : 2;
  }

  if (app.got_subcommand(c_betti) || app.got_subcommand(c_homology)) {
    const bool integer = app.got_subcommand(c_homology);
    CoefficientRing ring =
        integer ? CoefficientRing::integers() : resolve_field(o.field, o.prime, true, "betti");
    InteractionSpace space = space_from_file(o.input);
    ValidationReport report = validate_interaction_space(space);
    if (!report.valid()) {
      emit(render(to_json(report)), o.output);
      return 2;
    }
    const int p_max = resolve_p_max(o.p_max, space);
    HomologySummary summary = ring.kind == CoefficientRing::Kind::integers
                                  ? integer_homology(space, p_max)
                                  : betti(space, p_max, ring);
    emit(render(to_json(summary)), o.output);
    return 0;
  }

  if (app.got_subcommand(c_wu)) {
    SimplicialComplex k = complex_from_file(o.input);
    OutJson out;
    out["wu"] = wu_characteristic(k).convert_to<long long>();
    emit(render(out), o.output);
    return 0;
  }

  if (app.got_subcommand(c_euler)) {
    InteractionSpace space = space_from_file(o.input);
    ValidationReport report = validate_interaction_space(space);
    if (!report.valid()) {
      emit(render(to_json(report)), o.output);
      return 2;
    }
    OutJson out;
    out["euler"] = interaction_euler(space).convert_to<long long>();
    emit(render(out), o.output);
    return 0;
  }

  if (app.got_subcommand(c_cohomology)) {
    CoefficientRing ring = resolve_field(o.field, o.prime, false, "cohomology");
    InteractionSpace space = space_from_file(o.input);
    ValidationReport report = validate_interaction_space(space);
    if (!report.valid()) {
      emit(render(to_json(report)), o.output);
      return 2;
    }
    HomologySummary summary = cohomology_betti(space, resolve_p_max(o.p_max, space), ring);
    emit(render(to_json(summary)), o.output);
    return 0;
  }

  if (app.got_subcommand(c_relative) || app.got_subcommand(c_les)) {
    const bool les = app.got_subcommand(c_les);
    CoefficientRing ring = resolve_field(o.field, o.prime, !les, les ? "les-check" : "relative");
    InteractionSpace space = space_from_file(o.input);
    InteractionSpace sub = space_from_file(o.sub);
    ValidationReport report = validate_pair(space, sub);
    if (!report.valid()) {
      emit(render(to_json(report)), o.output);
      return 2;
    }
    const int p_max = resolve_p_max(o.p_max, space);
    if (les) {
      ExactnessReport exact = les_check(space, sub, p_max, ring);
      emit(render(to_json(exact)), o.output);
      return exact.all_exact() ? 0 : 2;
    }
    HomologySummary summary = ring.kind == CoefficientRing::Kind::integers
                                  ? relative_integer_homology(space, sub, p_max)
                                  : relative_betti(space, sub, p_max, ring);
    emit(render(to_json(summary)), o.output);
    return 0;
  }

  if (app.got_subcommand(c_mapcheck)) {
    InteractionMap m = map_from_file(o.input);
    ValidationReport report = validate_interaction_map(m);
    emit(render(to_json(report)), o.output);
    return report.valid() ? 0 : 2;
  }

  if (app.got_subcommand(c_mapind)) {
    CoefficientRing ring = resolve_field(o.field, o.prime, false, "map-induced");
    InteractionMap m = map_from_file(o.input);
    ValidationReport report = validate_interaction_map(m);
    if (!report.valid()) {
      emit(render(to_json(report)), o.output);
      return 2;
    }
    SparseMatrix f = induced_homology_map(m, o.degree, ring);
    emit(render(induced_map_to_json(f, o.degree, ring)), o.output);
    return 0;
  }

  if (app.got_subcommand(c_rips)) {
    CoefficientRing ring = resolve_field(o.field, o.prime, false, "rips-curve");
    LabeledPointCloud cloud = cloud_from_csv_file(o.input);
    ScaleSweep sweep;
    sweep.scale_labels = o.scales;
    for (const std::string& s : o.scales) {
      try {
        sweep.scales.push_back(rat_from_decimal(s));
      } catch (const std::invalid_argument& e) {
        throw input_error(std::string("--scales: ") + e.what());
      }
    }
    sweep.p_max = o.p_max >= 0 ? o.p_max : 2;
    sweep.mode = o.mode == "by_label" ? CoveringMode::by_label : CoveringMode::self_n;
    sweep.self_parts = o.parts;
    if (sweep.mode == CoveringMode::by_label && parts_opt->count() > 0)
      throw input_error("--parts is only valid with --mode self");
    std::vector<BettiCurveRow> rows = betti_curve(cloud, sweep, o.max_dim, ring);
    if (o.format == "json")
      emit(render(betti_curve_to_json(rows, sweep, o.max_dim, ring)), o.output);
    else
      emit(betti_curve_to_tsv(rows), o.output);
    return 0;
  }

  return 1;  // unreachable: a subcommand is required
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const itop::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
