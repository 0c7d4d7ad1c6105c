#pragma once

#include "itop/homology.hpp"
#include "itop/linalg.hpp"
#include "itop/maps.hpp"
#include "itop/pointcloud.hpp"
#include "itop/space.hpp"

#include <json.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace itop {

// Raised on malformed input files; the CLI maps it to exit code 1.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;
using OutJson = nlohmann::ordered_json;

// A complex given as an array of vertex lists; faces may be omitted (the
// closure is taken).  `where` names the field in error messages.
SimplicialComplex complex_from_json(const Json& j, const std::string& where);

// {"complex": [...]} with an optional/required "parts": [[...], ...].
InteractionSpace space_from_json(const Json& j, const std::string& where);
InteractionSpace space_from_file(const std::string& path);

// {"maps": [{"v": w, ...}, ...], "source": <space>, "target": <space>}.
InteractionMap map_from_file(const std::string& path);

// A bare complex for complex-level operations; accepts a space file too (the
// covering is ignored).
SimplicialComplex complex_from_file(const std::string& path);

// CSV rows "x1,...,xd,labels" with ';'-separated integer labels.
LabeledPointCloud cloud_from_csv(std::istream& in, const std::string& name);
LabeledPointCloud cloud_from_csv_file(const std::string& path);

OutJson to_json(const ValidationReport& report);
OutJson to_json(const HomologySummary& summary);
OutJson to_json(const ExactnessReport& report);
OutJson induced_map_to_json(const SparseMatrix& matrix, int degree, const CoefficientRing& field);
OutJson betti_curve_to_json(const std::vector<BettiCurveRow>& rows, const ScaleSweep& sweep,
                            int max_dim, const CoefficientRing& field);
std::string betti_curve_to_tsv(const std::vector<BettiCurveRow>& rows);

// Shared field serialization: {"field": "q"|"gfp"|"z"} plus "prime" for gfp.
void write_field(OutJson& target, const CoefficientRing& field);

}  // namespace itop
