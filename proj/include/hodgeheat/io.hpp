#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hodgeheat/bounds.hpp"
#include "hodgeheat/complex.hpp"
#include "hodgeheat/growth.hpp"
#include "hodgeheat/metric.hpp"
#include "hodgeheat/spectral.hpp"

namespace hodgeheat {

/// Malformed input (bad JSON, schema violation, inconsistent weight table).
/// The message names the location: a line/byte offset or the offending key.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Complex file schema:
/// { "combinatorial": bool, "augmented": "auto"|true|false,
///   "top_simplices": [[ints]], "weights": {"0": 1.0, "0,1": 2.0, ...} }
/// "weights" is required iff combinatorial is false and must cover the closure;
/// the "" key gives the empty-simplex weight in augmented mode.
WeightedComplex load_complex(std::istream& in, const std::string& origin = "<stream>");
WeightedComplex load_complex_file(const std::string& path);
std::string complex_to_json(const WeightedComplex& cx);

std::string bound_report_to_json(const BoundReport& rep);
std::string spectral_report_to_json(const SpectralReport& rep);
std::string growth_fit_to_json(const GrowthFit& fit);

void write_series_csv(std::ostream& out, const BoundReport& rep);
void write_metric_csv(std::ostream& out, const MetricData& md);
void write_eigenvalues_csv(std::ostream& out, const SpectralReport& rep);

}  // namespace hodgeheat
