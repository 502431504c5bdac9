#pragma once

#include <cstddef>
#include <string>

#include "json.hpp"

#include "twistcode/graph_code.hpp"

namespace twistcode {

struct ReportOptions {
    std::size_t max_bruteforce_dim = 26;
    unsigned workers = 1;
};

/// Parameter report for a graph code instance. Keys appear in a fixed order
/// and every key is always present; values that were not computed are null,
/// with the reason in the matching *_note field. Rationals are "p/q" strings.
///
/// distance_bound uses the signed second eigenvalue `lambda`; distance_bound_abs
/// uses lambda_abs = max(|lambda_2|, |lambda_n|). Only the latter is a valid
/// lower bound in general: for complete graphs the signed value is negative and
/// the signed bound can exceed the true relative distance.
///
///   N, dimension, rate, degree, lambda, lambda_abs,
///   min_local_rate, min_local_relative_distance,
///   rate_bound, rate_bound_satisfied,
///   distance_bound, distance_bound_exact, distance_bound_satisfied,
///   distance_bound_abs, distance_bound_abs_satisfied, bounds_note,
///   distance, relative_distance, distance_note,
///   proposition { holds, code_dimension, homology_dimension }
nlohmann::ordered_json make_report(const GraphCodeInstance& instance, const ReportOptions& options = {});

/// One "key: value" line per field, for humans.
std::string report_text(const nlohmann::ordered_json& report);

}  // namespace twistcode
