#include "twistcode/report.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <tuple>

#include "twistcode/errors.hpp"

namespace twistcode {

namespace {

using Json = nlohmann::ordered_json;

std::optional<std::int64_t> as_integer(double x) {
    const double nearest = std::round(x);
    if (std::abs(x - nearest) > 1e-9) return std::nullopt;
    return static_cast<std::int64_t>(nearest);
}

// Bound value, whether it was evaluated exactly, and whether the brute-force
// distance (when known) meets it. Integral eigenvalues take the rational path.
std::tuple<Json, Json, Json> evaluate_distance_bound(const Rational& delta, double lambda, std::size_t d,
                                                     std::optional<std::size_t> distance, std::size_t n_edges) {
    if (const auto exact = as_integer(lambda)) {
        const auto bound = distance_bound(delta, Rational(*exact), static_cast<std::int64_t>(d));
        Json ok;
        if (distance) {
            ok = Rational(static_cast<std::int64_t>(*distance), static_cast<std::int64_t>(n_edges)) >= bound;
        }
        return {to_string(bound), true, ok};
    }
    const double bound = distance_bound(boost::rational_cast<double>(delta), lambda, d);
    Json ok;
    if (distance) ok = static_cast<double>(*distance) / static_cast<double>(n_edges) >= bound - 1e-9;
    return {bound, false, ok};
}

}  // namespace

Json make_report(const GraphCodeInstance& instance, const ReportOptions& options) {
    const auto& g = instance.graph();
    const auto& code = instance.code();
    const std::size_t n_edges = g.edge_count();

    Json report;
    report["N"] = n_edges;
    report["dimension"] = code.dimension();
    report["rate"] = n_edges == 0 ? Json() : Json(to_string(rate(code)));

    const auto degree = regular_degree(g);
    report["degree"] = degree ? Json(*degree) : Json();

    std::optional<SpectralSummary> spectrum;
    if (g.vertex_count() >= 2) spectrum = spectral_summary(g);
    report["lambda"] = spectrum ? Json(spectrum->second) : Json();
    report["lambda_abs"] = spectrum ? Json(spectrum->second_absolute) : Json();

    // Worst local parameters over all vertices.
    std::optional<Rational> local_rate;
    std::optional<Rational> local_delta;
    std::string local_note;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        const auto& c = instance.assignment().local_code(u);
        if (c.length() == 0) {
            local_note = "vertex " + std::to_string(u) + " is isolated";
            local_rate.reset();
            local_delta.reset();
            break;
        }
        local_rate = local_rate ? std::min(*local_rate, rate(c)) : rate(c);
        if (!local_note.empty()) continue;
        if (c.dimension() == 0) {
            local_note = "local code at vertex " + std::to_string(u) + " is the zero code";
        } else if (c.dimension() > options.max_bruteforce_dim) {
            local_note = "local code at vertex " + std::to_string(u) + " exceeds the brute-force cap";
        } else {
            const auto delta = relative_distance(c, {options.max_bruteforce_dim, 1});
            local_delta = local_delta ? std::min(*local_delta, delta) : delta;
        }
    }
    if (!local_note.empty()) local_delta.reset();
    report["min_local_rate"] = local_rate ? Json(to_string(*local_rate)) : Json();
    report["min_local_relative_distance"] = local_delta ? Json(to_string(*local_delta)) : Json();

    std::optional<std::size_t> distance;
    std::string distance_note;
    if (code.dimension() == 0) {
        distance_note = "zero code: distance undefined";
    } else if (code.dimension() > options.max_bruteforce_dim) {
        distance_note = "dimension " + std::to_string(code.dimension()) + " exceeds brute-force cap " +
                        std::to_string(options.max_bruteforce_dim);
    } else {
        distance = min_distance(code, {options.max_bruteforce_dim, options.workers});
    }

    Json rate_bound_value;
    Json rate_bound_ok;
    Json signed_bound;
    Json signed_exact;
    Json signed_ok;
    Json abs_bound;
    Json abs_ok;
    std::string bounds_note;
    if (!degree) {
        bounds_note = "graph is not regular";
    } else if (!local_rate) {
        bounds_note = local_note;
    } else {
        const auto rb = rate_bound(*local_rate);
        rate_bound_value = to_string(rb);
        rate_bound_ok = Rational(static_cast<std::int64_t>(code.dimension())) >=
                        Rational(static_cast<std::int64_t>(n_edges)) * rb;

        if (!local_delta) {
            bounds_note = local_note;
        } else if (!spectrum || spectrum->second >= static_cast<double>(*degree) - 1e-9) {
            bounds_note = "lambda(G) >= d (graph is disconnected)";
        } else {
            std::tie(signed_bound, signed_exact, signed_ok) =
                evaluate_distance_bound(*local_delta, spectrum->second, *degree, distance, n_edges);
            std::tie(abs_bound, std::ignore, abs_ok) =
                evaluate_distance_bound(*local_delta, spectrum->second_absolute, *degree, distance, n_edges);
        }
    }
    report["rate_bound"] = rate_bound_value;
    report["rate_bound_satisfied"] = rate_bound_ok;
    report["distance_bound"] = signed_bound;
    report["distance_bound_exact"] = signed_exact;
    report["distance_bound_satisfied"] = signed_ok;
    report["distance_bound_abs"] = abs_bound;
    report["distance_bound_abs_satisfied"] = abs_ok;
    report["bounds_note"] = bounds_note.empty() ? Json() : Json(bounds_note);

    report["distance"] = distance ? Json(*distance) : Json();
    report["relative_distance"] =
        distance ? Json(to_string(Rational(static_cast<std::int64_t>(*distance), static_cast<std::int64_t>(n_edges))))
                 : Json();
    report["distance_note"] = distance_note.empty() ? Json() : Json(distance_note);

    const auto verdict = verify_proposition(instance);
    Json proposition;
    proposition["holds"] = verdict.holds;
    proposition["code_dimension"] = verdict.code_dimension;
    proposition["homology_dimension"] = verdict.homology_dimension;
    if (!verdict.holds) {
        proposition["detail"] = verdict.detail;
        proposition["witness"] = verdict.witness ? Json(verdict.witness->to_string()) : Json();
    }
    report["proposition"] = std::move(proposition);
    return report;
}

std::string report_text(const Json& report) {
    std::ostringstream out;
    for (const auto& [key, value] : report.items()) {
        if (value.is_object()) {
            for (const auto& [inner, v] : value.items()) {
                out << key << '.' << inner << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
            }
        } else {
            out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
        }
    }
    return out.str();
}

}  // namespace twistcode
