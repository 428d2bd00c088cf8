// Command-line front end: renders the closed forms, the wasted-area report,
// the convex estimator and the verification suites as csv, json or text
// tables. Output is byte-identical across runs; nothing here reads the clock.
//
// Exit codes: 0 success, 1 verification mismatch, 2 bad arguments or malformed
// input, 3 I/O failure, 4 polygon invariant violation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polyeff/polyeff.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitVerifyMismatch = 1;
constexpr int kExitBadArguments = 2;
constexpr int kExitIoFailure = 3;
constexpr int kExitInvariantViolation = 4;

struct OutputOptions {
    std::string format = "table";
    std::string output_path;
    bool meta = false;
};

void add_output_options(CLI::App* cmd, OutputOptions* opts) {
    cmd->add_option("--format", opts->format, "Output format: csv, json or table")
        ->check(CLI::IsMember({"csv", "json", "table"}))
        ->capture_default_str();
    cmd->add_option("--output", opts->output_path, "Write output to this path instead of stdout");
    cmd->add_flag("--meta", opts->meta,
                  "Prepend a commented generator header (stderr for json output)");
}

// Renders and delivers the records; meta lines are comments ahead of csv and
// table payloads, and go to stderr for json so stdout stays parseable.
int deliver(const std::vector<polyeff::Record>& records, const OutputOptions& opts,
            const std::string& meta_lines) {
    const polyeff::OutputFormat format = polyeff::parse_output_format(opts.format);
    std::string payload = polyeff::render(records, format);
    if (opts.meta) {
        if (format == polyeff::OutputFormat::kJson) {
            std::cerr << meta_lines;
        } else {
            payload = meta_lines + payload;
        }
    }
    if (opts.output_path.empty()) {
        std::cout << payload;
        return kExitOk;
    }
    std::ofstream out(opts.output_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open '" << opts.output_path << "' for writing\n";
        return kExitIoFailure;
    }
    out << payload;
    out.flush();
    if (!out) {
        std::cerr << "error: failed writing to '" << opts.output_path << "'\n";
        return kExitIoFailure;
    }
    return kExitOk;
}

std::string meta_header(const std::string& command, const std::string& params) {
    return "# generator: polyeff " + std::string(kVersion) + "\n# command: " + command +
           "\n# params: " + params + "\n";
}

polyeff::Record limit_field(const polyeff::MetricDescriptor& desc) {
    if (std::isnan(desc.limit_at_infinity)) return "diverges";
    return desc.limit_at_infinity;
}

std::vector<polyeff::Record> table_records(std::int64_t n, double p, polyeff::SlopeParam slope) {
    const std::vector<polyeff::MetricValue> values = polyeff::evaluate_all(n, p, slope);
    std::vector<polyeff::Record> records;
    records.reserve(values.size());
    for (const polyeff::MetricValue& value : values) {
        const polyeff::MetricDescriptor& desc = polyeff::descriptor(value.id);
        polyeff::Record r;
        r["metric"] = desc.name;
        r["section"] = desc.section;
        r["value"] = value.value;
        r["bounded"] = desc.bounded01;
        r["limit"] = limit_field(desc);
        r["erratum_note"] = desc.erratum_note;
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<polyeff::Record> sweep_records(const std::vector<polyeff::SweepRow>& rows) {
    std::vector<polyeff::Record> records;
    records.reserve(rows.size());
    for (const polyeff::SweepRow& row : rows) {
        polyeff::Record r;
        r["n"] = row.n;
        r["p"] = row.p;
        for (int i = 0; i < polyeff::kMetricCount; ++i) {
            r[polyeff::metric_name(static_cast<polyeff::MetricId>(i))] =
                row.metrics[static_cast<std::size_t>(i)];
        }
        r["polygon_area"] = row.polygon_area;
        r["wasted_exact"] = row.wasted_exact;
        r["wasted_asymptotic"] = row.wasted_asymptotic;
        r["bound_value"] = row.bound_value;
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<polyeff::Record> wasted_records(const polyeff::WastedAreaReport& report) {
    polyeff::Record r;
    r["n"] = report.n;
    r["p"] = report.p;
    r["circle_area"] = report.circle_area;
    r["polygon_area"] = report.polygon_area;
    r["wasted_exact"] = report.wasted_exact;
    r["wasted_asymptotic"] = report.wasted_asymptotic;
    r["bound_value"] = report.bound_value;
    r["bound_direction"] = polyeff::to_string(report.bound_direction);
    return {r};
}

std::vector<polyeff::Record> convex_records(const polyeff::EstimateReport& report) {
    polyeff::Record r;
    r["exact_area"] = report.exact_area;
    r["perimeter"] = report.perimeter;
    r["avg_apothem_unweighted"] = report.avg_apothem_unweighted;
    r["avg_apothem_weighted"] = report.avg_apothem_weighted;
    r["avg_circumradius"] = report.avg_circumradius;
    r["estimate_unweighted"] = report.estimate_unweighted;
    r["estimate_weighted"] = report.estimate_weighted;
    r["relative_error_unweighted"] = report.relative_error_unweighted;
    r["orientation_flipped"] = report.orientation_flipped;
    return {r};
}

// ---- verify suites ----------------------------------------------------
//
// Each check carries the verdict it is expected to produce; the §3.6 bound is
// expected to come out as a LOWER bound with its claimed-upper run violated
// at n = 3. The command exits nonzero only if observation and expectation
// part ways, i.e. if the closed forms stopped behaving.

struct VerifyOutcome {
    std::vector<polyeff::Record> records;
    bool all_passed = true;
};

std::string classification_text(const polyeff::BoundClassification& c) {
    std::string text = polyeff::to_string(c.observed);
    if (c.first_violation_n) {
        text += " first_violation=" + std::to_string(*c.first_violation_n);
    } else {
        text += " no_violation";
    }
    return text;
}

void add_bound_check(VerifyOutcome& outcome, const char* name, const polyeff::SeriesFn& target,
                     const polyeff::SeriesFn& bound, polyeff::BoundDirection claimed,
                     const std::string& expected) {
    const polyeff::BoundClassification c =
        polyeff::classify_bound(target, bound, 3, 1000000, claimed);
    const std::string observed = classification_text(c);
    polyeff::Record r;
    r["suite"] = "bounds";
    r["check"] = name;
    r["claimed"] = polyeff::to_string(claimed);
    r["expected"] = expected;
    r["observed"] = observed;
    r["pass"] = observed == expected;
    outcome.all_passed = outcome.all_passed && observed == expected;
    outcome.records.push_back(std::move(r));
}

void run_bounds_suite(VerifyOutcome& outcome) {
    const double p = 1.0;
    const auto wasted = [p](std::int64_t n) { return polyeff::wasted_area(n, p); };
    const auto bound = [p](std::int64_t n) { return polyeff::wasted_area_bound(n, p).value; };
    const auto asym = [p](std::int64_t n) { return polyeff::wasted_area_asymptotic(n, p); };
    const auto area = [p](std::int64_t n) {
        return polyeff::area_apothem(polyeff::RegularPolygonSpec(n, p));
    };
    const auto circle = [p](std::int64_t) { return polyeff::circle_area(p); };

    add_bound_check(outcome, "wasted_area_vs_bound", wasted, bound,
                    polyeff::BoundDirection::kUpper, "lower first_violation=3");
    add_bound_check(outcome, "wasted_area_vs_bound", wasted, bound,
                    polyeff::BoundDirection::kLower, "lower no_violation");
    add_bound_check(outcome, "polygon_area_vs_circle_area", area, circle,
                    polyeff::BoundDirection::kUpper, "upper no_violation");
    add_bound_check(outcome, "bound_vs_asymptotic", asym, bound, polyeff::BoundDirection::kLower,
                    "lower no_violation");
}

void add_monotone_check(VerifyOutcome& outcome, const char* name,
                        const polyeff::SeriesFn& series, polyeff::Direction direction) {
    const polyeff::MonotoneCheck check = polyeff::check_monotone(series, 3, 10000, direction);
    const char* expected =
        direction == polyeff::Direction::kIncreasing ? "increasing" : "decreasing";
    std::string observed = expected;
    if (!check.passed) {
        observed = std::string("counterexample_at=") + std::to_string(*check.counterexample_n);
    }
    polyeff::Record r;
    r["suite"] = "monotone";
    r["check"] = name;
    r["claimed"] = expected;
    r["expected"] = expected;
    r["observed"] = observed;
    r["pass"] = check.passed;
    outcome.all_passed = outcome.all_passed && check.passed;
    outcome.records.push_back(std::move(r));
}

void run_monotone_suite(VerifyOutcome& outcome) {
    const double p = 1.0;
    using polyeff::Direction;
    add_monotone_check(outcome, "polygon_area",
                       [p](std::int64_t n) {
                           return polyeff::area_apothem(polyeff::RegularPolygonSpec(n, p));
                       },
                       Direction::kIncreasing);
    add_monotone_check(outcome, "wasted_area",
                       [p](std::int64_t n) { return polyeff::wasted_area(n, p); },
                       Direction::kDecreasing);
    add_monotone_check(outcome, "inequality_margin",
                       [](std::int64_t n) { return polyeff::elementary_inequality_margin(n); },
                       Direction::kDecreasing);
    add_monotone_check(outcome, "smoothness",
                       [](std::int64_t n) { return polyeff::smoothness(n); },
                       Direction::kIncreasing);
    add_monotone_check(outcome, "iso_slope",
                       [p](std::int64_t n) { return polyeff::iso_slope_index(n, p); },
                       Direction::kIncreasing);
    add_monotone_check(outcome, "iso_slope_normalized",
                       [p](std::int64_t n) { return polyeff::iso_slope_normalized(n, p); },
                       Direction::kIncreasing);
    add_monotone_check(outcome, "apothem_angle",
                       [](std::int64_t n) { return polyeff::apothem_angle_index(n); },
                       Direction::kIncreasing);
    add_monotone_check(outcome, "sector_fill",
                       [](std::int64_t n) { return polyeff::sector_fill(n); },
                       Direction::kIncreasing);
    add_monotone_check(outcome, "angle_area_unbounded",
                       [](std::int64_t n) { return polyeff::angle_area_unbounded(n); },
                       Direction::kDecreasing);
    add_monotone_check(outcome, "chord_arc",
                       [](std::int64_t n) { return polyeff::chord_arc(n); },
                       Direction::kIncreasing);
    add_monotone_check(outcome, "apothem_hypotenuse",
                       [](std::int64_t n) { return polyeff::apothem_hypotenuse(n); },
                       Direction::kIncreasing);
    add_monotone_check(outcome, "angle_triangle_packing",
                       [](std::int64_t n) { return polyeff::angle_triangle_packing(n); },
                       Direction::kIncreasing);
    add_monotone_check(outcome, "half_angle_tangent",
                       [](std::int64_t n) { return polyeff::half_angle_tangent(n); },
                       Direction::kIncreasing);
    add_monotone_check(outcome, "side_apothem",
                       [](std::int64_t n) { return polyeff::side_apothem(n); },
                       Direction::kIncreasing);
}

void run_identities_suite(VerifyOutcome& outcome) {
    for (const polyeff::IdentityResult& result : polyeff::identity_audit(1.0)) {
        polyeff::Record r;
        r["suite"] = "identities";
        r["check"] = result.name;
        r["claimed"] = "equal";
        r["expected"] = "rel_dev<=" + polyeff::format_double(result.threshold);
        r["observed"] = "rel_dev=" + polyeff::format_double(result.max_relative_deviation);
        r["pass"] = result.passed;
        outcome.all_passed = outcome.all_passed && result.passed;
        outcome.records.push_back(std::move(r));
    }
}

void add_fit_check(VerifyOutcome& outcome, const char* name, const polyeff::SeriesFn& series,
                   double expected_slope, std::optional<double> expected_coefficient) {
    std::vector<std::pair<std::int64_t, double>> points;
    for (std::int64_t n = 64; n <= 4096; n *= 2) points.emplace_back(n, series(n));
    const polyeff::ConvergenceFit fit = polyeff::fit_convergence_order(points);

    constexpr double kSlopeTol = 0.005;
    bool pass = std::abs(fit.slope - expected_slope) <= kSlopeTol && fit.conclusive();
    std::string expected = "slope=" + polyeff::format_double(expected_slope) +
                           "+-" + polyeff::format_double(kSlopeTol) + " r2>=0.999";
    std::string observed = "slope=" + polyeff::format_double(fit.slope) +
                           " r2=" + polyeff::format_double(fit.r_squared);
    if (expected_coefficient) {
        const double coeff = std::exp(fit.intercept);
        pass = pass && std::abs(coeff - *expected_coefficient) <= 0.01 * *expected_coefficient;
        expected += " coeff=" + polyeff::format_double(*expected_coefficient) + "+-1%";
        observed += " coeff=" + polyeff::format_double(coeff);
    }

    polyeff::Record r;
    r["suite"] = "convergence";
    r["check"] = name;
    r["claimed"] = "order=" + polyeff::format_double(expected_slope);
    r["expected"] = expected;
    r["observed"] = observed;
    r["pass"] = pass;
    outcome.all_passed = outcome.all_passed && pass;
    outcome.records.push_back(std::move(r));
}

void run_convergence_suite(VerifyOutcome& outcome) {
    add_fit_check(outcome, "wasted_area_order",
                  [](std::int64_t n) { return polyeff::wasted_area(n, 1.0); }, -2.0,
                  polyeff::kPi / 12.0);
    add_fit_check(outcome, "one_minus_smoothness_order",
                  [](std::int64_t n) { return 1.0 - polyeff::smoothness(n); }, -2.0,
                  std::nullopt);
}

VerifyOutcome run_verify(const std::string& suite) {
    VerifyOutcome outcome;
    if (suite == "all" || suite == "bounds") run_bounds_suite(outcome);
    if (suite == "all" || suite == "monotone") run_monotone_suite(outcome);
    if (suite == "all" || suite == "identities") run_identities_suite(outcome);
    if (suite == "all" || suite == "convergence") run_convergence_suite(outcome);
    return outcome;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polyeff: regular-polygon efficiency metrics, wasted-area bounds and "
                 "convex-area estimation"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::int64_t n = 0;
    std::int64_t n_min = 0;
    std::int64_t n_max = 0;
    std::int64_t linear_step = 1;
    double geometric_ratio = 0.0;
    double p = 1.0;
    double m = 0.0;
    std::string polygon_path;
    std::string input_format;
    std::string suite = "all";
    OutputOptions table_out, sweep_out, wasted_out, convex_out, verify_out;

    CLI::App* table = app.add_subcommand("table", "All metric values at one (n, p, m)");
    table->add_option("--n", n, "Side count (>= 3)")->required();
    table->add_option("--p", p, "Perimeter")->capture_default_str();
    table->add_option("--m", m, "Slope parameter for the slope metrics")->capture_default_str();
    add_output_options(table, &table_out);

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Metric and area columns over a range of n");
    sweep_cmd->add_option("--n-min", n_min, "First side count")->required();
    sweep_cmd->add_option("--n-max", n_max, "Last side count")->required();
    CLI::Option* step_opt =
        sweep_cmd->add_option("--step", linear_step, "Linear stride between rows");
    CLI::Option* geo_opt =
        sweep_cmd->add_option("--geometric", geometric_ratio, "Geometric ratio between rows (> 1)");
    step_opt->excludes(geo_opt);
    sweep_cmd->add_option("--p", p, "Perimeter")->capture_default_str();
    sweep_cmd->add_option("--m", m, "Slope parameter for the slope metrics")
        ->capture_default_str();
    add_output_options(sweep_cmd, &sweep_out);

    CLI::App* wasted = app.add_subcommand("wasted", "Wasted-area report at one (n, p)");
    wasted->add_option("--n", n, "Side count (>= 3)")->required();
    wasted->add_option("--p", p, "Perimeter")->capture_default_str();
    add_output_options(wasted, &wasted_out);

    CLI::App* convex = app.add_subcommand("convex", "Average-apothem area estimate for a convex "
                                                    "polygon read from a file");
    convex->add_option("file", polygon_path, "Vertex file (.csv: one x,y per line; .json: array "
                                             "of [x,y] pairs)")
        ->required();
    convex->add_option("--input-format", input_format, "Force the input format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    add_output_options(convex, &convex_out);

    CLI::App* verify = app.add_subcommand("verify", "Run the self-verification suites");
    verify->add_option("--suite", suite, "all, bounds, monotone, identities or convergence")
        ->check(CLI::IsMember({"all", "bounds", "monotone", "identities", "convergence"}))
        ->capture_default_str();
    add_output_options(verify, &verify_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadArguments;
    }

    try {
        if (table->parsed()) {
            const polyeff::SlopeParam slope(m);
            return deliver(table_records(n, p, slope), table_out,
                           meta_header("table", "n=" + std::to_string(n) +
                                                    " p=" + polyeff::format_double(p) +
                                                    " m=" + polyeff::format_double(m)));
        }
        if (sweep_cmd->parsed()) {
            const polyeff::SweepStep step = geo_opt->count() > 0
                                                ? polyeff::SweepStep::geometric(geometric_ratio)
                                                : polyeff::SweepStep::linear(linear_step);
            const polyeff::SlopeParam slope(m);
            const std::string stepping =
                geo_opt->count() > 0 ? "geometric=" + polyeff::format_double(geometric_ratio)
                                     : "step=" + std::to_string(linear_step);
            return deliver(sweep_records(polyeff::sweep(n_min, n_max, step, p, slope)), sweep_out,
                           meta_header("sweep", "n_min=" + std::to_string(n_min) +
                                                    " n_max=" + std::to_string(n_max) + " " +
                                                    stepping + " p=" + polyeff::format_double(p) +
                                                    " m=" + polyeff::format_double(m)));
        }
        if (wasted->parsed()) {
            return deliver(wasted_records(polyeff::wasted_report(n, p)), wasted_out,
                           meta_header("wasted", "n=" + std::to_string(n) +
                                                     " p=" + polyeff::format_double(p)));
        }
        if (convex->parsed()) {
            std::vector<polyeff::Point> points;
            if (input_format.empty()) {
                points = polyeff::read_polygon_file(polygon_path);
            } else {
                points = polyeff::read_polygon_file(polygon_path,
                                                    input_format == "csv"
                                                        ? polyeff::PolygonFileFormat::kCsv
                                                        : polyeff::PolygonFileFormat::kJson);
            }
            const polyeff::ConvexPolygon poly = polyeff::ConvexPolygon::from_vertices(points);
            return deliver(convex_records(polyeff::estimate(poly)), convex_out,
                           meta_header("convex", "file=" + polygon_path));
        }
        if (verify->parsed()) {
            const VerifyOutcome outcome = run_verify(suite);
            const int rc = deliver(
                outcome.records, verify_out,
                meta_header("verify", "suite=" + suite +
                                          " thresholds: identities_rel=1e-11 slope_tol=0.005 "
                                          "r2_min=0.999"));
            if (rc != kExitOk) return rc;
            return outcome.all_passed ? kExitOk : kExitVerifyMismatch;
        }
    } catch (const polyeff::PolygonError& e) {
        std::cerr << "error: polygon invariant '" << e.invariant() << "' violated";
        if (e.vertex() != polyeff::PolygonError::kNoVertex) {
            std::cerr << " at vertex " << e.vertex();
        }
        std::cerr << ": " << e.what() << "\n";
        return kExitInvariantViolation;
    } catch (const polyeff::PolygonParseError& e) {
        std::cerr << "error: cannot parse '" << polygon_path << "': " << e.what() << "\n";
        return kExitBadArguments;
    } catch (const polyeff::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoFailure;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArguments;
    }
    return kExitOk;
}
