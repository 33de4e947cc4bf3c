#include "irs/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "irs/chernoff.hpp"
#include "irs/cli/config_io.hpp"
#include "irs/clt.hpp"
#include "irs/saddlepoint.hpp"

namespace irs::cli {
namespace {

// Validation thresholds used by cmd_validate.
constexpr double kStdErrMultiple = 3.0;
constexpr std::uint64_t kMinHits = 100;
constexpr double kTailLo = 1e-6;
constexpr double kTailHi = 1e-3;
constexpr double kTailLog10Gap = 0.5;
constexpr double kNearMeanLo = 0.2;
constexpr double kNearMeanHi = 0.6;
constexpr double kNearMeanRelErr = 0.10;
constexpr double kSlopeWindowLoDb = 40.0;
constexpr double kSlopeWindowHiDb = 60.0;
constexpr double kSlopeRelTol = 0.15;

using Value = std::variant<double, bool, std::uint64_t, std::string>;
using Record = std::vector<std::pair<std::string, Value>>;

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string to_text(const Value& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, double>) {
                return format_number(x);
            } else if constexpr (std::is_same_v<T, bool>) {
                return x ? "true" : "false";
            } else if constexpr (std::is_same_v<T, std::uint64_t>) {
                return std::to_string(x);
            } else {
                return x;
            }
        },
        v);
}

nlohmann::ordered_json to_json(const Value& v) {
    return std::visit(
        [](const auto& x) -> nlohmann::ordered_json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, double>) {
                if (!std::isfinite(x)) return nullptr;
                return std::stod(format_number(x));
            } else {
                return x;
            }
        },
        v);
}

void write_records(const std::vector<Record>& rows, OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::Json) {
        for (const auto& row : rows) {
            nlohmann::ordered_json obj = nlohmann::ordered_json::object();
            for (const auto& [key, value] : row) obj[key] = to_json(value);
            out << obj.dump() << '\n';
        }
        return;
    }
    if (rows.empty()) return;
    for (std::size_t i = 0; i < rows.front().size(); ++i) out << (i ? "," : "") << rows.front()[i].first;
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << to_text(row[i].second);
        out << '\n';
    }
}

std::string column_prefix(Method m) {
    std::string name(method_name(m));
    std::replace(name.begin(), name.end(), '-', '_');
    return name;
}

double mc_log10(const mc::MCEstimate& e) {
    return e.hits == 0 ? -std::numeric_limits<double>::infinity() : std::log10(e.p_hat);
}

std::string join_names(const std::vector<std::string>& names) {
    std::string s;
    for (const auto& n : names) s += (s.empty() ? "" : ", ") + n;
    return s;
}

}  // namespace

std::vector<Method> parse_methods(std::string_view list) {
    static const std::map<std::string, Method, std::less<>> known = {
        {"chernoff", Method::Chernoff},
        {"saddlepoint", Method::Saddlepoint},
        {"saddlepoint-leading", Method::SaddlepointLeading},
        {"clt", Method::Clt},
        {"mc", Method::MonteCarlo},
    };
    std::vector<Method> methods;
    std::vector<std::string> unknown;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        const auto comma = std::min(list.find(',', pos), list.size());
        std::string_view name = list.substr(pos, comma - pos);
        while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
        while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
        pos = comma + 1;
        if (name.empty()) continue;
        if (name == "all") {
            for (auto m : {Method::Chernoff, Method::Saddlepoint, Method::SaddlepointLeading, Method::Clt,
                           Method::MonteCarlo}) {
                if (std::find(methods.begin(), methods.end(), m) == methods.end()) methods.push_back(m);
            }
            continue;
        }
        const auto it = known.find(name);
        if (it == known.end()) {
            unknown.emplace_back(name);
        } else if (std::find(methods.begin(), methods.end(), it->second) == methods.end()) {
            methods.push_back(it->second);
        }
    }
    if (!unknown.empty()) throw UsageError("unknown method(s): " + join_names(unknown));
    if (methods.empty()) throw UsageError("no methods selected");
    return methods;
}

Scenario parse_scenario(std::string_view name) {
    if (name == "no-direct") return Scenario::NoDirectLink;
    if (name == "direct") return Scenario::WithDirectLink;
    throw UsageError("unknown scenario '" + std::string(name) + "' (expected direct or no-direct)");
}

std::vector<double> db_grid(double start_db, double stop_db, double step_db) {
    if (!(step_db > 0.0)) throw UsageError("gamma-t-db step must be positive");
    if (!(start_db <= stop_db)) throw UsageError("gamma-t-db start must not exceed stop");
    const auto count = static_cast<std::size_t>(std::floor((stop_db - start_db) / step_db + 1e-9)) + 1;
    std::vector<double> grid(count);
    for (std::size_t k = 0; k < count; ++k) grid[k] = start_db + static_cast<double>(k) * step_db;
    return grid;
}

void SweepSpec::validate() const {
    config.validate();
    db_grid(gamma_t_db_start, gamma_t_db_stop, gamma_t_db_step);
    if (methods.empty()) throw UsageError("no methods selected");
    const bool wants_mc = std::find(methods.begin(), methods.end(), Method::MonteCarlo) != methods.end();
    if (wants_mc && !mc) throw UsageError("method mc requires Monte Carlo settings");
    if (mc) mc->validate();
    if (scenario == Scenario::WithDirectLink &&
        std::find(methods.begin(), methods.end(), Method::SaddlepointLeading) != methods.end()) {
        throw UsageError("saddlepoint-leading is defined only for --scenario no-direct");
    }
}

void cmd_sweep(const SweepSpec& spec, OutputFormat format, std::ostream& out) {
    spec.validate();
    const auto grid_db = db_grid(spec.gamma_t_db_start, spec.gamma_t_db_stop, spec.gamma_t_db_step);
    std::vector<double> grid(grid_db.size());
    std::transform(grid_db.begin(), grid_db.end(), grid.begin(), db_to_linear);

    std::vector<mc::MCEstimate> mc_points;
    if (std::find(spec.methods.begin(), spec.methods.end(), Method::MonteCarlo) != spec.methods.end()) {
        mc_points = mc::mc_curve(spec.config, spec.scenario, grid, *spec.mc);
    }

    std::vector<Record> rows;
    rows.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const OutageQuery q{spec.config, spec.scenario, grid[i]};
        Record row{{"gamma_t_db", grid_db[i]}};
        for (const auto m : spec.methods) {
            const std::string col = column_prefix(m) + "_log10_p_out";
            switch (m) {
                case Method::Chernoff:
                    row.emplace_back(col, chernoff::chernoff_outage(q).log_bound.log10());
                    break;
                case Method::Saddlepoint:
                case Method::SaddlepointLeading: {
                    const auto tv = m == Method::Saddlepoint ? saddlepoint::saddlepoint_outage(q)
                                                             : saddlepoint::saddlepoint_leading_outage(q);
                    row.emplace_back(col, tv.value.log10());
                    row.emplace_back(column_prefix(m) + "_valid", tv.valid);
                    break;
                }
                case Method::Clt:
                    row.emplace_back(col, clt::clt_outage(q).log10());
                    break;
                case Method::MonteCarlo:
                    row.emplace_back(col, mc_log10(mc_points[i]));
                    row.emplace_back("mc_std_err", mc_points[i].std_err);
                    row.emplace_back("mc_hits", mc_points[i].hits);
                    break;
            }
        }
        rows.push_back(std::move(row));
    }
    write_records(rows, format, out);
}

void cmd_point(const PointSpec& spec, OutputFormat format, std::ostream& out) {
    const OutageQuery q{spec.config, spec.scenario, db_to_linear(spec.gamma_t_db)};
    q.validate();
    Record row{{"method", std::string(method_name(spec.method))},
               {"scenario", std::string(scenario_name(spec.scenario))},
               {"n_elements", static_cast<std::uint64_t>(spec.config.n_elements)},
               {"gamma_t_db", spec.gamma_t_db},
               {"s", channel_threshold(q)}};
    switch (spec.method) {
        case Method::Chernoff: {
            const auto r = chernoff::chernoff_outage(q);
            row.emplace_back("log10_p_out", r.log_bound.log10());
            row.emplace_back("t_star", r.t_star ? format_number(*r.t_star) : std::string("boundary"));
            row.emplace_back("iterations", static_cast<std::uint64_t>(r.iterations));
            row.emplace_back("converged", r.converged);
            break;
        }
        case Method::Saddlepoint:
        case Method::SaddlepointLeading: {
            if (spec.method == Method::SaddlepointLeading && spec.scenario == Scenario::WithDirectLink) {
                throw UsageError("saddlepoint-leading is defined only for --scenario no-direct");
            }
            const auto tv = spec.method == Method::Saddlepoint ? saddlepoint::saddlepoint_outage(q)
                                                               : saddlepoint::saddlepoint_leading_outage(q);
            row.emplace_back("log10_p_out", tv.value.log10());
            row.emplace_back("valid", tv.valid);
            row.emplace_back("note", std::string(tv.valid ? "" : "outside asymptotic regime"));
            break;
        }
        case Method::Clt:
            row.emplace_back("log10_p_out", clt::clt_outage(q).log10());
            break;
        case Method::MonteCarlo: {
            if (!spec.mc) throw UsageError("method mc requires Monte Carlo settings");
            const auto e = mc::mc_outage(q, *spec.mc);
            row.emplace_back("log10_p_out", mc_log10(e));
            row.emplace_back("p_hat", e.p_hat);
            row.emplace_back("std_err", e.std_err);
            row.emplace_back("hits", e.hits);
            row.emplace_back("n_samples", e.n_samples);
            row.emplace_back("seed", e.seed);
            row.emplace_back("upper_confidence", e.upper_confidence());
            break;
        }
    }
    write_records({row}, format, out);
}

bool ValidationReport::passed() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const CheckResult& c) { return c.status == CheckResult::Status::Fail; });
}

ValidationReport cmd_validate(const SystemConfig& config, Scenario scenario, std::uint64_t budget,
                              std::uint64_t seed, unsigned workers) {
    config.validate();
    if (budget < 1) throw UsageError("validate: budget must be >= 1");
    const auto grid_db = db_grid(10.0, 30.0, 5.0);
    std::vector<double> grid(grid_db.size());
    std::transform(grid_db.begin(), grid_db.end(), grid.begin(), db_to_linear);

    mc::McConfig mc_cfg;
    mc_cfg.n_samples = budget;
    mc_cfg.seed = seed;
    mc_cfg.workers = workers;
    const auto mc_points = mc::mc_curve(config, scenario, grid, mc_cfg);

    ValidationReport report;
    using Status = CheckResult::Status;

    // Chernoff bound >= p_hat - 3 se at every grid point.
    {
        CheckResult c{"bound_dominance", Status::Pass, std::numeric_limits<double>::infinity(), 0.0, ""};
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const auto bound = chernoff::chernoff_outage({config, scenario, grid[i]}).log_bound.linear();
            const double margin = bound - (mc_points[i].p_hat - kStdErrMultiple * mc_points[i].std_err);
            if (margin < c.measured) {
                c.measured = margin;
                c.detail = "worst at " + format_number(grid_db[i]) + " dB";
            }
        }
        if (c.measured < c.threshold) c.status = Status::Fail;
        report.checks.push_back(c);
    }

    // Saddlepoint vs CLT against MC, on points MC resolves.
    double worst_tail_gap = 0.0;
    std::size_t tail_points = 0;
    std::size_t ordering_violations = 0;
    double worst_ordering = -std::numeric_limits<double>::infinity();
    double worst_near_mean = 0.0;
    std::size_t near_mean_points = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& e = mc_points[i];
        if (e.hits < kMinHits) continue;
        const OutageQuery q{config, scenario, grid[i]};
        const double mc10 = std::log10(e.p_hat);
        const double clt10 = clt::clt_outage(q).log10();
        if (e.p_hat < kTailHi) {
            const auto sp = saddlepoint::saddlepoint_outage(q);
            const double sp_gap = std::abs(sp.value.log10() - mc10);
            const double clt_gap = std::abs(clt10 - mc10);
            if (e.p_hat >= kTailLo) {
                ++tail_points;
                worst_tail_gap = std::max(worst_tail_gap, sp_gap);
            }
            worst_ordering = std::max(worst_ordering, sp_gap - clt_gap);
            if (!(sp_gap <= clt_gap)) ++ordering_violations;
        }
        if (e.p_hat >= kNearMeanLo && e.p_hat <= kNearMeanHi) {
            ++near_mean_points;
            worst_near_mean = std::max(worst_near_mean, std::abs(std::pow(10.0, clt10) - e.p_hat) / e.p_hat);
        }
    }
    const auto skipped = [](std::string name, double threshold) {
        return CheckResult{std::move(name), Status::Skipped, 0.0, threshold, "insufficient Monte Carlo hits"};
    };
    if (tail_points == 0) {
        report.checks.push_back(skipped("tail_agreement", kTailLog10Gap));
    } else {
        report.checks.push_back({"tail_agreement", worst_tail_gap <= kTailLog10Gap ? Status::Pass : Status::Fail,
                                 worst_tail_gap, kTailLog10Gap,
                                 std::to_string(tail_points) + " point(s), max |dlog10|"});
    }
    if (std::isinf(worst_ordering)) {
        report.checks.push_back(skipped("clt_ordering_tail", 0.0));
    } else {
        report.checks.push_back({"clt_ordering_tail", ordering_violations == 0 ? Status::Pass : Status::Fail,
                                 worst_ordering, 0.0, "max(saddlepoint gap - clt gap)"});
    }
    if (near_mean_points == 0) {
        report.checks.push_back(skipped("clt_near_mean", kNearMeanRelErr));
    } else {
        report.checks.push_back({"clt_near_mean", worst_near_mean <= kNearMeanRelErr ? Status::Pass : Status::Fail,
                                 worst_near_mean, kNearMeanRelErr, "max relative error"});
    }

    // Diversity order of the asymptotic curve.
    {
        std::vector<CurvePoint> curve;
        for (const double db : db_grid(kSlopeWindowLoDb, kSlopeWindowHiDb, 1.0)) {
            const double gt = db_to_linear(db);
            curve.push_back({gt, saddlepoint::saddlepoint_outage({config, scenario, gt}).value});
        }
        const double expected = config.n_elements + (scenario == Scenario::WithDirectLink ? 1.0 : 0.0);
        const double slope = diversity_order_estimate(curve);
        const double rel = std::abs(slope - expected) / expected;
        report.checks.push_back({"diversity_slope", rel <= kSlopeRelTol ? Status::Pass : Status::Fail, rel,
                                 kSlopeRelTol,
                                 "slope " + format_number(slope) + " vs " + format_number(expected) + " over " +
                                     format_number(kSlopeWindowLoDb) + "-" + format_number(kSlopeWindowHiDb) +
                                     " dB"});
    }
    return report;
}

void print_report(const ValidationReport& report, std::ostream& out) {
    for (const auto& c : report.checks) {
        const char* status = c.status == CheckResult::Status::Pass   ? "PASS"
                             : c.status == CheckResult::Status::Fail ? "FAIL"
                                                                     : "SKIP";
        out << status << "  " << c.name;
        if (c.status != CheckResult::Status::Skipped) {
            out << "  measured=" << format_number(c.measured) << "  threshold=" << format_number(c.threshold);
        }
        if (!c.detail.empty()) out << "  (" << c.detail << ")";
        out << '\n';
    }
    out << (report.passed() ? "validation passed" : "validation FAILED") << '\n';
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Outage probability of reflecting-surface assisted links"};
    app.require_subcommand(0, 1);

    std::string config_path;
    std::string scenario_text = "no-direct";
    std::string format_text = "csv";
    bool dump = false;
    std::map<std::string, std::string> overrides;
    app.add_option("--config", config_path, "key=value configuration file");
    app.add_option("--scenario", scenario_text, "direct | no-direct")->check(CLI::IsMember({"direct", "no-direct"}));
    app.add_option("--format", format_text, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--dump-config", dump, "print the resolved configuration and exit");
    for (const auto key : kConfigKeys) {
        const std::string name(key);
        app.add_option_function<std::string>(
            "--" + name, [&overrides, name](const std::string& v) { overrides[name] = v; },
            "override " + name + " from the configuration file");
    }

    std::uint64_t mc_samples = 1'000'000;
    std::uint64_t seed = 1;
    std::uint64_t batch_size = 1 << 16;
    unsigned threads = 0;
    /// Sample counts go through double so that 1e7 is accepted.
    const auto add_count = [](CLI::App* sub, const std::string& name, std::uint64_t& target, const std::string& desc) {
        sub->add_option_function<double>(
            name,
            [&target, name](double v) {
                if (!(v >= 1.0 && v <= 0x1p53 && v == std::floor(v))) {
                    throw CLI::ValidationError(name, "expected a positive whole number");
                }
                target = static_cast<std::uint64_t>(v);
            },
            desc);
    };
    const auto add_mc_options = [&](CLI::App* sub) {
        add_count(sub, "--mc-samples", mc_samples, "Monte Carlo sample count (default 1e6)");
        sub->add_option("--seed", seed, "Monte Carlo seed");
        sub->add_option("--batch-size", batch_size, "samples per accumulation batch")->check(CLI::PositiveNumber);
        sub->add_option("--threads", threads, "worker threads (0 = hardware)");
    };

    auto* sweep = app.add_subcommand("sweep", "evaluate methods over a transmit-SNR grid");
    double start_db = 0.0;
    double stop_db = 40.0;
    double step_db = 2.0;
    std::string methods_text = "chernoff,saddlepoint,clt";
    sweep->add_option("--gamma-t-db-start", start_db, "first transmit SNR, dB")->capture_default_str();
    sweep->add_option("--gamma-t-db-stop", stop_db, "last transmit SNR, dB (inclusive)")->capture_default_str();
    sweep->add_option("--gamma-t-db-step", step_db, "grid step, dB")->capture_default_str();
    sweep->add_option("--methods", methods_text, "comma list of chernoff, saddlepoint, saddlepoint-leading, clt, mc, or all")
        ->capture_default_str();
    add_mc_options(sweep);

    auto* point = app.add_subcommand("point", "evaluate one method at one transmit SNR");
    double point_db = 20.0;
    std::string method_text = "chernoff";
    point->add_option("--gamma-t-db", point_db, "transmit SNR, dB")->capture_default_str();
    point->add_option("--method", method_text, "one of chernoff, saddlepoint, saddlepoint-leading, clt, mc")
        ->capture_default_str();
    add_mc_options(point);

    auto* validate = app.add_subcommand("validate", "run the cross-method checks");
    std::uint64_t budget = 10'000'000;
    add_count(validate, "--budget", budget, "Monte Carlo samples, shared across the grid (default 1e7)");
    validate->add_option("--seed", seed, "Monte Carlo seed");
    validate->add_option("--threads", threads, "worker threads (0 = hardware)");

    for (auto* sub : {sweep, point, validate}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        SystemConfig config = config_path.empty() ? SystemConfig{} : load_config(config_path);
        for (const auto& [key, value] : overrides) apply_setting(config, key, value, "--" + key);
        config.validate();
        if (dump) {
            out << dump_config(config);
            return kExitOk;
        }
        const Scenario scenario = parse_scenario(scenario_text);
        const OutputFormat format = format_text == "json" ? OutputFormat::Json : OutputFormat::Csv;
        mc::McConfig mc_cfg;
        mc_cfg.n_samples = mc_samples;
        mc_cfg.seed = seed;
        mc_cfg.batch_size = std::min(batch_size, mc_samples);
        mc_cfg.workers = threads;

        if (sweep->parsed()) {
            SweepSpec spec{config, scenario, start_db, stop_db, step_db, parse_methods(methods_text), std::nullopt};
            if (std::find(spec.methods.begin(), spec.methods.end(), Method::MonteCarlo) != spec.methods.end()) {
                spec.mc = mc_cfg;
            }
            cmd_sweep(spec, format, out);
            return kExitOk;
        }
        if (point->parsed()) {
            const auto methods = parse_methods(method_text);
            if (methods.size() != 1) throw UsageError("point takes exactly one --method");
            PointSpec spec{config, scenario, point_db, methods.front(), std::nullopt};
            if (spec.method == Method::MonteCarlo) spec.mc = mc_cfg;
            cmd_point(spec, format, out);
            return kExitOk;
        }
        if (validate->parsed()) {
            const auto report = cmd_validate(config, scenario, budget, seed, threads);
            print_report(report, out);
            return report.passed() ? kExitOk : kExitValidationFailed;
        }
        err << app.help();
        return kExitUsage;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << '\n';
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitUsage;
}

}  // namespace irs::cli
