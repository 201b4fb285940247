/*
 *   Copyright 2026 The fingroup authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// fingroup CLI: validate factors, combine events, sample evolution
// curves, and run the verification laws. Exit codes: 0 success/pass,
// 1 domain failure (non-invertible input, law FAIL), 2 usage or parse
// error.

#include "fingroup/algebra.hpp"
#include "fingroup/capfactor.hpp"
#include "fingroup/errors.hpp"
#include "fingroup/evolution.hpp"
#include "fingroup/format.hpp"
#include "fingroup/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

using namespace fingroup;

struct Options {
    std::string factor_path;
    std::string out = "-";
    std::uint64_t seed = verify::LawConfig{}.seed;
    double atol = 1e-12;
    double rtol = 1e-9;

    // per-command state
    std::string event_a, event_b, center, base_event;
    bool anti = false;
    double from = 0.0, to = 0.0, t0 = 0.0;
    long steps = 0;
    std::vector<std::string> laws;
    bool all_laws = false;
};

verify::LawConfig law_config(const Options& opt) {
    verify::LawConfig cfg;
    cfg.seed = opt.seed;
    cfg.atol = opt.atol;
    cfg.rtol = opt.rtol;
    return cfg;
}

// Output sink: "-" is stdout.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (path != "-") {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) {
                throw SpecError("cannot open output path: " + path);
            }
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

int cmd_validate(const Options& opt) {
    const CapFactor factor = load_factor_spec(opt.factor_path);
    const ValidationReport report = validate_factor(factor);
    print_validation_report(std::cout, report);
    if (opt.out != "-") {
        Sink sink(opt.out);
        sink.stream() << validation_to_json(report) << "\n";
    }
    return report.passed ? 0 : 1;
}

int cmd_product(const Options& opt) {
    const CapFactor factor = load_factor_spec(opt.factor_path);
    const Event a = parse_event(opt.event_a);
    const Event b = parse_event(opt.event_b);
    Event result;
    if (!opt.center.empty()) {
        const Event e0 = parse_event(opt.center);
        if (e0.c == 0.0) {
            std::cerr << "error: center not invertible\n";
            return 1;
        }
        result = centered_product(factor, e0, a, b);
    } else if (opt.anti) {
        result = f_anti_product(factor, a, b);
    } else {
        result = f_product(factor, a, b);
    }
    Sink sink(opt.out);
    sink.stream() << format_event(result) << "\n";
    return 0;
}

int cmd_evolve(const Options& opt) {
    const CapFactor factor = load_factor_spec(opt.factor_path);
    const Event base = parse_event(opt.base_event);
    if (opt.steps < 1) {
        throw SpecError("evolve: --steps must be at least 1");
    }
    if (opt.from > opt.to) {
        throw SpecError("evolve: --from must not exceed --to");
    }
    std::vector<double> ts(std::size_t(opt.steps) + 1);
    for (std::size_t k = 0; k < ts.size(); ++k) {
        ts[k] = opt.from + (opt.to - opt.from) * double(k) / double(opt.steps);
    }
    const EvolutionCurve curve(base, factor);
    Sink sink(opt.out);
    write_curve_csv(sink.stream(), curve, ts);
    return 0;
}

int cmd_verify(const Options& opt) {
    const CapFactor factor = load_factor_spec(opt.factor_path);
    const verify::LawConfig cfg = law_config(opt);
    std::vector<verify::AxiomReport> reports;
    if (opt.all_laws) {
        reports = verify::run_all(factor, cfg);
    } else {
        for (const std::string& id : opt.laws) {
            reports.push_back(verify::run_law(id, factor, cfg));
        }
    }
    verify::print_report_table(std::cout, reports);
    Sink sink(opt.out);
    sink.stream() << verify::reports_to_json(reports) << "\n";
    return verify::all_passed(reports) ? 0 : 1;
}

int cmd_exp(const Options& opt) {
    const CapFactor factor = load_factor_spec(opt.factor_path);
    const Event base = parse_event(opt.base_event);
    const ExpMap map = exp_map(factor, opt.t0, base);
    const verify::LawConfig cfg = law_config(opt);
    const double res = verify::curve_homomorphism_residual(map.curve, base, cfg);
    const bool ok = res <= cfg.law_tolerance();

    Sink sink(opt.out);
    const Direction& v = map.tangent.direction;
    sink.stream() << format_double(v.dt) << "," << format_double(v.dh) << ","
                  << format_double(v.dc) << "\n";
    char summary[128];
    std::snprintf(summary, sizeof(summary),
                  "homomorphism residual over %ld pairs: %.3g (tolerance %.3g): %s",
                  cfg.samples, res, cfg.law_tolerance(), ok ? "PASS" : "FAIL");
    std::cout << summary << "\n";
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"algebra of capitalized financial events under a capitalization factor"};
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--factor", opt.factor_path, "factor-spec JSON path")->required();
    app.add_option("--out", opt.out, "output path, '-' for stdout")->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for sampled laws")->capture_default_str();
    app.add_option("--atol", opt.atol, "absolute tolerance")->capture_default_str();
    app.add_option("--rtol", opt.rtol, "relative tolerance")->capture_default_str();

    CLI::App* validate = app.add_subcommand("validate", "check the factor axioms");

    CLI::App* product = app.add_subcommand("product", "combine two events");
    product->add_option("event", opt.event_a, "first event t,h,c")->required();
    product->add_option("event2", opt.event_b, "second event t,h,c")->required();
    auto* anti_flag = product->add_flag("--anti", opt.anti, "use the anti-product");
    auto* center_opt =
        product->add_option("--center", opt.center, "center event t0,h0,c0");
    anti_flag->excludes(center_opt);
    center_opt->excludes(anti_flag);

    CLI::App* evolve = app.add_subcommand("evolve", "sample an evolution curve as CSV");
    evolve->add_option("event", opt.base_event, "base event t,h,c")->required();
    evolve->add_option("--from", opt.from, "first sample time")->required();
    evolve->add_option("--to", opt.to, "last sample time")->required();
    evolve->add_option("--steps", opt.steps, "number of steps (rows = steps+1)")
        ->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "run verification laws");
    auto* law_opt = verify_cmd->add_option("--law", opt.laws, "law id (repeatable)");
    auto* all_opt = verify_cmd->add_flag("--all", opt.all_laws, "run every law");
    law_opt->excludes(all_opt);
    all_opt->excludes(law_opt);

    CLI::App* exp_cmd =
        app.add_subcommand("exp", "exponential map: tangent and homomorphism check");
    exp_cmd->add_option("t0", opt.t0, "anchor time")->required();
    exp_cmd->add_option("event", opt.base_event, "base event t,h,c")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(opt);
        if (app.got_subcommand(product)) return cmd_product(opt);
        if (app.got_subcommand(evolve)) return cmd_evolve(opt);
        if (app.got_subcommand(verify_cmd)) {
            if (!opt.all_laws && opt.laws.empty()) {
                std::cerr << "error: verify needs --all or --law <id>\n";
                return 2;
            }
            return cmd_verify(opt);
        }
        if (app.got_subcommand(exp_cmd)) return cmd_exp(opt);
    } catch (const SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownLawError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
