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

#include "fingroup/capfactor.hpp"

#include "fingroup/errors.hpp"
#include "fingroup/format.hpp"
#include "fingroup/kernels.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

namespace fingroup {

double finite_difference_step(double h) {
    return 1e-6 * std::max(1.0, std::fabs(h));
}

CapFactor CapFactor::exponential(double delta, DerivativeMode mode) {
    if (!std::isfinite(delta)) {
        throw SpecError("exponential factor: delta must be finite");
    }
    CapFactor f;
    f.kind_ = FactorKind::exponential;
    f.mode_ = mode;
    f.coeffs_ = {delta};
    return f;
}

CapFactor CapFactor::odd_poly_exp(std::vector<double> coeffs, DerivativeMode mode) {
    for (double a : coeffs) {
        if (!std::isfinite(a)) {
            throw SpecError("odd_poly_exp factor: coefficients must be finite");
        }
    }
    CapFactor f;
    f.kind_ = FactorKind::odd_poly_exp;
    f.mode_ = mode;
    f.coeffs_ = std::move(coeffs);
    return f;
}

CapFactor CapFactor::tabulated_odd_exp(std::vector<std::array<double, 2>> samples,
                                       DerivativeMode mode) {
    if (samples.empty()) {
        throw SpecError("tabulated_odd_exp factor: needs at least one sample");
    }
    CapFactor f;
    f.kind_ = FactorKind::tabulated_odd_exp;
    f.mode_ = mode;
    f.knots_h_ = {0.0};
    f.knots_g_ = {0.0};
    double prev_h = 0.0;
    for (const auto& [h, g] : samples) {
        if (!std::isfinite(h) || !std::isfinite(g)) {
            throw SpecError("tabulated_odd_exp factor: samples must be finite");
        }
        if (h <= prev_h) {
            throw SpecError(
                "tabulated_odd_exp factor: sample times must be positive and strictly "
                "increasing");
        }
        f.knots_h_.push_back(h);
        f.knots_g_.push_back(g);
        prev_h = h;
    }
    f.slopes_.resize(f.knots_h_.size() - 1);
    for (std::size_t i = 0; i + 1 < f.knots_h_.size(); ++i) {
        f.slopes_[i] =
            (f.knots_g_[i + 1] - f.knots_g_[i]) / (f.knots_h_[i + 1] - f.knots_h_[i]);
    }
    return f;
}

std::span<const double> CapFactor::knots() const {
    if (kind_ != FactorKind::tabulated_odd_exp) return {};
    return {knots_h_.data() + 1, knots_h_.size() - 1};
}

double CapFactor::tabulated_log(double h) const {
    const double a = std::fabs(h);
    const auto it = std::upper_bound(knots_h_.begin(), knots_h_.end(), a);
    const std::size_t seg =
        std::min(std::size_t(it - knots_h_.begin()) - 1, slopes_.size() - 1);
    const double g = knots_g_[seg] + slopes_[seg] * (a - knots_h_[seg]);
    return h < 0.0 ? -g : g;
}

double CapFactor::tabulated_slope(double h) const {
    const double a = std::fabs(h);
    const auto it = std::upper_bound(knots_h_.begin(), knots_h_.end(), a);
    const std::size_t seg =
        std::min(std::size_t(it - knots_h_.begin()) - 1, slopes_.size() - 1);
    return slopes_[seg];
}

double CapFactor::log_factor(double h) const {
    if (kind_ == FactorKind::tabulated_odd_exp) return tabulated_log(h);
    double g = 0.0;
    kernels::scalar_backend().odd_poly(coeffs_.data(), coeffs_.size(), &h, &g, 1);
    return g;
}

double CapFactor::log_factor_derivative(double h) const {
    if (kind_ == FactorKind::tabulated_odd_exp) return tabulated_slope(h);
    double dg = 0.0;
    kernels::scalar_backend().odd_poly_deriv(coeffs_.data(), coeffs_.size(), &h, &dg, 1);
    return dg;
}

double CapFactor::eval(double h) const {
    const double g = log_factor(h);
    if (!(std::fabs(g) <= max_exponent)) {
        throw RangeError("capitalization factor out of range at h=" + format_double(h) +
                         " (growth exponent " + format_double(g) + ")");
    }
    return std::exp(g);
}

double CapFactor::derivative(double h) const {
    if (mode_ == DerivativeMode::analytic) {
        return log_factor_derivative(h) * eval(h);
    }
    const double s = finite_difference_step(h);
    return (eval(h + s) - eval(h - s)) / (2.0 * s);
}

double CapFactor::force_of_interest(double h) const {
    if (mode_ == DerivativeMode::analytic) {
        return log_factor_derivative(h);
    }
    return derivative(h) / eval(h);
}

void CapFactor::log_factor_batch(std::span<const double> h, std::span<double> g) const {
    if (kind_ == FactorKind::tabulated_odd_exp) {
        for (std::size_t i = 0; i < h.size(); ++i) g[i] = tabulated_log(h[i]);
        return;
    }
    kernels::active_backend().odd_poly(coeffs_.data(), coeffs_.size(), h.data(), g.data(),
                                       h.size());
}

void CapFactor::eval_batch(std::span<const double> h, std::span<double> out) const {
    if (out.size() != h.size()) {
        throw Error("eval_batch: output size mismatch");
    }
    const auto& backend = kernels::active_backend();
    log_factor_batch(h, out);
    const double m = backend.max_abs(out.data(), out.size());
    if (!(m <= max_exponent)) {
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (!(std::fabs(out[i]) <= max_exponent)) {
                throw RangeError("capitalization factor out of range at h=" +
                                 format_double(h[i]) + " (growth exponent " +
                                 format_double(out[i]) + ")");
            }
        }
    }
    backend.exp(out.data(), out.data(), out.size());
}

void CapFactor::derivative_batch(std::span<const double> h, std::span<double> out) const {
    if (out.size() != h.size()) {
        throw Error("derivative_batch: output size mismatch");
    }
    if (mode_ == DerivativeMode::finite_difference) {
        for (std::size_t i = 0; i < h.size(); ++i) out[i] = derivative(h[i]);
        return;
    }
    std::vector<double> value(h.size());
    eval_batch(h, value);
    if (kind_ == FactorKind::tabulated_odd_exp) {
        for (std::size_t i = 0; i < h.size(); ++i) out[i] = tabulated_slope(h[i]);
    } else {
        kernels::active_backend().odd_poly_deriv(coeffs_.data(), coeffs_.size(), h.data(),
                                                 out.data(), h.size());
    }
    for (std::size_t i = 0; i < h.size(); ++i) out[i] *= value[i];
}

std::string CapFactor::describe() const {
    switch (kind_) {
    case FactorKind::exponential:
        return "exponential(delta=" + format_double(coeffs_[0]) + ")";
    case FactorKind::odd_poly_exp: {
        std::string s = "odd_poly_exp(coeffs=[";
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) s += ",";
            s += format_double(coeffs_[i]);
        }
        return s + "])";
    }
    case FactorKind::tabulated_odd_exp:
        return "tabulated_odd_exp(" + std::to_string(knots_h_.size() - 1) + " samples)";
    }
    return "capfactor";
}

// ---------------------------------------------------------------------------
// factor-spec parsing

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed) {
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* a : allowed) {
            if (item.key() == a) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw SpecError("factor spec: unknown key \"" + item.key() + "\"");
        }
    }
}

double number_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number()) {
        throw SpecError(std::string("factor spec: missing numeric \"") + key + "\"");
    }
    const double v = j[key].get<double>();
    if (!std::isfinite(v)) {
        throw SpecError(std::string("factor spec: \"") + key + "\" must be finite");
    }
    return v;
}

} // namespace

CapFactor parse_factor_spec(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw SpecError(std::string("factor spec: ") + e.what());
    }
    if (!j.is_object()) {
        throw SpecError("factor spec: expected a JSON object");
    }
    if (!j.contains("kind") || !j["kind"].is_string()) {
        throw SpecError("factor spec: missing string \"kind\"");
    }
    const std::string kind = j["kind"].get<std::string>();

    if (kind == "exponential") {
        reject_unknown_keys(j, {"kind", "delta"});
        return CapFactor::exponential(number_field(j, "delta"));
    }
    if (kind == "odd_poly_exp") {
        reject_unknown_keys(j, {"kind", "coeffs"});
        if (!j.contains("coeffs") || !j["coeffs"].is_array()) {
            throw SpecError("factor spec: odd_poly_exp needs a \"coeffs\" array");
        }
        std::vector<double> coeffs;
        for (const auto& c : j["coeffs"]) {
            if (!c.is_number() || !std::isfinite(c.get<double>())) {
                throw SpecError("factor spec: coefficients must be finite numbers");
            }
            coeffs.push_back(c.get<double>());
        }
        return CapFactor::odd_poly_exp(std::move(coeffs));
    }
    if (kind == "tabulated_odd_exp") {
        reject_unknown_keys(j, {"kind", "samples"});
        if (!j.contains("samples") || !j["samples"].is_array()) {
            throw SpecError("factor spec: tabulated_odd_exp needs a \"samples\" array");
        }
        std::vector<std::array<double, 2>> samples;
        for (const auto& s : j["samples"]) {
            if (!s.is_array() || s.size() != 2 || !s[0].is_number() || !s[1].is_number()) {
                throw SpecError("factor spec: samples must be [h, g] number pairs");
            }
            samples.push_back({s[0].get<double>(), s[1].get<double>()});
        }
        return CapFactor::tabulated_odd_exp(std::move(samples));
    }
    throw SpecError("factor spec: unknown kind \"" + kind + "\"");
}

CapFactor load_factor_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw SpecError("cannot open factor spec: " + path);
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_factor_spec(text.str());
}

// ---------------------------------------------------------------------------
// axiom validation

namespace {

constexpr double kDefaultGrid[] = {0.25, 0.5, 1.0, 2.0, 5.0, 10.0, 25.0};

struct PointEval {
    double f_pos = 0.0;
    double f_neg = 0.0;
    bool pos_ok = false;
    bool neg_ok = false;
    bool deriv_ok = false;
};

std::vector<double> positive_grid(std::span<const double> grid) {
    std::vector<double> hs;
    hs.reserve(grid.size());
    for (double h : grid) {
        if (h != 0.0 && std::isfinite(h)) hs.push_back(std::fabs(h));
    }
    std::sort(hs.begin(), hs.end());
    hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
    if (hs.empty()) {
        throw SpecError("validation grid is empty");
    }
    return hs;
}

ValidationReport grade(std::string name, bool piecewise, double tol_recip, bool f0_ok,
                       double f0, const std::vector<PointEval>& pts) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    ValidationReport report;
    report.factor = std::move(name);
    report.grid_points = 2 * pts.size() + 1;
    report.tol_recip = tol_recip;
    report.piecewise_c1 = piecewise;

    AxiomResidual unit{"unit-at-zero", f0_ok ? std::fabs(f0 - 1.0) : inf, tol_recip, false};

    AxiomResidual positivity{"positivity", 0.0, 0.0, false};
    if (!f0_ok || f0 <= 0.0) positivity.max_residual = 1.0;
    for (const auto& p : pts) {
        if (!p.pos_ok || !p.neg_ok || p.f_pos <= 0.0 || p.f_neg <= 0.0) {
            positivity.max_residual = 1.0;
        }
    }

    AxiomResidual reciprocity{"reciprocity", 0.0, tol_recip, false};
    for (const auto& p : pts) {
        const double r =
            (p.pos_ok && p.neg_ok) ? std::fabs(p.f_pos * p.f_neg - 1.0) : inf;
        reciprocity.max_residual = std::max(reciprocity.max_residual, r);
    }

    AxiomResidual derivative{"derivative-finite", 0.0, 0.0, false};
    for (const auto& p : pts) {
        if (!p.deriv_ok) derivative.max_residual = 1.0;
    }

    report.axioms = {unit, positivity, reciprocity, derivative};
    report.passed = true;
    for (auto& axiom : report.axioms) {
        axiom.passed = axiom.max_residual <= axiom.tolerance;
        report.passed = report.passed && axiom.passed;
    }
    return report;
}

} // namespace

double ValidationReport::max_residual() const {
    double m = 0.0;
    for (const auto& axiom : axioms) m = std::max(m, axiom.max_residual);
    return m;
}

std::string validation_to_json(const ValidationReport& report) {
    json axioms = json::array();
    for (const auto& a : report.axioms) {
        axioms.push_back({{"axiom", a.axiom},
                          {"max_residual", a.max_residual},
                          {"tolerance", a.tolerance},
                          {"passed", a.passed}});
    }
    const json j = {{"factor", report.factor},
                    {"grid_points", report.grid_points},
                    {"tol_recip", report.tol_recip},
                    {"piecewise_c1", report.piecewise_c1},
                    {"axioms", axioms},
                    {"passed", report.passed}};
    return j.dump(2);
}

void print_validation_report(std::ostream& out, const ValidationReport& report) {
    out << "factor: " << report.factor << "\n";
    out << "grid points: " << report.grid_points
        << "  tol_recip: " << format_double(report.tol_recip) << "\n";
    for (const auto& a : report.axioms) {
        out << "  " << a.axiom;
        for (std::size_t i = a.axiom.size(); i < 20; ++i) out << ' ';
        char buf[64];
        std::snprintf(buf, sizeof(buf), "max residual %-12.3g tol %-9.3g %s",
                      a.max_residual, a.tolerance, a.passed ? "PASS" : "FAIL");
        out << buf << "\n";
    }
    if (report.piecewise_c1) {
        out << "  note: derivative is piecewise (C1 between knots only)\n";
    }
    out << "overall: " << (report.passed ? "PASS" : "FAIL") << "\n";
}

std::span<const double> default_validation_grid() { return kDefaultGrid; }

ValidationReport validate_candidate(const FactorCandidate& candidate,
                                    std::span<const double> grid, double tol_recip) {
    const std::vector<double> hs = positive_grid(grid);

    auto eval = [&](double h, bool& ok) {
        ok = false;
        if (!candidate.f) return std::numeric_limits<double>::quiet_NaN();
        try {
            const double v = candidate.f(h);
            ok = std::isfinite(v);
            return v;
        } catch (const std::exception&) {
            return std::numeric_limits<double>::quiet_NaN();
        }
    };
    auto deriv_finite = [&](double h) {
        try {
            if (candidate.fprime) return std::isfinite(candidate.fprime(h));
            bool okp = false, okm = false;
            const double s = finite_difference_step(h);
            const double fp = eval(h + s, okp);
            const double fm = eval(h - s, okm);
            return okp && okm && std::isfinite((fp - fm) / (2.0 * s));
        } catch (const std::exception&) {
            return false;
        }
    };

    bool f0_ok = false;
    const double f0 = eval(0.0, f0_ok);
    std::vector<PointEval> pts(hs.size());
    for (std::size_t i = 0; i < hs.size(); ++i) {
        pts[i].f_pos = eval(hs[i], pts[i].pos_ok);
        pts[i].f_neg = eval(-hs[i], pts[i].neg_ok);
        pts[i].deriv_ok = deriv_finite(hs[i]) && deriv_finite(-hs[i]);
    }
    return grade(candidate.name, candidate.piecewise_c1, tol_recip, f0_ok, f0, pts);
}

ValidationReport validate_factor(const CapFactor& factor, std::span<const double> grid,
                                 double tol_recip) {
    const std::vector<double> hs = positive_grid(grid);
    try {
        // batch evaluation: [+h..., -h..., 0], then derivatives on +-h
        std::vector<double> xs(2 * hs.size() + 1);
        for (std::size_t i = 0; i < hs.size(); ++i) {
            xs[i] = hs[i];
            xs[hs.size() + i] = -hs[i];
        }
        xs.back() = 0.0;
        std::vector<double> fv(xs.size());
        factor.eval_batch(xs, fv);
        std::vector<double> dv(xs.size());
        factor.derivative_batch(xs, dv);

        std::vector<PointEval> pts(hs.size());
        for (std::size_t i = 0; i < hs.size(); ++i) {
            pts[i].f_pos = fv[i];
            pts[i].f_neg = fv[hs.size() + i];
            pts[i].pos_ok = std::isfinite(pts[i].f_pos);
            pts[i].neg_ok = std::isfinite(pts[i].f_neg);
            pts[i].deriv_ok =
                std::isfinite(dv[i]) && std::isfinite(dv[hs.size() + i]);
        }
        return grade(factor.describe(), factor.piecewise(), tol_recip, true, fv.back(),
                     pts);
    } catch (const Error&) {
        // range error somewhere on the grid: grade pointwise so the
        // report localizes the failure instead of crashing
        FactorCandidate c{factor.describe(), [&factor](double h) { return factor.eval(h); },
                          [&factor](double h) { return factor.derivative(h); },
                          factor.piecewise()};
        return validate_candidate(c, grid, tol_recip);
    }
}

} // namespace fingroup
