/*
   Copyright 2026 The gri Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gri/io.hpp"
#include "gri/parser.hpp"

namespace {

using namespace gri;

enum Exit { kOk = 0, kRefuted = 1, kError = 2, kInconclusive = 3 };

struct Options {
    std::string expr;
    std::string catalog_name;
    std::string algebra = "hamilton";
    std::string sigma = "default";
    std::optional<std::uint32_t> m;
    bool json = false;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 1;

    // verb-specific
    bool trace = false;
    std::uint32_t var = 0;
    std::optional<std::uint32_t> fresh;
    std::vector<std::string> at;
    std::string r;
    std::string mode = "randomized";
    std::size_t samples = 1000;
    std::uint64_t budget = std::uint64_t{1} << 24;
    int box = kDefaultBox;
    std::optional<std::size_t> order;
    std::size_t verify = 0;
};

void add_input(CLI::App* cmd, Options& o) {
    auto* e = cmd->add_option("-e,--expr", o.expr, "Expression in the shared grammar");
    auto* c = cmd->add_option("--catalog", o.catalog_name, "Catalog entry name instead of --expr");
    e->excludes(c);
    cmd->add_option("--algebra", o.algebra, "hamilton, quat:a,b[:p], m<n>f<p>, m<n>q, f<p>, q or a JSON file")
        ->capture_default_str();
    cmd->add_option("--sigma", o.sigma, "none, default, conjugation, transpose, identity or a JSON file")
        ->capture_default_str();
    cmd->add_option("--m", o.m, "Twist bound m (defaults to the verified order floor of sigma)");
    cmd->add_flag("--json", o.json, "Emit JSON");
    cmd->add_option("--seed", o.seed, "Random seed")->capture_default_str();
}

AmbientPtr ambient_for(const Options& o) {
    const AlgebraPtr algebra = algebra_from_spec(o.algebra);
    return make_ambient(algebra, sigma_from_spec(o.sigma, algebra), o.m);
}

std::string input_text(const Options& o) {
    if (!o.catalog_name.empty()) return catalog(o.catalog_name).expression;
    if (o.expr.empty()) fail(ErrorKind::InvalidInput, "one of --expr or --catalog is required");
    return o.expr;
}

GenPoly input_poly(const Options& o, const AmbientPtr& ambient) {
    Parsed p = parse_expression(input_text(o), ambient);
    if (auto* f = std::get_if<GenPoly>(&p)) return *f;
    fail(ErrorKind::InvalidInput, "this command needs a polynomial; the expression contains inverses");
}

void emit(const Options& o, const Json& j, const std::string& text) {
    if (o.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

std::string point_text(const Point& p) {
    std::string out;
    for (const auto& [v, x] : p) out += (out.empty() ? "" : ", ") + ("x" + std::to_string(v)) + " = " + x.to_string();
    return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------- verbs

int run_normalize(const Options& o) {
    const AmbientPtr ambient = ambient_for(o);
    Parsed p = parse_expression(input_text(o), ambient);
    if (auto* f = std::get_if<GenPoly>(&p)) {
        emit(o, {{"kind", "polynomial"}, {"poly", to_json(*f)}, {"text", f->to_string()}}, f->to_string() + "\n");
    } else {
        const auto& e = std::get<RatExpr>(p);
        emit(o, {{"kind", "rational"}, {"text", e.to_string()}}, e.to_string() + "\n");
    }
    return kOk;
}

int run_metrics(const Options& o) {
    const GenPoly f = input_poly(o, ambient_for(o));
    const Json j = metrics_json(f);
    std::string text = "poly: " + f.to_string() + "\n";
    if (f.is_zero()) {
        text += "zero polynomial\n";
    } else {
        text += "deg: " + std::to_string(deg(f)) + "\nht: " + std::to_string(height(f)) +
                "\nmax twist: " + std::to_string(f.max_twist()) + "\nblended: " + yes_no(is_blended(f)) +
                "\nsigma-linear: " + yes_no(is_sigma_linear(f)) + "\n";
        for (auto v : f.variables()) {
            text += "x" + std::to_string(v) + ": sigma_deg " + std::to_string(sigma_deg(f, v)) + ", sigma_ht " +
                    std::to_string(sigma_ht(f, v)) + "\n";
        }
    }
    emit(o, j, text);
    return kOk;
}

int run_blend(const Options& o) {
    const BlendTrace t = blend(input_poly(o, ambient_for(o)));
    std::string text;
    if (o.trace) {
        for (const auto& s : t.steps) {
            text += "split x" + std::to_string(s.var) + ": removed " + s.removed.to_string() + " | kept " +
                    s.kept.to_string() + "\n";
        }
    }
    emit(o, to_json(t, o.trace), text + t.result.to_string() + "\n");
    return kOk;
}

int run_multilinearize(const Options& o) {
    const GenPoly f = input_poly(o, ambient_for(o));
    const MultilinearizeReport r = multilinearize(f);
    Json j = to_json(r);
    std::string text;
    if (o.trace) {
        j["blend"] = to_json(blend(f), true);
        for (const auto& [v, src] : r.fresh_vars) {
            text += "x" + std::to_string(v) + " <- copy " + std::to_string(src.second) + " of x" +
                    std::to_string(src.first) + "\n";
        }
    }
    emit(o, j, text + r.result.to_string() + "\n");
    return kOk;
}

int run_delta(const Options& o) {
    const GenPoly f = input_poly(o, ambient_for(o));
    std::uint32_t fresh = o.fresh.value_or(0);
    if (!o.fresh) {
        const auto vars = f.variables();
        for (fresh = 1; vars.count(fresh); ++fresh) {
        }
    }
    const GenPoly d = delta(f, o.var, fresh);
    emit(o, {{"var", "x" + std::to_string(o.var)}, {"fresh", "x" + std::to_string(fresh)}, {"poly", to_json(d)},
             {"text", d.to_string()}},
         d.to_string() + "\n");
    return kOk;
}

int run_expand(const Options& o) {
    const AmbientPtr ambient = ambient_for(o);
    const Point r = parse_point(o.at, ambient->algebra);
    Parsed p = parse_expression(input_text(o), ambient);
    if (auto* f = std::get_if<GenPoly>(&p)) {
        const auto parts = expand_at(*f, r);
        Json comps = Json::array();
        std::string text;
        comps.push_back(to_json(parts[0].constant_value()));
        text += "f0 = " + parts[0].constant_value().to_string() + "\n";
        for (std::size_t i = 1; i < parts.size(); ++i) {
            comps.push_back(to_json(parts[i]));
            text += "f" + std::to_string(i) + " = " + parts[i].to_string() + "\n";
        }
        emit(o, {{"order", parts.size() - 1}, {"coeffs", std::move(comps)}}, text);
        return kOk;
    }
    const auto& e = std::get<RatExpr>(p);
    const std::size_t order = o.order.value_or(e.numerator_degree());
    const TruncatedSeries s = series_expand(e, r, order);
    std::string text = "c0 = " + s.constant_term().to_string() + "\n";
    for (std::size_t i = 1; i <= s.order(); ++i) text += "c" + std::to_string(i) + " = " + s.coeff(i).to_string() + "\n";
    emit(o, to_json(s), text);
    return kOk;
}

int run_reduce_twist(const Options& o) {
    const AmbientPtr ambient = ambient_for(o);
    const GenPoly f = input_poly(o, ambient);
    Element r = ambient->algebra->one();
    if (!o.r.empty()) {
        r = parse_element(o.r, ambient->algebra);
    } else {
        Rng rng = stream(o.seed, 0);
        r = ambient->algebra->random_element(rng);
    }
    const TwistReduction red = reduce_twist(f, r);
    Json j = to_json(red);
    j["r"] = to_json(r);
    emit(o, j,
         "r = " + r.to_string() + "\npivot cancelled: " + yes_no(red.pivot_cancelled) +
             "\nresidual top-twist terms: " + std::to_string(red.residual_top_terms) + "\n" + red.result.to_string() +
             "\n");
    return kOk;
}

int exit_for(Outcome outcome) {
    switch (outcome) {
        case Outcome::Holds:
            return kOk;
        case Outcome::Refuted:
            return kRefuted;
        default:
            return kInconclusive;
    }
}

std::string verdict_text(const Verdict& v) {
    std::string text = to_string(v.outcome) + " (" + to_string(v.mode) + ", " + std::to_string(v.points_tested) +
                       " points tested";
    if (v.skipped_undefined) text += ", " + std::to_string(v.skipped_undefined) + " undefined skipped";
    text += ")\n";
    if (v.witness) text += "witness: " + point_text(*v.witness) + "\nvalue: " + v.witness_value->to_string() + "\n";
    return text;
}

CheckOptions check_options(const Options& o) {
    CheckOptions c;
    if (o.mode == "exhaustive") {
        c.mode = CheckMode::Exhaustive;
    } else if (o.mode != "randomized") {
        fail(ErrorKind::InvalidInput, "--mode must be exhaustive or randomized");
    }
    c.samples = o.samples;
    c.seed = o.seed;
    c.budget = o.budget;
    c.threads = o.threads;
    c.box = o.box;
    return c;
}

int run_check(const Options& o) {
    const AmbientPtr ambient = ambient_for(o);
    Parsed p = parse_expression(input_text(o), ambient);
    const CheckOptions c = check_options(o);
    const Verdict v = std::holds_alternative<GenPoly>(p) ? check_gpi(std::get<GenPoly>(p), c)
                                                         : check_gri(std::get<RatExpr>(p), c);
    emit(o, to_json(v), verdict_text(v));
    return exit_for(v.outcome);
}

int run_extract(const Options& o) {
    const AmbientPtr ambient = ambient_for(o);
    const RatExpr e = parse_rational(input_text(o), ambient);
    const Point r = parse_point(o.at, ambient->algebra);
    const std::size_t order = o.order.value_or(e.numerator_degree());
    const GpiExtraction x = extract_gpi(e, r, order);
    Json j = to_json(x, order);
    std::string text;
    int code = kOk;
    if (x.status == GpiExtraction::Status::AllZeroUpToN) {
        text = "all coefficients vanish up to order " + std::to_string(order) + "\n";
        code = kInconclusive;
    } else {
        text = "f" + std::to_string(x.index) + " = " + x.poly->to_string() + "\n";
        if (o.verify > 0) {
            CheckOptions c = check_options(o);
            c.samples = o.verify;
            const Verdict v = check_gpi(*x.poly, c);
            j["verdict"] = to_json(v);
            text += verdict_text(v);
            code = exit_for(v.outcome);
        }
    }
    emit(o, j, text);
    return code;
}

int run_catalog(const Options& o) {
    if (!o.catalog_name.empty()) {
        const CatalogEntry e = catalog(o.catalog_name);
        std::string text = e.name + " [" + e.requirement + "]\n  " + e.expression + "\n";
        for (const auto& [alg, verdict] : e.expected) text += "  " + alg + ": " + verdict + "\n";
        emit(o, to_json(e), text);
        return kOk;
    }
    Json list = Json::array();
    std::string text;
    for (const auto& e : catalog_entries()) {
        list.push_back(to_json(e));
        text += e.name + ": " + e.expression + "\n";
    }
    emit(o, list, text);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized polynomial and rational identities over finite-dimensional algebras"};
    app.require_subcommand(1);
    Options o;

    auto* normalize = app.add_subcommand("normalize", "Print the normal form of an expression");
    add_input(normalize, o);

    auto* metrics = app.add_subcommand("metrics", "Degrees, height, blendedness");
    add_input(metrics, o);

    auto* blend_cmd = app.add_subcommand("blend", "Split off monomials missing a variable");
    add_input(blend_cmd, o);
    blend_cmd->add_flag("--trace", o.trace, "List every step");

    auto* ml = app.add_subcommand("multilinearize", "Blend, then apply delta until linear");
    add_input(ml, o);
    ml->add_flag("--trace", o.trace, "Include the blend steps and fresh-variable origins");

    auto* delta_cmd = app.add_subcommand("delta", "f(x + y) - f(x) - f(y) for a fresh y");
    add_input(delta_cmd, o);
    delta_cmd->add_option("--var", o.var, "Variable index j of x_j")->required();
    delta_cmd->add_option("--fresh", o.fresh, "Index of the fresh variable (default: smallest unused)");

    auto* expand = app.add_subcommand("expand", "Components of f at x -> r + x t (series for rational input)");
    add_input(expand, o);
    expand->add_option("--at", o.at, "Base point entries x<k>=<element>")->required();
    expand->add_option("--order", o.order, "Series order for rational input");

    auto* reduce = app.add_subcommand("reduce-twist", "Cancel the top twist of a one-variable linear polynomial");
    add_input(reduce, o);
    reduce->add_option("--r", o.r, "Element r (default: seeded random)");

    auto* check = app.add_subcommand("check", "Check an identity");
    add_input(check, o);
    check->add_option("--mode", o.mode, "exhaustive or randomized")->capture_default_str();
    check->add_option("--samples", o.samples, "Randomized sample count")->capture_default_str();
    check->add_option("--budget", o.budget, "Largest exhaustive enumeration")->capture_default_str();
    check->add_option("--box", o.box, "Coordinate bound for random rationals")->capture_default_str();
    check->add_option("--threads", o.threads, "Worker threads")->capture_default_str();

    auto* extract = app.add_subcommand("extract-gpi", "First nonzero series coefficient of a rational identity");
    add_input(extract, o);
    extract->add_option("--at", o.at, "Base point entries x<k>=<element>")->required();
    extract->add_option("--order", o.order, "Truncation order (default: degree ignoring inverses)");
    extract->add_option("--verify", o.verify, "Check the extracted polynomial on this many random points");
    extract->add_option("--threads", o.threads, "Worker threads")->capture_default_str();

    auto* cat = app.add_subcommand("catalog", "List catalog entries or show one");
    cat->add_option("name", o.catalog_name, "Entry name");
    cat->add_flag("--json", o.json, "Emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kError;
    }

    try {
        if (*normalize) return run_normalize(o);
        if (*metrics) return run_metrics(o);
        if (*blend_cmd) return run_blend(o);
        if (*ml) return run_multilinearize(o);
        if (*delta_cmd) return run_delta(o);
        if (*expand) return run_expand(o);
        if (*reduce) return run_reduce_twist(o);
        if (*check) return run_check(o);
        if (*extract) return run_extract(o);
        if (*cat) return run_catalog(o);
    } catch (const Error& e) {
        if (o.json) {
            std::cout << Json{{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}}.dump(2)
                      << "\n";
        }
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
