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

#include "gri/io.hpp"

#include <fstream>
#include <regex>

#include "gri/parser.hpp"

namespace gri {

namespace {

[[noreturn]] void bad_config(const std::string& message) { fail(ErrorKind::InvalidInput, message); }

std::uint32_t parse_prime(const std::string& text) {
    if (text.empty() || text.size() > 9 || text.find_first_not_of("0123456789") != std::string::npos) {
        bad_config("bad modulus '" + text + "'");
    }
    return static_cast<std::uint32_t>(std::stoul(text));
}

Field field_from_json(const Json& j) {
    const std::string name = j.value("field", std::string("Q"));
    if (name == "Q") return Field::rationals();
    if (name == "Fp") {
        if (!j.contains("p")) bad_config("field Fp needs \"p\"");
        return Field::prime(j.at("p").get<std::uint32_t>());
    }
    if (name.size() > 1 && name[0] == 'F') return Field::prime(parse_prime(name.substr(1)));
    bad_config("unknown field '" + name + "'");
}

Scalar scalar_from_json(const Field& field, const Json& j) {
    if (j.is_number_integer()) return field.parse(std::to_string(j.get<long long>()));
    if (!j.is_string()) bad_config("expected a field element string, got " + j.dump());
    return field.parse(j.get<std::string>());
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad_config("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        fail(ErrorKind::ParseError, path + ": " + e.what());
    }
}

bool looks_like_file(const std::string& spec) {
    return spec.find('/') != std::string::npos || (spec.size() > 5 && spec.ends_with(".json"));
}

std::string var_name(std::uint32_t v) { return "x" + std::to_string(v); }

std::string scalar_text(const Scalar& s) { return s.to_plain_string(); }

}  // namespace

// ------------------------------------------------------------ configuration

AlgebraPtr algebra_from_json(const Json& j) {
    try {
        const std::string kind = j.at("kind").get<std::string>();
        const Field field = field_from_json(j);
        if (kind == "quaternion") {
            return AlgebraDescriptor::quaternion(scalar_from_json(field, j.at("a")), scalar_from_json(field, j.at("b")));
        }
        if (kind == "matrix") return AlgebraDescriptor::matrix(j.at("n").get<std::size_t>(), field);
        if (kind == "scalar") return AlgebraDescriptor::scalar(field);
        if (kind == "custom") {
            auto labels = j.at("labels").get<std::vector<std::string>>();
            std::vector<std::vector<std::vector<Scalar>>> table;
            for (const auto& row : j.at("table")) {
                auto& out_row = table.emplace_back();
                for (const auto& cell : row) {
                    auto& coords = out_row.emplace_back();
                    for (const auto& c : cell) coords.push_back(scalar_from_json(field, c));
                }
            }
            return AlgebraDescriptor::custom(field, std::move(labels), table);
        }
        bad_config("unknown algebra kind '" + kind + "'");
    } catch (const Json::exception& e) {
        bad_config(std::string("algebra JSON: ") + e.what());
    }
}

AlgebraPtr algebra_from_spec(const std::string& spec) {
    if (looks_like_file(spec)) return algebra_from_json(read_json_file(spec));
    if (spec == "hamilton") return AlgebraDescriptor::quaternion(Scalar(Rational(-1)), Scalar(Rational(-1)));
    if (spec == "q") return AlgebraDescriptor::scalar(Field::rationals());

    static const std::regex quat(R"(quat:([^,:]+),([^,:]+)(?::(\d+))?)");
    static const std::regex matrix(R"(m(\d+)(?:f(\d+)|q))");
    static const std::regex prime(R"(f(\d+))");
    std::smatch m;
    if (std::regex_match(spec, m, quat)) {
        const Field field = m[3].matched ? Field::prime(parse_prime(m[3])) : Field::rationals();
        return AlgebraDescriptor::quaternion(field.parse(m[1].str()), field.parse(m[2].str()));
    }
    if (std::regex_match(spec, m, matrix)) {
        const Field field = m[2].matched ? Field::prime(parse_prime(m[2])) : Field::rationals();
        return AlgebraDescriptor::matrix(parse_prime(m[1]), field);
    }
    if (std::regex_match(spec, m, prime)) return AlgebraDescriptor::scalar(Field::prime(parse_prime(m[1])));
    bad_config("unknown algebra '" + spec + "' (try hamilton, quat:a,b[:p], m2f2, m<n>f<p>, m<n>q or a JSON file)");
}

SigmaPtr sigma_from_json(const Json& j, const AlgebraPtr& algebra) {
    try {
        SigmaPtr sigma;
        if (j.contains("matrix")) {
            linalg::Matrix matrix;
            for (const auto& row : j.at("matrix")) {
                auto& out = matrix.emplace_back();
                for (const auto& c : row) out.push_back(scalar_from_json(algebra->field(), c));
            }
            sigma = AntiAutomorphism::from_matrix(algebra, std::move(matrix), j.value("name", std::string("matrix")));
        } else {
            sigma = sigma_from_spec(j.at("name").get<std::string>(), algebra);
            if (!sigma) bad_config("sigma JSON names no anti-automorphism");
        }
        if (j.contains("conjugate_by")) {
            sigma = sigma->conjugated_by(parse_element(j.at("conjugate_by").get<std::string>(), algebra));
        }
        return sigma;
    } catch (const Json::exception& e) {
        bad_config(std::string("sigma JSON: ") + e.what());
    }
}

SigmaPtr sigma_from_spec(const std::string& spec, const AlgebraPtr& algebra) {
    if (looks_like_file(spec)) return sigma_from_json(read_json_file(spec), algebra);
    if (spec == "none") return nullptr;
    if (spec == "conjugation") return AntiAutomorphism::conjugation(algebra);
    if (spec == "transpose") return AntiAutomorphism::transpose(algebra);
    if (spec == "identity") return AntiAutomorphism::identity(algebra);
    if (spec == "default") {
        switch (algebra->kind()) {
            case AlgebraDescriptor::Kind::Quaternion:
                return AntiAutomorphism::conjugation(algebra);
            case AlgebraDescriptor::Kind::Matrix:
                return AntiAutomorphism::transpose(algebra);
            case AlgebraDescriptor::Kind::Scalar:
                return AntiAutomorphism::identity(algebra);
            case AlgebraDescriptor::Kind::Custom:
                return nullptr;
        }
    }
    bad_config("unknown sigma '" + spec + "' (try none, default, conjugation, transpose, identity or a JSON file)");
}

Point parse_point(const std::vector<std::string>& assignments, const AlgebraPtr& algebra) {
    static const std::regex assignment(R"(\s*x(\d+)\s*=(.*))");
    Point point;
    for (const auto& a : assignments) {
        std::smatch m;
        if (!std::regex_match(a, m, assignment)) fail(ErrorKind::ParseError, "expected x<k>=<element>, got '" + a + "'");
        const auto var = static_cast<std::uint32_t>(std::stoul(m[1]));
        if (!point.emplace(var, parse_element(m[2].str(), algebra)).second) {
            fail(ErrorKind::ParseError, var_name(var) + " assigned twice");
        }
    }
    return point;
}

// ----------------------------------------------------------- serialization

Json to_json(const Element& x) { return x.to_string(); }

Json to_json(const Point& p) {
    Json out = Json::object();
    for (const auto& [v, x] : p) out[var_name(v)] = to_json(x);
    return out;
}

Json to_json(const Monomial& m, const AlgebraDescriptor& algebra) {
    const auto& labels = m.word.labels;
    Json word = Json::array();
    word.push_back(algebra.label(labels[0]));
    for (std::size_t s = 0; s < m.word.vars.size(); ++s) {
        word.push_back(m.word.vars[s].to_string());
        word.push_back(algebra.label(labels[s + 1]));
    }
    return {{"scalar", scalar_text(m.scalar)}, {"word", std::move(word)}};
}

Json to_json(const GenPoly& f) {
    Json out = Json::array();
    for (const auto& t : f.terms()) out.push_back(to_json(t, f.algebra()));
    return out;
}

GenPoly genpoly_from_json(const Json& j, const AmbientPtr& ambient) {
    static const std::regex indet(R"(x(\d+)(?:\^s(\d+))?)");
    const auto& alg = *ambient->algebra;
    std::vector<Monomial> terms;
    try {
        for (const auto& rec : j) {
            const auto& word = rec.at("word");
            if (word.size() % 2 == 0) fail(ErrorKind::ParseError, "word must alternate labels and indeterminates");
            Monomial m{scalar_from_json(alg.field(), rec.at("scalar")), {}};
            for (std::size_t i = 0; i < word.size(); ++i) {
                const std::string text = word[i].get<std::string>();
                if (i % 2 == 0) {
                    const auto label = alg.label_index(text);
                    if (!label) fail(ErrorKind::ParseError, "unknown label '" + text + "'");
                    m.word.labels.push_back(static_cast<std::uint32_t>(*label));
                } else {
                    std::smatch sm;
                    if (!std::regex_match(text, sm, indet)) fail(ErrorKind::ParseError, "bad indeterminate '" + text + "'");
                    m.word.vars.push_back({static_cast<std::uint32_t>(std::stoul(sm[1])),
                                           sm[2].matched ? static_cast<std::uint32_t>(std::stoul(sm[2])) : 0u});
                }
            }
            terms.push_back(std::move(m));
        }
    } catch (const Json::exception& e) {
        fail(ErrorKind::ParseError, std::string("GenPoly JSON: ") + e.what());
    }
    return GenPoly::from_terms(ambient, std::move(terms));
}

Json to_json(const Verdict& v) {
    Json out{{"outcome", to_string(v.outcome)},
             {"mode", to_string(v.mode)},
             {"samples", v.samples},
             {"seed", v.seed},
             {"points_tested", v.points_tested},
             {"skipped_undefined", v.skipped_undefined}};
    if (v.witness) out["witness"] = to_json(*v.witness);
    if (v.witness_value) out["witness_value"] = to_json(*v.witness_value);
    out["elapsed_ms"] = v.elapsed_ms;
    return out;
}

Json to_json(const BlendTrace& t, bool with_steps) {
    Json out{{"result", to_json(t.result)},
             {"result_text", t.result.to_string()},
             {"collapsed", t.result.is_zero()},
             {"blended", t.result.is_zero() || is_blended(t.result)}};
    if (with_steps) {
        Json steps = Json::array();
        for (const auto& s : t.steps) {
            steps.push_back({{"var", var_name(s.var)},
                             {"removed", to_json(s.removed)},
                             {"removed_text", s.removed.to_string()},
                             {"kept", to_json(s.kept)},
                             {"kept_text", s.kept.to_string()}});
        }
        out["steps"] = std::move(steps);
    }
    return out;
}

Json to_json(const MultilinearizeReport& r) {
    Json degrees = Json::object();
    for (const auto& [v, p] : r.multidegrees) degrees[var_name(v)] = p;
    Json fresh = Json::object();
    for (const auto& [v, src] : r.fresh_vars) fresh[var_name(v)] = {{"source", var_name(src.first)}, {"copy", src.second}};
    Json pivot = to_json(r.pivot, r.result.algebra());
    return {{"result", to_json(r.result)},
            {"result_text", r.result.to_string()},
            {"terms", r.result.size()},
            {"multidegrees", std::move(degrees)},
            {"fresh_vars", std::move(fresh)},
            {"pivot", std::move(pivot)}};
}

Json to_json(const TruncatedSeries& s) {
    Json coeffs = Json::array();
    coeffs.push_back(to_json(s.constant_term()));
    for (std::size_t i = 1; i <= s.order(); ++i) coeffs.push_back(to_json(s.coeff(i)));
    return {{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const TwistReduction& r) {
    Json pivot = to_json(r.pivot, r.result.algebra());
    return {{"result", to_json(r.result)},
            {"result_text", r.result.to_string()},
            {"top_twist", r.top_twist},
            {"pivot", std::move(pivot)},
            {"pivot_cancelled", r.pivot_cancelled},
            {"residual_top_terms", r.residual_top_terms}};
}

Json to_json(const GpiExtraction& e, std::size_t order) {
    Json out{{"status", e.status == GpiExtraction::Status::Found ? "found" : "all_zero_up_to_n"}, {"order", order}};
    if (e.status == GpiExtraction::Status::Found) {
        out["index"] = e.index;
        out["poly"] = to_json(*e.poly);
        out["poly_text"] = e.poly->to_string();
    }
    return out;
}

Json to_json(const CatalogEntry& e) {
    return {{"name", e.name}, {"expression", e.expression}, {"requirement", e.requirement}, {"expected", e.expected}};
}

Json metrics_json(const GenPoly& f) {
    Json out{{"text", f.to_string()}, {"terms", f.size()}};
    Json vars = Json::array();
    for (auto v : f.variables()) vars.push_back(var_name(v));
    out["variables"] = std::move(vars);
    if (f.is_zero()) {
        out["zero"] = true;
        return out;
    }
    out["zero"] = false;
    out["degree"] = deg(f);
    out["height"] = height(f);
    out["max_twist"] = f.max_twist();
    out["blended"] = is_blended(f);
    out["sigma_linear"] = is_sigma_linear(f);
    Json per = Json::object();
    for (auto v : f.variables()) per[var_name(v)] = {{"sigma_deg", sigma_deg(f, v)}, {"sigma_ht", sigma_ht(f, v)}};
    out["per_variable"] = std::move(per);
    return out;
}

}  // namespace gri
