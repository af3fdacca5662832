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

// Runs the acceptance criteria and prints one PASS/FAIL line for each.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "gri/io.hpp"
#include "gri/parser.hpp"

using namespace gri;

namespace {

struct Result {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
        }
    }
    void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

AlgebraPtr hamilton() {
    static const AlgebraPtr h = algebra_from_spec("hamilton");
    return h;
}
AmbientPtr hamilton_conj() {
    static const AmbientPtr a = make_ambient(hamilton(), AntiAutomorphism::conjugation(hamilton()));
    return a;
}
AmbientPtr hamilton_plain() {
    static const AmbientPtr a = make_ambient(hamilton());
    return a;
}
AmbientPtr m2f2() {
    static const AmbientPtr a = make_ambient(algebra_from_spec("m2f2"));
    return a;
}

GenPoly poly(const std::string& text, const AmbientPtr& amb) { return std::get<GenPoly>(parse_expression(text, amb)); }

bool identity(Outcome o) { return o == Outcome::Holds || o == Outcome::ZeroPolynomial; }

const CheckOptions kExhaustive{CheckMode::Exhaustive};

CheckOptions randomized(std::size_t samples, unsigned threads = 1) {
    CheckOptions c;
    c.samples = samples;
    c.threads = threads;
    return c;
}

/// Verdict JSON without the wall-clock field.
std::string stable(const Verdict& v) {
    Json j = to_json(v);
    j.erase("elapsed_ms");
    return j.dump();
}

const char* const kNormInverse = "inv(x1)*inv(x1^s1)*x2 - x2*inv(x1)*inv(x1^s1)";
const char* const kTwistFixture = "x1*i - i*x1 + x1^s1*i - i*x1^s1";

// ------------------------------------------------------------- criteria

Result hall_exhaustive() {
    Result r;
    const auto start = std::chrono::steady_clock::now();
    const Verdict v = check_gpi(poly(catalog("hall").expression, m2f2()), kExhaustive);
    const double s = seconds_since(start);
    r.require(v.outcome == Outcome::Holds, "Hall holds");
    r.require(v.points_tested == 4096, "4096 triples evaluated");
    r.require(s < 5.0, "runtime under 5 s");
    r.note(std::to_string(v.points_tested) + " triples, " + fmt(s) + " s");
    return r;
}

Result standard_identities() {
    Result r;
    auto start = std::chrono::steady_clock::now();
    const Verdict s4 = check_gpi(poly(catalog("standard_s4").expression, m2f2()), kExhaustive);
    const double t4 = seconds_since(start);
    r.require(s4.outcome == Outcome::Holds && s4.points_tested == 65536, "S4 holds on 65536 tuples");
    r.require(t4 < 30.0, "S4 under 30 s");

    const GenPoly s3 = poly(catalog("standard_s3").expression, m2f2());
    const Verdict a = check_gpi(s3, kExhaustive);
    CheckOptions four = kExhaustive;
    four.threads = 4;
    const Verdict b = check_gpi(s3, four);
    r.require(a.outcome == Outcome::Refuted, "S3 refuted");
    r.require(stable(a) == stable(b), "S3 witness reproducible across runs and threads");
    // Independent scan: the first tuple in canonical order where S3 is nonzero.
    const auto& alg = *m2f2()->algebra;
    std::uint64_t first = 0;
    for (; first < 4096; ++first) {
        const Point p{{1, alg.enumerate(first / 256)}, {2, alg.enumerate(first / 16 % 16)}, {3, alg.enumerate(first % 16)}};
        if (!gp_eval(s3, p).is_zero()) break;
    }
    r.require(a.points_tested == first + 1, "witness is lexicographically first");
    r.require(a.witness && !gp_eval(s3, *a.witness).is_zero(), "witness re-evaluates nonzero");
    r.note("S4 " + fmt(t4) + " s; S3 witness at tuple " + std::to_string(first));
    return r;
}

Result sigma_identities() {
    Result r;
    for (const char* e : {"(x1 + x1^s1)*x2 - x2*(x1 + x1^s1)", "x1*x1^s1*x2 - x2*x1*x1^s1", "x1*x1^s1 - x1^s1*x1"}) {
        const Verdict v = check_gpi(poly(e, hamilton_conj()), randomized(1000));
        r.require(v.outcome == Outcome::Holds && v.points_tested == 1000, std::string(e) + " holds on 1000 tuples");
    }
    r.note("3 identities x 1000 exact samples");
    return r;
}

Result blending() {
    Result r;
    const GenPoly hall = poly(catalog("hall").expression, m2f2());
    const GenPoly f = hall + rename_variable(hall, 3, 4);
    const BlendTrace t = blend_trace(f);
    std::size_t checked = 0;
    for (const auto& s : t.steps) {
        r.require(identity(check_gpi(s.removed, kExhaustive).outcome), "removed part of x" + std::to_string(s.var));
        r.require(identity(check_gpi(s.kept, kExhaustive).outcome), "kept part of x" + std::to_string(s.var));
        checked += 2;
    }
    r.require(t.steps.size() == 2, "two unblended variables");
    r.require(t.result.is_zero() || is_blended(t.result), "result blended");
    // The last nonzero kept polynomial is the blended identity the recipe passes through.
    r.require(is_blended(t.steps[0].kept) && t.steps[0].kept == hall, "kept part after x3 is blended");
    r.note(std::to_string(checked) + " step polynomials checked exhaustively; result " +
           (t.result.is_zero() ? std::string("collapses to 0 since every monomial lacks x3 or x4")
                               : t.result.to_string()));
    return r;
}

Result delta_bookkeeping() {
    Result r;
    const GenPoly hall = poly(catalog("hall").expression, m2f2());
    const GenPoly d = delta(hall, 1, 4);
    const Verdict v = check_gpi(d, kExhaustive);
    r.require(v.outcome == Outcome::Holds && v.points_tested == 65536, "delta of Hall holds");
    r.require(sigma_deg(d, 1) == sigma_deg(hall, 1) - 1, "degree in x1 drops by one");
    r.require(sigma_deg(d, 4) == sigma_deg(hall, 1) - 1, "degree in the fresh variable is one less");
    r.require(sigma_deg(d, 2) <= sigma_deg(hall, 2) && sigma_deg(d, 3) <= sigma_deg(hall, 3), "others do not grow");
    r.note("deg_x1 " + std::to_string(sigma_deg(hall, 1)) + " -> " + std::to_string(sigma_deg(d, 1)));
    return r;
}

Result multilinearization() {
    Result r;
    const GenPoly f = poly("x1*i*x1*x2*x1*j*x2*x3", hamilton_conj());
    const MultilinearizeReport m = multilinearize(f);
    r.require(m.multidegrees == std::map<std::uint32_t, std::size_t>{{1, 3}, {2, 2}, {3, 1}}, "multidegrees (3,2,1)");
    r.require(height(m.result) == 0, "height 0");
    r.require(is_blended(m.result), "blended");
    bool linear = true;
    for (auto v : m.result.variables()) linear = linear && sigma_deg(m.result, v) == 1;
    r.require(linear, "every sigma-degree is 1");
    r.require(deg(m.result) <= deg(f), "degree does not grow");
    r.require(m.result.size() == 12, "12 monomials");
    r.require(m.result.variables().size() == 6, "6 variables");
    r.note(std::to_string(m.result.size()) + " monomials in " + std::to_string(m.result.variables().size()) +
           " variables");
    return r;
}

Result expansion_components() {
    Result r;
    const AmbientPtr amb = m2f2();
    const GenPoly hall = poly(catalog("hall").expression, amb);
    const auto& alg = *amb->algebra;
    std::size_t components = 0;
    for (std::uint64_t k = 0; k < 5; ++k) {
        Rng rng = stream(kDefaultSeed, k);
        Point base;
        for (std::uint32_t v = 1; v <= 3; ++v) base.emplace(v, alg.random_element(rng));
        const auto parts = expand_at(hall, base);
        r.require(parts[0].is_zero() || parts[0].constant_value().is_zero(), "f0 vanishes");
        for (std::size_t i = 1; i < parts.size(); ++i) {
            r.require(identity(check_gpi(parts[i], kExhaustive).outcome), "component f" + std::to_string(i));
            ++components;
        }
    }
    std::size_t exact = 0;
    for (std::uint64_t k = 0; k < 100; ++k) {
        Rng rng = stream(kDefaultSeed + 1, k);
        Point base, d, shifted;
        for (std::uint32_t v = 1; v <= 3; ++v) {
            base.emplace(v, alg.random_element(rng));
            d.emplace(v, alg.random_element(rng));
            shifted.emplace(v, base.at(v) + d.at(v));
        }
        const auto parts = expand_at(hall, base);
        Element sum = parts[0].constant_value();
        for (std::size_t i = 1; i < parts.size(); ++i) sum += gp_eval(parts[i], d);
        exact += sum == gp_eval(hall, shifted);
    }
    r.require(exact == 100, "reconstruction on 100 trials");
    r.note(std::to_string(components) + " components checked; " + std::to_string(exact) + "/100 reconstructions exact");
    return r;
}

Result rational_identities() {
    Result r;
    const std::string hua = catalog("hua").expression;
    const Verdict h = check_gri(parse_rational(hua, hamilton_plain()), randomized(500));
    r.require(h.outcome == Outcome::Holds && h.points_tested == 500 && h.skipped_undefined == 0, "Hua on Hamilton");
    const Verdict m = check_gri(parse_rational(hua, make_ambient(algebra_from_spec("m2f5"))), randomized(500));
    r.require(m.outcome == Outcome::Holds && m.points_tested == 500 && m.skipped_undefined > 0, "Hua on M2(F5)");

    const RatExpr e = parse_rational(kNormInverse, hamilton_conj());
    const GpiExtraction x = extract_gpi(e, {{1, hamilton()->one()}, {2, parse_element("i", hamilton())}},
                                        e.numerator_degree());
    r.require(x.status == GpiExtraction::Status::Found && x.poly && !x.poly->is_zero(), "nonzero component found");
    if (x.poly) {
        const Verdict v = check_gpi(*x.poly, randomized(1000));
        r.require(v.outcome == Outcome::Holds, "extracted polynomial holds on 1000 samples");
        r.note("f" + std::to_string(x.index) + " = " + x.poly->to_string());
    }
    r.note("M2(F5) skipped " + std::to_string(m.skipped_undefined) + " undefined points");
    return r;
}

Result twist_reduction() {
    Result r;
    const GenPoly f = poly(kTwistFixture, hamilton_conj());
    const TwistReduction red = reduce_twist(f, parse_element("2 + j", hamilton()));
    r.require(red.pivot_cancelled, "pivot cancelled");
    bool absent = true;
    for (const auto& t : red.result.terms()) absent = absent && !(t.word == red.pivot.word);
    r.require(absent, "pivot word absent from the output");
    const Verdict v = check_gpi(red.result, randomized(200));
    r.require(identity(v.outcome), "output is an identity on 200 samples");

    const std::vector<Element> family{hamilton()->one(), parse_element("i", hamilton())};
    const Element w = independence_witness(family, hamilton()->one(), kDefaultSeed, 64);
    std::vector<Element> all = family;
    for (const auto& u : family) all.push_back(w * u);
    const std::size_t rank = f_rank(all);
    r.require(rank == 4, "independence witness reaches rank 4");
    r.note("output " + to_string(v.outcome) + ", " + std::to_string(red.residual_top_terms) +
           " residual top-twist terms; witness " + w.to_string() + ", rank " + std::to_string(rank));
    return r;
}

Result root_bound() {
    Result r;
    const auto h = hamilton();
    const Scalar one(Rational(1)), two(Rational(2));
    const CentralPolynomial p = CentralPolynomial::linear(h, one) * CentralPolynomial::linear(h, two);
    const auto roots = sample_central_roots(p, 10000, kDefaultSeed);
    r.require(roots == std::set<Scalar>{one, two}, "(t-1)(t-2) has roots {1, 2}");
    // Random polynomials with planted roots, so the bound is actually approached.
    std::size_t worst = 0;
    for (std::uint64_t k = 0; k < 20; ++k) {
        Rng rng = stream(kDefaultSeed, k);
        const std::size_t n = 1 + rng() % 5;
        Element lead = h->zero();
        while (lead.is_zero()) lead = h->random_element(rng, 3);
        CentralPolynomial q({lead});
        std::set<Scalar> planted;
        for (std::size_t i = 0; i < n; ++i) {
            const Scalar root(Rational(static_cast<long>(rng() % 17) - 8, static_cast<long>(1 + rng() % 3)));
            planted.insert(root);
            q = q * CentralPolynomial::linear(h, root);
        }
        const auto found = sample_central_roots(q, 10000, k);
        worst = std::max(worst, found.size());
        r.require(found.size() <= q.degree(), "roots within the degree bound");
        r.require(found == planted, "exactly the planted roots");
    }
    r.note("max distinct roots over 20 random polynomials: " + std::to_string(worst));
    return r;
}

Result determinism() {
    Result r;
    std::size_t compared = 0;
    auto same = [&](const std::string& what, const std::function<std::string(unsigned)>& run) {
        const std::string base = run(1);
        for (unsigned threads : {1u, 2u, 4u}) {
            r.require(run(threads) == base, what + " with " + std::to_string(threads) + " threads");
            ++compared;
        }
    };
    for (const char* e : {"(x1 + x1^s1)*x2 - x2*(x1 + x1^s1)", "x1*x1^s1*x2 - x2*x1*x1^s1", "x1*x1^s1 - x1^s1*x1"}) {
        same(e, [&](unsigned t) { return stable(check_gpi(poly(e, hamilton_conj()), randomized(1000, t))); });
    }
    const std::string hua = catalog("hua").expression;
    same("Hua on Hamilton",
         [&](unsigned t) { return stable(check_gri(parse_rational(hua, hamilton_plain()), randomized(500, t))); });
    same("Hua on M2(F5)", [&](unsigned t) {
        return stable(check_gri(parse_rational(hua, make_ambient(algebra_from_spec("m2f5"))), randomized(500, t)));
    });
    same("extraction", [&](unsigned t) {
        const RatExpr e = parse_rational(kNormInverse, hamilton_conj());
        const auto x = extract_gpi(e, {{1, hamilton()->one()}, {2, parse_element("i", hamilton())}}, 3);
        Json j = to_json(x, 3);
        j["verdict"] = Json::parse(stable(check_gpi(*x.poly, randomized(1000, t))));
        return j.dump();
    });
    same("twist reduction", [&](unsigned t) {
        const auto red = reduce_twist(poly(kTwistFixture, hamilton_conj()), parse_element("2 + j", hamilton()));
        return to_json(red).dump() + stable(check_gpi(red.result, randomized(200, t)));
    });
    same("root sampling", [&](unsigned) {
        const auto h = hamilton();
        const CentralPolynomial p = CentralPolynomial::linear(h, Scalar(Rational(1))) *
                                    CentralPolynomial::linear(h, Scalar(Rational(2)));
        std::string out;
        for (const auto& s : sample_central_roots(p, 10000, kDefaultSeed)) out += s.to_string() + ",";
        return out;
    });
    r.note(std::to_string(compared) + " repeated runs compared as JSON");
    return r;
}

}  // namespace

int main() {
    const std::pair<const char*, Result (*)()> criteria[] = {
        {"Hall identity, exhaustive on M2(F2)", hall_exhaustive},
        {"standard identities S4 and S3 on M2(F2)", standard_identities},
        {"sigma identities on Hamilton quaternions", sigma_identities},
        {"blending preserves identities", blending},
        {"delta preserves identities and degrees", delta_bookkeeping},
        {"multilinearization contract", multilinearization},
        {"expansion components are identities", expansion_components},
        {"rational identity semantics and extraction", rational_identities},
        {"twist reduction and independence witness", twist_reduction},
        {"central root bound", root_bound},
        {"determinism across runs and threads", determinism},
    };
    int failures = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Result r;
        try {
            r = run();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        failures += !r.pass;
        std::cout << (r.pass ? "PASS" : "FAIL") << " [" << index << "] " << name << " (" << r.detail << ")"
                  << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
