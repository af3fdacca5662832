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

#include <algorithm>
#include <array>

#include "doctest.h"
#include "fixtures.hpp"

using namespace gri;
using namespace gri::testing;

namespace {

using Mat = std::array<int, 4>;  // row-major 2x2 over F2

Mat mul(const Mat& a, const Mat& b) {
    return {(a[0] * b[0] + a[1] * b[2]) & 1, (a[0] * b[1] + a[1] * b[3]) & 1, (a[2] * b[0] + a[3] * b[2]) & 1,
            (a[2] * b[1] + a[3] * b[3]) & 1};
}

Mat add(const Mat& a, const Mat& b) { return {a[0] ^ b[0], a[1] ^ b[1], a[2] ^ b[2], a[3] ^ b[3]}; }

Mat plain(std::uint64_t index) {
    const auto m = m2f2()->to_matrix(m2f2()->enumerate(index));
    Mat out{};
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) out[2 * r + c] = static_cast<int>(m[r][c].as_prime().residue());
    }
    return out;
}

// Standard polynomial S3 over F2, where signs vanish: the sum over all orderings.
Mat s3(const Mat& a, const Mat& b, const Mat& c) {
    const Mat* v[3] = {&a, &b, &c};
    std::array<int, 3> perm{0, 1, 2};
    Mat sum{};
    do {
        sum = add(sum, mul(mul(*v[perm[0]], *v[perm[1]]), *v[perm[2]]));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

bool same_verdict(const Verdict& a, const Verdict& b) {
    return a.outcome == b.outcome && a.mode == b.mode && a.samples == b.samples && a.seed == b.seed &&
           a.witness == b.witness && a.witness_value == b.witness_value && a.points_tested == b.points_tested &&
           a.skipped_undefined == b.skipped_undefined;
}

AmbientPtr ambient_named(const std::string& name, bool sigma) {
    if (name == "m2f2") return sigma ? m2f2_transpose() : m2f2_plain();
    return sigma ? hamilton_conj() : hamilton_plain();
}

}  // namespace

TEST_SUITE("checker") {
    TEST_CASE("Hall identity holds exhaustively on M2(F2)") {
        const GenPoly hall = poly(catalog("hall").expression, m2f2_plain());
        const Verdict v = check_gpi(hall, {CheckMode::Exhaustive});
        CHECK(v.outcome == Outcome::Holds);
        CHECK(v.mode == CheckMode::Exhaustive);
        CHECK(v.samples == 4096);
        CHECK(v.points_tested == 4096);
        CHECK_FALSE(v.witness);
    }

    TEST_CASE("S3 is refuted at the first witness of a brute-force search") {
        std::uint64_t first = 0;
        bool found = false;
        for (std::uint64_t t = 0; t < 4096 && !found; ++t) {
            const Mat m = s3(plain(t >> 8), plain((t >> 4) & 15), plain(t & 15));
            if (m != Mat{}) {
                first = t;
                found = true;
            }
        }
        REQUIRE(found);

        const GenPoly f = poly(catalog("standard_s3").expression, m2f2_plain());
        const Verdict v = check_gpi(f, {CheckMode::Exhaustive});
        REQUIRE(v.outcome == Outcome::Refuted);
        REQUIRE(v.witness);
        CHECK(v.points_tested == first + 1);
        CHECK(v.witness->at(1) == m2f2()->enumerate(first >> 8));
        CHECK(v.witness->at(2) == m2f2()->enumerate((first >> 4) & 15));
        CHECK(v.witness->at(3) == m2f2()->enumerate(first & 15));
        CHECK(*v.witness_value == gp_eval(f, *v.witness));
        CHECK_FALSE(v.witness_value->is_zero());
    }

    TEST_CASE("exhaustive and randomized verdicts do not depend on threads") {
        const GenPoly s3 = poly(catalog("standard_s3").expression, m2f2_plain());
        const GenPoly s4 = poly(catalog("standard_s4").expression, m2f2_plain());
        for (const GenPoly* f : {&s3, &s4}) {
            const Verdict one = check_gpi(*f, {CheckMode::Exhaustive, 0, kDefaultSeed, 1u << 24, 1});
            for (unsigned threads : {2u, 3u, 8u}) {
                CHECK(same_verdict(one, check_gpi(*f, {CheckMode::Exhaustive, 0, kDefaultSeed, 1u << 24, threads})));
            }
        }
        const GenPoly q = poly("x1*x2 - x2*x1", hamilton_plain());
        const Verdict r1 = check_gpi(q, {CheckMode::Randomized, 200, 5, 0, 1});
        CHECK(r1.outcome == Outcome::Refuted);
        CHECK(same_verdict(r1, check_gpi(q, {CheckMode::Randomized, 200, 5, 0, 4})));
        CHECK(same_verdict(r1, check_gpi(q, {CheckMode::Randomized, 200, 5, 0, 1})));
    }

    TEST_CASE("check_gpi outcomes and errors") {
        const GenPoly trace = poly(catalog("sigma_trace_central").expression, hamilton_conj());
        const Verdict v = check_gpi(trace, {CheckMode::Randomized, 1000});
        CHECK(v.outcome == Outcome::Holds);
        CHECK(v.points_tested == 1000);

        CHECK(check_gpi(GenPoly(hamilton_conj())).outcome == Outcome::ZeroPolynomial);
        CHECK(check_gpi(poly("x1 - x1", m2f2_plain()), {CheckMode::Exhaustive}).outcome == Outcome::ZeroPolynomial);
        CHECK_ERROR(check_gpi(trace, {CheckMode::Exhaustive}), ExhaustiveTooLarge);
        CHECK_ERROR(check_gpi(poly("x1*x2*x3*x4*x5*x6*x7", m2f2_plain()), {CheckMode::Exhaustive}), ExhaustiveTooLarge);

        const Verdict constant = check_gpi(poly("E12", m2f2_plain()), {CheckMode::Exhaustive});
        CHECK(constant.outcome == Outcome::Refuted);
        CHECK(constant.samples == 1);
    }

    TEST_CASE("compiled evaluation matches gp_eval") {
        Rng rng(30);
        const AmbientPtr ambients[] = {hamilton_conj(), m2f2_transpose(),
                                       make_ambient(m2(7), AntiAutomorphism::transpose(m2(7))),
                                       make_ambient(AlgebraDescriptor::matrix(3, Field::prime(65521)))};
        for (const auto& amb : ambients) {
            for (int trial = 0; trial < 100; ++trial) {
                const GenPoly f = random_poly(amb, rng, 8, 4, 3);
                const CompiledPoly c(f);
                for (int k = 0; k < 5; ++k) {
                    const Point p = random_point(amb, rng, 3);
                    const Element expect = gp_eval(f, p);
                    REQUIRE(c.evaluate(p) == expect);
                    REQUIRE(c.vanishes_at(p) == expect.is_zero());
                }
            }
        }
    }

    TEST_CASE("check_gri examples") {
        const auto hua = catalog("hua").expression;
        const Verdict h = check_gri(rat(hua, hamilton_plain()), {CheckMode::Randomized, 500});
        CHECK(h.outcome == Outcome::Holds);
        CHECK(h.points_tested == 500);

        const Verdict m = check_gri(rat(hua, make_ambient(m2(5))), {CheckMode::Randomized, 500});
        CHECK(m.outcome == Outcome::Holds);
        CHECK(m.skipped_undefined > 0);

        const Verdict inv = check_gri(rat("inv(x1)", hamilton_plain()), {CheckMode::Randomized, 50});
        REQUIRE(inv.outcome == Outcome::Refuted);
        CHECK(inv.points_tested == 1);
        CHECK(*inv.witness_value == *eval_rat(rat("inv(x1)", hamilton_plain()), *inv.witness));

        CHECK(check_gri(rat("inv(x1 - x1)", hamilton_plain()), {CheckMode::Randomized, 5}).outcome ==
              Outcome::Inconclusive);

        const Verdict ex = check_gri(rat(hua, m2f2_plain()), {CheckMode::Exhaustive});
        CHECK(ex.outcome == Outcome::Holds);
        CHECK(ex.points_tested + ex.skipped_undefined == 256);
        CHECK(ex.skipped_undefined > 0);
    }

    TEST_CASE("linear_nonvanishing") {
        const auto h = hamilton();
        CHECK(linear_nonvanishing({h->one()}, {h->one()}) == h->one());
        const Element r = linear_nonvanishing({h->one(), el(h, "i")}, {el(h, "j"), el(h, "j")});
        CHECK_FALSE((r * el(h, "j") + el(h, "i") * r * el(h, "j")).is_zero());
        CHECK(r == h->one());
        CHECK_ERROR(linear_nonvanishing({h->one()}, {h->zero()}), InvalidInput);
        CHECK_ERROR(linear_nonvanishing({h->one(), h->one()}, {h->one(), el(h, "i")}), InvalidInput);

        // i·r·1 - 1·r·i vanishes on r in span{1, i} only; the search must leave it.
        const Element s = linear_nonvanishing({el(h, "i"), h->one()}, {h->one(), el(h, "-i")});
        CHECK_FALSE((el(h, "i") * s - s * el(h, "i")).is_zero());
    }

    TEST_CASE("specialize_pipeline") {
        const auto amb = hamilton_conj();
        const GenPoly f = multilinearize(poly(catalog("sigma_trace_central").expression, amb)).result;
        const PipelineReport report = specialize_pipeline(f, 3);
        CHECK(report.handed_off);
        CHECK_FALSE(report.trivial);
        REQUIRE_FALSE(report.stages.empty());
        const PipelineStage& last = report.stages.back();
        CHECK(last.status == PipelineStage::Status::Nonzero);
        REQUIRE(last.specialization);
        CHECK_FALSE(last.specialization->is_zero());
        CHECK(last.specialization->variables() == std::set<std::uint32_t>{last.var});
        CHECK((last.reduction || last.linear_witness));
        if (last.linear_witness) CHECK_FALSE(gp_eval(*last.specialization, {{last.var, *last.linear_witness}}).is_zero());
        if (last.reduction) CHECK(last.reduction->pivot_cancelled);
        for (std::size_t s = 0; s + 1 < report.stages.size(); ++s) {
            CHECK(report.stages[s].status == PipelineStage::Status::Vanished);
        }

        const PipelineReport zero = specialize_pipeline(GenPoly(amb));
        CHECK(zero.trivial);
        CHECK_FALSE(zero.handed_off);

        CHECK_ERROR(specialize_pipeline(poly("i*x1 + x1*x2", amb)), InvalidInput);
        CHECK_ERROR(specialize_pipeline(poly("x1*x1", amb)), InvalidInput);

        // Transpose is inner-linear on M2: x^T = Σ E_cr·x·E_cr. The first
        // stage vanishes for every x2, checked exhaustively.
        const auto m = m2f2_transpose();
        const GenPoly t = poly("x1*x2^s1 - x1*E11*x2*E11 - x1*E12*x2*E12 - x1*E21*x2*E21 - x1*E22*x2*E22", m);
        const PipelineReport tr = specialize_pipeline(t);
        REQUIRE(tr.stages.size() == 2);
        CHECK(tr.stages[0].status == PipelineStage::Status::Vanished);
        CHECK(tr.stages[0].exhaustive);
        CHECK(tr.stages[0].trials == 16);
        CHECK(tr.stages[1].status == PipelineStage::Status::Nonzero);
        CHECK(tr.handed_off);
    }

    TEST_CASE("pipeline decouples twists when every stage vanishes") {
        // Over a commutative algebra the commutator specializes to zero at
        // every stage, so the report ends with the σ-free form.
        const auto amb = make_ambient(AlgebraDescriptor::scalar(Field::prime(5)));
        const PipelineReport r = specialize_pipeline(poly("x1*x2 - x2*x1", amb));
        CHECK_FALSE(r.trivial);
        CHECK_FALSE(r.handed_off);
        REQUIRE(r.stages.size() == 2);
        for (const auto& s : r.stages) {
            CHECK(s.status == PipelineStage::Status::Vanished);
            CHECK(s.exhaustive);
            CHECK(s.trials == 5);
        }
        REQUIRE(r.sigma_free);
        CHECK(r.sigma_free->ambient()->m == 0);
        CHECK(*r.sigma_free == poly("x1*x2 - x2*x1", r.sigma_free->ambient()));
        CHECK(r.decoupled_vars.size() == 2);
    }

    TEST_CASE("catalog") {
        const auto entries = catalog_entries();
        CHECK(entries.size() == 7);
        const std::vector<std::string> names{"hall", "standard_s3", "standard_s4", "hua", "sigma_trace_central",
                                             "sigma_norm_central", "hall_at_inverse"};
        for (const auto& n : names) CHECK(catalog(n).name == n);
        CHECK(poly(catalog("hall").expression, hamilton_plain()) ==
              poly("(x1*x2 - x2*x1)*(x1*x2 - x2*x1)*x3 - x3*(x1*x2 - x2*x1)*(x1*x2 - x2*x1)", hamilton_plain()));
        CHECK(poly(catalog("sigma_norm_central").expression, hamilton_conj()) ==
              poly("x1*x1^s1*x2 - x2*x1*x1^s1", hamilton_conj()));
        CHECK(catalog("sigma_norm_central").needs_sigma());
        CHECK_FALSE(catalog("hall").needs_sigma());
        CHECK_ERROR(catalog("unknown"), UnknownEntry);
    }

    TEST_CASE("catalog verdicts match their expectations") {
        for (const auto& entry : catalog_entries()) {
            for (const auto& [alg, expected] : entry.expected) {
                const AmbientPtr amb = ambient_named(alg, entry.needs_sigma());
                const RatExpr e = rat(entry.expression, amb);
                const bool finite = alg == "m2f2";
                CheckOptions opts{finite ? CheckMode::Exhaustive : CheckMode::Randomized, 300};
                Verdict v;
                if (auto f = e.to_genpoly()) {
                    v = check_gpi(*f, opts);
                } else {
                    v = check_gri(e, opts);
                }
                CHECK_MESSAGE(to_string(v.outcome) == expected, entry.name << " on " << alg);
            }
        }
    }

    TEST_CASE("polynomial identities also pass as generalized and rational identities") {
        for (const auto& entry : catalog_entries()) {
            if (entry.needs_sigma()) continue;
            const RatExpr plain_e = rat(entry.expression, hamilton_plain());
            if (!plain_e.is_polynomial()) continue;
            for (const auto& [alg, expected] : entry.expected) {
                if (expected != "holds") continue;
                const bool finite = alg == "m2f2";
                const CheckOptions opts{finite ? CheckMode::Exhaustive : CheckMode::Randomized, 300};
                // As a GPI: same polynomial read in the σ ambient with twist-free words.
                const GenPoly gpi = poly(entry.expression, ambient_named(alg, true));
                CHECK(check_gpi(gpi, opts).outcome == Outcome::Holds);
                // As a GRI: the same tree through the rational checker.
                const RatExpr gri = rat(entry.expression, ambient_named(alg, true));
                CHECK(check_gri(gri, opts).outcome == Outcome::Holds);
            }
        }
    }
}
