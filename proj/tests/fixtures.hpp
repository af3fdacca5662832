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

#ifndef GRI_TESTS_FIXTURES_HPP
#define GRI_TESTS_FIXTURES_HPP

#include <string>
#include <variant>

#include "gri/checker.hpp"
#include "gri/parser.hpp"

/// Checks that `expr` throws gri::Error of the given kind.
#define CHECK_ERROR(expr, k)                                      \
    do {                                                          \
        try {                                                     \
            (void)(expr);                                         \
            FAIL_CHECK("expected ErrorKind::" #k);                \
        } catch (const ::gri::Error& error_) {                    \
            CHECK_MESSAGE(error_.kind() == ::gri::ErrorKind::k, error_.what()); \
        }                                                         \
    } while (0)

namespace gri::testing {

inline Scalar q(long n, long d = 1) { return Scalar(Rational(n, d)); }

inline AlgebraPtr hamilton() {
    static const AlgebraPtr alg = AlgebraDescriptor::quaternion(q(-1), q(-1));
    return alg;
}

inline AlgebraPtr m2(std::uint32_t p) { return AlgebraDescriptor::matrix(2, Field::prime(p)); }

inline AlgebraPtr m2f2() {
    static const AlgebraPtr alg = m2(2);
    return alg;
}

/// Hamilton quaternions with conjugation, m = 1.
inline AmbientPtr hamilton_conj() {
    static const AmbientPtr amb = make_ambient(hamilton(), AntiAutomorphism::conjugation(hamilton()));
    return amb;
}

/// Hamilton quaternions without σ.
inline AmbientPtr hamilton_plain() {
    static const AmbientPtr amb = make_ambient(hamilton());
    return amb;
}

/// M2(F2) with transpose, m = 1.
inline AmbientPtr m2f2_transpose() {
    static const AmbientPtr amb = make_ambient(m2f2(), AntiAutomorphism::transpose(m2f2()));
    return amb;
}

inline AmbientPtr m2f2_plain() {
    static const AmbientPtr amb = make_ambient(m2f2());
    return amb;
}

inline Element el(const AlgebraPtr& alg, const std::string& text) { return parse_element(text, alg); }

inline GenPoly poly(const std::string& text, const AmbientPtr& amb) {
    auto parsed = parse_expression(text, amb);
    return std::get<GenPoly>(parsed);
}

inline RatExpr rat(const std::string& text, const AmbientPtr& amb) { return parse_rational(text, amb); }

/// A random GenPoly with up to `terms` monomials of degree <= max_degree in
/// variables 1..vars, with random basis labels and small scalars.
inline GenPoly random_poly(const AmbientPtr& amb, Rng& rng, std::size_t terms, std::size_t max_degree,
                           std::uint32_t vars) {
    const auto& alg = *amb->algebra;
    std::vector<Monomial> out;
    std::uniform_int_distribution<std::size_t> nterms(0, terms), degree(0, max_degree);
    std::uniform_int_distribution<std::uint32_t> label(0, static_cast<std::uint32_t>(alg.dimension() - 1)),
        var(1, vars), twist(0, amb->m);
    const std::size_t n = nterms(rng);
    for (std::size_t t = 0; t < n; ++t) {
        Word w;
        const std::size_t q = degree(rng);
        w.labels.push_back(label(rng));
        for (std::size_t s = 0; s < q; ++s) {
            w.vars.push_back({var(rng), twist(rng)});
            w.labels.push_back(label(rng));
        }
        out.push_back({random_scalar(alg.field(), rng, 3), std::move(w)});
    }
    return GenPoly::from_terms(amb, std::move(out));
}

inline Point random_point(const AmbientPtr& amb, Rng& rng, std::uint32_t vars) {
    Point p;
    for (std::uint32_t v = 1; v <= vars; ++v) p.emplace(v, amb->algebra->random_element(rng));
    return p;
}

}  // namespace gri::testing

#endif
