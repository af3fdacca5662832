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

#include <array>
#include <bit>

#include "doctest.h"
#include "fixtures.hpp"

using namespace gri;
using namespace gri::testing;

namespace {

// Quaternion product written out from i^2 = a, j^2 = b, ij = k = -ji.
std::array<Scalar, 4> quaternion_oracle(const Scalar& a, const Scalar& b, const std::vector<Scalar>& x,
                                        const std::vector<Scalar>& y) {
    const Scalar ab = a * b;
    return {x[0] * y[0] + a * x[1] * y[1] + b * x[2] * y[2] - ab * x[3] * y[3],
            x[0] * y[1] + x[1] * y[0] - b * x[2] * y[3] + b * x[3] * y[2],
            x[0] * y[2] + x[2] * y[0] + a * x[1] * y[3] - a * x[3] * y[1],
            x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1]};
}

// 2x2 matrices over F_p as plain integers, and the coordinate convention
// (1, E12, E21, E22) with c_1 = M11 and c_E22 = M22 - M11.
using Mat2 = std::array<long, 4>;

Mat2 to_plain(const Element& x, long p) {
    auto r = [&](std::size_t i) { return static_cast<long>(x[i].as_prime().residue()); };
    return {r(0), r(1), r(2), ((r(0) + r(3)) % p)};
}

Mat2 plain_mul(const Mat2& a, const Mat2& b, long p) {
    return {(a[0] * b[0] + a[1] * b[2]) % p, (a[0] * b[1] + a[1] * b[3]) % p, (a[2] * b[0] + a[3] * b[2]) % p,
            (a[2] * b[1] + a[3] * b[3]) % p};
}

}  // namespace

TEST_SUITE("algebras") {
    TEST_CASE("basis and labels") {
        CHECK(hamilton()->labels() == std::vector<std::string>{"1", "i", "j", "k"});
        CHECK(m2f2()->labels() == std::vector<std::string>{"1", "E12", "E21", "E22"});
        CHECK(hamilton()->name() == "(-1,-1 / Q)");
        CHECK(m2f2()->name() == "M2(F2)");
        for (const auto& alg : {hamilton(), m2f2(), m2(3)}) {
            for (std::size_t b = 0; b < alg->dimension(); ++b) {
                CHECK(alg->one() * alg->basis_element(b) == alg->basis_element(b));
                CHECK(alg->basis_element(b) * alg->one() == alg->basis_element(b));
            }
        }
    }

    TEST_CASE("alg_mul examples") {
        const auto h = hamilton();
        CHECK(el(h, "i") * el(h, "j") == el(h, "k"));
        CHECK(el(h, "j") * el(h, "i") == -el(h, "k"));
        const auto m = m2f2();
        CHECK(m->matrix_unit(1, 2) * m->matrix_unit(2, 1) == m->matrix_unit(1, 1));
        CHECK(m->matrix_unit(1, 1) == m->one() - m->matrix_unit(2, 2));
        CHECK_ERROR(alg_mul(h->one(), m->one()), DescriptorMismatch);
    }

    TEST_CASE("quaternion products match the written-out formula") {
        Rng rng(7);
        for (const auto& [a, b] : {std::pair{q(-1), q(-1)}, std::pair{q(2), q(-3)}, std::pair{q(-1, 2), q(5)}}) {
            const auto alg = AlgebraDescriptor::quaternion(a, b);
            const auto i = alg->basis_element(1), j = alg->basis_element(2), k = alg->basis_element(3);
            CHECK(i * i == alg->from_scalar(a));
            CHECK(j * j == alg->from_scalar(b));
            CHECK(i * j == k);
            CHECK(j * i == -k);
            for (int trial = 0; trial < 300; ++trial) {
                const Element x = alg->random_element(rng), y = alg->random_element(rng);
                const auto expect = quaternion_oracle(a, b, x.coords(), y.coords());
                const Element got = x * y;
                for (std::size_t c = 0; c < 4; ++c) REQUIRE(got[c] == expect[c]);
            }
        }
    }

    TEST_CASE("M2(F_p) products match plain matrix multiplication") {
        for (long p : {2L, 3L, 5L}) {
            const auto alg = m2(static_cast<std::uint32_t>(p));
            Rng rng(static_cast<std::uint64_t>(p));
            for (int trial = 0; trial < 300; ++trial) {
                const Element x = alg->random_element(rng), y = alg->random_element(rng);
                REQUIRE(to_plain(x * y, p) == plain_mul(to_plain(x, p), to_plain(y, p), p));
            }
        }
    }

    TEST_CASE("associativity on random triples") {
        Rng rng(3);
        for (const auto& alg : {hamilton(), m2(3), AlgebraDescriptor::matrix(3, Field::prime(2))}) {
            for (int trial = 0; trial < 200; ++trial) {
                const Element x = alg->random_element(rng), y = alg->random_element(rng), z = alg->random_element(rng);
                REQUIRE((x * y) * z == x * (y * z));
            }
        }
    }

    TEST_CASE("alg_inv examples") {
        const auto h = hamilton();
        CHECK(alg_inv(el(h, "i")) == -el(h, "i"));
        CHECK(alg_inv(el(h, "1 + i")) == el(h, "1/2 - 1/2*i"));
        CHECK_ERROR(alg_inv(m2f2()->matrix_unit(1, 1)), NotInvertible);
        CHECK_ERROR(alg_inv(h->zero()), NotInvertible);
    }

    TEST_CASE("every nonzero Hamilton quaternion is invertible") {
        const auto h = hamilton();
        Rng rng(99);
        int tested = 0;
        while (tested < 1000) {
            const Element x = h->random_element(rng);
            if (x.is_zero()) continue;
            const Element y = alg_inv(x);
            REQUIRE(x * y == h->one());
            REQUIRE(y * x == h->one());
            ++tested;
        }
    }

    TEST_CASE("apply_sigma examples") {
        const auto h = hamilton();
        const auto conj = AntiAutomorphism::conjugation(h);
        const Element x = el(h, "1 + 2*i - 3*j + k");
        CHECK(apply_sigma(*conj, 1, el(h, "i")) == -el(h, "i"));
        CHECK(apply_sigma(*conj, 0, x) == x);
        CHECK(apply_sigma(*conj, 2, x) == x);
        CHECK(conj->apply(-1, x) == apply_sigma(*conj, 1, x));
        CHECK(conj->order() == std::optional<std::size_t>(2));
        CHECK(conj->verified_order_floor() == 1);
        CHECK_ERROR(apply_sigma(*conj, 1, m2f2()->one()), DescriptorMismatch);
    }

    TEST_CASE("sigma reverses products at odd powers and preserves them at even powers") {
        const auto alg = m2(3);
        const auto u = el(alg, "[[1,1],[0,1]]");
        const auto sigma = AntiAutomorphism::transpose(alg)->conjugated_by(u);
        CHECK(sigma->verified_order_floor() >= 1);
        Rng rng(5);
        for (int trial = 0; trial < 1000; ++trial) {
            const Element x = alg->random_element(rng), y = alg->random_element(rng);
            for (long i : {1L, 2L, 3L}) {
                const Element lhs = sigma->apply(i, x * y);
                const Element rhs = i % 2 ? sigma->apply(i, y) * sigma->apply(i, x) : sigma->apply(i, x) * sigma->apply(i, y);
                REQUIRE(lhs == rhs);
                REQUIRE(sigma->apply(i, x) == apply_sigma(*sigma, i, x));
            }
        }
    }

    TEST_CASE("anti-automorphism axioms are verified") {
        CHECK_ERROR(AntiAutomorphism::identity(hamilton()), InvalidAntiAutomorphism);
        const auto id = AntiAutomorphism::identity(AlgebraDescriptor::scalar(Field::prime(5)));
        CHECK(id->verified_order_floor() == 0);
        // Swapping i and j fixes 1 but is multiplicative, not anti-multiplicative.
        linalg::Matrix swap(4, std::vector<Scalar>(4, q(0)));
        swap[0][0] = q(1);
        swap[2][1] = q(1);
        swap[1][2] = q(1);
        swap[3][3] = q(-1);
        CHECK_ERROR(AntiAutomorphism::from_matrix(hamilton(), swap), InvalidAntiAutomorphism);
        const auto t = AntiAutomorphism::transpose(m2f2());
        CHECK(t->apply(1, m2f2()->matrix_unit(1, 2)) == m2f2()->matrix_unit(2, 1));
        CHECK(t->verified_order_floor() == 1);
    }

    TEST_CASE("is_central examples") {
        const auto h = hamilton();
        CHECK(is_central(el(h, "3/2")));
        CHECK_FALSE(is_central(el(h, "i")));
        CHECK(is_central(el(m2(3), "[[2,0],[0,2]]")));
        CHECK_FALSE(is_central(m2(3)->matrix_unit(1, 1)));
    }

    TEST_CASE("f_rank examples") {
        const auto h = hamilton();
        const std::vector<Element> basis{el(h, "1"), el(h, "i"), el(h, "j"), el(h, "k")};
        CHECK(f_rank(basis) == 4);
        const std::vector<Element> proportional{el(h, "1"), el(h, "2")};
        CHECK(f_rank(proportional) == 1);
        CHECK(f_rank(std::span<const Element>{}) == 0);
    }

    // Over F2 a list is independent iff no nonempty sub-list sums to zero; the
    // rank is the size of the largest independent sub-list.
    TEST_CASE("f_rank agrees with a subset brute force over F2") {
        const auto alg = m2f2();
        Rng rng(17);
        for (int trial = 0; trial < 500; ++trial) {
            const std::size_t n = trial % 5;
            std::vector<Element> v;
            for (std::size_t i = 0; i < n; ++i) v.push_back(alg->random_element(rng));
            std::size_t best = 0;
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                bool independent = true;
                for (unsigned sub = mask; sub && independent; sub = (sub - 1) & mask) {
                    Element s = alg->zero();
                    for (std::size_t i = 0; i < n; ++i) {
                        if (sub >> i & 1) s += v[i];
                    }
                    independent = !s.is_zero();
                }
                if (independent) best = std::max<std::size_t>(best, std::popcount(mask));
            }
            REQUIRE(f_rank(v) == best);
        }
    }

    TEST_CASE("independence_witness examples") {
        const auto h = hamilton();
        const std::vector<Element> one{h->one()};
        CHECK(independence_witness(one, h->one(), kDefaultSeed, 16) == el(h, "i"));

        const std::vector<Element> a{h->one(), el(h, "i")};
        const Element r = independence_witness(a, h->one(), kDefaultSeed, 16);
        std::vector<Element> all = a;
        for (const auto& v : a) all.push_back(r * v);
        CHECK(f_rank(all) == 4);
        CHECK(r == el(h, "j"));

        const auto f5 = AlgebraDescriptor::scalar(Field::prime(5));
        const std::vector<Element> unit{f5->one()};
        CHECK_ERROR(independence_witness(unit, f5->one(), kDefaultSeed, 50), NoWitnessFound);
    }

    TEST_CASE("custom structure constants are validated") {
        const Field q_field = Field::rationals();
        // Dual numbers 1, e with e^2 = 0.
        std::vector<std::vector<std::vector<Scalar>>> table = {{{q(1), q(0)}, {q(0), q(1)}},
                                                               {{q(0), q(1)}, {q(0), q(0)}}};
        const auto dual = AlgebraDescriptor::custom(q_field, {"1", "e"}, table);
        CHECK(dual->dimension() == 2);
        CHECK(el(dual, "e") * el(dual, "e") == dual->zero());
        // Break the identity row.
        table[0][1] = {q(1), q(1)};
        CHECK_ERROR(AlgebraDescriptor::custom(q_field, {"1", "e"}, table), InvalidAlgebra);
    }

    TEST_CASE("enumeration order reads coordinates as base-p digits") {
        const auto alg = m2f2();
        CHECK(alg->cardinality() == std::optional<std::uint64_t>(16));
        CHECK(alg->enumerate(0) == alg->zero());
        CHECK(alg->enumerate(1) == alg->basis_element(3));
        CHECK(alg->enumerate(8) == alg->one());
        CHECK_FALSE(hamilton()->cardinality().has_value());
    }
}
