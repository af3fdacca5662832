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

#ifndef GRI_ALGEBRA_HPP
#define GRI_ALGEBRA_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gri/linalg.hpp"
#include "gri/sampling.hpp"
#include "gri/scalars.hpp"

namespace gri {

/*
 * Finite-dimensional algebras given by structure constants over a base field.
 *
 * The basis always starts with the identity (label "1"). Quaternion algebras
 * use the basis 1, i, j, k. Matrix algebras M_n(F) use 1 followed by every
 * matrix unit E_rc except E_11 (row-major), so that the identity is a basis
 * vector; E_11 itself is 1 - E_22 - ... - E_nn.
 *
 * Matrix algebras are not division rings. They are kept because evaluation
 * over M_n(F_p) can be made exhaustive. Operations that need invertibility
 * report NotInvertible (or Undefined in rational evaluation) instead of
 * assuming it.
 */

class AlgebraDescriptor;
class Element;
using AlgebraPtr = std::shared_ptr<const AlgebraDescriptor>;

/// One entry of a sparse structure-constant row: coeff * e_index.
struct BasisTerm {
    std::uint32_t index;
    Scalar coeff;
};

class AlgebraDescriptor : public std::enable_shared_from_this<AlgebraDescriptor> {
  public:
    enum class Kind { Quaternion, Matrix, Scalar, Custom };

    /// (a, b / F): i^2 = a, j^2 = b, ij = k = -ji. Requires a, b != 0 and char F != 2.
    static AlgebraPtr quaternion(const Scalar& a, const Scalar& b);
    static AlgebraPtr matrix(std::size_t n, const Field& field);
    /// The base field itself as a one-dimensional algebra.
    static AlgebraPtr scalar(const Field& field);
    /// `table[a][b]` holds the coordinates of e_a * e_b. Validated for a unital
    /// identity at index 0 and associativity on all basis triples.
    static AlgebraPtr custom(const Field& field, std::vector<std::string> labels,
                             const std::vector<std::vector<std::vector<Scalar>>>& table);

    Kind kind() const noexcept { return kind_; }
    const Field& field() const noexcept { return field_; }
    std::size_t dimension() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t index) const { return labels_.at(index); }
    std::optional<std::size_t> label_index(std::string_view label) const;
    /// e.g. "(-1,-1 / Q)" or "M2(F2)".
    const std::string& name() const noexcept { return name_; }

    /// Sparse coordinates of e_a * e_b.
    std::span<const BasisTerm> product(std::size_t a, std::size_t b) const {
        return table_[a * labels_.size() + b];
    }

    /// Quaternion parameters (a, b); only for Kind::Quaternion.
    const Scalar& quaternion_a() const { return quat_a_; }
    const Scalar& quaternion_b() const { return quat_b_; }
    /// n for M_n(F); 0 otherwise.
    std::size_t matrix_size() const noexcept { return matrix_n_; }

    Element zero() const;
    Element one() const;
    Element basis_element(std::size_t index) const;
    Element from_scalar(const Scalar& value) const;
    Element from_coords(std::vector<Scalar> coords) const;

    /// Matrix-algebra only: conversions to and from plain n x n matrices.
    Element from_matrix(const linalg::Matrix& m) const;
    linalg::Matrix to_matrix(const Element& x) const;
    /// Matrix-algebra only: the unit E_rc (1-based indices).
    Element matrix_unit(std::size_t row, std::size_t col) const;

    /// Number of elements when the base field is finite; nullopt if infinite
    /// or larger than 2^63.
    std::optional<std::uint64_t> cardinality() const;
    /// The element with the given index in canonical enumeration order
    /// (coordinates read as base-p digits, coordinate 0 most significant).
    Element enumerate(std::uint64_t index) const;

    Element random_element(Rng& rng, int box = kDefaultBox) const;

    friend bool operator==(const AlgebraDescriptor& a, const AlgebraDescriptor& b);

  private:
    AlgebraDescriptor(Kind kind, Field field, std::vector<std::string> labels);
    void set_table(const std::vector<std::vector<std::vector<Scalar>>>& table);
    void validate() const;

    Kind kind_;
    Field field_;
    std::vector<std::string> labels_;
    std::vector<std::vector<BasisTerm>> table_;
    std::string name_;
    Scalar quat_a_, quat_b_;
    std::size_t matrix_n_ = 0;
};

/// An algebra element as exact coordinates over the basis.
class Element {
  public:
    Element(AlgebraPtr algebra, std::vector<Scalar> coords);

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    const std::vector<Scalar>& coords() const noexcept { return coords_; }
    std::vector<Scalar>& mutable_coords() noexcept { return coords_; }
    const Scalar& operator[](std::size_t i) const { return coords_[i]; }

    bool is_zero() const noexcept;
    /// True when the element lies in F·1.
    bool is_scalar() const noexcept;

    Element operator-() const;
    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    Element& operator*=(const Scalar& s);

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Element& a, const Element& b);
    friend Element operator*(const Scalar& s, Element a) { return a *= s; }
    friend Element operator*(Element a, const Scalar& s) { return a *= s; }
    friend bool operator==(const Element& a, const Element& b);

    /// Sum of coefficient*label, parseable by the expression grammar.
    std::string to_string() const;

  private:
    AlgebraPtr algebra_;
    std::vector<Scalar> coords_;
};

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) noexcept;

Element alg_mul(const Element& x, const Element& y);
/// Accumulates x*y into `out` (which must belong to the same algebra).
void alg_mul_add(Element& out, const Element& x, const Element& y);
/// Throws NotInvertible when x*y = 1 has no solution.
Element alg_inv(const Element& x);
std::optional<Element> try_inverse(const Element& x);

/// True iff x commutes with every basis element.
bool is_central(const Element& x);

/// Rank over the base field of the coordinate vectors.
std::size_t f_rank(std::span<const Element> vectors);

/// Finds r such that family ∪ {a·r·v : v ∈ family} is linearly independent
/// over the base field. Basis elements are tried first, then seeded random
/// elements, for at most `max_tries` candidates in total.
Element independence_witness(std::span<const Element> family, const Element& a, std::uint64_t seed,
                             std::size_t max_tries);

// ------------------------------------------------------------------ sigma

class AntiAutomorphism;
using SigmaPtr = std::shared_ptr<const AntiAutomorphism>;

/// A base-field-linear anti-automorphism stored as the matrix of its action
/// on basis coordinates: coords(σ(x)) = M · coords(x).
class AntiAutomorphism {
  public:
    /// Upper bound on the order search; verified_order_floor() never exceeds it.
    static constexpr std::size_t kOrderProbeLimit = 32;

    /// Verifies invertibility, σ(1) = 1 and σ(e_a e_b) = σ(e_b) σ(e_a) on all
    /// basis pairs; throws InvalidAntiAutomorphism otherwise.
    static SigmaPtr from_matrix(AlgebraPtr algebra, linalg::Matrix matrix, std::string name = "matrix");
    /// Quaternion conjugation 1 ↦ 1, i ↦ -i, j ↦ -j, k ↦ -k.
    static SigmaPtr conjugation(AlgebraPtr algebra);
    static SigmaPtr transpose(AlgebraPtr algebra);
    /// The identity map; only an anti-automorphism of a commutative algebra.
    static SigmaPtr identity(AlgebraPtr algebra);

    /// x ↦ u σ(x) u^{-1}; re-verified.
    SigmaPtr conjugated_by(const Element& u) const;

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    const linalg::Matrix& matrix() const noexcept { return powers_[1]; }
    const std::string& name() const noexcept { return name_; }

    /// Largest m with σ^i != Id for all 1 <= i <= m (capped at kOrderProbeLimit).
    std::size_t verified_order_floor() const noexcept { return order_floor_; }
    /// The order of σ when it was found within the probe limit.
    std::optional<std::size_t> order() const noexcept { return order_; }

    /// σ^power(x); negative powers apply the inverse.
    Element apply(long power, const Element& x) const;

  private:
    AntiAutomorphism() = default;
    void verify() const;

    AlgebraPtr algebra_;
    std::string name_;
    std::vector<linalg::Matrix> powers_;          // M^0 .. M^k
    std::vector<linalg::Matrix> inverse_powers_;  // M^0 .. M^-k
    std::size_t order_floor_ = 0;
    std::optional<std::size_t> order_;
};

/// σ^i(x) by i-fold application.
Element apply_sigma(const AntiAutomorphism& sigma, long power, const Element& x);

}  // namespace gri

#endif
