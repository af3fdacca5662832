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

#ifndef GRI_GENPOLY_HPP
#define GRI_GENPOLY_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "gri/algebra.hpp"

namespace gri {

/*
 * Generalized polynomials: the free product D<X_m> of an algebra D with the
 * free algebra on twisted indeterminates x_j^{σ^i}, 0 <= i <= m.
 *
 * Normal form: a GenPoly is a sorted list of monomials δ·a_0 X_1 a_1 ... X_q a_q
 * where δ is a nonzero base-field scalar, every a_t is a single basis label
 * (the identity label is kept, so a degree-q word has q+1 label slots), and no
 * two monomials share a word. General algebra coefficients are expanded over
 * the basis. Two GenPolys are equal iff their term lists are equal.
 */

/// x_var^{σ^twist}.
struct TwistedIndeterminate {
    std::uint32_t var = 1;
    std::uint32_t twist = 0;

    friend auto operator<=>(const TwistedIndeterminate&, const TwistedIndeterminate&) = default;
    std::string to_string() const;
};

/// The setting polynomials live in: the algebra, an optional anti-automorphism
/// and the twist bound m (m = 0 when there is no σ).
struct Ambient {
    AlgebraPtr algebra;
    SigmaPtr sigma;
    std::uint32_t m = 0;
};
using AmbientPtr = std::shared_ptr<const Ambient>;

/// m defaults to σ's verified order floor; an explicit m must not exceed it.
AmbientPtr make_ambient(AlgebraPtr algebra, SigmaPtr sigma = nullptr, std::optional<std::uint32_t> m = std::nullopt);
bool same_ambient(const AmbientPtr& a, const AmbientPtr& b) noexcept;

struct Word {
    std::vector<std::uint32_t> labels;  // size == vars.size() + 1
    std::vector<TwistedIndeterminate> vars;

    std::size_t degree() const noexcept { return vars.size(); }
    friend bool operator==(const Word&, const Word&) = default;
};

/// Canonical order: degree, then the indeterminate sequence, then the label
/// sequence, each lexicographically.
bool operator<(const Word& a, const Word& b);

struct Monomial {
    Scalar scalar;
    Word word;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// A monomial whose interleaved coefficients are arbitrary algebra elements;
/// the input format of gp_normalize.
struct RawMonomial {
    Scalar scalar;
    std::vector<Element> coeffs;  // size == vars.size() + 1
    std::vector<TwistedIndeterminate> vars;
};

using Point = std::map<std::uint32_t, Element>;

class GenPoly {
  public:
    explicit GenPoly(AmbientPtr ambient) : ambient_(std::move(ambient)) {}

    static GenPoly constant(AmbientPtr ambient, const Element& value);
    static GenPoly scalar(AmbientPtr ambient, const Scalar& value);
    /// Throws TwistOutOfRange when twist > m.
    static GenPoly indeterminate(AmbientPtr ambient, std::uint32_t var, std::uint32_t twist = 0);
    /// Merges, drops zeros and sorts; the words must already use basis labels.
    static GenPoly from_terms(AmbientPtr ambient, std::vector<Monomial> terms);

    const AmbientPtr& ambient() const noexcept { return ambient_; }
    const AlgebraDescriptor& algebra() const noexcept { return *ambient_->algebra; }
    const std::vector<Monomial>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Indices of all variables occurring at any twist.
    std::set<std::uint32_t> variables() const;
    /// Largest twist occurring; 0 for constants.
    std::uint32_t max_twist() const noexcept;
    bool is_homogeneous(std::size_t degree) const noexcept;
    /// The value of a polynomial of degree 0; throws InvalidInput otherwise.
    Element constant_value() const;

    GenPoly operator-() const;
    GenPoly& operator+=(const GenPoly& other);
    GenPoly& operator-=(const GenPoly& other);
    GenPoly& operator*=(const Scalar& s);

    friend GenPoly operator+(GenPoly a, const GenPoly& b) { return a += b; }
    friend GenPoly operator-(GenPoly a, const GenPoly& b) { return a -= b; }
    friend GenPoly operator*(const GenPoly& a, const GenPoly& b);
    friend GenPoly operator*(const Scalar& s, GenPoly a) { return a *= s; }
    friend bool operator==(const GenPoly& a, const GenPoly& b);

    /// Text in the expression grammar (identity labels and unit scalars elided).
    std::string to_string() const;

  private:
    AmbientPtr ambient_;
    std::vector<Monomial> terms_;
};

// Accumulates scalar multiples of words into normal form.
class TermAccumulator {
  public:
    void add(const Word& word, const Scalar& scalar);
    void add(Word&& word, const Scalar& scalar);
    GenPoly finish(AmbientPtr ambient) &&;

  private:
    std::map<Word, Scalar> terms_;
};

/// Expands every coefficient over the basis, folds scalars into δ, merges
/// equal words, drops zeros and sorts.
GenPoly gp_normalize(const AmbientPtr& ambient, std::span<const RawMonomial> raw);
GenPoly gp_mul(const GenPoly& f, const GenPoly& g);

/// Replaces indeterminate occurrences by constants. `value(position, x)` is
/// consulted for every occurrence (position counts from 0 within the word);
/// returning nullopt keeps the indeterminate.
template <class ValueFn>
RawMonomial fold_constants(const AlgebraDescriptor& algebra, const Monomial& m, ValueFn&& value);

std::size_t sigma_deg(const Monomial& m, std::uint32_t var) noexcept;
std::size_t deg(const Monomial& m) noexcept;
std::size_t height(const Monomial& m) noexcept;
std::size_t sigma_ht(const Monomial& m, std::uint32_t var) noexcept;

/// Max over monomials. All of these throw ZeroPolynomialDegree on zero.
std::size_t sigma_deg(const GenPoly& f, std::uint32_t var);
std::size_t deg(const GenPoly& f);
std::size_t height(const GenPoly& f);
std::size_t sigma_ht(const GenPoly& f, std::uint32_t var);
bool is_blended(const GenPoly& f);
bool is_blended_in(const GenPoly& f, std::uint32_t var);
/// Blended of height 0: every variable occurs exactly once in every monomial.
bool is_sigma_linear(const GenPoly& f);

/// Deletes every monomial containing any twist of x_var.
GenPoly subst_zero(const GenPoly& f, std::uint32_t var);
/// Renames x_from to x_to at every twist.
GenPoly rename_variable(const GenPoly& f, std::uint32_t from, std::uint32_t to);

/// Substitutes σ^i(point[j]) for x_j^{σ^i} and multiplies out. Reference
/// implementation: one product per monomial, no sharing.
Element gp_eval(const GenPoly& f, const Point& point);

// ---------------------------------------------------------- implementation

template <class ValueFn>
RawMonomial fold_constants(const AlgebraDescriptor& algebra, const Monomial& m, ValueFn&& value) {
    RawMonomial raw{m.scalar, {}, {}};
    Element coeff = algebra.basis_element(m.word.labels[0]);
    for (std::size_t t = 0; t < m.word.vars.size(); ++t) {
        std::optional<Element> replacement = value(t, m.word.vars[t]);
        if (replacement) {
            coeff = coeff * *replacement;
        } else {
            raw.coeffs.push_back(std::move(coeff));
            raw.vars.push_back(m.word.vars[t]);
            coeff = algebra.basis_element(m.word.labels[t + 1]);
            continue;
        }
        if (m.word.labels[t + 1] != 0) coeff = coeff * algebra.basis_element(m.word.labels[t + 1]);
    }
    raw.coeffs.push_back(std::move(coeff));
    return raw;
}

}  // namespace gri

#endif
