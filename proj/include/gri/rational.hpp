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

#ifndef GRI_RATIONAL_HPP
#define GRI_RATIONAL_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "gri/genpoly.hpp"

namespace gri {

/*
 * Rational expressions are kept as syntax trees. Nothing is simplified;
 * equality is structural and only evaluation carries meaning. Inv of a value
 * that is not invertible makes the whole evaluation undefined.
 */

struct RatNode;
using RatNodePtr = std::shared_ptr<const RatNode>;

struct RatNode {
    enum class Kind { Const, Indet, Sum, Prod, Neg, Inv };

    Kind kind;
    std::optional<Element> value;  // Const only
    TwistedIndeterminate x;        // Indet only
    std::vector<RatNodePtr> children;
};

class RatExpr {
  public:
    static RatExpr constant(AmbientPtr ambient, const Element& value);
    /// Throws TwistOutOfRange when twist > m.
    static RatExpr indeterminate(AmbientPtr ambient, std::uint32_t var, std::uint32_t twist = 0);
    /// Sum and product of at least one operand; a single operand is returned as is.
    static RatExpr sum(const std::vector<RatExpr>& terms);
    static RatExpr product(const std::vector<RatExpr>& factors);
    static RatExpr negate(const RatExpr& e);
    static RatExpr inverse(const RatExpr& e);
    /// Sum over monomials of products of constants and indeterminates.
    static RatExpr from_genpoly(const GenPoly& f);

    const AmbientPtr& ambient() const noexcept { return ambient_; }
    const RatNode& node() const noexcept { return *node_; }
    RatNode::Kind kind() const noexcept { return node_->kind; }
    RatExpr child(std::size_t i) const { return RatExpr(ambient_, node_->children.at(i)); }
    std::size_t arity() const noexcept { return node_->children.size(); }

    std::set<std::uint32_t> variables() const;
    /// True when no Inv node occurs.
    bool is_polynomial() const;
    /// Multiplies out an inverse-free expression; nullopt if Inv occurs.
    std::optional<GenPoly> to_genpoly() const;
    /// Degree of the polynomial structure (Prod adds, Sum takes the max);
    /// nullopt if Inv occurs.
    std::optional<std::size_t> structural_degree() const;
    /// Like structural_degree with inv(e) counted as e; always defined.
    std::size_t numerator_degree() const;

    /// Fully parenthesized text accepted by the expression parser: sums and
    /// products in parentheses, constants as "(element)", "-(e)", "inv(e)".
    std::string to_string() const;

    friend bool operator==(const RatExpr& a, const RatExpr& b);

    RatExpr(AmbientPtr ambient, RatNodePtr node) : ambient_(std::move(ambient)), node_(std::move(node)) {}

  private:
    AmbientPtr ambient_;
    RatNodePtr node_;
};

/// nullopt means undefined: some Inv met a non-invertible value.
std::optional<Element> eval_rat(const RatExpr& e, const Point& point);

// ---------------------------------------------------------------- series

/// c_0 + c_1 t + ... + c_N t^N with c_0 a constant and c_i homogeneous of
/// degree i; t is central and fixed by σ.
class TruncatedSeries {
  public:
    TruncatedSeries(AmbientPtr ambient, std::size_t order);
    /// Throws InvalidInput when a coefficient has the wrong degree.
    TruncatedSeries(AmbientPtr ambient, std::vector<GenPoly> coeffs);

    const AmbientPtr& ambient() const noexcept { return ambient_; }
    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const std::vector<GenPoly>& coeffs() const noexcept { return coeffs_; }
    const GenPoly& coeff(std::size_t i) const { return coeffs_.at(i); }
    Element constant_term() const { return coeffs_[0].constant_value(); }

    TruncatedSeries operator-() const;
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    /// Throws BaseUndefined when the constant term is not invertible.
    TruncatedSeries inverse() const;

  private:
    AmbientPtr ambient_;
    std::vector<GenPoly> coeffs_;
};

/// Series of e at x_j -> r_j + x_j t, truncated after t^order.
TruncatedSeries series_expand(const RatExpr& e, const Point& r, std::size_t order);

struct GpiExtraction {
    enum class Status { Found, AllZeroUpToN };
    Status status;
    std::size_t index = 0;  // i_0 when found
    std::optional<GenPoly> poly;
};

/// Least i >= 1 with nonzero c_i. Throws BaseNonzero when e(r) != 0 and
/// BaseUndefined when the expansion is undefined at r.
GpiExtraction extract_gpi(const RatExpr& e, const Point& r, std::size_t order);

struct DefinedSample {
    std::vector<Point> points;
    std::size_t draws = 0;
    std::size_t rejected = 0;
    double rejection_rate() const noexcept { return draws ? static_cast<double>(rejected) / draws : 0.0; }
};

/// Draws random points (at most 100 * count) until `count` of them make e
/// defined. Throws ExhaustedSampling when none does.
DefinedSample sample_defined_points(const RatExpr& e, std::size_t count, std::uint64_t seed);

// ------------------------------------------------- polynomials in central t

/// a_0 + a_1 t + ... + a_n t^n with algebra coefficients and t central.
class CentralPolynomial {
  public:
    explicit CentralPolynomial(std::vector<Element> coeffs);
    /// (t - root) as a monic linear polynomial over `algebra`.
    static CentralPolynomial linear(const AlgebraPtr& algebra, const Scalar& root);

    const std::vector<Element>& coeffs() const noexcept { return coeffs_; }
    /// Throws ZeroPolynomialDegree on the zero polynomial.
    std::size_t degree() const;
    bool is_zero() const noexcept { return coeffs_.empty(); }

    Element evaluate(const Scalar& t) const;
    friend CentralPolynomial operator*(const CentralPolynomial& a, const CentralPolynomial& b);
    friend CentralPolynomial operator*(const Element& c, const CentralPolynomial& p);

  private:
    std::vector<Element> coeffs_;  // trailing zeros trimmed
};

/// Distinct base-field roots among `samples` seeded draws of small
/// rationals n/d with |n| <= 4·box·d and 1 <= d <= box (or all residues of a
/// finite field).
std::set<Scalar> sample_central_roots(const CentralPolynomial& p, std::size_t samples, std::uint64_t seed,
                                      int box = 6);

}  // namespace gri

#endif
