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

#include "gri/rational.hpp"

#include <algorithm>
#include <functional>

namespace gri {

using Kind = RatNode::Kind;

namespace {

RatNodePtr make_node(Kind kind, std::vector<RatNodePtr> children) {
    return std::make_shared<const RatNode>(RatNode{kind, std::nullopt, {}, std::move(children)});
}

const AmbientPtr& common_ambient(const std::vector<RatExpr>& operands) {
    if (operands.empty()) fail(ErrorKind::InvalidInput, "empty sum or product");
    for (const auto& e : operands) {
        if (!same_ambient(e.ambient(), operands[0].ambient())) {
            fail(ErrorKind::AmbientMismatch, "expressions live over different ambients");
        }
    }
    return operands[0].ambient();
}

bool node_equal(const RatNode& a, const RatNode& b) {
    if (a.kind != b.kind || a.children.size() != b.children.size()) return false;
    if (a.kind == Kind::Const && !(*a.value == *b.value)) return false;
    if (a.kind == Kind::Indet && a.x != b.x) return false;
    for (std::size_t c = 0; c < a.children.size(); ++c) {
        if (!node_equal(*a.children[c], *b.children[c])) return false;
    }
    return true;
}

}  // namespace

RatExpr RatExpr::constant(AmbientPtr ambient, const Element& value) {
    if (!same_algebra(value.algebra(), ambient->algebra)) {
        fail(ErrorKind::AmbientMismatch, "constant from " + value.algebra()->name());
    }
    auto node = std::make_shared<const RatNode>(RatNode{Kind::Const, value, {}, {}});
    return RatExpr(std::move(ambient), std::move(node));
}

RatExpr RatExpr::indeterminate(AmbientPtr ambient, std::uint32_t var, std::uint32_t twist) {
    if (var == 0) fail(ErrorKind::InvalidInput, "variable indices start at 1");
    const TwistedIndeterminate x{var, twist};
    if (twist > ambient->m) fail(ErrorKind::TwistOutOfRange, x.to_string() + " exceeds m = " + std::to_string(ambient->m));
    auto node = std::make_shared<const RatNode>(RatNode{Kind::Indet, std::nullopt, x, {}});
    return RatExpr(std::move(ambient), std::move(node));
}

RatExpr RatExpr::sum(const std::vector<RatExpr>& terms) {
    const auto& ambient = common_ambient(terms);
    if (terms.size() == 1) return terms[0];
    std::vector<RatNodePtr> children;
    for (const auto& t : terms) children.push_back(t.node_);
    return RatExpr(ambient, make_node(Kind::Sum, std::move(children)));
}

RatExpr RatExpr::product(const std::vector<RatExpr>& factors) {
    const auto& ambient = common_ambient(factors);
    if (factors.size() == 1) return factors[0];
    std::vector<RatNodePtr> children;
    for (const auto& t : factors) children.push_back(t.node_);
    return RatExpr(ambient, make_node(Kind::Prod, std::move(children)));
}

RatExpr RatExpr::negate(const RatExpr& e) { return RatExpr(e.ambient_, make_node(Kind::Neg, {e.node_})); }

RatExpr RatExpr::inverse(const RatExpr& e) { return RatExpr(e.ambient_, make_node(Kind::Inv, {e.node_})); }

RatExpr RatExpr::from_genpoly(const GenPoly& f) {
    const auto& ambient = f.ambient();
    const auto& alg = f.algebra();
    if (f.is_zero()) return constant(ambient, alg.zero());
    std::vector<RatExpr> terms;
    // Degree-0 monomials sort first; they become one constant.
    Element c0 = alg.zero();
    for (const auto& t : f.terms()) {
        if (t.word.vars.empty()) c0 += t.scalar * alg.basis_element(t.word.labels[0]);
    }
    if (!c0.is_zero()) terms.push_back(constant(ambient, c0));
    for (const auto& t : f.terms()) {
        if (t.word.vars.empty()) continue;
        std::vector<RatExpr> factors;
        Element lead = t.scalar * alg.basis_element(t.word.labels[0]);
        if (!lead.is_scalar() || !lead[0].is_one()) factors.push_back(constant(ambient, lead));
        for (std::size_t s = 0; s < t.word.vars.size(); ++s) {
            factors.push_back(indeterminate(ambient, t.word.vars[s].var, t.word.vars[s].twist));
            if (t.word.labels[s + 1] != 0) factors.push_back(constant(ambient, alg.basis_element(t.word.labels[s + 1])));
        }
        terms.push_back(product(factors));
    }
    return sum(terms);
}

std::set<std::uint32_t> RatExpr::variables() const {
    std::set<std::uint32_t> vars;
    std::function<void(const RatNode&)> walk = [&](const RatNode& n) {
        if (n.kind == Kind::Indet) vars.insert(n.x.var);
        for (const auto& c : n.children) walk(*c);
    };
    walk(*node_);
    return vars;
}

bool RatExpr::is_polynomial() const {
    std::function<bool(const RatNode&)> walk = [&](const RatNode& n) {
        if (n.kind == Kind::Inv) return false;
        return std::all_of(n.children.begin(), n.children.end(), [&](const RatNodePtr& c) { return walk(*c); });
    };
    return walk(*node_);
}

std::optional<GenPoly> RatExpr::to_genpoly() const {
    if (!is_polynomial()) return std::nullopt;
    std::function<GenPoly(const RatNode&)> walk = [&](const RatNode& n) -> GenPoly {
        switch (n.kind) {
            case Kind::Const:
                return GenPoly::constant(ambient_, *n.value);
            case Kind::Indet:
                return GenPoly::indeterminate(ambient_, n.x.var, n.x.twist);
            case Kind::Sum: {
                GenPoly acc(ambient_);
                for (const auto& c : n.children) acc += walk(*c);
                return acc;
            }
            case Kind::Prod: {
                GenPoly acc = walk(*n.children[0]);
                for (std::size_t c = 1; c < n.children.size(); ++c) acc = gp_mul(acc, walk(*n.children[c]));
                return acc;
            }
            case Kind::Neg:
                return -walk(*n.children[0]);
            case Kind::Inv:
                break;
        }
        fail(ErrorKind::InvalidInput, "unexpected inverse");
    };
    return walk(*node_);
}

std::optional<std::size_t> RatExpr::structural_degree() const {
    if (!is_polynomial()) return std::nullopt;
    return numerator_degree();
}

std::size_t RatExpr::numerator_degree() const {
    std::function<std::size_t(const RatNode&)> walk = [&](const RatNode& n) -> std::size_t {
        std::size_t d = 0;
        switch (n.kind) {
            case Kind::Const:
                return 0;
            case Kind::Indet:
                return 1;
            case Kind::Prod:
                for (const auto& c : n.children) d += walk(*c);
                return d;
            default:
                for (const auto& c : n.children) d = std::max(d, walk(*c));
                return d;
        }
    };
    return walk(*node_);
}

std::string RatExpr::to_string() const {
    std::function<std::string(const RatNode&)> walk = [&](const RatNode& n) -> std::string {
        std::string out;
        switch (n.kind) {
            case Kind::Const:
                return "(" + n.value->to_string() + ")";
            case Kind::Indet:
                return n.x.to_string();
            case Kind::Sum:
            case Kind::Prod:
                out = "(";
                for (std::size_t c = 0; c < n.children.size(); ++c) {
                    if (c) out += n.kind == Kind::Sum ? " + " : "*";
                    out += walk(*n.children[c]);
                }
                return out + ")";
            case Kind::Neg:
                return "-(" + walk(*n.children[0]) + ")";
            case Kind::Inv:
                return "inv(" + walk(*n.children[0]) + ")";
        }
        return out;
    };
    return walk(*node_);
}

bool operator==(const RatExpr& a, const RatExpr& b) {
    return same_ambient(a.ambient_, b.ambient_) && node_equal(*a.node_, *b.node_);
}

std::optional<Element> eval_rat(const RatExpr& e, const Point& point) {
    const auto& ambient = *e.ambient();
    std::function<std::optional<Element>(const RatNode&)> walk = [&](const RatNode& n) -> std::optional<Element> {
        switch (n.kind) {
            case Kind::Const:
                return *n.value;
            case Kind::Indet: {
                auto it = point.find(n.x.var);
                if (it == point.end()) fail(ErrorKind::MissingAssignment, "no value for x" + std::to_string(n.x.var));
                if (!same_algebra(it->second.algebra(), ambient.algebra)) {
                    fail(ErrorKind::DescriptorMismatch, "value for x" + std::to_string(n.x.var) + " from " +
                                                            it->second.algebra()->name());
                }
                return n.x.twist == 0 ? it->second : ambient.sigma->apply(n.x.twist, it->second);
            }
            case Kind::Sum: {
                Element acc = ambient.algebra->zero();
                for (const auto& c : n.children) {
                    auto v = walk(*c);
                    if (!v) return std::nullopt;
                    acc += *v;
                }
                return acc;
            }
            case Kind::Prod: {
                std::optional<Element> acc;
                for (const auto& c : n.children) {
                    auto v = walk(*c);
                    if (!v) return std::nullopt;
                    acc = acc ? *acc * *v : *v;
                }
                return acc;
            }
            case Kind::Neg: {
                auto v = walk(*n.children[0]);
                if (!v) return std::nullopt;
                return -*v;
            }
            case Kind::Inv: {
                auto v = walk(*n.children[0]);
                if (!v) return std::nullopt;
                return try_inverse(*v);
            }
        }
        return std::nullopt;
    };
    return walk(e.node());
}

// ---------------------------------------------------------------- series

TruncatedSeries::TruncatedSeries(AmbientPtr ambient, std::size_t order)
    : ambient_(std::move(ambient)), coeffs_(order + 1, GenPoly(ambient_)) {}

TruncatedSeries::TruncatedSeries(AmbientPtr ambient, std::vector<GenPoly> coeffs)
    : ambient_(std::move(ambient)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) fail(ErrorKind::InvalidInput, "a series needs at least the constant term");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!same_ambient(coeffs_[i].ambient(), ambient_)) {
            fail(ErrorKind::AmbientMismatch, "series coefficient from another ambient");
        }
        if (!coeffs_[i].is_homogeneous(i)) {
            fail(ErrorKind::InvalidInput, "coefficient " + std::to_string(i) + " is not homogeneous of that degree");
        }
    }
}

namespace {

void check_orders(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!same_ambient(a.ambient(), b.ambient())) fail(ErrorKind::AmbientMismatch, "series over different ambients");
    if (a.order() != b.order()) fail(ErrorKind::InvalidInput, "series truncated at different orders");
}

}  // namespace

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_orders(a, b);
    TruncatedSeries out = a;
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_orders(a, b);
    TruncatedSeries out(a.ambient_, a.order());
    for (std::size_t k = 0; k <= a.order(); ++k) {
        for (std::size_t u = 0; u <= k; ++u) {
            if (a.coeffs_[u].is_zero() || b.coeffs_[k - u].is_zero()) continue;
            out.coeffs_[k] += gp_mul(a.coeffs_[u], b.coeffs_[k - u]);
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
    auto c0_inv = try_inverse(constant_term());
    if (!c0_inv) fail(ErrorKind::BaseUndefined, "constant term " + constant_term().to_string() + " is not invertible");
    const GenPoly inv0 = GenPoly::constant(ambient_, *c0_inv);
    TruncatedSeries out(ambient_, order());
    out.coeffs_[0] = inv0;
    for (std::size_t k = 1; k <= order(); ++k) {
        GenPoly acc(ambient_);
        for (std::size_t u = 1; u <= k; ++u) {
            if (coeffs_[u].is_zero() || out.coeffs_[k - u].is_zero()) continue;
            acc += gp_mul(coeffs_[u], out.coeffs_[k - u]);
        }
        out.coeffs_[k] = -gp_mul(inv0, acc);
    }
    return out;
}

TruncatedSeries series_expand(const RatExpr& e, const Point& r, std::size_t order) {
    const auto& ambient = e.ambient();
    std::function<TruncatedSeries(const RatNode&)> walk = [&](const RatNode& n) -> TruncatedSeries {
        TruncatedSeries out(ambient, order);
        switch (n.kind) {
            case Kind::Const:
                return TruncatedSeries(ambient, [&] {
                    std::vector<GenPoly> c(order + 1, GenPoly(ambient));
                    c[0] = GenPoly::constant(ambient, *n.value);
                    return c;
                }());
            case Kind::Indet: {
                auto it = r.find(n.x.var);
                if (it == r.end()) fail(ErrorKind::MissingAssignment, "no value for x" + std::to_string(n.x.var));
                const Element base = n.x.twist == 0 ? it->second : ambient->sigma->apply(n.x.twist, it->second);
                std::vector<GenPoly> c(order + 1, GenPoly(ambient));
                c[0] = GenPoly::constant(ambient, base);
                if (order >= 1) c[1] = GenPoly::indeterminate(ambient, n.x.var, n.x.twist);
                return TruncatedSeries(ambient, std::move(c));
            }
            case Kind::Sum:
                out = walk(*n.children[0]);
                for (std::size_t c = 1; c < n.children.size(); ++c) out = out + walk(*n.children[c]);
                return out;
            case Kind::Prod:
                out = walk(*n.children[0]);
                for (std::size_t c = 1; c < n.children.size(); ++c) out = out * walk(*n.children[c]);
                return out;
            case Kind::Neg:
                return -walk(*n.children[0]);
            case Kind::Inv:
                return walk(*n.children[0]).inverse();
        }
        return out;
    };
    return walk(e.node());
}

GpiExtraction extract_gpi(const RatExpr& e, const Point& r, std::size_t order) {
    const TruncatedSeries s = series_expand(e, r, order);
    if (!s.coeff(0).is_zero()) {
        fail(ErrorKind::BaseNonzero, "expression evaluates to " + s.constant_term().to_string() + " at the base point");
    }
    for (std::size_t i = 1; i <= s.order(); ++i) {
        if (!s.coeff(i).is_zero()) return {GpiExtraction::Status::Found, i, s.coeff(i)};
    }
    return {GpiExtraction::Status::AllZeroUpToN, 0, std::nullopt};
}

DefinedSample sample_defined_points(const RatExpr& e, std::size_t count, std::uint64_t seed) {
    if (count == 0) fail(ErrorKind::InvalidInput, "count must be at least 1");
    const auto& alg = *e.ambient()->algebra;
    const auto vars = e.variables();
    DefinedSample out;
    const std::size_t max_draws = 100 * count;
    while (out.points.size() < count && out.draws < max_draws) {
        Rng rng = stream(seed, out.draws++);
        Point p;
        for (auto v : vars) p.emplace(v, alg.random_element(rng));
        if (eval_rat(e, p)) {
            out.points.push_back(std::move(p));
        } else {
            ++out.rejected;
        }
    }
    if (out.points.empty()) {
        fail(ErrorKind::ExhaustedSampling, "no defined point in " + std::to_string(out.draws) + " draws");
    }
    return out;
}

// ------------------------------------------------- polynomials in central t

CentralPolynomial::CentralPolynomial(std::vector<Element> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

CentralPolynomial CentralPolynomial::linear(const AlgebraPtr& algebra, const Scalar& root) {
    return CentralPolynomial({algebra->from_scalar(-root), algebra->one()});
}

std::size_t CentralPolynomial::degree() const {
    if (coeffs_.empty()) fail(ErrorKind::ZeroPolynomialDegree, "degree of the zero polynomial");
    return coeffs_.size() - 1;
}

Element CentralPolynomial::evaluate(const Scalar& t) const {
    if (coeffs_.empty()) fail(ErrorKind::InvalidInput, "evaluating the zero polynomial needs an algebra");
    Element acc = coeffs_.back().algebra()->zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = t * acc + *it;
    return acc;
}

CentralPolynomial operator*(const CentralPolynomial& a, const CentralPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return CentralPolynomial({});
    std::vector<Element> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.coeffs_[0].algebra()->zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) alg_mul_add(out[i + j], a.coeffs_[i], b.coeffs_[j]);
    }
    return CentralPolynomial(std::move(out));
}

CentralPolynomial operator*(const Element& c, const CentralPolynomial& p) {
    std::vector<Element> out;
    for (const auto& a : p.coeffs_) out.push_back(c * a);
    return CentralPolynomial(std::move(out));
}

std::set<Scalar> sample_central_roots(const CentralPolynomial& p, std::size_t samples, std::uint64_t seed, int box) {
    std::set<Scalar> roots;
    if (p.is_zero()) fail(ErrorKind::ZeroPolynomialDegree, "every value is a root of the zero polynomial");
    const Field& field = p.coeffs()[0].algebra()->field();
    for (std::size_t s = 0; s < samples; ++s) {
        Rng rng = stream(seed, s);
        Scalar t = field.zero();
        if (field.is_finite()) {
            t = random_scalar(field, rng);
        } else {
            const std::int64_t d = std::uniform_int_distribution<std::int64_t>(1, box)(rng);
            const std::int64_t n = std::uniform_int_distribution<std::int64_t>(-4 * box * d, 4 * box * d)(rng);
            t = Scalar(Rational(n, d));
        }
        if (roots.count(t)) continue;
        if (p.evaluate(t).is_zero()) roots.insert(t);
    }
    return roots;
}

}  // namespace gri
