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

#include "gri/genpoly.hpp"

#include <algorithm>
#include <utility>

namespace gri {

std::string TwistedIndeterminate::to_string() const {
    std::string s = "x" + std::to_string(var);
    if (twist != 0) s += "^s" + std::to_string(twist);
    return s;
}

AmbientPtr make_ambient(AlgebraPtr algebra, SigmaPtr sigma, std::optional<std::uint32_t> m) {
    if (!algebra) fail(ErrorKind::InvalidInput, "ambient needs an algebra");
    std::uint32_t bound = 0;
    if (sigma) {
        if (!same_algebra(sigma->algebra(), algebra)) {
            fail(ErrorKind::DescriptorMismatch, "anti-automorphism belongs to " + sigma->algebra()->name());
        }
        bound = static_cast<std::uint32_t>(sigma->verified_order_floor());
    }
    if (m && *m > bound) {
        fail(ErrorKind::TwistOutOfRange, "m = " + std::to_string(*m) + " exceeds the verified order floor " +
                                             std::to_string(bound));
    }
    return std::make_shared<const Ambient>(Ambient{std::move(algebra), std::move(sigma), m.value_or(bound)});
}

bool same_ambient(const AmbientPtr& a, const AmbientPtr& b) noexcept {
    if (a == b) return true;
    if (!a || !b || a->m != b->m || !same_algebra(a->algebra, b->algebra)) return false;
    if (a->sigma == b->sigma) return true;
    return a->sigma && b->sigma && a->sigma->matrix() == b->sigma->matrix();
}

namespace {

void check_ambient(const AmbientPtr& a, const AmbientPtr& b) {
    if (!same_ambient(a, b)) fail(ErrorKind::AmbientMismatch, "polynomials live over different ambients");
}

}  // namespace

bool operator<(const Word& a, const Word& b) {
    if (a.vars.size() != b.vars.size()) return a.vars.size() < b.vars.size();
    if (a.vars != b.vars) return a.vars < b.vars;
    return a.labels < b.labels;
}

// ---------------------------------------------------------- accumulator

void TermAccumulator::add(const Word& word, const Scalar& scalar) {
    if (scalar.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(word, scalar);
    if (!inserted) it->second += scalar;
}

void TermAccumulator::add(Word&& word, const Scalar& scalar) {
    if (scalar.is_zero()) return;
    auto it = terms_.find(word);
    if (it == terms_.end()) {
        terms_.emplace(std::move(word), scalar);
    } else {
        it->second += scalar;
    }
}

GenPoly TermAccumulator::finish(AmbientPtr ambient) && {
    std::vector<Monomial> terms;
    terms.reserve(terms_.size());
    for (auto& [word, scalar] : terms_) {
        if (!scalar.is_zero()) terms.push_back({std::move(scalar), word});
    }
    return GenPoly::from_terms(std::move(ambient), std::move(terms));
}

// -------------------------------------------------------------- GenPoly

GenPoly GenPoly::from_terms(AmbientPtr ambient, std::vector<Monomial> terms) {
    GenPoly out(std::move(ambient));
    const auto m = out.ambient_->m;
    const auto d = out.algebra().dimension();
    for (const auto& t : terms) {
        if (t.word.labels.size() != t.word.vars.size() + 1) {
            fail(ErrorKind::InvalidInput, "word has mismatched label and indeterminate counts");
        }
        for (auto label : t.word.labels) {
            if (label >= d) fail(ErrorKind::InvalidInput, "basis label out of range");
        }
        for (const auto& x : t.word.vars) {
            if (x.twist > m) fail(ErrorKind::TwistOutOfRange, x.to_string() + " exceeds m = " + std::to_string(m));
            if (x.var == 0) fail(ErrorKind::InvalidInput, "variable indices start at 1");
        }
    }
    std::sort(terms.begin(), terms.end(), [](const Monomial& a, const Monomial& b) { return a.word < b.word; });
    for (auto& t : terms) {
        if (!out.terms_.empty() && out.terms_.back().word == t.word) {
            out.terms_.back().scalar += t.scalar;
        } else {
            out.terms_.push_back(std::move(t));
        }
    }
    std::erase_if(out.terms_, [](const Monomial& t) { return t.scalar.is_zero(); });
    return out;
}

GenPoly GenPoly::constant(AmbientPtr ambient, const Element& value) {
    if (!same_algebra(value.algebra(), ambient->algebra)) {
        fail(ErrorKind::AmbientMismatch, "constant from " + value.algebra()->name());
    }
    std::vector<Monomial> terms;
    for (std::uint32_t a = 0; a < value.coords().size(); ++a) {
        if (!value[a].is_zero()) terms.push_back({value[a], Word{{a}, {}}});
    }
    return from_terms(std::move(ambient), std::move(terms));
}

GenPoly GenPoly::scalar(AmbientPtr ambient, const Scalar& value) {
    auto one = ambient->algebra->one();
    return constant(std::move(ambient), value * one);
}

GenPoly GenPoly::indeterminate(AmbientPtr ambient, std::uint32_t var, std::uint32_t twist) {
    const Scalar one = ambient->algebra->field().one();
    return from_terms(std::move(ambient), {Monomial{one, Word{{0, 0}, {TwistedIndeterminate{var, twist}}}}});
}

std::set<std::uint32_t> GenPoly::variables() const {
    std::set<std::uint32_t> vars;
    for (const auto& t : terms_) {
        for (const auto& x : t.word.vars) vars.insert(x.var);
    }
    return vars;
}

std::uint32_t GenPoly::max_twist() const noexcept {
    std::uint32_t k = 0;
    for (const auto& t : terms_) {
        for (const auto& x : t.word.vars) k = std::max(k, x.twist);
    }
    return k;
}

bool GenPoly::is_homogeneous(std::size_t degree) const noexcept {
    return std::all_of(terms_.begin(), terms_.end(), [&](const Monomial& t) { return t.word.degree() == degree; });
}

Element GenPoly::constant_value() const {
    Element value = algebra().zero();
    for (const auto& t : terms_) {
        if (t.word.degree() != 0) fail(ErrorKind::InvalidInput, "polynomial is not constant");
        value.mutable_coords()[t.word.labels[0]] += t.scalar;
    }
    return value;
}

GenPoly GenPoly::operator-() const {
    GenPoly out = *this;
    for (auto& t : out.terms_) t.scalar = -t.scalar;
    return out;
}

GenPoly& GenPoly::operator+=(const GenPoly& other) {
    check_ambient(ambient_, other.ambient_);
    std::vector<Monomial> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && a->word < b->word)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->word < a->word) {
            merged.push_back(*b++);
        } else {
            Scalar s = a->scalar + b->scalar;
            if (!s.is_zero()) merged.push_back({std::move(s), std::move(a->word)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

GenPoly& GenPoly::operator-=(const GenPoly& other) { return *this += -other; }

GenPoly& GenPoly::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.scalar *= s;
    return *this;
}

GenPoly operator*(const GenPoly& a, const GenPoly& b) { return gp_mul(a, b); }

bool operator==(const GenPoly& a, const GenPoly& b) {
    return same_ambient(a.ambient_, b.ambient_) && a.terms_ == b.terms_;
}

std::string GenPoly::to_string() const {
    if (terms_.empty()) return "0";
    const auto& labels = algebra().labels();
    std::string out;
    for (const auto& t : terms_) {
        std::string coeff = t.scalar.to_plain_string();
        const bool negative = coeff[0] == '-';
        if (negative) coeff.erase(0, 1);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::vector<std::string> factors;
        if (coeff != "1") factors.push_back(coeff);
        for (std::size_t s = 0; s < t.word.labels.size(); ++s) {
            if (t.word.labels[s] != 0) factors.push_back(labels[t.word.labels[s]]);
            if (s < t.word.vars.size()) factors.push_back(t.word.vars[s].to_string());
        }
        if (factors.empty()) factors.push_back("1");
        for (std::size_t k = 0; k < factors.size(); ++k) {
            if (k) out += "*";
            out += factors[k];
        }
    }
    return out;
}

// ----------------------------------------------------------- operations

namespace {

// Expands the coefficient slots of one raw monomial over the basis.
void expand_raw(const RawMonomial& raw, std::size_t slot, Word& word, const Scalar& scalar, TermAccumulator& acc) {
    const auto& coeff = raw.coeffs[slot];
    for (std::uint32_t a = 0; a < coeff.coords().size(); ++a) {
        if (coeff[a].is_zero()) continue;
        word.labels[slot] = a;
        Scalar s = scalar * coeff[a];
        if (slot + 1 == raw.coeffs.size()) {
            acc.add(word, s);
        } else {
            expand_raw(raw, slot + 1, word, s, acc);
        }
    }
}

}  // namespace

GenPoly gp_normalize(const AmbientPtr& ambient, std::span<const RawMonomial> raw) {
    TermAccumulator acc;
    for (const auto& r : raw) {
        if (r.coeffs.size() != r.vars.size() + 1) {
            fail(ErrorKind::InvalidInput, "raw monomial has mismatched coefficient and indeterminate counts");
        }
        for (const auto& c : r.coeffs) {
            if (!same_algebra(c.algebra(), ambient->algebra)) {
                fail(ErrorKind::AmbientMismatch, "coefficient from " + c.algebra()->name());
            }
        }
        if (r.scalar.is_zero()) continue;
        Word word{std::vector<std::uint32_t>(r.coeffs.size(), 0), r.vars};
        expand_raw(r, 0, word, r.scalar, acc);
    }
    return std::move(acc).finish(ambient);
}

GenPoly gp_mul(const GenPoly& f, const GenPoly& g) {
    check_ambient(f.ambient(), g.ambient());
    const auto& alg = f.algebra();
    TermAccumulator acc;
    Word word;
    for (const auto& a : f.terms()) {
        for (const auto& b : g.terms()) {
            const Scalar ab = a.scalar * b.scalar;
            for (const auto& term : alg.product(a.word.labels.back(), b.word.labels.front())) {
                word.labels.assign(a.word.labels.begin(), a.word.labels.end() - 1);
                word.labels.push_back(term.index);
                word.labels.insert(word.labels.end(), b.word.labels.begin() + 1, b.word.labels.end());
                word.vars = a.word.vars;
                word.vars.insert(word.vars.end(), b.word.vars.begin(), b.word.vars.end());
                acc.add(word, ab * term.coeff);
            }
        }
    }
    return std::move(acc).finish(f.ambient());
}

std::size_t sigma_deg(const Monomial& m, std::uint32_t var) noexcept {
    return static_cast<std::size_t>(
        std::count_if(m.word.vars.begin(), m.word.vars.end(), [&](const auto& x) { return x.var == var; }));
}

std::size_t deg(const Monomial& m) noexcept { return m.word.degree(); }

std::size_t height(const Monomial& m) noexcept {
    std::set<std::uint32_t> distinct;
    for (const auto& x : m.word.vars) distinct.insert(x.var);
    return m.word.degree() - distinct.size();
}

std::size_t sigma_ht(const Monomial& m, std::uint32_t var) noexcept {
    const std::size_t d = sigma_deg(m, var);
    return d > 0 ? d - 1 : 0;
}

namespace {

template <class Fn>
std::size_t max_over_terms(const GenPoly& f, Fn&& fn) {
    if (f.is_zero()) fail(ErrorKind::ZeroPolynomialDegree, "degree of the zero polynomial");
    std::size_t best = 0;
    for (const auto& t : f.terms()) best = std::max(best, fn(t));
    return best;
}

}  // namespace

std::size_t sigma_deg(const GenPoly& f, std::uint32_t var) {
    return max_over_terms(f, [&](const Monomial& m) { return sigma_deg(m, var); });
}

std::size_t deg(const GenPoly& f) {
    return max_over_terms(f, [](const Monomial& m) { return deg(m); });
}

std::size_t height(const GenPoly& f) {
    return max_over_terms(f, [](const Monomial& m) { return height(m); });
}

std::size_t sigma_ht(const GenPoly& f, std::uint32_t var) {
    return max_over_terms(f, [&](const Monomial& m) { return sigma_ht(m, var); });
}

bool is_blended_in(const GenPoly& f, std::uint32_t var) {
    if (f.is_zero()) fail(ErrorKind::ZeroPolynomialDegree, "blendedness of the zero polynomial");
    return std::all_of(f.terms().begin(), f.terms().end(), [&](const Monomial& m) { return sigma_deg(m, var) > 0; });
}

bool is_blended(const GenPoly& f) {
    if (f.is_zero()) fail(ErrorKind::ZeroPolynomialDegree, "blendedness of the zero polynomial");
    for (auto var : f.variables()) {
        if (!is_blended_in(f, var)) return false;
    }
    return true;
}

bool is_sigma_linear(const GenPoly& f) {
    if (!is_blended(f)) return false;
    for (auto var : f.variables()) {
        if (sigma_deg(f, var) != 1) return false;
    }
    return true;
}

GenPoly subst_zero(const GenPoly& f, std::uint32_t var) {
    std::vector<Monomial> kept;
    for (const auto& t : f.terms()) {
        if (sigma_deg(t, var) == 0) kept.push_back(t);
    }
    return GenPoly::from_terms(f.ambient(), std::move(kept));
}

GenPoly rename_variable(const GenPoly& f, std::uint32_t from, std::uint32_t to) {
    std::vector<Monomial> terms = f.terms();
    for (auto& t : terms) {
        for (auto& x : t.word.vars) {
            if (x.var == from) x.var = to;
        }
    }
    return GenPoly::from_terms(f.ambient(), std::move(terms));
}

Element gp_eval(const GenPoly& f, const Point& point) {
    const auto& amb = *f.ambient();
    const auto& alg = *amb.algebra;
    std::map<TwistedIndeterminate, Element> values;
    for (const auto& t : f.terms()) {
        for (const auto& x : t.word.vars) {
            if (values.count(x)) continue;
            auto it = point.find(x.var);
            if (it == point.end()) fail(ErrorKind::MissingAssignment, "no value for x" + std::to_string(x.var));
            if (!same_algebra(it->second.algebra(), amb.algebra)) {
                fail(ErrorKind::DescriptorMismatch, "value for x" + std::to_string(x.var) + " from " +
                                                        it->second.algebra()->name());
            }
            values.emplace(x, x.twist == 0 ? it->second : amb.sigma->apply(x.twist, it->second));
        }
    }
    Element total = alg.zero();
    for (const auto& t : f.terms()) {
        Element acc = alg.basis_element(t.word.labels[0]);
        for (std::size_t s = 0; s < t.word.vars.size(); ++s) {
            acc = acc * values.at(t.word.vars[s]);
            acc = acc * alg.basis_element(t.word.labels[s + 1]);
        }
        total += t.scalar * acc;
    }
    return total;
}

}  // namespace gri
