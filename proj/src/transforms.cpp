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

#include "gri/transforms.hpp"

#include <algorithm>
#include <set>

namespace gri {

BlendTrace blend(const GenPoly& f) {
    BlendTrace trace = blend_trace(f);
    if (trace.result.is_zero()) {
        fail(ErrorKind::BlendCollapsed, "every monomial of " + f.to_string() + " omits some variable");
    }
    return trace;
}

BlendTrace blend_trace(const GenPoly& f) {
    if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "cannot blend the zero polynomial");
    std::vector<std::uint32_t> unblended;
    for (auto var : f.variables()) {
        if (!is_blended_in(f, var)) unblended.push_back(var);
    }
    BlendTrace trace{{}, f};
    for (auto var : unblended) {
        GenPoly removed = subst_zero(trace.result, var);
        GenPoly kept = trace.result - removed;
        trace.result = kept;
        trace.steps.push_back({var, std::move(removed), std::move(kept)});
    }
    return trace;
}

GenPoly delta(const GenPoly& f, std::uint32_t var, std::uint32_t fresh) {
    const auto vars = f.variables();
    if (vars.count(fresh)) fail(ErrorKind::FreshVarCollision, "x" + std::to_string(fresh) + " already occurs");
    if (!vars.count(var)) fail(ErrorKind::VariableAbsent, "x" + std::to_string(var) + " does not occur");

    // Expanding (x + y) at every occurrence and dropping the two pure words
    // leaves one renamed copy per nonempty proper subset of the occurrences.
    TermAccumulator acc;
    for (const auto& t : f.terms()) {
        std::vector<std::size_t> positions;
        for (std::size_t s = 0; s < t.word.vars.size(); ++s) {
            if (t.word.vars[s].var == var) positions.push_back(s);
        }
        const std::size_t p = positions.size();
        if (p < 2) continue;
        const std::uint64_t full = (std::uint64_t{1} << p) - 1;
        for (std::uint64_t mask = 1; mask < full; ++mask) {
            Word word = t.word;
            for (std::size_t b = 0; b < p; ++b) {
                if (mask >> b & 1) word.vars[positions[b]].var = fresh;
            }
            acc.add(std::move(word), t.scalar);
        }
    }
    return std::move(acc).finish(f.ambient());
}

MultilinearizeReport multilinearize(const GenPoly& f) {
    if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "cannot multilinearize the zero polynomial");
    GenPoly g = blend(f).result;

    const std::size_t t = height(g);
    const auto pivot_it =
        std::find_if(g.terms().begin(), g.terms().end(), [&](const Monomial& m) { return height(m) == t; });
    MultilinearizeReport report{g, {}, {}, *pivot_it};

    std::set<std::uint32_t> used = g.variables();
    for (auto var : used) report.multidegrees[var] = sigma_deg(report.pivot, var);

    std::uint32_t next = 1;
    auto allocate = [&] {
        while (used.count(next)) ++next;
        used.insert(next);
        return next;
    };
    for (auto it = report.multidegrees.rbegin(); it != report.multidegrees.rend(); ++it) {
        const auto [var, p] = *it;
        for (std::uint32_t copy = 1; copy < p; ++copy) {
            const std::uint32_t fresh = allocate();
            report.fresh_vars[fresh] = {var, copy};
            report.result = delta(report.result, var, fresh);
            if (report.result.is_zero()) {
                fail(ErrorKind::Collapsed, "multilinearization of " + f.to_string() + " vanished");
            }
        }
    }
    return report;
}

namespace {

// σ^twist(values[var]), computed once per twisted indeterminate.
class TwistedValues {
  public:
    TwistedValues(const Ambient& ambient, const Point& point) : ambient_(ambient), point_(point) {}

    const Element& operator()(const TwistedIndeterminate& x) {
        auto found = cache_.find(x);
        if (found != cache_.end()) return found->second;
        auto it = point_.find(x.var);
        if (it == point_.end()) fail(ErrorKind::MissingAssignment, "no value for x" + std::to_string(x.var));
        if (!same_algebra(it->second.algebra(), ambient_.algebra)) {
            fail(ErrorKind::DescriptorMismatch, "value for x" + std::to_string(x.var) + " from " +
                                                    it->second.algebra()->name());
        }
        Element v = x.twist == 0 ? it->second : ambient_.sigma->apply(x.twist, it->second);
        return cache_.emplace(x, std::move(v)).first->second;
    }

  private:
    const Ambient& ambient_;
    const Point& point_;
    std::map<TwistedIndeterminate, Element> cache_;
};

}  // namespace

std::vector<GenPoly> expand_at(const GenPoly& f, const Point& r) {
    const auto& ambient = f.ambient();
    const auto& alg = f.algebra();
    const std::size_t top = f.is_zero() ? 0 : deg(f);
    TwistedValues values(*ambient, r);

    std::vector<std::vector<RawMonomial>> raw(top + 1);
    for (const auto& t : f.terms()) {
        const std::size_t q = t.word.degree();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << q); ++mask) {
            // Positions in the mask keep the indeterminate (the x·t part).
            RawMonomial rm = fold_constants(alg, t, [&](std::size_t pos, const TwistedIndeterminate& x) {
                return (mask >> pos & 1) ? std::nullopt : std::optional<Element>(values(x));
            });
            raw[rm.vars.size()].push_back(std::move(rm));
        }
    }
    std::vector<GenPoly> out;
    out.reserve(top + 1);
    for (auto& bucket : raw) out.push_back(gp_normalize(ambient, bucket));
    return out;
}

TwistReduction reduce_twist(const GenPoly& f, const Element& r) {
    const auto vars = f.variables();
    if (vars.size() != 1) fail(ErrorKind::NotSingleVariable, "expected exactly one variable in " + f.to_string());
    if (!is_sigma_linear(f)) fail(ErrorKind::NotSigmaLinear, f.to_string() + " is not linear in its variable");
    const std::uint32_t k = f.max_twist();
    if (k == 0) fail(ErrorKind::NoTopTwist, f.to_string() + " has no twisted occurrence");
    const auto& ambient = f.ambient();
    if (!same_algebra(r.algebra(), ambient->algebra)) {
        fail(ErrorKind::DescriptorMismatch, "r from " + r.algebra()->name());
    }
    const auto& alg = f.algebra();
    const auto& sigma = *ambient->sigma;

    Monomial pivot = *std::find_if(f.terms().rbegin(), f.terms().rend(),
                                   [&](const Monomial& m) { return m.word.vars[0].twist == k; });
    const Element a = pivot.scalar * alg.basis_element(pivot.word.labels[0]);
    const Element ar = a * r;

    // Image of x^{σ^i} under z with σ^k(z) = r·a·x^{σ^k}: apply σ^{i-k}, which
    // reverses products when i - k is odd.
    auto image = [&](const Monomial& m) {
        const auto x = m.word.vars[0];
        const long shift = static_cast<long>(x.twist) - static_cast<long>(k);
        const Element sr = sigma.apply(shift, r);
        const Element sa = sigma.apply(shift, a);
        const Element left = alg.basis_element(m.word.labels[0]);
        const Element right = alg.basis_element(m.word.labels[1]);
        if (shift % 2 == 0) return RawMonomial{m.scalar, {left * sr * sa, right}, {x}};
        return RawMonomial{m.scalar, {left, sa * sr * right}, {x}};
    };
    auto scaled = [&](const Monomial& m) {
        return RawMonomial{-m.scalar, {ar * alg.basis_element(m.word.labels[0]), alg.basis_element(m.word.labels[1])},
                           {m.word.vars[0]}};
    };

    std::vector<RawMonomial> raw;
    for (const auto& m : f.terms()) {
        raw.push_back(image(m));
        raw.push_back(scaled(m));
    }
    TwistReduction out{gp_normalize(ambient, raw), k, pivot, false, 0};

    const RawMonomial pivot_images[] = {image(pivot), scaled(pivot)};
    out.pivot_cancelled = gp_normalize(ambient, pivot_images).is_zero();
    out.residual_top_terms = static_cast<std::size_t>(std::count_if(
        out.result.terms().begin(), out.result.terms().end(), [&](const Monomial& m) {
            return m.word.vars[0].twist == k;
        }));
    return out;
}

GenPoly specialize_variable(const GenPoly& f, std::uint32_t var, const std::vector<Element>& values) {
    const auto& ambient = f.ambient();
    if (values.size() != ambient->m + 1) {
        fail(ErrorKind::ArityMismatch, "expected " + std::to_string(ambient->m + 1) + " values, got " +
                                           std::to_string(values.size()));
    }
    for (const auto& v : values) {
        if (!same_algebra(v.algebra(), ambient->algebra)) {
            fail(ErrorKind::DescriptorMismatch, "value from " + v.algebra()->name());
        }
    }
    std::vector<RawMonomial> raw;
    raw.reserve(f.size());
    for (const auto& t : f.terms()) {
        raw.push_back(fold_constants(f.algebra(), t, [&](std::size_t, const TwistedIndeterminate& x) {
            return x.var == var ? std::optional<Element>(values[x.twist]) : std::nullopt;
        }));
    }
    return gp_normalize(ambient, raw);
}

}  // namespace gri
