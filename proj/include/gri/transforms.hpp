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

#ifndef GRI_TRANSFORMS_HPP
#define GRI_TRANSFORMS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gri/genpoly.hpp"

namespace gri {

struct BlendStep {
    std::uint32_t var;
    GenPoly removed;  // f_{2j-1}: the monomials without x_var
    GenPoly kept;     // f_{2j}
};

struct BlendTrace {
    std::vector<BlendStep> steps;
    GenPoly result;
};

/// Splits off the monomials missing each unblended variable of f, in
/// ascending variable order. Throws ZeroPolynomial on zero input and
/// BlendCollapsed when nothing survives.
BlendTrace blend(const GenPoly& f);

/// The same steps without the BlendCollapsed check; result may be zero.
BlendTrace blend_trace(const GenPoly& f);

/// f(x_var + x_fresh) - f(x_var) - f(x_fresh), substituting at every twist.
GenPoly delta(const GenPoly& f, std::uint32_t var, std::uint32_t fresh);

struct MultilinearizeReport {
    GenPoly result;
    /// fresh variable -> (source variable, copy number starting at 1)
    std::map<std::uint32_t, std::pair<std::uint32_t, std::uint32_t>> fresh_vars;
    /// source variable -> occurrences in the chosen monomial of maximal height
    std::map<std::uint32_t, std::size_t> multidegrees;
    /// The monomial the multidegrees were read from.
    Monomial pivot;
};

MultilinearizeReport multilinearize(const GenPoly& f);

/// Homogeneous components of f(r + x·t) in the central variable t: entry i
/// is the coefficient of t^i, for i = 0 .. deg(f). Entry 0 is the constant
/// f(r).
std::vector<GenPoly> expand_at(const GenPoly& f, const Point& r);

struct TwistReduction {
    GenPoly result;
    std::uint32_t top_twist = 0;
    Monomial pivot;
    /// Both images of the pivot coincide, so it is absent from the result.
    bool pivot_cancelled = false;
    /// Terms of the result still carrying the top twist.
    std::size_t residual_top_terms = 0;
};

/// For f linear in one variable x with top twist k >= 1 and pivot term
/// a·x^{σ^k}·b, returns f(z) - a·r·f where σ^k(z) = r·a·x^{σ^k}.
TwistReduction reduce_twist(const GenPoly& f, const Element& r);

/// Replaces x_var^{σ^i} by values[i] independently for i = 0 .. m.
GenPoly specialize_variable(const GenPoly& f, std::uint32_t var, const std::vector<Element>& values);

}  // namespace gri

#endif
