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

#ifndef GRI_IO_HPP
#define GRI_IO_HPP

#include <string>

#include "gri/checker.hpp"
#include "json.hpp"

namespace gri {

using Json = nlohmann::ordered_json;

// ------------------------------------------------------------ configuration

/*
 * Algebra specs, inline or as a path to a JSON file:
 *
 *   hamilton          (-1,-1 / Q)
 *   quat:a,b          (a,b / Q)
 *   quat:a,b:p        (a,b / F_p)
 *   m<n>f<p>, m<n>q   M_n(F_p), M_n(Q)
 *   f<p>, q           the base field itself
 *
 * JSON: {"kind": "quaternion", "a": "-1", "b": "-1", "field": "Q"},
 * {"kind": "matrix", "n": 2, "field": "Fp", "p": 2}, {"kind": "scalar", ...}
 * or {"kind": "custom", "field": ..., "labels": [...], "table": [[[...]]]}
 * with table[a][b] the coordinates of e_a * e_b as field-element strings.
 */
AlgebraPtr algebra_from_spec(const std::string& spec);
AlgebraPtr algebra_from_json(const Json& j);

/*
 * Sigma specs: none, default, conjugation, transpose, identity, or a path to
 * a JSON file holding {"name": "conjugation"} or {"matrix": [[...], ...]}
 * (row-major, field-element strings), optionally with "conjugate_by": an
 * element in the expression grammar. "default" is conjugation for
 * quaternion algebras, transpose for matrix algebras and identity for the
 * base field; it is none for custom algebras.
 */
SigmaPtr sigma_from_spec(const std::string& spec, const AlgebraPtr& algebra);
SigmaPtr sigma_from_json(const Json& j, const AlgebraPtr& algebra);

/// "x1=j", "x2=[[1,0],[0,1]]" -> point. Throws ParseError.
Point parse_point(const std::vector<std::string>& assignments, const AlgebraPtr& algebra);

// ----------------------------------------------------------- serialization

Json to_json(const Element& x);
Json to_json(const Point& p);
/// {"scalar": "2", "word": ["i", "x1^s1", "j"]}: labels and indeterminates
/// alternate, starting and ending with a label.
Json to_json(const Monomial& m, const AlgebraDescriptor& algebra);
/// A list of monomial records.
Json to_json(const GenPoly& f);
GenPoly genpoly_from_json(const Json& j, const AmbientPtr& ambient);

Json to_json(const Verdict& v);
/// Steps are listed only when `with_steps` is set.
Json to_json(const BlendTrace& t, bool with_steps);
Json to_json(const MultilinearizeReport& r);
Json to_json(const TruncatedSeries& s);
Json to_json(const TwistReduction& r);
Json to_json(const GpiExtraction& e, std::size_t order);
Json to_json(const CatalogEntry& e);
Json metrics_json(const GenPoly& f);

}  // namespace gri

#endif
