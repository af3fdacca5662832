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

#ifndef GRI_CHECKER_HPP
#define GRI_CHECKER_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gri/rational.hpp"
#include "gri/transforms.hpp"

namespace gri {

enum class Outcome { Holds, Refuted, ZeroPolynomial, Inconclusive };
enum class CheckMode { Exhaustive, Randomized };

std::string to_string(Outcome outcome);
std::string to_string(CheckMode mode);

struct CheckOptions {
    CheckMode mode = CheckMode::Randomized;
    std::size_t samples = 1000;
    std::uint64_t seed = kDefaultSeed;
    /// Exhaustive mode refuses enumerations with more points than this.
    std::uint64_t budget = std::uint64_t{1} << 24;
    unsigned threads = 1;
    int box = kDefaultBox;
};

struct Verdict {
    Outcome outcome = Outcome::Inconclusive;
    CheckMode mode = CheckMode::Randomized;
    /// Requested samples (randomized) or the size of the enumeration (exhaustive).
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    /// For Refuted: the lexicographically first (exhaustive) or lowest-index
    /// (randomized) failing point and its value there.
    std::optional<Point> witness;
    std::optional<Element> witness_value;
    /// Points evaluated up to and including the witness, or all of them.
    std::uint64_t points_tested = 0;
    std::uint64_t skipped_undefined = 0;
    double elapsed_ms = 0;
};

/*
 * Evaluates a GenPoly at many points. Words are stored as a prefix tree so
 * that shared prefixes are multiplied once per point; over prime fields the
 * arithmetic runs on machine integers. The reference gp_eval is the oracle
 * for this class.
 */
class CompiledPoly {
  public:
    explicit CompiledPoly(const GenPoly& f);
    ~CompiledPoly();
    CompiledPoly(CompiledPoly&&) noexcept;
    CompiledPoly& operator=(CompiledPoly&&) noexcept;

    Element evaluate(const Point& point) const;
    bool vanishes_at(const Point& point) const;

    struct Impl;

  private:
    std::unique_ptr<Impl> impl_;
    friend Verdict check_gpi(const GenPoly& f, const CheckOptions& options);
};

/// Throws ExhaustiveTooLarge when exhaustive mode is requested over an
/// infinite field or beyond the budget.
Verdict check_gpi(const GenPoly& f, const CheckOptions& options);
inline Verdict check_gpi(const GenPoly& f) { return check_gpi(f, CheckOptions{}); }

/// Undefined points are skipped and counted. Randomized mode collects
/// `samples` defined points; a run with no defined point is Inconclusive.
Verdict check_gri(const RatExpr& e, const CheckOptions& options = {});

/// r with Σ a_j·r·b_j != 0, trying basis elements before seeded random ones.
/// Throws InvalidInput when the a_j are dependent or some b_j is zero, and
/// NoneFound when the search budget runs out.
Element linear_nonvanishing(const std::vector<Element>& a, const std::vector<Element>& b,
                            std::uint64_t seed = kDefaultSeed, std::size_t max_tries = 256);

// ------------------------------------------------------------- pipeline

struct PipelineStage {
    enum class Status { Nonzero, Vanished };

    std::uint32_t var = 0;
    Status status = Status::Vanished;
    /// Specializations tried for this stage.
    std::size_t trials = 0;
    /// Vanishing was checked over every assignment of the other variables
    /// (finite algebras) rather than on samples.
    bool exhaustive = false;
    /// The nonzero one-variable polynomial, and what the handoff produced.
    std::optional<GenPoly> specialization;
    std::optional<TwistReduction> reduction;
    std::optional<Element> linear_witness;
};

struct PipelineReport {
    std::vector<PipelineStage> stages;
    /// The input was the zero polynomial.
    bool trivial = false;
    /// Some stage produced a nonzero one-variable polynomial.
    bool handed_off = false;
    /// When every stage vanished: f with each twist x_j^{σ^i} renamed to its
    /// own variable, a polynomial without σ.
    std::optional<GenPoly> sigma_free;
    /// New variable -> (source variable, twist) for sigma_free.
    std::map<std::uint32_t, std::pair<std::uint32_t, std::uint32_t>> decoupled_vars;
};

/// Requires f blended and linear in every variable (InvalidInput otherwise).
PipelineReport specialize_pipeline(const GenPoly& f, std::uint64_t seed = kDefaultSeed, std::size_t trials = 8);

// -------------------------------------------------------------- catalog

struct CatalogEntry {
    std::string name;
    std::string expression;
    /// "any" or "sigma" (needs an anti-automorphism with m >= 1).
    std::string requirement;
    /// Algebra name ("m2f2", "hamilton") -> "holds" | "refuted".
    std::map<std::string, std::string> expected;

    bool needs_sigma() const { return requirement == "sigma"; }
};

std::vector<CatalogEntry> catalog_entries();
/// Throws UnknownEntry.
CatalogEntry catalog(const std::string& name);

}  // namespace gri

#endif
