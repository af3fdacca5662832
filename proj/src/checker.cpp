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

#include "gri/checker.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gri/catalog_data.hpp"

namespace gri {

std::string to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::Holds:
            return "holds";
        case Outcome::Refuted:
            return "refuted";
        case Outcome::ZeroPolynomial:
            return "zero_polynomial";
        case Outcome::Inconclusive:
            return "inconclusive";
    }
    return "inconclusive";
}

std::string to_string(CheckMode mode) { return mode == CheckMode::Exhaustive ? "exhaustive" : "randomized"; }

// ------------------------------------------------------ compiled evaluator

namespace {

// Arithmetic of a finite-field algebra on residue vectors. Products are
// accumulated in 64 bits; p < 2^16 keeps every partial sum in range.
struct ModPKernel {
    std::uint32_t p;
    std::size_t d;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> table;  // [a*d + b] -> (c, coeff)
    std::vector<std::vector<std::uint32_t>> sigma_powers;                      // row-major d x d

    static constexpr std::uint32_t kMaxPrime = 1u << 16;

    static std::uint32_t residue(const Scalar& s) { return s.as_prime().residue(); }

    ModPKernel(const Ambient& ambient) : p(ambient.algebra->field().characteristic()), d(ambient.algebra->dimension()) {
        const auto& alg = *ambient.algebra;
        table.resize(d * d);
        for (std::size_t a = 0; a < d; ++a) {
            for (std::size_t b = 0; b < d; ++b) {
                for (const auto& t : alg.product(a, b)) table[a * d + b].emplace_back(t.index, residue(t.coeff));
            }
        }
        std::vector<std::uint32_t> power(d * d, 0);
        for (std::size_t r = 0; r < d; ++r) power[r * d + r] = 1;
        sigma_powers.push_back(power);
        if (ambient.sigma) {
            const auto& m = ambient.sigma->matrix();
            for (std::uint32_t i = 1; i <= ambient.m; ++i) {
                std::vector<std::uint32_t> next(d * d, 0);
                for (std::size_t r = 0; r < d; ++r) {
                    for (std::size_t c = 0; c < d; ++c) {
                        std::uint64_t acc = 0;
                        for (std::size_t k = 0; k < d; ++k) acc += std::uint64_t{residue(m[r][k])} * power[k * d + c] % p;
                        next[r * d + c] = static_cast<std::uint32_t>(acc % p);
                    }
                }
                power = next;
                sigma_powers.push_back(power);
            }
        }
    }

    void mul(const std::uint32_t* x, const std::uint32_t* y, std::uint32_t* out, std::uint64_t* acc) const {
        std::fill(acc, acc + d, 0);
        for (std::size_t a = 0; a < d; ++a) {
            if (!x[a]) continue;
            for (std::size_t b = 0; b < d; ++b) {
                if (!y[b]) continue;
                const std::uint64_t xy = std::uint64_t{x[a]} * y[b];
                for (const auto& [c, k] : table[a * d + b]) acc[c] += xy * k;
            }
            for (std::size_t c = 0; c < d; ++c) acc[c] %= p;
        }
        for (std::size_t c = 0; c < d; ++c) out[c] = static_cast<std::uint32_t>(acc[c]);
    }

    void apply_sigma(std::uint32_t power, const std::uint32_t* x, std::uint32_t* out) const {
        const auto& m = sigma_powers[power];
        for (std::size_t r = 0; r < d; ++r) {
            std::uint64_t acc = 0;
            for (std::size_t c = 0; c < d; ++c) acc += std::uint64_t{m[r * d + c]} * x[c];
            out[r] = static_cast<std::uint32_t>(acc % p);
        }
    }
};

}  // namespace

struct CompiledPoly::Impl {
    struct Node {
        std::int32_t parent;  // -1 for the leading label
        std::uint32_t key;    // leading label, or factor index
    };

    AmbientPtr ambient;
    std::vector<TwistedIndeterminate> xs;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;  // (index into xs, label)
    std::vector<Node> nodes;                                       // parents precede children
    std::vector<std::pair<std::uint32_t, Scalar>> leaves;
    std::vector<std::uint32_t> leaf_residues;
    std::optional<ModPKernel> modp;

    explicit Impl(const GenPoly& f) : ambient(f.ambient()) {
        std::map<TwistedIndeterminate, std::uint32_t> x_index;
        for (const auto& t : f.terms()) {
            for (const auto& x : t.word.vars) x_index.emplace(x, 0);
        }
        for (auto& [x, idx] : x_index) {
            idx = static_cast<std::uint32_t>(xs.size());
            xs.push_back(x);
        }
        std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> factor_index;
        std::map<std::pair<std::int32_t, std::uint32_t>, std::uint32_t> children;
        auto child = [&](std::int32_t parent, std::uint32_t key) {
            auto [it, inserted] = children.try_emplace({parent, key}, static_cast<std::uint32_t>(nodes.size()));
            if (inserted) nodes.push_back({parent, key});
            return static_cast<std::int32_t>(it->second);
        };
        for (const auto& t : f.terms()) {
            std::int32_t node = child(-1, t.word.labels[0]);
            for (std::size_t s = 0; s < t.word.vars.size(); ++s) {
                const std::pair<std::uint32_t, std::uint32_t> key{x_index.at(t.word.vars[s]), t.word.labels[s + 1]};
                auto [it, inserted] = factor_index.try_emplace(key, static_cast<std::uint32_t>(factors.size()));
                if (inserted) factors.push_back(key);
                node = child(node, it->second);
            }
            leaves.emplace_back(static_cast<std::uint32_t>(node), t.scalar);
        }
        const Field& field = ambient->algebra->field();
        if (field.is_finite() && field.characteristic() < ModPKernel::kMaxPrime && ambient->algebra->dimension() <= 64) {
            modp.emplace(*ambient);
            for (const auto& [node, s] : leaves) leaf_residues.push_back(ModPKernel::residue(s));
        }
    }

    // Scratch buffers for one thread of residue evaluation.
    struct Scratch {
        std::vector<std::uint32_t> xvals, factor_vals, node_vals, result;
        std::vector<std::uint64_t> acc;
    };

    Scratch scratch() const {
        const std::size_t d = ambient->algebra->dimension();
        return {std::vector<std::uint32_t>(xs.size() * d), std::vector<std::uint32_t>(factors.size() * d),
                std::vector<std::uint32_t>(nodes.size() * d), std::vector<std::uint32_t>(d),
                std::vector<std::uint64_t>(d)};
    }

    // Expects s.xvals filled with σ^twist of each assigned value.
    const std::vector<std::uint32_t>& eval_residues(Scratch& s) const {
        const auto& k = *modp;
        const std::size_t d = k.d;
        for (std::size_t f = 0; f < factors.size(); ++f) {
            const auto [xi, label] = factors[f];
            const std::uint32_t* x = &s.xvals[xi * d];
            std::fill(s.acc.begin(), s.acc.end(), 0);
            for (std::size_t a = 0; a < d; ++a) {
                if (!x[a]) continue;
                for (const auto& [c, coeff] : k.table[a * d + label]) s.acc[c] += std::uint64_t{x[a]} * coeff;
            }
            for (std::size_t c = 0; c < d; ++c) s.factor_vals[f * d + c] = static_cast<std::uint32_t>(s.acc[c] % k.p);
        }
        for (std::size_t n = 0; n < nodes.size(); ++n) {
            std::uint32_t* out = &s.node_vals[n * d];
            if (nodes[n].parent < 0) {
                std::fill(out, out + d, 0);
                out[nodes[n].key] = 1;
            } else {
                k.mul(&s.node_vals[nodes[n].parent * d], &s.factor_vals[nodes[n].key * d], out, s.acc.data());
            }
        }
        std::fill(s.acc.begin(), s.acc.end(), 0);
        for (std::size_t l = 0; l < leaves.size(); ++l) {
            const std::uint32_t* v = &s.node_vals[leaves[l].first * d];
            for (std::size_t c = 0; c < d; ++c) s.acc[c] = (s.acc[c] + std::uint64_t{leaf_residues[l]} * v[c]) % k.p;
        }
        for (std::size_t c = 0; c < d; ++c) s.result[c] = static_cast<std::uint32_t>(s.acc[c]);
        return s.result;
    }

    void load_point(const Point& point, Scratch& s) const {
        const std::size_t d = modp->d;
        std::vector<std::uint32_t> raw(d);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const Element& v = lookup(point, xs[i].var);
            for (std::size_t c = 0; c < d; ++c) raw[c] = ModPKernel::residue(v[c]);
            modp->apply_sigma(xs[i].twist, raw.data(), &s.xvals[i * d]);
        }
    }

    const Element& lookup(const Point& point, std::uint32_t var) const {
        auto it = point.find(var);
        if (it == point.end()) fail(ErrorKind::MissingAssignment, "no value for x" + std::to_string(var));
        if (!same_algebra(it->second.algebra(), ambient->algebra)) {
            fail(ErrorKind::DescriptorMismatch, "value for x" + std::to_string(var) + " from " +
                                                    it->second.algebra()->name());
        }
        return it->second;
    }

    Element eval_generic(const Point& point) const {
        const auto& alg = *ambient->algebra;
        std::vector<Element> xvals;
        for (const auto& x : xs) {
            const Element& v = lookup(point, x.var);
            xvals.push_back(x.twist == 0 ? v : ambient->sigma->apply(x.twist, v));
        }
        std::vector<Element> factor_vals;
        for (const auto& [xi, label] : factors) factor_vals.push_back(xvals[xi] * alg.basis_element(label));
        std::vector<Element> node_vals;
        node_vals.reserve(nodes.size());
        for (const auto& n : nodes) {
            if (n.parent < 0) {
                node_vals.push_back(alg.basis_element(n.key));
            } else {
                node_vals.push_back(node_vals[n.parent] * factor_vals[n.key]);
            }
        }
        Element total = alg.zero();
        for (const auto& [node, s] : leaves) total += s * node_vals[node];
        return total;
    }

    Element evaluate(const Point& point) const {
        if (!modp) return eval_generic(point);
        Scratch s = scratch();
        load_point(point, s);
        const auto& r = eval_residues(s);
        const Field field = ambient->algebra->field();
        std::vector<Scalar> coords;
        for (auto c : r) coords.push_back(field.from_int(c));
        return ambient->algebra->from_coords(std::move(coords));
    }
};

CompiledPoly::CompiledPoly(const GenPoly& f) : impl_(std::make_unique<Impl>(f)) {}
CompiledPoly::~CompiledPoly() = default;
CompiledPoly::CompiledPoly(CompiledPoly&&) noexcept = default;
CompiledPoly& CompiledPoly::operator=(CompiledPoly&&) noexcept = default;

Element CompiledPoly::evaluate(const Point& point) const { return impl_->evaluate(point); }

bool CompiledPoly::vanishes_at(const Point& point) const { return impl_->evaluate(point).is_zero(); }

// ------------------------------------------------------------ engines

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

// Smallest index in [0, total) for which `fails(begin, end)` reports a
// failure. Work is handed out in ascending chunks and a chunk starting past
// the best failure so far is skipped, so the answer does not depend on the
// number of threads.
template <class ScanFactory>
std::uint64_t first_failure(std::uint64_t total, unsigned threads, ScanFactory&& make_scan) {
    threads = std::max(1u, threads);
    const std::uint64_t chunk = std::clamp<std::uint64_t>(total / (threads * 16ull), 1, 4096);
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{kNone};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        try {
            auto scan = make_scan();  // per-thread state
            for (;;) {
                const std::uint64_t begin = next.fetch_add(chunk);
                if (begin >= total || begin > best.load()) return;
                const std::uint64_t end = std::min(total, begin + chunk);
                const std::uint64_t hit = scan(begin, end);
                if (hit != kNone) {
                    std::uint64_t cur = best.load();
                    while (hit < cur && !best.compare_exchange_weak(cur, hit)) {
                    }
                    return;
                }
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            best.store(0);
        }
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);
    return best.load();
}

std::uint64_t enumeration_size(const AlgebraDescriptor& alg, std::size_t nvars, std::uint64_t budget) {
    const auto card = alg.cardinality();
    if (!card) fail(ErrorKind::ExhaustiveTooLarge, alg.name() + " is infinite; use randomized mode");
    std::uint64_t total = 1;
    for (std::size_t v = 0; v < nvars; ++v) {
        if (total > budget / *card) {
            fail(ErrorKind::ExhaustiveTooLarge, std::to_string(*card) + "^" + std::to_string(nvars) +
                                                    " points exceed the budget of " + std::to_string(budget));
        }
        total *= *card;
    }
    return total;
}

// Element indices of tuple t; the first variable is the most significant digit.
std::vector<std::uint64_t> tuple_digits(std::uint64_t t, std::size_t nvars, std::uint64_t card) {
    std::vector<std::uint64_t> digits(nvars);
    for (std::size_t v = nvars; v-- > 0;) {
        digits[v] = t % card;
        t /= card;
    }
    return digits;
}

Point exhaustive_point(const AlgebraDescriptor& alg, const std::vector<std::uint32_t>& vars, std::uint64_t t) {
    const auto digits = tuple_digits(t, vars.size(), *alg.cardinality());
    Point p;
    for (std::size_t v = 0; v < vars.size(); ++v) p.emplace(vars[v], alg.enumerate(digits[v]));
    return p;
}

Point random_point(const AlgebraDescriptor& alg, const std::vector<std::uint32_t>& vars, std::uint64_t seed,
                   std::uint64_t k, int box) {
    Rng rng = stream(seed, k);
    Point p;
    for (auto v : vars) p.emplace(v, alg.random_element(rng, box));
    return p;
}

void finish_refuted(Verdict& v, const GenPoly& f, Point witness) {
    // The witness is re-evaluated by the reference evaluator.
    Element value = gp_eval(f, witness);
    if (value.is_zero()) throw std::logic_error("compiled and reference evaluation disagree at a witness");
    v.outcome = Outcome::Refuted;
    v.witness = std::move(witness);
    v.witness_value = std::move(value);
}

}  // namespace

Verdict check_gpi(const GenPoly& f, const CheckOptions& options) {
    const auto start = Clock::now();
    Verdict v;
    v.mode = options.mode;
    v.seed = options.mode == CheckMode::Randomized ? options.seed : 0;
    const auto& alg = f.algebra();
    const std::set<std::uint32_t> var_set = f.variables();
    const std::vector<std::uint32_t> vars(var_set.begin(), var_set.end());

    if (options.mode == CheckMode::Exhaustive) {
        v.samples = enumeration_size(alg, vars.size(), options.budget);
    } else {
        v.samples = options.samples;
    }
    if (f.is_zero()) {
        v.outcome = Outcome::ZeroPolynomial;
        v.elapsed_ms = elapsed_ms(start);
        return v;
    }

    const CompiledPoly compiled(f);
    const auto& impl = *compiled.impl_;
    std::uint64_t hit = kNone;

    if (options.mode == CheckMode::Exhaustive && impl.modp) {
        // Every element and its twists as residue vectors, indexed by enumeration order.
        const std::uint64_t card = *alg.cardinality();
        const std::size_t d = alg.dimension();
        const std::uint32_t m = f.ambient()->m;
        const bool tabulate = card <= (1u << 16);
        std::vector<std::uint32_t> table;
        if (tabulate) {
            table.resize(card * (m + 1) * d);
            std::vector<std::uint32_t> raw(d);
            for (std::uint64_t e = 0; e < card; ++e) {
                std::uint64_t rest = e;
                for (std::size_t c = d; c-- > 0;) {
                    raw[c] = static_cast<std::uint32_t>(rest % impl.modp->p);
                    rest /= impl.modp->p;
                }
                for (std::uint32_t i = 0; i <= m; ++i) impl.modp->apply_sigma(i, raw.data(), &table[(e * (m + 1) + i) * d]);
            }
        }
        std::vector<std::size_t> slot(impl.xs.size());
        for (std::size_t i = 0; i < impl.xs.size(); ++i) {
            slot[i] = static_cast<std::size_t>(std::find(vars.begin(), vars.end(), impl.xs[i].var) - vars.begin());
        }
        hit = first_failure(v.samples, options.threads, [&] {
            return [&, s = impl.scratch()](std::uint64_t begin, std::uint64_t end) mutable {
                for (std::uint64_t t = begin; t < end; ++t) {
                    if (tabulate) {
                        const auto digits = tuple_digits(t, vars.size(), card);
                        for (std::size_t i = 0; i < impl.xs.size(); ++i) {
                            const std::uint32_t* src = &table[(digits[slot[i]] * (m + 1) + impl.xs[i].twist) * d];
                            std::copy(src, src + d, &s.xvals[i * d]);
                        }
                    } else {
                        impl.load_point(exhaustive_point(alg, vars, t), s);
                    }
                    const auto& r = impl.eval_residues(s);
                    if (std::any_of(r.begin(), r.end(), [](std::uint32_t c) { return c != 0; })) return t;
                }
                return kNone;
            };
        });
        v.points_tested = hit == kNone ? v.samples : hit + 1;
        if (hit != kNone) finish_refuted(v, f, exhaustive_point(alg, vars, hit));
    } else {
        auto point_at = [&](std::uint64_t t) {
            return options.mode == CheckMode::Exhaustive ? exhaustive_point(alg, vars, t)
                                                         : random_point(alg, vars, options.seed, t, options.box);
        };
        hit = first_failure(v.samples, options.threads, [&] {
            return [&](std::uint64_t begin, std::uint64_t end) {
                for (std::uint64_t t = begin; t < end; ++t) {
                    if (!compiled.vanishes_at(point_at(t))) return t;
                }
                return kNone;
            };
        });
        v.points_tested = hit == kNone ? v.samples : hit + 1;
        if (hit != kNone) finish_refuted(v, f, point_at(hit));
    }
    if (hit == kNone) v.outcome = v.samples > 0 ? Outcome::Holds : Outcome::Inconclusive;
    v.elapsed_ms = elapsed_ms(start);
    return v;
}

Verdict check_gri(const RatExpr& e, const CheckOptions& options) {
    const auto start = Clock::now();
    Verdict v;
    v.mode = options.mode;
    v.seed = options.mode == CheckMode::Randomized ? options.seed : 0;
    const auto& alg = *e.ambient()->algebra;
    const std::set<std::uint32_t> var_set = e.variables();
    const std::vector<std::uint32_t> vars(var_set.begin(), var_set.end());

    auto judge = [&](Point p) {
        auto value = eval_rat(e, p);
        if (!value) {
            ++v.skipped_undefined;
            return false;
        }
        ++v.points_tested;
        if (value->is_zero()) return false;
        v.outcome = Outcome::Refuted;
        v.witness = std::move(p);
        v.witness_value = std::move(*value);
        return true;
    };

    if (options.mode == CheckMode::Exhaustive) {
        v.samples = enumeration_size(alg, vars.size(), options.budget);
        for (std::uint64_t t = 0; t < v.samples; ++t) {
            if (judge(exhaustive_point(alg, vars, t))) break;
        }
    } else {
        v.samples = options.samples;
        // Draw k is a pure function of (seed, k), exactly as in sample_defined_points.
        const std::uint64_t max_draws = 100 * options.samples;
        for (std::uint64_t k = 0; k < max_draws && v.points_tested < options.samples; ++k) {
            if (judge(random_point(alg, vars, options.seed, k, options.box))) break;
        }
    }
    if (v.outcome != Outcome::Refuted) v.outcome = v.points_tested > 0 ? Outcome::Holds : Outcome::Inconclusive;
    v.elapsed_ms = elapsed_ms(start);
    return v;
}

Element linear_nonvanishing(const std::vector<Element>& a, const std::vector<Element>& b, std::uint64_t seed,
                            std::size_t max_tries) {
    if (a.empty() || a.size() != b.size()) fail(ErrorKind::InvalidInput, "need matching nonempty coefficient lists");
    const auto algebra = a[0].algebra();
    for (const auto& x : b) {
        if (x.is_zero()) fail(ErrorKind::InvalidInput, "right coefficients must be nonzero");
    }
    if (f_rank(a) != a.size()) fail(ErrorKind::InvalidInput, "left coefficients are linearly dependent");

    auto value = [&](const Element& r) {
        Element total = algebra->zero();
        for (std::size_t j = 0; j < a.size(); ++j) total += a[j] * r * b[j];
        return total;
    };
    std::size_t tries = 0;
    for (std::size_t e = 0; e < algebra->dimension() && tries < max_tries; ++e, ++tries) {
        Element r = algebra->basis_element(e);
        if (!value(r).is_zero()) return r;
    }
    for (std::uint64_t k = 0; tries < max_tries; ++k, ++tries) {
        Rng rng = stream(seed, k);
        Element r = algebra->random_element(rng);
        if (!value(r).is_zero()) return r;
    }
    fail(ErrorKind::NoneFound, "no r with nonzero value in " + std::to_string(max_tries) + " tries");
}

// ------------------------------------------------------------- pipeline

PipelineReport specialize_pipeline(const GenPoly& f, std::uint64_t seed, std::size_t trials) {
    PipelineReport report;
    if (f.is_zero()) {
        report.trivial = true;
        return report;
    }
    if (!is_sigma_linear(f)) fail(ErrorKind::InvalidInput, f.to_string() + " is not blended and linear");

    const auto& ambient = f.ambient();
    const auto& alg = *ambient->algebra;
    const std::uint32_t m = ambient->m;
    const std::set<std::uint32_t> var_set = f.variables();
    const std::vector<std::uint32_t> vars(var_set.begin(), var_set.end());
    std::set<std::uint32_t> vanished;

    auto coupled = [&](const Element& r) {
        std::vector<Element> values{r};
        for (std::uint32_t i = 1; i <= m; ++i) values.push_back(ambient->sigma->apply(i, r));
        return values;
    };

    for (std::size_t s = 0; s < vars.size(); ++s) {
        const std::uint32_t var = vars[s];
        PipelineStage stage;
        stage.var = var;
        stage.status = PipelineStage::Status::Vanished;

        // Elements drawn per trial: one per later variable, m+1 per vanished one.
        std::size_t slots = 0;
        for (auto u : vars) {
            if (u != var) slots += vanished.count(u) ? m + 1 : 1;
        }
        std::optional<std::uint64_t> combos = 1;
        const auto card = alg.cardinality();
        for (std::size_t k = 0; k < slots && combos; ++k) {
            if (!card || *combos > 4096 / *card) {
                combos.reset();
            } else {
                *combos *= *card;
            }
        }
        stage.exhaustive = combos.has_value();
        const std::uint64_t total = stage.exhaustive ? *combos : trials;

        for (std::uint64_t t = 0; t < total; ++t) {
            Rng rng = stream(splitmix64(seed + s), t);
            std::vector<Element> draws;
            auto digits = stage.exhaustive ? tuple_digits(t, slots, *card) : std::vector<std::uint64_t>{};
            for (std::size_t k = 0; k < slots; ++k) {
                draws.push_back(stage.exhaustive ? alg.enumerate(digits[k]) : alg.random_element(rng));
            }
            GenPoly g = f;
            std::size_t next = 0;
            for (auto u : vars) {
                if (u == var) continue;
                if (vanished.count(u)) {
                    std::vector<Element> values(draws.begin() + next, draws.begin() + next + m + 1);
                    next += m + 1;
                    g = specialize_variable(g, u, values);
                } else {
                    g = specialize_variable(g, u, coupled(draws[next++]));
                }
            }
            ++stage.trials;
            if (g.is_zero()) continue;

            stage.status = PipelineStage::Status::Nonzero;
            if (g.max_twist() >= 1) {
                stage.reduction = reduce_twist(g, alg.random_element(rng));
            } else {
                std::map<std::uint32_t, Element> right;
                for (const auto& term : g.terms()) {
                    auto it = right.try_emplace(term.word.labels[0], alg.zero()).first;
                    it->second += term.scalar * alg.basis_element(term.word.labels[1]);
                }
                std::vector<Element> as, bs;
                for (const auto& [label, b] : right) {
                    as.push_back(alg.basis_element(label));
                    bs.push_back(b);
                }
                stage.linear_witness = linear_nonvanishing(as, bs, splitmix64(seed + s));
            }
            stage.specialization = std::move(g);
            report.handed_off = true;
            report.stages.push_back(std::move(stage));
            return report;
        }
        vanished.insert(var);
        report.stages.push_back(std::move(stage));
    }

    // Every stage vanished: decouple all twists into separate variables.
    auto plain = make_ambient(ambient->algebra);
    std::vector<Monomial> terms = f.terms();
    for (std::size_t s = 0; s < vars.size(); ++s) {
        for (std::uint32_t i = 0; i <= m; ++i) {
            report.decoupled_vars[static_cast<std::uint32_t>(s * (m + 1) + i + 1)] = {vars[s], i};
        }
    }
    for (auto& t : terms) {
        for (auto& x : t.word.vars) {
            const auto s = static_cast<std::uint32_t>(std::find(vars.begin(), vars.end(), x.var) - vars.begin());
            x = {s * (m + 1) + x.twist + 1, 0};
        }
    }
    report.sigma_free = GenPoly::from_terms(plain, std::move(terms));
    return report;
}

// -------------------------------------------------------------- catalog

namespace {

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) out.push_back(trim(item));
    return out;
}

}  // namespace

std::vector<CatalogEntry> catalog_entries() {
    std::vector<CatalogEntry> entries;
    std::istringstream in(detail::kCatalogText);
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto fields = split(line, '|');
        if (fields.size() != 4) throw std::logic_error("malformed catalog line: " + line);
        CatalogEntry entry{fields[0], fields[3], fields[1], {}};
        for (const auto& item : split(fields[2], ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) throw std::logic_error("malformed expectation: " + item);
            entry.expected[trim(item.substr(0, eq))] = trim(item.substr(eq + 1));
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

CatalogEntry catalog(const std::string& name) {
    for (auto& entry : catalog_entries()) {
        if (entry.name == name) return entry;
    }
    fail(ErrorKind::UnknownEntry, "no catalog entry named '" + name + "'");
}

}  // namespace gri
