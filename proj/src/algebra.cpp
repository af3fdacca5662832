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

#include "gri/algebra.hpp"

#include <utility>

namespace gri {

// -------------------------------------------------------------- descriptor

AlgebraDescriptor::AlgebraDescriptor(Kind kind, Field field, std::vector<std::string> labels)
    : kind_(kind), field_(field), labels_(std::move(labels)) {}

void AlgebraDescriptor::set_table(const std::vector<std::vector<std::vector<Scalar>>>& table) {
    const std::size_t d = labels_.size();
    if (table.size() != d) fail(ErrorKind::InvalidAlgebra, "structure-constant table has wrong size");
    table_.assign(d * d, {});
    for (std::size_t a = 0; a < d; ++a) {
        if (table[a].size() != d) fail(ErrorKind::InvalidAlgebra, "structure-constant table has wrong size");
        for (std::size_t b = 0; b < d; ++b) {
            const auto& coords = table[a][b];
            if (coords.size() != d) fail(ErrorKind::InvalidAlgebra, "structure-constant entry has wrong length");
            for (std::size_t c = 0; c < d; ++c) {
                if (coords[c].field() != field_) fail(ErrorKind::FieldMismatch, "structure constant outside base field");
                if (!coords[c].is_zero()) table_[a * d + b].push_back({static_cast<std::uint32_t>(c), coords[c]});
            }
        }
    }
}

void AlgebraDescriptor::validate() const {
    const std::size_t d = dimension();
    if (d == 0) fail(ErrorKind::InvalidAlgebra, "empty basis");
    for (std::size_t x = 0; x < d; ++x) {
        if (basis_element(0) * basis_element(x) != basis_element(x) ||
            basis_element(x) * basis_element(0) != basis_element(x)) {
            fail(ErrorKind::InvalidAlgebra, "basis[0] is not a two-sided identity (fails on " + labels_[x] + ")");
        }
    }
    for (std::size_t a = 0; a < d; ++a) {
        const Element ea = basis_element(a);
        for (std::size_t b = 0; b < d; ++b) {
            const Element eab = ea * basis_element(b);
            for (std::size_t c = 0; c < d; ++c) {
                const Element ec = basis_element(c);
                if (eab * ec != ea * (basis_element(b) * ec)) {
                    fail(ErrorKind::InvalidAlgebra,
                         "not associative on (" + labels_[a] + ", " + labels_[b] + ", " + labels_[c] + ")");
                }
            }
        }
    }
}

AlgebraPtr AlgebraDescriptor::quaternion(const Scalar& a, const Scalar& b) {
    const Field f = a.field();
    if (b.field() != f) fail(ErrorKind::FieldMismatch, "quaternion parameters from different fields");
    if (a.is_zero() || b.is_zero()) fail(ErrorKind::InvalidAlgebra, "quaternion parameters must be nonzero");
    if (f.characteristic() == 2) fail(ErrorKind::InvalidAlgebra, "quaternion algebras need characteristic != 2");

    auto desc = std::shared_ptr<AlgebraDescriptor>(new AlgebraDescriptor(Kind::Quaternion, f, {"1", "i", "j", "k"}));
    const Scalar z = f.zero(), o = f.one();
    auto vec = [&](Scalar c0, Scalar c1, Scalar c2, Scalar c3) { return std::vector<Scalar>{c0, c1, c2, c3}; };
    std::vector<std::vector<std::vector<Scalar>>> t(4, std::vector<std::vector<Scalar>>(4));
    t[0][0] = vec(o, z, z, z);
    t[0][1] = vec(z, o, z, z);
    t[0][2] = vec(z, z, o, z);
    t[0][3] = vec(z, z, z, o);
    t[1][0] = t[0][1];
    t[2][0] = t[0][2];
    t[3][0] = t[0][3];
    t[1][1] = vec(a, z, z, z);        // i^2 = a
    t[1][2] = vec(z, z, z, o);        // ij = k
    t[1][3] = vec(z, z, a, z);        // ik = a j
    t[2][1] = vec(z, z, z, -o);       // ji = -k
    t[2][2] = vec(b, z, z, z);        // j^2 = b
    t[2][3] = vec(z, -b, z, z);       // jk = -b i
    t[3][1] = vec(z, z, -a, z);       // ki = -a j
    t[3][2] = vec(z, b, z, z);        // kj = b i
    t[3][3] = vec(-(a * b), z, z, z); // k^2 = -ab
    desc->set_table(t);
    desc->quat_a_ = a;
    desc->quat_b_ = b;
    desc->name_ = "(" + a.to_plain_string() + "," + b.to_plain_string() + " / " + f.to_string() + ")";
    desc->validate();
    return desc;
}

AlgebraPtr AlgebraDescriptor::matrix(std::size_t n, const Field& field) {
    if (n == 0 || n > 9) fail(ErrorKind::InvalidAlgebra, "matrix size must be in 1..9");
    std::vector<std::string> labels{"1"};
    for (std::size_t r = 1; r <= n; ++r) {
        for (std::size_t c = 1; c <= n; ++c) {
            if (r == 1 && c == 1) continue;
            labels.push_back("E" + std::to_string(r) + std::to_string(c));
        }
    }
    auto desc = std::shared_ptr<AlgebraDescriptor>(new AlgebraDescriptor(Kind::Matrix, field, std::move(labels)));
    desc->matrix_n_ = n;
    const std::size_t d = desc->dimension();
    std::vector<std::vector<std::vector<Scalar>>> t(d, std::vector<std::vector<Scalar>>(d));
    for (std::size_t a = 0; a < d; ++a) {
        std::vector<Scalar> ca(d, field.zero());
        ca[a] = field.one();
        const auto ma = desc->to_matrix(Element(desc, ca));
        for (std::size_t b = 0; b < d; ++b) {
            std::vector<Scalar> cb(d, field.zero());
            cb[b] = field.one();
            const auto mb = desc->to_matrix(Element(desc, cb));
            t[a][b] = desc->from_matrix(linalg::multiply(ma, mb)).coords();
        }
    }
    desc->set_table(t);
    desc->name_ = "M" + std::to_string(n) + "(" + field.to_string() + ")";
    desc->validate();
    return desc;
}

AlgebraPtr AlgebraDescriptor::scalar(const Field& field) {
    auto desc = std::shared_ptr<AlgebraDescriptor>(new AlgebraDescriptor(Kind::Scalar, field, {"1"}));
    desc->set_table({{{field.one()}}});
    desc->name_ = field.to_string();
    desc->validate();
    return desc;
}

AlgebraPtr AlgebraDescriptor::custom(const Field& field, std::vector<std::string> labels,
                                     const std::vector<std::vector<std::vector<Scalar>>>& table) {
    if (labels.empty() || labels[0] != "1") fail(ErrorKind::InvalidAlgebra, "basis must start with the label \"1\"");
    auto desc = std::shared_ptr<AlgebraDescriptor>(new AlgebraDescriptor(Kind::Custom, field, std::move(labels)));
    desc->set_table(table);
    desc->name_ = "custom" + std::to_string(desc->dimension()) + "(" + field.to_string() + ")";
    desc->validate();
    return desc;
}

std::optional<std::size_t> AlgebraDescriptor::label_index(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) return i;
    }
    return std::nullopt;
}

Element AlgebraDescriptor::zero() const {
    return Element(shared_from_this(), std::vector<Scalar>(dimension(), field_.zero()));
}

Element AlgebraDescriptor::one() const { return basis_element(0); }

Element AlgebraDescriptor::basis_element(std::size_t index) const {
    std::vector<Scalar> c(dimension(), field_.zero());
    c.at(index) = field_.one();
    return Element(shared_from_this(), std::move(c));
}

Element AlgebraDescriptor::from_scalar(const Scalar& value) const {
    std::vector<Scalar> c(dimension(), field_.zero());
    c[0] = value;
    return Element(shared_from_this(), std::move(c));
}

Element AlgebraDescriptor::from_coords(std::vector<Scalar> coords) const {
    return Element(shared_from_this(), std::move(coords));
}

Element AlgebraDescriptor::from_matrix(const linalg::Matrix& m) const {
    const std::size_t n = matrix_n_;
    if (kind_ != Kind::Matrix) fail(ErrorKind::DescriptorMismatch, name_ + " is not a matrix algebra");
    if (m.size() != n) fail(ErrorKind::InvalidInput, "matrix literal has wrong size for " + name_);
    for (const auto& row : m) {
        if (row.size() != n) fail(ErrorKind::InvalidInput, "matrix literal has wrong size for " + name_);
    }
    std::vector<Scalar> c;
    c.reserve(dimension());
    c.push_back(m[0][0]);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t col = 0; col < n; ++col) {
            if (r == 0 && col == 0) continue;
            c.push_back(r == col ? m[r][col] - m[0][0] : m[r][col]);
        }
    }
    return Element(shared_from_this(), std::move(c));
}

linalg::Matrix AlgebraDescriptor::to_matrix(const Element& x) const {
    const std::size_t n = matrix_n_;
    if (kind_ != Kind::Matrix) fail(ErrorKind::DescriptorMismatch, name_ + " is not a matrix algebra");
    linalg::Matrix m(n, std::vector<Scalar>(n, field_.zero()));
    const auto& c = x.coords();
    for (std::size_t r = 0; r < n; ++r) m[r][r] = c[0];
    std::size_t k = 1;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t col = 0; col < n; ++col) {
            if (r == 0 && col == 0) continue;
            m[r][col] += c[k++];
        }
    }
    return m;
}

Element AlgebraDescriptor::matrix_unit(std::size_t row, std::size_t col) const {
    const std::size_t n = matrix_n_;
    if (kind_ != Kind::Matrix || row < 1 || col < 1 || row > n || col > n) {
        fail(ErrorKind::InvalidInput, "no matrix unit E" + std::to_string(row) + std::to_string(col) + " in " + name_);
    }
    linalg::Matrix m(n, std::vector<Scalar>(n, field_.zero()));
    m[row - 1][col - 1] = field_.one();
    return from_matrix(m);
}

std::optional<std::uint64_t> AlgebraDescriptor::cardinality() const {
    if (!field_.is_finite()) return std::nullopt;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dimension(); ++i) {
        if (total > (std::uint64_t{1} << 62) / field_.characteristic()) return std::nullopt;
        total *= field_.characteristic();
    }
    return total;
}

Element AlgebraDescriptor::enumerate(std::uint64_t index) const {
    const std::uint64_t p = field_.characteristic();
    std::vector<Scalar> c(dimension(), field_.zero());
    for (std::size_t t = dimension(); t-- > 0;) {
        c[t] = field_.from_int(static_cast<std::int64_t>(index % p));
        index /= p;
    }
    return Element(shared_from_this(), std::move(c));
}

Element AlgebraDescriptor::random_element(Rng& rng, int box) const {
    std::vector<Scalar> c;
    c.reserve(dimension());
    for (std::size_t t = 0; t < dimension(); ++t) c.push_back(random_scalar(field_, rng, box));
    return Element(shared_from_this(), std::move(c));
}

bool operator==(const AlgebraDescriptor& a, const AlgebraDescriptor& b) {
    if (&a == &b) return true;
    if (a.field_ != b.field_ || a.labels_ != b.labels_) return false;
    for (std::size_t k = 0; k < a.table_.size(); ++k) {
        const auto& ra = a.table_[k];
        const auto& rb = b.table_[k];
        if (ra.size() != rb.size()) return false;
        for (std::size_t t = 0; t < ra.size(); ++t) {
            if (ra[t].index != rb[t].index || !(ra[t].coeff == rb[t].coeff)) return false;
        }
    }
    return true;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) noexcept {
    return a == b || (a && b && *a == *b);
}

// ----------------------------------------------------------------- element

Element::Element(AlgebraPtr algebra, std::vector<Scalar> coords) : algebra_(std::move(algebra)), coords_(std::move(coords)) {
    if (coords_.size() != algebra_->dimension()) {
        fail(ErrorKind::DescriptorMismatch, "coordinate vector of length " + std::to_string(coords_.size()) +
                                                " for algebra of dimension " + std::to_string(algebra_->dimension()));
    }
}

namespace {

void check_same(const Element& x, const Element& y) {
    if (!same_algebra(x.algebra(), y.algebra())) {
        fail(ErrorKind::DescriptorMismatch, x.algebra()->name() + " vs " + y.algebra()->name());
    }
}

}  // namespace

bool Element::is_zero() const noexcept {
    for (const auto& c : coords_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

bool Element::is_scalar() const noexcept {
    for (std::size_t i = 1; i < coords_.size(); ++i) {
        if (!coords_[i].is_zero()) return false;
    }
    return true;
}

Element Element::operator-() const {
    Element r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

Element& Element::operator+=(const Element& other) {
    check_same(*this, other);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (!other.coords_[i].is_zero()) coords_[i] += other.coords_[i];
    }
    return *this;
}

Element& Element::operator-=(const Element& other) {
    check_same(*this, other);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (!other.coords_[i].is_zero()) coords_[i] -= other.coords_[i];
    }
    return *this;
}

Element& Element::operator*=(const Scalar& s) {
    for (auto& c : coords_) {
        if (!c.is_zero()) c *= s;
    }
    return *this;
}

void alg_mul_add(Element& out, const Element& x, const Element& y) {
    const auto& alg = *x.algebra();
    const std::size_t d = alg.dimension();
    auto& acc = out.mutable_coords();
    for (std::size_t a = 0; a < d; ++a) {
        if (x[a].is_zero()) continue;
        for (std::size_t b = 0; b < d; ++b) {
            if (y[b].is_zero()) continue;
            const Scalar xy = x[a] * y[b];
            for (const auto& term : alg.product(a, b)) {
                if (term.coeff.is_one()) {
                    acc[term.index] += xy;
                } else {
                    acc[term.index] += xy * term.coeff;
                }
            }
        }
    }
}

Element operator*(const Element& a, const Element& b) {
    check_same(a, b);
    Element out = a.algebra()->zero();
    alg_mul_add(out, a, b);
    return out;
}

bool operator==(const Element& a, const Element& b) {
    if (!same_algebra(a.algebra_, b.algebra_)) return false;
    return a.coords_ == b.coords_;
}

std::string Element::to_string() const {
    std::string out;
    const auto& labels = algebra_->labels();
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        const Scalar& c = coords_[i];
        if (c.is_zero()) continue;
        std::string coeff = c.to_plain_string();
        bool negative = coeff[0] == '-';
        if (negative) coeff.erase(0, 1);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (i == 0) {
            out += coeff;
        } else if (coeff == "1") {
            out += labels[i];
        } else {
            out += coeff + "*" + labels[i];
        }
    }
    return out.empty() ? "0" : out;
}

Element alg_mul(const Element& x, const Element& y) { return x * y; }

std::optional<Element> try_inverse(const Element& x) {
    const auto& alg = *x.algebra();
    const std::size_t d = alg.dimension();
    // Column b of the left-multiplication matrix is x·e_b.
    linalg::Matrix left(d, std::vector<Scalar>(d, alg.field().zero()));
    for (std::size_t b = 0; b < d; ++b) {
        const Element col = x * alg.basis_element(b);
        for (std::size_t r = 0; r < d; ++r) left[r][b] = col[r];
    }
    auto y = linalg::solve(std::move(left), alg.one().coords());
    if (!y) return std::nullopt;
    Element inv(x.algebra(), std::move(*y));
    if (inv * x != alg.one()) return std::nullopt;
    return inv;
}

Element alg_inv(const Element& x) {
    auto inv = try_inverse(x);
    if (!inv) fail(ErrorKind::NotInvertible, x.to_string() + " is not invertible in " + x.algebra()->name());
    return *std::move(inv);
}

bool is_central(const Element& x) {
    const auto& alg = *x.algebra();
    for (std::size_t b = 0; b < alg.dimension(); ++b) {
        const Element e = alg.basis_element(b);
        if (x * e != e * x) return false;
    }
    return true;
}

std::size_t f_rank(std::span<const Element> vectors) {
    if (vectors.empty()) return 0;
    linalg::Matrix rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        check_same(vectors[0], v);
        rows.push_back(v.coords());
    }
    return linalg::rank(std::move(rows));
}

Element independence_witness(std::span<const Element> family, const Element& a, std::uint64_t seed,
                             std::size_t max_tries) {
    if (f_rank(family) != family.size()) fail(ErrorKind::InvalidInput, "family is not linearly independent");
    if (a.is_zero()) fail(ErrorKind::InvalidInput, "multiplier must be nonzero");
    const auto& alg = *a.algebra();

    std::vector<Element> vectors(family.begin(), family.end());
    auto qualifies = [&](const Element& r) {
        vectors.resize(family.size(), alg.zero());
        const Element ar = a * r;
        for (const auto& v : family) vectors.push_back(ar * v);
        return f_rank(vectors) == 2 * family.size();
    };

    std::size_t tries = 0;
    for (std::size_t b = 0; b < alg.dimension() && tries < max_tries; ++b, ++tries) {
        Element r = alg.basis_element(b);
        if (qualifies(r)) return r;
    }
    for (std::uint64_t k = 0; tries < max_tries; ++k, ++tries) {
        Rng rng = stream(seed, k);
        Element r = alg.random_element(rng);
        if (qualifies(r)) return r;
    }
    fail(ErrorKind::NoWitnessFound, "no independence witness in " + std::to_string(max_tries) + " candidates over " +
                                        alg.name());
}

// ------------------------------------------------------------------- sigma

namespace {

Element apply_matrix(const linalg::Matrix& m, const Element& x) {
    return Element(x.algebra(), linalg::apply(m, x.coords()));
}

}  // namespace

void AntiAutomorphism::verify() const {
    const auto& alg = *algebra_;
    const std::size_t d = alg.dimension();
    const auto& m = powers_[1];
    if (m.size() != d) fail(ErrorKind::InvalidAntiAutomorphism, "matrix has wrong size");
    for (const auto& row : m) {
        if (row.size() != d) fail(ErrorKind::InvalidAntiAutomorphism, "matrix has wrong size");
        for (const auto& entry : row) {
            if (entry.field() != alg.field()) fail(ErrorKind::FieldMismatch, "matrix entry outside base field");
        }
    }
    if (!linalg::inverse(m)) fail(ErrorKind::InvalidAntiAutomorphism, name_ + " is not invertible");
    if (apply_matrix(m, alg.one()) != alg.one()) fail(ErrorKind::InvalidAntiAutomorphism, name_ + " moves 1");
    std::vector<Element> images;
    images.reserve(d);
    for (std::size_t a = 0; a < d; ++a) images.push_back(apply_matrix(m, alg.basis_element(a)));
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            const Element lhs = apply_matrix(m, alg.basis_element(a) * alg.basis_element(b));
            if (lhs != images[b] * images[a]) {
                fail(ErrorKind::InvalidAntiAutomorphism,
                     name_ + " is not anti-multiplicative on (" + alg.label(a) + ", " + alg.label(b) + ")");
            }
        }
    }
}

SigmaPtr AntiAutomorphism::from_matrix(AlgebraPtr algebra, linalg::Matrix matrix, std::string name) {
    auto sigma = std::shared_ptr<AntiAutomorphism>(new AntiAutomorphism());
    sigma->algebra_ = std::move(algebra);
    sigma->name_ = std::move(name);
    const auto& field = sigma->algebra_->field();
    const std::size_t d = sigma->algebra_->dimension();
    sigma->powers_ = {linalg::identity(d, field), std::move(matrix)};
    sigma->verify();

    auto inv = *linalg::inverse(sigma->powers_[1]);
    sigma->inverse_powers_ = {linalg::identity(d, field), inv};
    const auto id = linalg::identity(d, field);
    for (std::size_t i = 1; i <= kOrderProbeLimit; ++i) {
        if (sigma->powers_[i] == id) {
            sigma->order_ = i;
            sigma->order_floor_ = i - 1;
            break;
        }
        sigma->order_floor_ = i;
        if (i == kOrderProbeLimit) break;
        sigma->powers_.push_back(linalg::multiply(sigma->powers_[1], sigma->powers_[i]));
        sigma->inverse_powers_.push_back(linalg::multiply(inv, sigma->inverse_powers_[i]));
    }
    return sigma;
}

SigmaPtr AntiAutomorphism::conjugation(AlgebraPtr algebra) {
    if (algebra->kind() != AlgebraDescriptor::Kind::Quaternion) {
        fail(ErrorKind::InvalidAntiAutomorphism, "conjugation needs a quaternion algebra");
    }
    auto m = linalg::identity(4, algebra->field());
    for (std::size_t i = 1; i < 4; ++i) m[i][i] = -m[i][i];
    return from_matrix(std::move(algebra), std::move(m), "conjugation");
}

SigmaPtr AntiAutomorphism::transpose(AlgebraPtr algebra) {
    if (algebra->kind() != AlgebraDescriptor::Kind::Matrix) {
        fail(ErrorKind::InvalidAntiAutomorphism, "transpose needs a matrix algebra");
    }
    const std::size_t d = algebra->dimension();
    const std::size_t n = algebra->matrix_size();
    linalg::Matrix m(d, std::vector<Scalar>(d, algebra->field().zero()));
    for (std::size_t b = 0; b < d; ++b) {
        auto mat = algebra->to_matrix(algebra->basis_element(b));
        linalg::Matrix t(n, std::vector<Scalar>(n));
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) t[r][c] = mat[c][r];
        }
        const Element image = algebra->from_matrix(t);
        for (std::size_t r = 0; r < d; ++r) m[r][b] = image[r];
    }
    return from_matrix(std::move(algebra), std::move(m), "transpose");
}

SigmaPtr AntiAutomorphism::identity(AlgebraPtr algebra) {
    auto m = linalg::identity(algebra->dimension(), algebra->field());
    return from_matrix(std::move(algebra), std::move(m), "identity");
}

SigmaPtr AntiAutomorphism::conjugated_by(const Element& u) const {
    const Element u_inv = alg_inv(u);
    const auto& alg = *algebra_;
    const std::size_t d = alg.dimension();
    linalg::Matrix m(d, std::vector<Scalar>(d, alg.field().zero()));
    for (std::size_t b = 0; b < d; ++b) {
        const Element image = u * apply(1, alg.basis_element(b)) * u_inv;
        for (std::size_t r = 0; r < d; ++r) m[r][b] = image[r];
    }
    return from_matrix(algebra_, std::move(m), name_ + " conjugated by " + u.to_string());
}

Element AntiAutomorphism::apply(long power, const Element& x) const {
    if (!same_algebra(x.algebra(), algebra_)) {
        fail(ErrorKind::DescriptorMismatch, x.algebra()->name() + " vs " + algebra_->name());
    }
    if (order_) power %= static_cast<long>(*order_);
    const auto& table = power >= 0 ? powers_ : inverse_powers_;
    std::size_t steps = static_cast<std::size_t>(power >= 0 ? power : -power);
    if (steps < table.size()) return apply_matrix(table[steps], x);
    Element y = x;
    for (; steps >= table.size() - 1; steps -= table.size() - 1) y = apply_matrix(table.back(), y);
    return apply_matrix(table[steps], y);
}

Element apply_sigma(const AntiAutomorphism& sigma, long power, const Element& x) { return sigma.apply(power, x); }

}  // namespace gri
