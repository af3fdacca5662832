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

#include "gri/linalg.hpp"

#include <utility>

namespace gri::linalg {

Matrix identity(std::size_t n, const Field& field) {
    Matrix m(n, std::vector<Scalar>(n, field.zero()));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = field.one();
    return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    const std::size_t rows = a.size();
    const std::size_t inner = b.size();
    const std::size_t cols = inner ? b[0].size() : 0;
    Matrix c(rows, std::vector<Scalar>(cols, inner ? b[0][0].field().zero() : Scalar()));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return c;
}

std::vector<Scalar> apply(const Matrix& a, const std::vector<Scalar>& v) {
    std::vector<Scalar> out;
    out.reserve(a.size());
    for (const auto& row : a) {
        Scalar acc = v.empty() ? Scalar() : v[0].field().zero();
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (!row[k].is_zero() && !v[k].is_zero()) acc += row[k] * v[k];
        }
        out.push_back(std::move(acc));
    }
    return out;
}

namespace {

// Reduces `rows` to row-echelon form in place and returns the rank. When
// `augmented` is set the last column is carried along but never pivoted on.
std::size_t eliminate(Matrix& rows, bool augmented) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size() - (augmented ? 1 : 0);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const Scalar inv = rows[rank][col].inverse();
        for (auto& entry : rows[rank]) entry *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            const Scalar factor = rows[r][col];
            for (std::size_t c = col; c < rows[r].size(); ++c) {
                if (!rows[rank][c].is_zero()) rows[r][c] -= factor * rows[rank][c];
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t rank(Matrix rows) { return eliminate(rows, false); }

std::optional<std::vector<Scalar>> solve(Matrix a, std::vector<Scalar> b) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(std::move(b[i]));
    if (eliminate(a, true) < n) return std::nullopt;
    // Fully reduced: row i has its pivot in column i.
    std::vector<Scalar> x;
    x.reserve(n);
    for (std::size_t i = 0; i < n; ++i) x.push_back(a[i][n]);
    return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
    const std::size_t n = a.size();
    if (n == 0) return Matrix{};
    const Field field = a[0][0].field();
    Matrix work = a;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) work[i].push_back(i == j ? field.one() : field.zero());
    }
    // Pivot only over the left block.
    std::size_t r = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = r;
        while (pivot < n && work[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(work[r], work[pivot]);
        const Scalar inv = work[r][col].inverse();
        for (auto& entry : work[r]) entry *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || work[i][col].is_zero()) continue;
            const Scalar factor = work[i][col];
            for (std::size_t c = col; c < 2 * n; ++c) work[i][c] -= factor * work[r][c];
        }
        ++r;
    }
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i) out[i].assign(work[i].begin() + static_cast<std::ptrdiff_t>(n), work[i].end());
    return out;
}

}  // namespace gri::linalg
