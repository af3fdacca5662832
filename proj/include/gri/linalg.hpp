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

#ifndef GRI_LINALG_HPP
#define GRI_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "gri/scalars.hpp"

// Dense exact linear algebra over a base field (Gaussian elimination).
namespace gri::linalg {

/// Row-major; every row has the same length.
using Matrix = std::vector<std::vector<Scalar>>;

Matrix identity(std::size_t n, const Field& field);
Matrix multiply(const Matrix& a, const Matrix& b);
std::vector<Scalar> apply(const Matrix& a, const std::vector<Scalar>& v);

std::size_t rank(Matrix rows);

/// Solves a·x = b for square a; nullopt when a is singular.
std::optional<std::vector<Scalar>> solve(Matrix a, std::vector<Scalar> b);

std::optional<Matrix> inverse(const Matrix& a);

}  // namespace gri::linalg

#endif
