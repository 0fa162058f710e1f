/*
 * Copyright 2026 The nodaldcg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "nodaldcg/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ndcg {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Integer> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);

    IntMatrix without(std::size_t drop_row, std::size_t drop_col) const;
    IntMatrix transposed() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::vector<Integer> operator*(const IntMatrix& a, std::span<const Integer> v);

/// Block-diagonal concatenation diag(a, b).
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

std::string to_string(const IntMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination. The 0x0 determinant is 1.
Integer determinant(IntMatrix a);

/// Determinant of `a` with one row and one column removed.
Integer minor_determinant(const IntMatrix& a, std::size_t drop_row, std::size_t drop_col);

std::size_t rank(const IntMatrix& a);

struct SnfResult {
    /// min(rows, cols) entries, non-negative, d[i] | d[i+1], zeros last.
    std::vector<Integer> diagonal;
    IntMatrix left;   // U, rows x rows, unimodular
    IntMatrix right;  // V, cols x cols, unimodular
};

/**
 * Smith normal form U * A * V = D.
 *
 * Pivot is the nonzero entry of least absolute value in the active block,
 * ties broken by row then column index, so the output is deterministic.
 */
SnfResult smith_normal_form(const IntMatrix& a);

/// Finite abelian group Z^free_rank + Z/d1 + ... + Z/dk, d1 | d2 | ..., every di >= 2.
struct GroupStructure {
    std::vector<Integer> invariant_factors;
    std::size_t free_rank = 0;

    bool is_trivial() const noexcept { return invariant_factors.empty() && free_rank == 0; }
    bool is_cyclic() const noexcept { return free_rank == 0 && invariant_factors.size() <= 1; }
    /// Throws InfiniteOrder when free_rank > 0.
    Integer order() const;

    friend bool operator==(const GroupStructure&, const GroupStructure&) = default;
};

/// Canonical form of Z/f1 + Z/f2 + ...: drops units, restores the divisibility chain.
GroupStructure canonical_group(std::span<const Integer> cyclic_orders, std::size_t free_rank = 0);

/// Direct sum of two groups, in canonical form.
GroupStructure direct_sum(const GroupStructure& a, const GroupStructure& b);

/// "Z/d1 x Z/d2 x ... x Z^r", or "trivial".
std::string to_string(const GroupStructure& g);

/// Structure of Z^ambient_rank / (column lattice of a). Requires ambient_rank == a.rows().
GroupStructure invariant_factors_of_cokernel(IntMatrix a, std::size_t ambient_rank);

/// True when v lies in the Z-span of the columns of a.
bool in_column_lattice(const IntMatrix& a, std::span<const Integer> v);
bool in_column_lattice(const SnfResult& snf, std::span<const Integer> v);

/// Order of the class of v in Z^rows / (column lattice of a). Throws InfiniteOrder.
Integer element_order(const IntMatrix& a, std::span<const Integer> v);
Integer element_order(const SnfResult& snf, std::span<const Integer> v);

} // namespace ndcg
