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

#include "nodaldcg/int_matrix.hpp"

#include "nodaldcg/error.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

namespace ndcg {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size())
{
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw InvalidArgument("ragged matrix literal");
        for (long x : r)
            data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap((*this)(i, a), (*this)(i, b));
}

IntMatrix IntMatrix::without(std::size_t drop_row, std::size_t drop_col) const
{
    if (drop_row >= rows_ || drop_col >= cols_)
        throw InvalidArgument("row/column index out of range");
    IntMatrix out(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
        if (i == drop_row)
            continue;
        for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
            if (j == drop_col)
                continue;
            out(oi, oj++) = (*this)(i, j);
        }
        ++oi;
    }
    return out;
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(j, i) = (*this)(i, j);
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw InvalidArgument("matrix product shape mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

std::vector<Integer> operator*(const IntMatrix& a, std::span<const Integer> v)
{
    if (a.cols() != v.size())
        throw InvalidArgument("matrix-vector shape mismatch");
    std::vector<Integer> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out[i] += a(i, j) * v[j];
    return out;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            out(a.rows() + i, a.cols() + j) = b(i, j);
    return out;
}

std::string to_string(const IntMatrix& m)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? ", " : "") << m(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

Integer determinant(IntMatrix m)
{
    if (!m.is_square())
        throw InvalidArgument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;

    Integer previous = 1, t;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(m(p, k)) == 0)
                ++p;
            if (p == n)
                return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const bool pivot_column_zero = sgn(m(i, k)) == 0;
            for (std::size_t j = k + 1; j < n; ++j) {
                const bool cross_zero = pivot_column_zero || sgn(m(k, j)) == 0;
                if (cross_zero && sgn(m(i, j)) == 0)
                    continue;
                mpz_mul(t.get_mpz_t(), m(i, j).get_mpz_t(), m(k, k).get_mpz_t());
                if (!cross_zero)
                    mpz_submul(t.get_mpz_t(), m(i, k).get_mpz_t(), m(k, j).get_mpz_t());
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
            }
            m(i, k) = 0;
        }
        previous = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

Integer minor_determinant(const IntMatrix& a, std::size_t drop_row, std::size_t drop_col)
{
    if (!a.is_square())
        throw InvalidArgument("minor of a non-square matrix");
    if (a.rows() == 0)
        throw InvalidArgument("minor of an empty matrix");
    return determinant(a.without(drop_row, drop_col));
}

std::size_t rank(const IntMatrix& a)
{
    IntMatrix m = a;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sgn(m(p, c)) == 0)
            ++p;
        if (p == m.rows())
            continue;
        m.swap_rows(r, p);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (sgn(m(i, c)) == 0)
                continue;
            const Integer f = m(i, c);
            const Integer g = m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m(i, j) = m(i, j) * g - m(r, j) * f;
            // keep entries small; the row is only ever compared against zero
            Integer content = 0;
            for (std::size_t j = c; j < m.cols(); ++j)
                content = gcd(content, m(i, j));
            if (content > 1)
                for (std::size_t j = c; j < m.cols(); ++j)
                    mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), content.get_mpz_t());
        }
        ++r;
    }
    return r;
}

namespace {

// row_dst += factor * row_src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& factor, std::size_t from = 0)
{
    for (std::size_t j = from; j < m.cols(); ++j)
        if (sgn(m(src, j)) != 0)
            mpz_addmul(m(dst, j).get_mpz_t(), factor.get_mpz_t(), m(src, j).get_mpz_t());
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& factor, std::size_t from = 0)
{
    for (std::size_t i = from; i < m.rows(); ++i)
        if (sgn(m(i, src)) != 0)
            mpz_addmul(m(i, dst).get_mpz_t(), factor.get_mpz_t(), m(i, src).get_mpz_t());
}

std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const IntMatrix& d, std::size_t t)
{
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (sgn(d(i, j)) == 0)
                continue;
            if (!best || mpz_cmpabs(d(i, j).get_mpz_t(), d(best->first, best->second).get_mpz_t()) < 0) {
                best = {i, j};
                // a unit is the least possible; later ties lose anyway
                if (mpz_cmpabs_ui(d(i, j).get_mpz_t(), 1) == 0)
                    return best;
            }
        }
    return best;
}

// Reduces d in place to its Smith form. The transforms are tracked only when
// u and v are given; entries of d left of the active column are already zero.
void reduce_to_smith_form(IntMatrix& d, IntMatrix* u, IntMatrix* v)
{
    const std::size_t m = d.rows();
    const std::size_t n = d.cols();
    const std::size_t steps = std::min(m, n);
    Integer q;
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            const auto pivot = smallest_entry(d, t);
            if (!pivot)
                return;
            d.swap_rows(t, pivot->first);
            d.swap_cols(t, pivot->second);
            if (u) {
                u->swap_rows(t, pivot->first);
                v->swap_cols(t, pivot->second);
            }

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (sgn(d(i, t)) == 0)
                    continue;
                mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
                q = -q;
                add_row(d, i, t, q, t);
                if (u)
                    add_row(*u, i, t, q);
                clean = clean && sgn(d(i, t)) == 0;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (sgn(d(t, j)) == 0)
                    continue;
                mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
                q = -q;
                add_col(d, j, t, q, t);
                if (v)
                    add_col(*v, j, t, q);
                clean = clean && sgn(d(t, j)) == 0;
            }
            if (!clean)
                continue;

            // Pivot must divide the rest of the block; otherwise pull the
            // offending row in and reduce again with a smaller remainder.
            std::optional<std::size_t> offender;
            const bool unit = mpz_cmpabs_ui(d(t, t).get_mpz_t(), 1) == 0;
            for (std::size_t i = t + 1; i < m && !offender && !unit; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
                        offender = i;
                        break;
                    }
            if (!offender)
                break;
            add_row(d, t, *offender, 1, t);
            if (u)
                add_row(*u, t, *offender, 1);
        }
        if (sgn(d(t, t)) < 0) {
            d(t, t) = -d(t, t);
            if (u)
                for (std::size_t j = 0; j < m; ++j)
                    (*u)(t, j) = -(*u)(t, j);
        }
    }
}

std::vector<Integer> diagonal_of(const IntMatrix& d)
{
    std::vector<Integer> out(std::min(d.rows(), d.cols()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = d(i, i);
    return out;
}

} // namespace

SnfResult smith_normal_form(const IntMatrix& a)
{
    IntMatrix d = a;
    IntMatrix u = IntMatrix::identity(a.rows());
    IntMatrix v = IntMatrix::identity(a.cols());
    reduce_to_smith_form(d, &u, &v);
    return {diagonal_of(d), std::move(u), std::move(v)};
}

Integer GroupStructure::order() const
{
    if (free_rank > 0)
        throw InfiniteOrder("group has free rank " + std::to_string(free_rank));
    Integer p = 1;
    for (const Integer& f : invariant_factors)
        p *= f;
    return p;
}

GroupStructure canonical_group(std::span<const Integer> cyclic_orders, std::size_t free_rank)
{
    std::vector<Integer> orders;
    for (const Integer& x : cyclic_orders) {
        if (sgn(x) == 0)
            ++free_rank;
        else if (abs(x) > 1)
            orders.push_back(abs(x));
    }
    // Pairwise (gcd, lcm) sweeps leave orders[i] = gcd of the tail, giving d1 | d2 | ...
    for (std::size_t i = 0; i < orders.size(); ++i)
        for (std::size_t j = i + 1; j < orders.size(); ++j) {
            const Integer g = gcd(orders[i], orders[j]);
            const Integer l = lcm(orders[i], orders[j]);
            orders[i] = g;
            orders[j] = l;
        }
    GroupStructure out;
    out.free_rank = free_rank;
    for (Integer& x : orders)
        if (x > 1)
            out.invariant_factors.push_back(std::move(x));
    return out;
}

GroupStructure direct_sum(const GroupStructure& a, const GroupStructure& b)
{
    std::vector<Integer> all = a.invariant_factors;
    all.insert(all.end(), b.invariant_factors.begin(), b.invariant_factors.end());
    return canonical_group(all, a.free_rank + b.free_rank);
}

std::string to_string(const GroupStructure& g)
{
    if (g.is_trivial())
        return "trivial";
    std::string out;
    for (const Integer& f : g.invariant_factors) {
        if (!out.empty())
            out += " x ";
        out += "Z/" + f.get_str();
    }
    if (g.free_rank > 0) {
        if (!out.empty())
            out += " x ";
        out += "Z";
        if (g.free_rank > 1)
            out += "^" + std::to_string(g.free_rank);
    }
    return out;
}

GroupStructure invariant_factors_of_cokernel(IntMatrix d, std::size_t ambient_rank)
{
    if (ambient_rank != d.rows())
        throw InvalidArgument("ambient rank must equal the number of rows");
    reduce_to_smith_form(d, nullptr, nullptr);
    GroupStructure out;
    std::size_t nonzero = 0;
    for (const Integer& x : diagonal_of(d)) {
        if (sgn(x) == 0)
            continue;
        ++nonzero;
        if (x > 1)
            out.invariant_factors.push_back(x);
    }
    out.free_rank = ambient_rank - nonzero;
    return out;
}

namespace {

Integer diagonal_at(const SnfResult& snf, std::size_t i)
{
    return i < snf.diagonal.size() ? snf.diagonal[i] : Integer(0);
}

} // namespace

bool in_column_lattice(const SnfResult& snf, std::span<const Integer> v)
{
    const std::vector<Integer> w = snf.left * v;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Integer d = diagonal_at(snf, i);
        if (sgn(d) == 0) {
            if (sgn(w[i]) != 0)
                return false;
        } else if (!mpz_divisible_p(w[i].get_mpz_t(), d.get_mpz_t())) {
            return false;
        }
    }
    return true;
}

bool in_column_lattice(const IntMatrix& a, std::span<const Integer> v)
{
    if (v.size() != a.rows())
        throw InvalidArgument("vector length must equal the number of rows");
    return in_column_lattice(smith_normal_form(a), v);
}

Integer element_order(const SnfResult& snf, std::span<const Integer> v)
{
    const std::vector<Integer> w = snf.left * v;
    Integer order = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Integer d = diagonal_at(snf, i);
        if (sgn(d) == 0) {
            if (sgn(w[i]) != 0)
                throw InfiniteOrder("element has a nonzero free component");
            continue;
        }
        order = lcm(order, d / gcd(d, w[i]));
    }
    return order;
}

Integer element_order(const IntMatrix& a, std::span<const Integer> v)
{
    if (v.size() != a.rows())
        throw InvalidArgument("vector length must equal the number of rows");
    return element_order(smith_normal_form(a), v);
}

} // namespace ndcg
