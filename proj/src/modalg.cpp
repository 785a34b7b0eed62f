/*
 * Copyright 2026 The lightsout Authors
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

#include "lightsout/modalg.hpp"

#include <numeric>
#include <sstream>

namespace lightsout {

namespace {

// Inverse of a modulo m for gcd(a, m) == 1, m >= 1.
std::uint64_t
inverse_mod(std::uint64_t a, std::uint64_t m)
{
    if (m == 1) return 0;
    std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
    }
    const auto mm = static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
}

void
swap_rows(IntMatrix& a, std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

void
swap_cols(IntMatrix& a, std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

// row[dst] += factor * row[src]
void
add_row(IntMatrix& a, std::size_t dst, std::size_t src, const BigInt& factor)
{
    for (std::size_t c = 0; c < a.cols(); ++c) a(dst, c) += factor * a(src, c);
}

// col[dst] += factor * col[src]
void
add_col(IntMatrix& a, std::size_t dst, std::size_t src, const BigInt& factor)
{
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, dst) += factor * a(r, src);
}

} // namespace

Modulus::Modulus(long long k)
{
    if (k < 2 || static_cast<unsigned long long>(k) > max_value) {
        throw InputError("modulus must be in [2, 2^32), got " + std::to_string(k));
    }
    k_ = static_cast<std::uint64_t>(k);
}

Residue
Modulus::reduce(long long x) const noexcept
{
    const auto k = static_cast<long long>(k_);
    return static_cast<Residue>(((x % k) + k) % k);
}

Residue
Modulus::reduce(const BigInt& x) const
{
    BigInt r = x % k_;
    if (r < 0) r += k_;
    return r.convert_to<Residue>();
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size())
{
    a_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw InputError("ragged matrix rows");
        for (long long x : row) a_.emplace_back(x);
    }
}

IntMatrix
IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix
IntMatrix::transposed() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix
operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows()) throw InputError("matrix product dimension mismatch");
    IntMatrix p(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            if (a(i, l) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, l) * b(l, j);
        }
    return p;
}

std::string
to_string(const IntMatrix& m)
{
    std::ostringstream os;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
        os << "]\n";
    }
    return os.str();
}

ModMatrix::ModMatrix(Modulus k, const IntMatrix& m)
    : k_(k), rows_(m.rows()), cols_(m.cols()), a_(m.rows() * m.cols())
{
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) a_[r * cols_ + c] = k.reduce(m(r, c));
}

IntMatrix
ModMatrix::lift() const
{
    IntMatrix m(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    return m;
}

ModVector
ModMatrix::apply(const ModVector& x) const
{
    if (x.modulus() != k_) throw InputError("modulus mismatch");
    if (x.size() != cols_) throw InputError("matrix-vector dimension mismatch");
    ModVector y(k_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Residue acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) acc = k_.add(acc, k_.mul((*this)(r, c), x[c]));
        y.set(r, static_cast<long long>(acc));
    }
    return y;
}

std::vector<BigInt>
SnfResult::diagonal() const
{
    std::vector<BigInt> d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
}

BigInt
det_int(const IntMatrix& a)
{
    if (!a.is_square()) throw InputError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;

    IntMatrix m = a;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            swap_rows(m, k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // exact: Sylvester's identity guarantees divisibility
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

bool
is_unit_mod(const BigInt& d, Modulus k)
{
    return std::gcd(k.reduce(d), k.value()) == 1;
}

SnfResult
smith_normal_form(const IntMatrix& input)
{
    const std::size_t rows = input.rows(), cols = input.cols();
    IntMatrix a = input;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // Pivot: smallest nonzero magnitude in the trailing block.
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (a(i, j) == 0) continue;
                    if (pr == rows || abs(a(i, j)) < abs(a(pr, pc))) {
                        pr = i;
                        pc = j;
                    }
                }
            if (pr == rows) break;  // trailing block is zero

            swap_rows(a, t, pr);
            swap_rows(u, t, pr);
            swap_cols(a, t, pc);
            swap_cols(v, t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                const BigInt q = a(i, t) / a(t, t);
                add_row(a, i, t, -q);
                add_row(u, i, t, -q);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                const BigInt q = a(t, j) / a(t, t);
                add_col(a, j, t, -q);
                add_col(v, j, t, -q);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Enforce d_t | every trailing entry.
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            add_row(a, t, bad, 1);
            add_row(u, t, bad, 1);
        }
        if (a(t, t) < 0) {
            for (std::size_t c = 0; c < cols; ++c) a(t, c) = -a(t, c);
            for (std::size_t c = 0; c < rows; ++c) u(t, c) = -u(t, c);
        }
    }
    return {std::move(u), std::move(a), std::move(v)};
}

std::optional<ModVector>
solve_mod(const ModMatrix& m, const ModVector& c)
{
    if (m.rows() != m.cols()) throw InputError("solve_mod needs a square matrix");
    if (c.size() != m.rows()) throw InputError("right-hand side has the wrong length");
    if (c.modulus() != m.modulus()) throw InputError("modulus mismatch");

    const Modulus k = m.modulus();
    const std::uint64_t kv = k.value();
    const std::size_t n = m.rows();
    const SnfResult snf = smith_normal_form(m.lift());

    std::vector<Residue> y(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        BigInt e = 0;
        for (std::size_t j = 0; j < n; ++j) e += snf.U(i, j) * c[j];
        const Residue ei = k.reduce(e);
        const Residue di = k.reduce(snf.D(i, i));
        const std::uint64_t g = std::gcd(di, kv);  // gcd(0, k) == k
        if (ei % g != 0) return std::nullopt;
        const std::uint64_t kk = kv / g;
        y[i] = (ei / g) % kk * inverse_mod((di / g) % kk, kk) % kk;
    }

    ModVector x(k, n);
    for (std::size_t i = 0; i < n; ++i) {
        BigInt acc = 0;
        for (std::size_t j = 0; j < n; ++j) acc += snf.V(i, j) * y[j];
        x.set(i, static_cast<long long>(k.reduce(acc)));
    }
    return x;
}

bool
is_invertible_mod(const ModMatrix& m)
{
    if (m.rows() != m.cols()) throw InputError("invertibility of a non-square matrix");
    return is_unit_mod(det_int(m.lift()), m.modulus());
}

} // namespace lightsout
