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

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lightsout/errors.hpp"

namespace lightsout {

using BigInt = boost::multiprecision::cpp_int;
using Residue = std::uint64_t;

/// Modulus k of Z_k. Valid range is [2, 2^32) so a product of two residues
/// fits in 64 bits.
class Modulus {
  public:
    static constexpr std::uint64_t max_value = (std::uint64_t{1} << 32) - 1;

    /// Throws InputError unless 2 <= k <= max_value.
    explicit Modulus(long long k);

    std::uint64_t value() const noexcept { return k_; }

    Residue reduce(long long x) const noexcept;
    Residue reduce(const BigInt& x) const;
    Residue add(Residue a, Residue b) const noexcept { return (a + b) % k_; }
    Residue mul(Residue a, Residue b) const noexcept { return (a * b) % k_; }
    Residue neg(Residue a) const noexcept { return a == 0 ? 0 : k_ - a; }

    friend bool operator==(Modulus, Modulus) = default;

  private:
    std::uint64_t k_;
};

/// Length-n vector over Z_k. Tag only separates otherwise identical
/// vector roles (labelings, toggle counts, plain right-hand sides).
template <class Tag>
class ResidueVector {
  public:
    /// Zero vector.
    ResidueVector(Modulus k, std::size_t n) : k_(k), v_(n, 0) {}

    /// Entries are reduced mod k; negative values wrap.
    ResidueVector(Modulus k, std::span<const long long> values) : k_(k)
    {
        v_.reserve(values.size());
        for (long long x : values) v_.push_back(k.reduce(x));
    }
    ResidueVector(Modulus k, std::initializer_list<long long> values)
        : ResidueVector(k, std::span<const long long>(values.begin(), values.size()))
    {
    }

    /// Reinterpret a vector of another role over the same ring.
    template <class Other>
    explicit ResidueVector(const ResidueVector<Other>& other)
        : k_(other.modulus()), v_(other.residues())
    {
    }

    Modulus modulus() const noexcept { return k_; }
    std::size_t size() const noexcept { return v_.size(); }
    const std::vector<Residue>& residues() const noexcept { return v_; }

    Residue operator[](std::size_t i) const { return v_[i]; }
    void set(std::size_t i, long long x) { v_[i] = k_.reduce(x); }

    bool is_zero() const
    {
        for (Residue r : v_)
            if (r != 0) return false;
        return true;
    }

    friend bool operator==(const ResidueVector& a, const ResidueVector& b)
    {
        return a.k_ == b.k_ && a.v_ == b.v_;
    }

  private:
    Modulus k_;
    std::vector<Residue> v_;
};

struct PlainVectorTag;
using ModVector = ResidueVector<PlainVectorTag>;

/// Dense exact integer matrix, row-major.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    /// Throws InputError if the rows are ragged.
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    BigInt& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    IntMatrix transposed() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> a_;
};

std::string to_string(const IntMatrix& m);

/// Dense matrix over Z_k, entries kept reduced.
class ModMatrix {
  public:
    ModMatrix(Modulus k, std::size_t rows, std::size_t cols)
        : k_(k), rows_(rows), cols_(cols), a_(rows * cols, 0)
    {
    }
    /// Reduces every entry of m modulo k.
    ModMatrix(Modulus k, const IntMatrix& m);
    ModMatrix(Modulus k, std::initializer_list<std::initializer_list<long long>> rows)
        : ModMatrix(k, IntMatrix(rows))
    {
    }

    Modulus modulus() const noexcept { return k_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Residue operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, long long x) { a_[r * cols_ + c] = k_.reduce(x); }

    /// Entries as integers in [0, k).
    IntMatrix lift() const;

    /// Matrix-vector product over Z_k. Throws InputError on size or modulus mismatch.
    ModVector apply(const ModVector& x) const;

    friend bool operator==(const ModMatrix& a, const ModMatrix& b) = default;

  private:
    Modulus k_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Residue> a_;
};

/// U * A * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SnfResult {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;

    std::vector<BigInt> diagonal() const;
};

/// Exact determinant by Bareiss fraction-free elimination. The 0x0
/// determinant is 1. Throws InputError for non-square input.
BigInt det_int(const IntMatrix& a);

/// gcd(d, k) == 1.
bool is_unit_mod(const BigInt& d, Modulus k);

SnfResult smith_normal_form(const IntMatrix& a);

/**
 * Solve M x == c over Z_k for square M, composite k allowed.
 *
 * Uses the Smith form U M V = D: the system becomes D y == U c with
 * x = V y. Each coordinate d_i y_i == e_i (mod k) is solvable iff
 * g = gcd(d_i, k) divides e_i, and y_i is taken as the least nonnegative
 * solution mod k/g. Returns nullopt when some coordinate is unsolvable.
 * Throws InputError on dimension or modulus mismatch.
 */
std::optional<ModVector> solve_mod(const ModMatrix& m, const ModVector& c);

/// gcd(det(lift(M)), k) == 1. Throws InputError for non-square input.
bool is_invertible_mod(const ModMatrix& m);

} // namespace lightsout
