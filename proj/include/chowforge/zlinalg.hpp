#pragma once

// Dense integer matrices: Hermite and Smith normal forms, lattice membership.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "chowforge/intpoly.hpp"

namespace chowforge {

using IntVector = std::vector<mpz_class>;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const mpz_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<mpz_class> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const mpz_class> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    void append_row(std::span<const mpz_class> r);

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& factor);
    /// col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& factor);
    void negate_row(std::size_t i);

    bool is_zero() const;
    bool operator==(const IntMatrix&) const = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// x * A for a row vector x.
IntVector row_times(std::span<const mpz_class> x, const IntMatrix& a);

struct HnfResult {
    IntMatrix h;
    IntMatrix u;  // unimodular, h == u * a
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

/// Row-style Hermite normal form: echelon, pivots positive, entries above a
/// pivot reduced into [0, pivot). Zero rows are moved to the bottom.
HnfResult hnf(const IntMatrix& a);

/// Z^r ⊕ Z/d1 ⊕ ... with d1 | d2 | ... and every di >= 2.
struct AbelianInvariants {
    std::size_t free_rank = 0;
    std::vector<mpz_class> torsion;

    bool operator==(const AbelianInvariants&) const = default;

    /// e.g. `Z`, `(Z/2)^2`, `Z^2 + Z/3 + Z/6`, `0`.
    std::string to_string() const;
};

struct SnfResult {
    IntMatrix d;
    IntMatrix u;  // unimodular, d == u * a * v
    IntMatrix v;  // unimodular
    std::size_t rank = 0;
    AbelianInvariants cokernel;  // of Z^cols / rowspan(a)
};

SnfResult snf(const IntMatrix& a);

/// Integer x with x * A == v, or nullopt when v is outside the row lattice.
/// Certificates are re-verified before being returned.
std::optional<IntVector> solve_in_row_lattice(const IntMatrix& a, std::span<const mpz_class> v);

/// Membership against a precomputed HNF (same contract as above).
std::optional<IntVector> solve_with_hnf(const IntMatrix& a, const HnfResult& h,
                                        std::span<const mpz_class> v);

}  // namespace chowforge
