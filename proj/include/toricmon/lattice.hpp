#ifndef TORICMON_LATTICE_HPP
#define TORICMON_LATTICE_HPP

#include "toricmon/numeric.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace toricmon {

/// The lattice pairing <m, v> between M and N, a plain coordinate dot
/// product. The same function serves both argument orders.
Int pairing(const IntVec& m, const IntVec& v);

bool is_zero_vec(const IntVec& v);
IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_neg(const IntVec& a);
IntVec vec_scale(const Int& c, const IntVec& a);

/// v / gcd(|coords|). Throws ValidationError on the zero vector.
IntVec primitive_part(const IntVec& v);

/// Dense exact integer matrix, row-major.
class IntMat {
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMat identity(std::size_t n);
    static IntMat from_rows(const std::vector<IntVec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVec row(std::size_t i) const;
    IntVec col(std::size_t j) const;
    std::vector<IntVec> row_vectors() const;

    IntMat transpose() const;
    IntMat operator*(const IntMat& other) const;
    IntVec apply(const IntVec& v) const; // matrix * column vector
    bool operator==(const IntMat& other) const = default;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& c); // row_dst += c*row_src
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& c);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

/// Exact determinant (Bareiss fraction-free elimination).
Int det(const IntMat& m);

/// Rank over the rationals.
std::size_t rank_q(const IntMat& m);

/// Inverse of a matrix with determinant +-1. Returns nullopt otherwise.
std::optional<IntMat> inverse_unimodular(const IntMat& m);

struct SmithResult {
    IntMat u, d, v; // u * input * v == d, diagonal with d1 | d2 | ...
    std::vector<Int> invariant_factors() const;
};

/// Smith normal form with unimodular transforms; deterministic pivoting.
SmithResult smith_normal_form(const IntMat& m);

/// Canonical basis of the kernel lattice {x : m*x = 0}, returned as rows in
/// row Hermite form. The kernel lattice is saturated, so each row is
/// primitive.
std::vector<IntVec> kernel_basis(const IntMat& m);

/// Canonical basis of the saturation rowspace_Q(m) `intersect` Z^n.
std::vector<IntVec> saturated_row_basis(const IntMat& m);

/// Basis p_1..p_k, p'_{k+1}..p'_n of N whose first k vectors are the inputs,
/// plus the dual basis q_1..q_n of M with <q_i, p_j> = delta_ij.
struct AdaptedBasis {
    std::vector<IntVec> primal; // rows, a Z-basis of N
    std::vector<IntVec> dual;   // rows, the dual basis of M
    std::size_t given = 0;      // how many primal vectors were inputs
};

/// Completes part of a lattice basis to a full one (column Hermite
/// reduction; deterministic). Throws ValidationError when the inputs are
/// dependent or have an invariant factor > 1.
AdaptedBasis extend_to_basis(const std::vector<IntVec>& vectors, std::size_t rank);

/// Dense exact rational matrix with basic solving, used for the handful of
/// places that need division (ray reconstruction, block decompositions).
class RatMat {
public:
    RatMat() = default;
    RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMat from_int(const IntMat& m);
    static RatMat from_rows(const std::vector<RatVec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatMat operator*(const RatMat& other) const;
    std::optional<RatMat> inverse() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

/// Solves m * x = b exactly; nullopt when inconsistent. When the system is
/// underdetermined, returns the solution with free variables set to zero.
std::optional<RatVec> solve_rational(const RatMat& m, const RatVec& b);

/// Scales a nonzero rational vector to the primitive integer vector on the
/// same ray (positive multiple).
IntVec primitive_from_rational(const RatVec& v);

} // namespace toricmon

#endif
