#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "seqop/scalar.hpp"

namespace seqop {

using Vec = std::vector<Scalar>;

// Sparse matrix, row-major; each row holds (column, value) pairs sorted by
// column with no explicit zeros. Everything downstream (homology ranks,
// normalization kernels, homotopy witnesses) runs through the elimination
// routines below, so determinism matters: pivots are chosen by minimal row
// population with index tie-break.
class SparseMat {
  public:
    SparseMat() = default;
    SparseMat(int rows, int cols) : rows_(rows), cols_(cols), row_(rows) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void add(int r, int c, const Scalar& v); // accumulates
    void set(int r, int c, const Scalar& v);
    Scalar at(int r, int c) const;
    const std::vector<std::pair<int, Scalar>>& row(int r) const { return row_[r]; }

    void compress(const Field& f); // drop zeros, canonicalize entries

    long long nonzeros() const;
    bool is_zero(const Field& f) const;

    Vec apply(const Vec& x, const Field& f) const;             // A x
    SparseMat multiply(const SparseMat& b, const Field& f) const; // A * b
    SparseMat transpose() const;
    static SparseMat identity(int n);
    static SparseMat from_dense(const std::vector<Vec>& rows, const Field& f);
    std::vector<Vec> to_dense() const;

    SparseMat scaled(const Scalar& c, const Field& f) const;
    SparseMat plus(const SparseMat& b, const Field& f) const;

    bool equals(const SparseMat& b, const Field& f) const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::vector<std::pair<int, Scalar>>> row_;
};

// Row-echelon elimination over an exact field.
struct Echelon {
    std::vector<std::vector<std::pair<int, Scalar>>> rows; // echelon rows, pivot-normalized
    std::vector<int> pivot_col;                            // per echelon row
    std::vector<int> pivot_of_col;                         // col -> echelon row or -1
    int ncols = 0;

    int rank() const { return static_cast<int>(rows.size()); }
};

Echelon echelon_form(const SparseMat& a, const Field& f);

int rank(const SparseMat& a, const Field& f);

// Basis of { x : A x = 0 }, one dense vector per free column, in column order.
std::vector<Vec> kernel_basis(const SparseMat& a, const Field& f);

// One solution of A x = b, if consistent.
std::optional<Vec> solve(const SparseMat& a, const Vec& b, const Field& f);

// Factor once, solve many times against the same matrix.
class Solver {
  public:
    Solver(const SparseMat& a, const Field& f);
    std::optional<Vec> solve(const Vec& b) const;
    int rank() const { return static_cast<int>(ech_.rows.size()); }

  private:
    Field field_;
    int nrows_;
    Echelon ech_;
    // Row operations replayed on the right-hand side: stored as the sequence
    // of (target_row_source_index, vector of (src echelon row, coeff)) is not
    // tractable; instead we keep the elimination matrix action implicitly by
    // re-running elimination over an augmented identity-tracked structure.
    std::vector<std::vector<std::pair<int, Scalar>>> ops_; // per echelon row: combination of original rows
    std::vector<int> perm_;                                // original row for each echelon row
};

Vec vec_add(const Vec& a, const Vec& b, const Field& f);
Vec vec_sub(const Vec& a, const Vec& b, const Field& f);
Vec vec_scale(const Scalar& c, const Vec& a, const Field& f);
bool vec_is_zero(const Vec& a, const Field& f);
Vec vec_zero(int n);

} // namespace seqop
