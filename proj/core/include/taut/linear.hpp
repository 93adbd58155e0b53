#pragma once

#include "taut/rational.hpp"

#include <cstddef>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

namespace taut {

using Vector = std::vector<Rational>;
// Sorted by index, no zero values.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;
// Sorted by index, no zero values, content 1, leading entry positive.
using IntRow = std::vector<std::pair<std::size_t, Integer>>;

SparseVec to_sparse(const Vector& v);
Vector to_dense(const SparseVec& v, std::size_t n);
SparseVec sparse_add(const SparseVec& a, const SparseVec& b, const Rational& scale = 1);
SparseVec sparse_scale(const SparseVec& a, const Rational& s);
// Scales a rational vector to a primitive integer row; returns the factor used.
IntRow primitive_row(const SparseVec& v, Rational* factor = nullptr);

class SparseMatrix {
public:
    using Entry = std::tuple<std::size_t, std::size_t, Rational>;

    SparseMatrix(std::size_t rows, std::size_t cols);
    SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries);
    static SparseMatrix from_dense(const std::vector<Vector>& rows, std::size_t cols);
    static SparseMatrix from_rows(const std::vector<SparseVec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<Entry>& entries() const { return entries_; }
    std::vector<SparseVec> row_vectors() const;
    SparseMatrix transpose() const;
    Vector apply(const Vector& x) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Entry> entries_;
};

// Incremental row space with deterministic pivots: a row's pivot is its first
// nonzero column after reduction by the rows already present.
class Echelon {
public:
    explicit Echelon(std::size_t ncols, bool track = false);

    std::size_t cols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }
    bool is_pivot(std::size_t col) const { return pivot_of_col_[col] >= 0; }

    // Returns true if v was independent of the current span (and was added).
    // With tracking enabled, `id` labels v in later express() results.
    bool insert(const SparseVec& v, std::size_t id = 0);
    bool contains(const SparseVec& v) const;
    // Canonical remainder: zero at every pivot column.
    SparseVec reduce(const SparseVec& v) const;
    // Coefficients of v in terms of the inserted (independent) vectors, or none.
    std::optional<SparseVec> express(const SparseVec& v) const;
    std::vector<std::size_t> pivot_columns() const;
    // Reduced echelon rows scaled to pivot 1, ordered by pivot column.
    std::vector<SparseVec> reduced_rows() const;

private:
    struct Row {
        IntRow entries;
        SparseVec combo;
    };
    void eliminate(Row& target, const Row& pivot) const;

    std::size_t ncols_;
    bool track_;
    std::vector<Row> rows_;
    std::vector<long> pivot_of_col_;
};

std::size_t rank(const SparseMatrix& m);
// Basis of the right kernel, one vector per non-pivot column (ascending).
std::vector<Vector> kernel_basis(const SparseMatrix& m);
std::vector<SparseVec> kernel_basis_sparse(const SparseMatrix& m);
std::optional<Vector> solve(const SparseMatrix& m, const Vector& b);
// Unit vectors on the non-pivot columns of the subspace's echelon form.
std::vector<Vector> quotient_representatives(std::size_t space_dim, const std::vector<Vector>& subspace);
// Kernel of the linear map sending source basis vector j to images[j], as
// vectors over the source basis. Deterministic: one vector per image that is
// dependent on the earlier ones.
std::vector<SparseVec> kernel_of_images(const std::vector<SparseVec>& images, std::size_t target_dim);
// Members of `space` (in order) that are independent modulo `sub` and each other.
std::vector<SparseVec> complement_representatives(std::size_t dim, const std::vector<SparseVec>& sub,
                                                  const std::vector<SparseVec>& space);

}  // namespace taut
