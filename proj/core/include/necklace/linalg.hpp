#pragma once

#include "necklace/error.hpp"
#include "necklace/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace necklace {

/// Sparse matrix over exact rationals, coordinate storage.
/// No explicit zeros are kept; (row, col) pairs are unique after construction.
class SparseExactMatrix {
  public:
    struct Entry {
        std::size_t row, col;
        Rational value;
    };

    SparseExactMatrix() = default;
    SparseExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nnz() const { return entries_.size(); }
    const std::vector<Entry>& entries() const { return entries_; }

    /// Accumulates into (r, c); zero results are dropped on normalize().
    void add(std::size_t r, std::size_t c, const Rational& v);
    void set(std::size_t r, std::size_t c, const Rational& v) { add(r, c, v); }

    /// Merges duplicate coordinates and drops zeros. Called automatically by
    /// the queries below; cheap when already normal.
    void normalize() const;

    SparseExactMatrix transposed() const;
    SparseExactMatrix multiply(const SparseExactMatrix& rhs) const;
    bool is_zero() const;

    /// Exact rank by integer fraction-free (Bareiss) elimination with a
    /// Markowitz-style pivot heuristic.
    std::size_t rank() const;

    /// Dense column basis of the kernel (rational RREF path).
    std::vector<std::vector<Rational>> kernel_basis() const;

    /// Coordinate triplet text form: header "rows cols nnz", then
    /// "row col p/q" per line.
    void write(std::ostream& os) const;
    static SparseExactMatrix read(std::istream& is);

  private:
    std::size_t rows_ = 0, cols_ = 0;
    mutable std::vector<Entry> entries_;
    mutable bool dirty_ = false;
};

/// dim B - rank(d_in) - rank(d_out) for a two-step complex A --d_in--> B --d_out--> C.
/// Verifies d_out * d_in = 0 first and throws InputError with a witness column
/// if the pair does not compose to zero.
std::size_t homology_rank(const SparseExactMatrix& d_in, const SparseExactMatrix& d_out);

} // namespace necklace
