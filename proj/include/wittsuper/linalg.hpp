#pragma once

#include <optional>
#include <vector>

#include "wittsuper/rational.hpp"

namespace wittsuper {

// Dense matrix over Q; desk-scale exact elimination.
class QMatrix {
  public:
    QMatrix() = default;
    QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows, std::vector<Rational>(cols, Rational(0))) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rational& at(size_t r, size_t c) { return a_[r][c]; }
    const Rational& at(size_t r, size_t c) const { return a_[r][c]; }

    // Row-reduce in place; returns pivot column indices.
    std::vector<size_t> rref();

    size_t rank() const;

    // Basis of the right kernel (each vector length cols()).
    std::vector<std::vector<Rational>> kernel() const;

    // One solution of A x = b, if consistent.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<std::vector<Rational>> a_;
};

// Fraction-free (Bareiss) rank of an integer matrix; rationals are scaled
// row-wise to integers first.
size_t rank_fraction_free(const std::vector<std::vector<Rational>>& m);

// Incremental exact row space, for span-membership and closure sweeps.
class RowSpace {
  public:
    explicit RowSpace(size_t dim) : dim_(dim) {}
    size_t dim() const { return dim_; }
    size_t rank() const { return rows_.size(); }
    // Returns true if the vector enlarged the space.
    bool insert(std::vector<Rational> v);
    bool contains(std::vector<Rational> v) const;
    std::vector<Rational> reduced(std::vector<Rational> v) const {
        reduce(v);
        return v;
    }
    const std::vector<std::vector<Rational>>& rows() const { return rows_; }

  private:
    void reduce(std::vector<Rational>& v) const;
    size_t dim_;
    std::vector<std::vector<Rational>> rows_;   // reduced, each with leading 1
    std::vector<size_t> lead_;                  // leading column per row
};

}  // namespace wittsuper
