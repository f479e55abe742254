#include "wittsuper/linalg.hpp"

#include <algorithm>

namespace wittsuper {

std::vector<size_t> QMatrix::rref() {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t piv = r;
        while (piv < rows_ && a_[piv][c] == 0) ++piv;
        if (piv == rows_) continue;
        std::swap(a_[piv], a_[r]);
        Rational inv = a_[r][c];
        for (size_t j = c; j < cols_; ++j) a_[r][j] /= inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r || a_[i][c] == 0) continue;
            Rational f = a_[i][c];
            for (size_t j = c; j < cols_; ++j) a_[i][j] -= f * a_[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t QMatrix::rank() const { return rank_fraction_free(a_); }

std::vector<std::vector<Rational>> QMatrix::kernel() const {
    QMatrix red = *this;
    std::vector<size_t> pivots = red.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (size_t c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rational> v(cols_, Rational(0));
        v[c] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red.at(r, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> QMatrix::solve(const std::vector<Rational>& b) const {
    QMatrix aug(rows_, cols_ + 1);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) aug.at(r, c) = a_[r][c];
        aug.at(r, cols_) = b[r];
    }
    std::vector<size_t> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
    std::vector<Rational> x(cols_, Rational(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
    return x;
}

size_t rank_fraction_free(const std::vector<std::vector<Rational>>& m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    // Clear denominators per row.
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (size_t r = 0; r < rows; ++r) {
        Integer lcm = 1;
        for (size_t c = 0; c < cols; ++c) {
            Integer d = denominator(m[r][c]);
            lcm = lcm / gcd(lcm, d) * d;
        }
        for (size_t c = 0; c < cols; ++c) a[r][c] = numerator(m[r][c]) * (lcm / denominator(m[r][c]));
    }
    size_t rank = 0;
    Integer prev = 1;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t piv = rank;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        for (size_t i = rank + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) a[i][j] = (a[rank][c] * a[i][j] - a[i][c] * a[rank][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

void RowSpace::reduce(std::vector<Rational>& v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rational& c = v[lead_[r]];
        if (c == 0) continue;
        Rational f = c;
        for (size_t j = 0; j < dim_; ++j) v[j] -= f * rows_[r][j];
    }
}

bool RowSpace::insert(std::vector<Rational> v) {
    reduce(v);
    size_t lead = dim_;
    for (size_t j = 0; j < dim_; ++j)
        if (v[j] != 0) {
            lead = j;
            break;
        }
    if (lead == dim_) return false;
    Rational inv = v[lead];
    for (size_t j = 0; j < dim_; ++j) v[j] /= inv;
    // keep existing rows reduced against the new one
    for (size_t r = 0; r < rows_.size(); ++r) {
        Rational f = rows_[r][lead];
        if (f == 0) continue;
        for (size_t j = 0; j < dim_; ++j) rows_[r][j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    lead_.push_back(lead);
    return true;
}

bool RowSpace::contains(std::vector<Rational> v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const Rational& c) { return c == 0; });
}

}  // namespace wittsuper
