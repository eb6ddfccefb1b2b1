#pragma once

#include "yangian/rational.hpp"

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace yangian {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    static RatMatrix identity(int n);
    static RatMatrix from_rows(const std::vector<Vector>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    std::span<const Rational> row(int r) const {
        return {a_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)};
    }

    RatMatrix transpose() const;
    Vector apply(std::span<const Rational> v) const;
    bool is_zero() const;

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const Rational& s, const RatMatrix& a);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

/// Row-compressed sparse matrix over Q; rows keep entries sorted by column.
class SparseMatrix {
public:
    using Entry = std::pair<int, Rational>;
    using Row = std::vector<Entry>;

    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows)) {}
    static SparseMatrix identity(int n, const Rational& scale = Rational(1));
    static SparseMatrix from_dense(const RatMatrix& m);
    /// Matrix unit E_{rc} (0-based).
    static SparseMatrix unit(int rows, int cols, int r, int c);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Row& row(int r) const { return data_[static_cast<size_t>(r)]; }
    Rational at(int r, int c) const;
    size_t nnz() const;
    bool is_zero() const;

    /// Adds v to entry (r, c); rows must be finalized with `sort_rows` if built unordered.
    void add(int r, int c, const Rational& v);
    void set_row(int r, Row row);

    RatMatrix to_dense() const;
    SparseMatrix transpose() const;
    SparseMatrix select_columns(std::span<const int> cols) const;
    SparseMatrix select_rows(std::span<const int> rows) const;
    Vector apply(std::span<const Rational> v) const;

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator*(const Rational& s, const SparseMatrix& a);
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// a * this + b * other, entrywise.
    SparseMatrix combine(const Rational& a, const SparseMatrix& other, const Rational& b) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Row> data_;
};

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);

/// Row echelon data from fraction-free elimination.
struct EchelonForm {
    RatMatrix reduced;          // reduced row echelon form (rank rows)
    std::vector<int> pivots;    // pivot column of each row
    int rank() const { return static_cast<int>(pivots.size()); }
};

/// Reduced row echelon form computed with Bareiss elimination on an
/// integer-cleared copy, followed by exact back substitution.
EchelonForm row_echelon(const RatMatrix& m);

/// Basis of {v : M v = 0}. Each basis vector has a 1 at one free column and
/// zeros at the other free columns, ordered by free column.
std::vector<Vector> nullspace(const RatMatrix& m);

/// Incremental exact elimination on sparse rows; suited to tall, very sparse
/// systems such as intertwiner equations.
class SparseEliminator {
public:
    explicit SparseEliminator(int cols) : cols_(cols) {}
    /// Reduces `row` (sorted by column) against the stored pivots and keeps the
    /// remainder. Returns true when the rank grew.
    bool insert(SparseMatrix::Row row);
    int rank() const { return static_cast<int>(pivots_.size()); }
    int cols() const { return cols_; }
    /// Same output convention as nullspace(const RatMatrix&).
    std::vector<Vector> nullspace() const;

private:
    int cols_;
    std::map<int, SparseMatrix::Row> pivots_;  // leading column -> row with leading entry 1
};

int rank(const RatMatrix& m);
bool is_invertible(const RatMatrix& m);
/// Echelon basis of the span of the given vectors (all of length `len`).
std::vector<Vector> span_basis(const std::vector<Vector>& vectors, int len);

std::string to_string(const Vector& v);

}  // namespace yangian
