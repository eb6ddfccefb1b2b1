#include "yangian/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace yangian {

// ---------------------------------------------------------------- RatMatrix

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<Vector>& rows, int cols) {
    RatMatrix m(static_cast<int>(rows.size()), cols);
    for (int r = 0; r < m.rows(); ++r) {
        if (static_cast<int>(rows[static_cast<size_t>(r)].size()) != cols)
            throw Error("from_rows: ragged input");
        for (int c = 0; c < cols; ++c) m(r, c) = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
    }
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Vector RatMatrix::apply(std::span<const Rational> v) const {
    if (static_cast<int>(v.size()) != cols_) throw Error("apply: dimension mismatch");
    Vector out(static_cast<size_t>(rows_));
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (!(*this)(r, c).is_zero() && !v[static_cast<size_t>(c)].is_zero())
                out[static_cast<size_t>(r)].add_mul((*this)(r, c), v[static_cast<size_t>(c)]);
    return out;
}

bool RatMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x.is_zero(); });
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix product: dimension mismatch");
    RatMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) out(i, j).add_mul(x, b(k, j));
        }
    return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix sum: dimension mismatch");
    RatMatrix out = a;
    for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += b.a_[i];
    return out;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix difference: dimension mismatch");
    RatMatrix out = a;
    for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] -= b.a_[i];
    return out;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
    RatMatrix out = a;
    for (auto& x : out.a_) x *= s;
    return out;
}

// ------------------------------------------------------------- SparseMatrix

SparseMatrix SparseMatrix::identity(int n, const Rational& scale) {
    SparseMatrix m(n, n);
    if (scale.is_zero()) return m;
    for (int i = 0; i < n; ++i) m.data_[static_cast<size_t>(i)].emplace_back(i, scale);
    return m;
}

SparseMatrix SparseMatrix::from_dense(const RatMatrix& d) {
    SparseMatrix m(d.rows(), d.cols());
    for (int r = 0; r < d.rows(); ++r)
        for (int c = 0; c < d.cols(); ++c)
            if (!d(r, c).is_zero()) m.data_[static_cast<size_t>(r)].emplace_back(c, d(r, c));
    return m;
}

SparseMatrix SparseMatrix::unit(int rows, int cols, int r, int c) {
    SparseMatrix m(rows, cols);
    m.data_[static_cast<size_t>(r)].emplace_back(c, Rational(1));
    return m;
}

Rational SparseMatrix::at(int r, int c) const {
    const Row& row = data_[static_cast<size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) return it->second;
    return Rational(0);
}

size_t SparseMatrix::nnz() const {
    size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

bool SparseMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Row& r) { return r.empty(); });
}

void SparseMatrix::add(int r, int c, const Rational& v) {
    if (v.is_zero()) return;
    Row& row = data_[static_cast<size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        it->second += v;
        if (it->second.is_zero()) row.erase(it);
    } else {
        row.insert(it, Entry(c, v));
    }
}

void SparseMatrix::set_row(int r, Row row) {
    std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    data_[static_cast<size_t>(r)] = std::move(row);
}

RatMatrix SparseMatrix::to_dense() const {
    RatMatrix d(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[static_cast<size_t>(r)]) d(r, c) = v;
    return d;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[static_cast<size_t>(r)])
            t.data_[static_cast<size_t>(c)].emplace_back(r, v);
    return t;
}

SparseMatrix SparseMatrix::select_columns(std::span<const int> cols) const {
    std::vector<int> where(static_cast<size_t>(cols_), -1);
    for (size_t k = 0; k < cols.size(); ++k) where[static_cast<size_t>(cols[k])] = static_cast<int>(k);
    SparseMatrix out(rows_, static_cast<int>(cols.size()));
    for (int r = 0; r < rows_; ++r) {
        Row row;
        for (const auto& [c, v] : data_[static_cast<size_t>(r)])
            if (where[static_cast<size_t>(c)] >= 0) row.emplace_back(where[static_cast<size_t>(c)], v);
        out.set_row(r, std::move(row));
    }
    return out;
}

SparseMatrix SparseMatrix::select_rows(std::span<const int> rows) const {
    SparseMatrix out(static_cast<int>(rows.size()), cols_);
    for (size_t k = 0; k < rows.size(); ++k) out.data_[k] = data_[static_cast<size_t>(rows[k])];
    return out;
}

Vector SparseMatrix::apply(std::span<const Rational> v) const {
    if (static_cast<int>(v.size()) != cols_) throw Error("apply: dimension mismatch");
    Vector out(static_cast<size_t>(rows_));
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, x] : data_[static_cast<size_t>(r)])
            if (!v[static_cast<size_t>(c)].is_zero()) out[static_cast<size_t>(r)].add_mul(x, v[static_cast<size_t>(c)]);
    return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw Error("sparse product: dimension mismatch");
    SparseMatrix out(a.rows_, b.cols_);
    std::vector<Rational> acc(static_cast<size_t>(b.cols_));
    std::vector<char> touched(static_cast<size_t>(b.cols_), 0);
    std::vector<int> cols;
    for (int i = 0; i < a.rows_; ++i) {
        cols.clear();
        for (const auto& [k, x] : a.data_[static_cast<size_t>(i)]) {
            for (const auto& [j, y] : b.data_[static_cast<size_t>(k)]) {
                if (!touched[static_cast<size_t>(j)]) {
                    touched[static_cast<size_t>(j)] = 1;
                    cols.push_back(j);
                }
                acc[static_cast<size_t>(j)].add_mul(x, y);
            }
        }
        std::sort(cols.begin(), cols.end());
        SparseMatrix::Row& row = out.data_[static_cast<size_t>(i)];
        for (int j : cols) {
            auto& v = acc[static_cast<size_t>(j)];
            if (!v.is_zero()) row.emplace_back(j, v);
            v = Rational(0);
            touched[static_cast<size_t>(j)] = 0;
        }
    }
    return out;
}

SparseMatrix SparseMatrix::combine(const Rational& a, const SparseMatrix& o, const Rational& b) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("sparse combine: dimension mismatch");
    SparseMatrix out(rows_, cols_);
    for (int r = 0; r < rows_; ++r) {
        const Row& x = data_[static_cast<size_t>(r)];
        const Row& y = o.data_[static_cast<size_t>(r)];
        Row& z = out.data_[static_cast<size_t>(r)];
        size_t i = 0, j = 0;
        while (i < x.size() || j < y.size()) {
            if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
                if (!a.is_zero()) z.emplace_back(x[i].first, a * x[i].second);
                ++i;
            } else if (i == x.size() || y[j].first < x[i].first) {
                if (!b.is_zero()) z.emplace_back(y[j].first, b * y[j].second);
                ++j;
            } else {
                Rational v = a * x[i].second;
                v.add_mul(b, y[j].second);
                if (!v.is_zero()) z.emplace_back(x[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
    }
    return out;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) { return a.combine(1, b, 1); }
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return a.combine(1, b, -1); }
SparseMatrix operator*(const Rational& s, const SparseMatrix& a) {
    SparseMatrix out(a.rows_, a.cols_);
    if (s.is_zero()) return out;
    out.data_ = a.data_;
    for (auto& row : out.data_)
        for (auto& e : row) e.second *= s;
    return out;
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < b.rows(); ++k) {
            SparseMatrix::Row row;
            for (const auto& [j, x] : a.row(i))
                for (const auto& [l, y] : b.row(k)) row.emplace_back(j * b.cols() + l, x * y);
            out.set_row(i * b.rows() + k, std::move(row));
        }
    return out;
}

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; }

// -------------------------------------------------------------- elimination

EchelonForm row_echelon(const RatMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    // integer-cleared working copy, zero rows dropped
    std::vector<std::vector<mpz_class>> a;
    a.reserve(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r) {
        mpz_class l = 1;
        bool nonzero = false;
        for (int c = 0; c < cols; ++c) {
            const Rational& x = m(r, c);
            if (x.is_zero()) continue;
            nonzero = true;
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.raw().get_den_mpz_t());
        }
        if (!nonzero) continue;
        std::vector<mpz_class> row(static_cast<size_t>(cols));
        for (int c = 0; c < cols; ++c) {
            const Rational& x = m(r, c);
            if (x.is_zero()) continue;
            row[static_cast<size_t>(c)] = x.raw().get_num() * (l / x.raw().get_den());
        }
        a.push_back(std::move(row));
    }
    const int n = static_cast<int>(a.size());

    std::vector<int> pivots;
    mpz_class prev = 1;
    int prow = 0;
    mpz_class t1, t2;
    for (int col = 0; col < cols && prow < n; ++col) {
        int sel = -1;
        for (int i = prow; i < n; ++i)
            if (sgn(a[static_cast<size_t>(i)][static_cast<size_t>(col)]) != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(a[static_cast<size_t>(sel)], a[static_cast<size_t>(prow)]);
        const auto& prow_v = a[static_cast<size_t>(prow)];
        const mpz_class& piv = prow_v[static_cast<size_t>(col)];
        for (int i = prow + 1; i < n; ++i) {
            auto& ri = a[static_cast<size_t>(i)];
            const mpz_class lead = ri[static_cast<size_t>(col)];
            for (int j = col + 1; j < cols; ++j) {
                auto& x = ri[static_cast<size_t>(j)];
                const auto& y = prow_v[static_cast<size_t>(j)];
                if (sgn(lead) == 0) {
                    if (sgn(x) == 0) continue;
                    mpz_mul(t1.get_mpz_t(), piv.get_mpz_t(), x.get_mpz_t());
                } else {
                    mpz_mul(t1.get_mpz_t(), piv.get_mpz_t(), x.get_mpz_t());
                    mpz_mul(t2.get_mpz_t(), lead.get_mpz_t(), y.get_mpz_t());
                    mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
                }
                mpz_divexact(x.get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
            }
            ri[static_cast<size_t>(col)] = 0;
        }
        prev = piv;
        pivots.push_back(col);
        ++prow;
    }

    const int rk = static_cast<int>(pivots.size());
    EchelonForm out;
    out.pivots = pivots;
    out.reduced = RatMatrix(rk, cols);
    for (int r = 0; r < rk; ++r) {
        const auto& row = a[static_cast<size_t>(r)];
        mpq_class inv(1);
        inv /= mpq_class(row[static_cast<size_t>(pivots[static_cast<size_t>(r)])]);
        for (int c = 0; c < cols; ++c)
            if (sgn(row[static_cast<size_t>(c)]) != 0)
                out.reduced(r, c) = Rational(mpq_class(row[static_cast<size_t>(c)] * inv));
    }
    // back substitution to reduced form
    for (int r = rk - 1; r >= 0; --r) {
        const int pc = pivots[static_cast<size_t>(r)];
        for (int above = 0; above < r; ++above) {
            Rational f = out.reduced(above, pc);
            if (f.is_zero()) continue;
            for (int c = pc; c < cols; ++c)
                if (!out.reduced(r, c).is_zero()) out.reduced(above, c) -= f * out.reduced(r, c);
        }
    }
    return out;
}

std::vector<Vector> nullspace(const RatMatrix& m) {
    EchelonForm e = row_echelon(m);
    const int cols = m.cols();
    std::vector<char> is_pivot(static_cast<size_t>(cols), 0);
    for (int p : e.pivots) is_pivot[static_cast<size_t>(p)] = 1;
    std::vector<Vector> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        Vector v(static_cast<size_t>(cols));
        v[static_cast<size_t>(f)] = 1;
        for (int r = 0; r < e.rank(); ++r) {
            const Rational& x = e.reduced(r, f);
            if (!x.is_zero()) v[static_cast<size_t>(e.pivots[static_cast<size_t>(r)])] = -x;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank(const RatMatrix& m) { return row_echelon(m).rank(); }

bool is_invertible(const RatMatrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

std::vector<Vector> span_basis(const std::vector<Vector>& vectors, int len) {
    if (vectors.empty()) return {};
    EchelonForm e = row_echelon(RatMatrix::from_rows(vectors, len));
    std::vector<Vector> out;
    for (int r = 0; r < e.rank(); ++r) {
        auto row = e.reduced.row(r);
        out.emplace_back(row.begin(), row.end());
    }
    return out;
}

std::string to_string(const Vector& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ")";
    return os.str();
}

}  // namespace yangian

namespace yangian {

namespace {

// x += f * y on sorted sparse rows
void row_axpy(SparseMatrix::Row& x, const Rational& f, const SparseMatrix::Row& y) {
    SparseMatrix::Row out;
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(std::move(x[i++]));
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, f * y[j].second);
            ++j;
        } else {
            Rational v = std::move(x[i].second);
            v.add_mul(f, y[j].second);
            if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    x = std::move(out);
}

}  // namespace

bool SparseEliminator::insert(SparseMatrix::Row row) {
    while (!row.empty()) {
        auto it = pivots_.find(row.front().first);
        if (it == pivots_.end()) break;
        Rational f = -row.front().second;
        row_axpy(row, f, it->second);
    }
    if (row.empty()) return false;
    Rational inv = Rational(1) / row.front().second;
    for (auto& e : row) e.second *= inv;
    int lead = row.front().first;
    pivots_.emplace(lead, std::move(row));
    return true;
}

std::vector<Vector> SparseEliminator::nullspace() const {
    // full reduction: clear each pivot column from the rows above it
    std::map<int, SparseMatrix::Row> red = pivots_;
    for (auto hi = red.rbegin(); hi != red.rend(); ++hi) {
        const int pc = hi->first;
        for (auto lo = red.begin(); lo != red.end() && lo->first < pc; ++lo) {
            auto& r = lo->second;
            auto e = std::lower_bound(r.begin(), r.end(), pc,
                                      [](const SparseMatrix::Entry& a, int c) { return a.first < c; });
            if (e == r.end() || e->first != pc) continue;
            Rational f = -e->second;
            row_axpy(r, f, hi->second);
        }
    }
    std::vector<Vector> basis;
    std::vector<int> free_index(static_cast<size_t>(cols_), -1);
    for (int f = 0; f < cols_; ++f) {
        if (red.count(f)) continue;
        free_index[static_cast<size_t>(f)] = static_cast<int>(basis.size());
        Vector v(static_cast<size_t>(cols_));
        v[static_cast<size_t>(f)] = 1;
        basis.push_back(std::move(v));
    }
    for (const auto& [pc, r] : red)
        for (const auto& [c, x] : r) {
            int k = free_index[static_cast<size_t>(c)];
            if (k >= 0) basis[static_cast<size_t>(k)][static_cast<size_t>(pc)] = -x;
        }
    return basis;
}

}  // namespace yangian
