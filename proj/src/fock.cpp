#include "yangian/fock.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace yangian {

namespace {

int count_before(const Monomial& m, int i) {
    int s = 0;
    for (int k = 0; k < i; ++k) s += m[static_cast<size_t>(k)];
    return s;
}

// Exponent vectors of total degree `left` over variables k..n-1, in
// descending lexicographic order.
void enumerate(int theta, int n, int k, int left, Monomial& cur, std::vector<Monomial>& out) {
    if (k == n - 1) {
        if (theta < 0 && left > 1) return;
        cur[static_cast<size_t>(k)] = left;
        out.push_back(cur);
        cur[static_cast<size_t>(k)] = 0;
        return;
    }
    int top = theta < 0 ? std::min(left, 1) : left;
    for (int e = top; e >= 0; --e) {
        cur[static_cast<size_t>(k)] = e;
        enumerate(theta, n, k + 1, left - e, cur, out);
    }
    cur[static_cast<size_t>(k)] = 0;
}

}  // namespace

std::optional<MonoTerm> mul_x(int theta, int i, const Monomial& m) {
    MonoTerm t{Rational(1), m};
    if (theta < 0) {
        if (m[static_cast<size_t>(i)]) return std::nullopt;
        if (count_before(m, i) % 2) t.coeff = -1;
    }
    ++t.mono[static_cast<size_t>(i)];
    return t;
}

std::optional<MonoTerm> apply_d(int theta, int i, const Monomial& m) {
    int e = m[static_cast<size_t>(i)];
    if (e == 0) return std::nullopt;
    MonoTerm t{Rational(e), m};
    if (theta < 0 && count_before(m, i) % 2) t.coeff = -1;
    --t.mono[static_cast<size_t>(i)];
    return t;
}

std::string monomial_label(const Monomial& m, const std::string& var) {
    std::ostringstream os;
    bool any = false;
    for (size_t k = 0; k < m.size(); ++k) {
        if (!m[k]) continue;
        if (any) os << "*";
        os << var << (k + 1);
        if (m[k] > 1) os << "^" << m[k];
        any = true;
    }
    return any ? os.str() : "1";
}

FockBasis::FockBasis(int theta, int n, int degree) : theta_(theta), n_(n), degree_(degree) {
    if (theta != 1 && theta != -1) throw Error("theta must be +1 or -1");
    if (n < 1) throw Error("number of variables must be positive");
    if (degree < 0) throw Error("degree must be nonnegative");
    Monomial cur(static_cast<size_t>(n), 0);
    enumerate(theta, n, 0, degree, cur, basis_);
}

int FockBasis::index_of(const Monomial& m) const {
    // descending lex order
    auto it = std::lower_bound(basis_.begin(), basis_.end(), m, std::greater<Monomial>());
    if (it != basis_.end() && *it == m) return static_cast<int>(it - basis_.begin());
    return -1;
}

std::vector<std::string> FockBasis::labels() const {
    std::vector<std::string> out;
    for (const auto& m : basis_) out.push_back(monomial_label(m));
    return out;
}

FockBasis enumerate_basis(int theta, int n, int degree) { return FockBasis(theta, n, degree); }

SparseMatrix operator_matrix(const FockBasis& basis, GlKind kind, int i, int j) {
    const int n = basis.n();
    if (i < 1 || i > n || j < 1 || j > n) throw Error("operator index out of range");
    const int theta = basis.theta();
    // (first applied, second applied, scale): operator = scale * second(first(.))
    bool first_is_x = false;
    int first = 0, second = 0;
    Rational scale(1);
    switch (kind) {
        case GlKind::XD:  // x_i d_j
            first = j - 1;
            second = i - 1;
            break;
        case GlKind::DX:  // -theta d_i x_j
            first_is_x = true;
            first = j - 1;
            second = i - 1;
            scale = Rational(-theta);
            break;
        case GlKind::XDrev:  // x_j d_i
            first = i - 1;
            second = j - 1;
            break;
    }
    SparseMatrix out(basis.size(), basis.size());
    for (int col = 0; col < basis.size(); ++col) {
        const Monomial& m = basis[col];
        auto a = first_is_x ? mul_x(theta, first, m) : apply_d(theta, first, m);
        if (!a) continue;
        auto b = first_is_x ? apply_d(theta, second, a->mono) : mul_x(theta, second, a->mono);
        if (!b) continue;
        int row = basis.index_of(b->mono);
        if (row < 0) throw Error("operator_matrix: degree not preserved");
        out.add(row, col, scale * a->coeff * b->coeff);
    }
    return out;
}

}  // namespace yangian
