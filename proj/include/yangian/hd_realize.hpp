#pragma once

#include "yangian/fock.hpp"

#include <string>
#include <vector>

namespace yangian {

/// Matrices of x_ai, d_ai on the polynomial space of degree <= D (theta = +1)
/// or on the whole Grassmann algebra (theta = -1) in m*n variables.
/// Indices a, i are 0-based; variable (a, i) has position a*n + i.
class OperatorRealization {
public:
    OperatorRealization(int theta, int m, int n, int p, int D);

    int theta() const { return theta_; }
    int m() const { return m_; }
    int n() const { return n_; }
    int p() const { return p_; }
    /// Truncation degree; the top degree m*n for theta = -1.
    int D() const { return D_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Monomial>& basis() const { return basis_; }

    const SparseMatrix& x(int a, int i) const { return xs_[idx(a, i)]; }
    const SparseMatrix& d(int a, int i) const { return ds_[idx(a, i)]; }
    const SparseMatrix& p_op(int a, int i) const { return ps_[idx(a, i)]; }
    const SparseMatrix& q_op(int a, int i) const { return qs_[idx(a, i)]; }
    /// q_ai p_bj
    const SparseMatrix& ehat(int a, int i, int b, int j) const {
        return es_[idx(a, i) * static_cast<size_t>(m_ * n_) + idx(b, j)];
    }
    /// theta delta_ab n/2 + sum_k ehat(a,k,b,k)
    SparseMatrix zeta(int a, int b) const;

    /// Basis vectors of degree <= D - w, as a dim x k selector; all of them for theta = -1.
    SparseMatrix window(int w) const;

private:
    size_t idx(int a, int i) const { return static_cast<size_t>(a * n_ + i); }

    int theta_, m_, n_, p_, D_;
    std::vector<Monomial> basis_;
    std::vector<int> degree_;
    std::vector<SparseMatrix> xs_, ds_, ps_, qs_, es_;
};

OperatorRealization realize(int theta, int m, int n, int p, int D);

struct IdentityReport {
    bool pass = true;
    long checked = 0;
    int window = 0;       // columns of the safe window used
    std::string witness;  // first failing identity, if any
};

/// d x - theta x d = delta, x x - theta x x = 0, d d - theta d d = 0 and the
/// same three relations for (q, p) in place of (x, d).
IdentityReport check_realization(const OperatorRealization& r);
/// The relations above for x -> q, d -> p substituted into the realization.
IdentityReport check_automorphism(const OperatorRealization& r);
/// The three commutation relations among the ehat operators.
IdentityReport check_e_relations(const OperatorRealization& r);
/// [zeta(E_ab), zeta(E_cd)] = delta_bc zeta(E_ad) - delta_da zeta(E_cb).
IdentityReport check_zeta_homomorphism(const OperatorRealization& r);

enum class GlRep { Defining, TensorSquare };

/// Matrices of a faithful gl_m representation.
struct GlRepresentation {
    int m = 0;
    int dim = 0;
    std::vector<SparseMatrix> e;  // e[a*m+b] = image of E_ab
    const SparseMatrix& E(int a, int b) const { return e[static_cast<size_t>(a * m + b)]; }
};

GlRepresentation gl_representation(int m, GlRep kind);

/// Coefficients X^{(s)}_ab, s = 0..K, of X(u) = (u + theta E^t)^{-1} in a representation.
struct XSeries {
    int theta = 1;
    int order = 0;
    GlRepresentation rep;
    std::vector<std::vector<SparseMatrix>> coeff;  // coeff[s][a*m+b]
    /// Coefficient of u^{-r} in X_ab(u), r >= 1.
    SparseMatrix at(int a, int b, int r) const;
};

/// Built from the explicit sum over c_1, ..., c_s.
XSeries x_series(int theta, const GlRepresentation& rep, int K);

/// (u + theta E^t) X(u) = 1, the product identity and the Yangian relation
/// of the X_ab(u), coefficientwise through total order K.
IdentityReport check_x_identities(const XSeries& s);

/// Yangian relation of alpha_m(T_ij) coefficients with r + s <= K, and
/// vanishing of their commutators with E_ab + zeta(E_ab) up to order K,
/// in rep (x) realization on the safe window.
IdentityReport check_alpha(const OperatorRealization& r, const XSeries& s, int K);

/// Coefficient of u^{-k} of alpha_m(T_ij(u)) in rep (x) realization (k >= 1).
SparseMatrix alpha_coefficient(const OperatorRealization& r, const XSeries& s, int i, int j, int k);

}  // namespace yangian
