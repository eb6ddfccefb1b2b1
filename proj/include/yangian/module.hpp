#pragma once

#include "yangian/fock.hpp"
#include "yangian/poly.hpp"

#include <string>
#include <vector>

namespace yangian {

/// Matrix polynomial in u, coefficients lowest degree first; all of equal shape.
using MatPoly = std::vector<SparseMatrix>;

/// p(u) * s(u) for a matrix polynomial p of dim x dim matrices; trailing zeros trimmed.
MatPoly matpoly_times(const MatPoly& p, const Poly& s, int dim);

/// Finite-dimensional Y(gl_n)-module: T_ij(u) = P_ij(u) / d(u) with d monic.
/// Indices in the C++ interface are 0-based.
class YangianModule {
public:
    YangianModule() = default;
    YangianModule(int n, int dim, std::vector<std::string> basis, std::vector<MatPoly> numerators, Poly den);

    int n() const { return n_; }
    int dim() const { return dim_; }
    const std::vector<std::string>& basis() const { return basis_; }
    const Poly& den() const { return den_; }
    const MatPoly& numerator(int i, int j) const { return p_[static_cast<size_t>(i * n_ + j)]; }
    /// Highest power of u appearing in any numerator.
    int numerator_degree() const;

    /// P_ij(u0)
    SparseMatrix eval_numerator(int i, int j, const Rational& u0) const;
    /// T_ij(u0); throws at a pole.
    SparseMatrix eval(int i, int j, const Rational& u0) const;
    /// Coefficients T_ij^{(0)}, ..., T_ij^{(order)} of the expansion in u^{-1}.
    std::vector<SparseMatrix> series(int i, int j, int order) const;
    /// T_ij(u) as a matrix of reduced rational functions.
    std::vector<std::vector<RatFunc>> entry_functions(int i, int j) const;

    /// Every nonzero coefficient matrix of every P_ij (the generators of the action).
    std::vector<SparseMatrix> generator_matrices() const;

private:
    int n_ = 0;
    int dim_ = 0;
    std::vector<std::string> basis_;
    std::vector<MatPoly> p_;
    Poly den_{1};
};

/// Equal T-matrices as rational functions.
bool same_action(const YangianModule& a, const YangianModule& b);

YangianModule make_trivial(int n);
/// V_z (dual = false) or V'_z (dual = true).
YangianModule make_vector(int n, const Rational& z, bool dual);
/// Omega_z (dual = false) or Omega'_z (dual = true).
YangianModule make_omega(int n, const Rational& z, bool dual);

enum class PhiVariant { Plain, Prime, Tilde };
/// Degree-N component of Phi_z (plain), Phi'_z (prime), or the tilde module.
YangianModule make_phi(int theta, int n, int degree, const Rational& z, PhiVariant variant);

YangianModule tensor(const YangianModule& a, const YangianModule& b);
YangianModule tensor(const std::vector<YangianModule>& factors);
/// Pull-back through tau_z: T(u) -> T(u - z).
YangianModule shift(const YangianModule& m, const Rational& z);
/// T(u) -> g(u) T(u); g must tend to 1 at infinity.
YangianModule twist_similarity(const YangianModule& m, const RatFunc& g);
/// Restriction to an invariant subspace spanned by the columns of `basis`
/// (given as vectors); throws if the subspace is not invariant.
YangianModule submodule(const YangianModule& m, const std::vector<Vector>& basis);

/// [T_kk^{(1)}, P_ij(u)] = (delta_ki - delta_kj) P_ij(u) for all i, j, k.
bool weight_shift_holds(const YangianModule& m);

/// Parameters of a standard rational module.
struct ModuleParams {
    int theta = 1;
    int n = 1;
    int p = 0;
    int q = 0;
    std::vector<Rational> mu;
    std::vector<int> nu;

    int m() const { return p + q; }
    /// rho_a = 1 - a, with a 1-based.
    Rational rho(int a) const { return Rational(1 - a); }
    /// Spectral parameter mu_a + rho_a of factor a (1-based).
    Rational z(int a) const { return mu[static_cast<size_t>(a - 1)] + rho(a); }
    bool is_p_type(int a) const { return a <= p; }
    /// delta'_a
    int delta_prime(int a) const { return a <= p ? 1 : -1; }
    Rational lambda(int a) const;
    /// nu'_a (meaningful for theta = -1)
    int nu_prime(int a) const;
    /// labels of mu + rho - theta (n/2) delta'
    Rational mu_star(int a) const;
    /// labels of lambda + rho + (n/2) delta'
    Rational lambda_star(int a) const;

    /// Throws on structural errors; when `require_generic`, also on
    /// mu_a - mu_b in Z, naming the pair.
    void validate(bool require_generic = true) const;
};

struct StandardModule {
    ModuleParams params;
    std::vector<YangianModule> psi_factors;  // tilde for p-type, plain for q-type
    std::vector<YangianModule> phi_factors;  // prime for p-type, plain for q-type
    std::vector<Vector> factor_hw;           // distinguished vector of each factor
    YangianModule psi_form;
    YangianModule phi_form;
    Vector hw_vector;                        // tensor product of factor_hw
};

/// Distinguished highest-weight monomial of factor a in its Fock basis.
Vector factor_hw_vector(const ModuleParams& params, int a);
YangianModule standard_factor(const ModuleParams& params, int a, bool psi_form);
/// Product of the Omega*-factors separating the two forms.
RatFunc omega_factor(const ModuleParams& params);
StandardModule build_standard(const ModuleParams& params, bool require_generic = true);

Vector kron(const Vector& a, const Vector& b);

}  // namespace yangian
