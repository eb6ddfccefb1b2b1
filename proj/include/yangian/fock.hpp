#pragma once

#include "yangian/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace yangian {

/// Exponent vector of a monomial; for the Grassmann case every entry is 0 or 1
/// and the monomial is the increasing product of its variables.
using Monomial = std::vector<int>;

/// Signed image of a monomial under a single x or derivative.
struct MonoTerm {
    Rational coeff;
    Monomial mono;
};

/// x_i applied on the left (0-based variable index).
std::optional<MonoTerm> mul_x(int theta, int i, const Monomial& m);
/// Left derivation d_i (0-based variable index).
std::optional<MonoTerm> apply_d(int theta, int i, const Monomial& m);

std::string monomial_label(const Monomial& m, const std::string& var = "x");

/// Ordered monomial basis of the degree-N component of the polynomial
/// (theta = +1) or Grassmann (theta = -1) algebra in n variables.
class FockBasis {
public:
    FockBasis(int theta, int n, int degree);

    int theta() const { return theta_; }
    int n() const { return n_; }
    int degree() const { return degree_; }
    int size() const { return static_cast<int>(basis_.size()); }
    const std::vector<Monomial>& monomials() const { return basis_; }
    const Monomial& operator[](int k) const { return basis_[static_cast<size_t>(k)]; }
    /// Position of a monomial, or -1.
    int index_of(const Monomial& m) const;
    std::vector<std::string> labels() const;

private:
    int theta_;
    int n_;
    int degree_;
    std::vector<Monomial> basis_;
};

/// Basis enumeration; exterior degree above n yields an empty basis.
FockBasis enumerate_basis(int theta, int n, int degree);

enum class GlKind {
    XD,     // x_i d_j
    DX,     // -theta d_i x_j
    XDrev,  // x_j d_i
};

/// Matrix of the named operator on a degree-N component; i, j are 1-based.
SparseMatrix operator_matrix(const FockBasis& basis, GlKind kind, int i, int j);

}  // namespace yangian
