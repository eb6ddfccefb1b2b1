#pragma once

#include "yangian/module.hpp"

#include <optional>
#include <string>
#include <vector>

namespace yangian {

/// Location where the Yangian relation fails (indices 1-based).
struct RttWitness {
    int i = 0, j = 0, k = 0, l = 0;
    Rational u0, v0;
    int row = 0, col = 0;
    Rational lhs, rhs;
    std::string str() const;
};

struct RttReport {
    bool pass = true;
    int grid_size = 0;  // points per variable
    std::optional<RttWitness> witness;
};

/// Checks (u-v)[T_ij(u), T_kl(v)] = T_kj(u) T_il(v) - T_kj(v) T_il(u) for all
/// index tuples on a degree-complete grid of integer points avoiding the poles.
RttReport check_rtt(const YangianModule& m);

/// R(u0-v0) T_1(u0) T_2(v0) = T_2(v0) T_1(u0) R(u0-v0) at one point, with the
/// full n^2 dim matrices assembled. Independent of check_rtt.
bool rtt_matrix_form_holds(const YangianModule& m, const Rational& u0, const Rational& v0);

/// Basis index groups of equal gl_n weight, when every T_kk^{(1)} is diagonal.
std::optional<std::vector<std::vector<int>>> weight_blocks(const YangianModule& m);

/// Basis of the common kernel of `ops` (all dim x dim), normalized so the
/// first nonzero coordinate is 1.
std::vector<Vector> joint_kernel(const std::vector<SparseMatrix>& ops, int dim,
                                 const std::optional<std::vector<std::vector<int>>>& blocks = std::nullopt);

/// Lambda_1(u), ..., Lambda_n(u) when v is a common eigenvector of all T_ii(u).
std::optional<std::vector<RatFunc>> eigen_series(const YangianModule& m, const Vector& v);

struct HighestWeightData {
    std::vector<Vector> vectors;
    std::vector<std::optional<std::vector<RatFunc>>> eigen;
};

HighestWeightData highest_weight(const YangianModule& m);

/// Closed-form Lambda_1(u), ..., Lambda_n(u) of the distinguished vector of a
/// standard module, as stated for its tensor-factor form. With `corrected`, the
/// theta = +1 values for i < n also carry prod_{a <= p} (u + z_a - 1)/(u + z_a),
/// which the direct computation shows is needed whenever p >= 1 and n >= 2.
std::vector<RatFunc> standard_hw_eigenvalues(const ModuleParams& params, bool corrected = false);

/// Monic P with P(u + 1/2) / P(u - 1/2) = ratio; throws "not extractable".
Poly drinfeld_from_ratio(const RatFunc& ratio);

struct DrinfeldData {
    std::vector<Poly> polys;  // P_1, ..., P_{n-1}
    RatFunc lambda_n;         // normalizing series reported alongside
};

DrinfeldData drinfeld(const YangianModule& m, const Vector& v);

/// True iff a T^1 = T^2 a for every T_ij(u), by exact coefficient comparison.
bool intertwines(const SparseMatrix& a, const YangianModule& source, const YangianModule& target);
/// Same relation evaluated on a degree-complete grid of points.
bool intertwines_on_grid(const SparseMatrix& a, const YangianModule& source, const YangianModule& target);

/// An invertible intertwiner source -> target if one exists in the hom space.
std::optional<SparseMatrix> modules_isomorphic(const YangianModule& source, const YangianModule& target);

}  // namespace yangian
