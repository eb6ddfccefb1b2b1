#pragma once

#include "yangian/module.hpp"

#include <optional>
#include <string>
#include <vector>

namespace yangian {

/// Basis of {A : A T^1_ij(u) = T^2_ij(u) A for all i, j}, A of shape
/// dim2 x dim1, in reduced echelon order of the row-major entries.
std::vector<SparseMatrix> hom_space(const YangianModule& source, const YangianModule& target);

/// Which closed-form case a positive root falls into.
enum class RootCase { PP, QQ, PQ };

struct ZetaFactor {
    int b = 0, c = 0;  // positive root (b, c), b < c, 1-based
    RootCase kind = RootCase::PP;
    Rational value;
};

/// z_eta from the closed-form tables, using the lambda* labels of ModuleParams.
ZetaFactor zeta_factor(const ModuleParams& params, int b, int c);
/// Scalar of the elementary step swapping factors b < c, with H_a
/// replaced by -mu*_b + mu*_c - 1. Throws "resonant parameters" at a pole.
Rational step_fraction(const ModuleParams& params, int b, int c);

struct Intertwiner {
    YangianModule source;
    YangianModule target;
    SparseMatrix matrix;       // target.dim x source.dim
    Rational hw_scalar{1};
    std::vector<int> word;     // positions, 1-based
    std::vector<int> order;    // order[k] = original factor at position k+1 of the target
};

/// Positive roots (b, c) inverted by the permutation of a word, in the order
/// the steps create them (the last letter acts first).
std::vector<std::pair<int, int>> inversion_sequence(int m, const std::vector<int>& word);
bool is_reduced(int m, const std::vector<int>& word);

/// Standard module with its factors in the given arrangement (order[k] = original factor index).
YangianModule arranged_module(const ModuleParams& params, const std::vector<int>& order);
/// Tensor product of the distinguished factor vectors in the given arrangement,
/// carrying the Koszul sign of the reordering for theta = -1.
Vector arranged_hw_vector(const ModuleParams& params, const std::vector<int>& order);

/// Elementary intertwiner at position a applied to the arrangement `order`.
Intertwiner step(const ModuleParams& params, const std::vector<int>& order, int a);
Intertwiner step(const ModuleParams& params, int a);
/// word = (c_1, ..., c_k) realizes sigma = sigma_{c_1} ... sigma_{c_k}; c_k acts first.
Intertwiner compose_word(const ModuleParams& params, const std::vector<int>& word);

struct HwImageReport {
    bool pass = false;
    Rational expected;   // product of z_eta over the inversion set
    Rational observed;   // coefficient of the target vector in the image (if proportional)
    bool proportional = false;
    std::vector<ZetaFactor> factors;
};

HwImageReport check_hw_image(const Intertwiner& op, const ModuleParams& params);

/// Unnormalized swap of the two factors of a non-generic standard module
/// when the hom space is one-dimensional; used for the kernel testbed.
Intertwiner raw_swap(const ModuleParams& params);

struct QuotientModule {
    YangianModule parent;
    std::vector<Vector> kernel_basis;
    YangianModule quotient;  // valid only when kernel is proper
    bool kernel_invariant = false;
    bool quotient_matches_image = false;
};

QuotientModule kernel_quotient(const Intertwiner& op);

/// Quotient of m by an invariant subspace, on the complement of its pivot coordinates.
YangianModule quotient_module(const YangianModule& m, const std::vector<Vector>& sub);
/// Submodule spanned by the columns of an operator.
YangianModule image_module(const SparseMatrix& a, const YangianModule& target);

struct IrreducibilityVerdict {
    bool irreducible = false;
    int endomorphism_dim = 0;
    int highest_weight_dim = 0;
    int cyclic_span_dim = 0;
};

/// Irreducible iff End is 1-dimensional, the highest-weight space is a line,
/// and that line generates the module.
IrreducibilityVerdict irreducibility_test(const YangianModule& m);
/// Dimension of the span generated from v by all T-coefficient matrices.
int cyclic_span_dim(const YangianModule& m, const Vector& v);

}  // namespace yangian
