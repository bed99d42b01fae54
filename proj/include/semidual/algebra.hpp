#pragma once

#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "semidual/fpmat.hpp"
#include "semidual/monomial.hpp"

namespace semidual::artin {

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class ArtinianAlgebra;
using AlgebraPtr = std::shared_ptr<const ArtinianAlgebra>;

// Finite-dimensional monomial quotient algebra S/I over F_p with its
// standard-monomial basis, ordered by degree then lexicographically.
class ArtinianAlgebra {
public:
    static AlgebraPtr create(const mono::MonomialIdeal& I, int p);

    int p() const { return p_; }
    int dim() const { return int(basis_.size()); }
    int nvars() const { return ideal_.context.n(); }
    int edim() const { return edim_; }
    int socle_dim() const { return socle_dim_; }
    int max_degree() const { return degrees_.empty() ? 0 : degrees_.back(); }
    bool gorenstein() const { return socle_dim_ == 1; }

    const mono::MonomialIdeal& ideal() const { return ideal_; }
    const std::vector<mono::Monomial>& basis() const { return basis_; }
    const std::vector<int>& degrees() const { return degrees_; }

    // basis index of the product of basis monomials, or -1 when it lies in I
    int product(int a, int b) const { return mult_[a][b]; }
    // basis index of x_i * basis[b], or -1
    int var_product(int i, int b) const { return var_mult_[i][b]; }
    int index_of(const mono::Monomial& m) const;

    // left multiplication by x_i on the regular module
    FpMat var_action(int i) const;

    bool same_as(const ArtinianAlgebra& o) const {
        return p_ == o.p_ && ideal_ == o.ideal_;
    }

private:
    ArtinianAlgebra() = default;
    mono::MonomialIdeal ideal_;
    int p_ = 2, edim_ = 0, socle_dim_ = 0;
    std::vector<mono::Monomial> basis_;
    std::vector<int> degrees_;
    std::vector<std::vector<int>> mult_;
    std::vector<std::vector<int>> var_mult_;
};

// Finite module: a vector space with one commuting action matrix per variable.
// Degrees are optional; when present they are normalized to start at 0 and
// every action raises degree by exactly 1.
struct FiniteModule {
    AlgebraPtr algebra;
    std::vector<FpMat> actions;
    std::optional<std::vector<int>> degrees;

    int dim() const { return actions.empty() ? 0 : actions[0].cols(); }
    bool graded() const { return degrees.has_value(); }
};

FiniteModule make_module(AlgebraPtr A, std::vector<FpMat> actions,
                         std::optional<std::vector<int>> degrees, bool validate = true);

FiniteModule regular_module(AlgebraPtr A);
FiniteModule zero_module(AlgebraPtr A);

// Hom_k(M, k) with transposed actions and negated degrees.
FiniteModule matlis_dual(const FiniteModule& M);

// Action matrix of the basis monomial with the given exponents.
FpMat monomial_action(const FiniteModule& M, const mono::Monomial& m);
// Action of a general algebra element given by basis coefficients.
FpMat element_action(const FiniteModule& M, const FpVec& coeffs);

// dim M / mM and a choice of homogeneous coordinate generators.
struct MinimalGenerators {
    std::vector<FpVec> vectors;
    std::vector<int> degrees; // empty when M is ungraded
};
MinimalGenerators minimal_module_generators(const FiniteModule& M);
int beta0(const FiniteModule& M);

struct HomModule {
    FiniteModule mod;
    std::vector<FpMat> maps; // phi_h : M -> N as dimN x dimM matrices
};
HomModule hom_module(const FiniteModule& M, const FiniteModule& N);

// M (x)_R N with the induced action; also returns the k-linear projection
// from M (x)_k N (coordinate (a,b) = a*dimN + b) onto the chosen basis.
struct TensorProduct {
    FiniteModule mod;
    std::vector<int> basis_coords; // ambient coordinates representing the basis
    FpMat projection;              // dim(mod) x (dimM*dimN)
};
TensorProduct tensor_product(const FiniteModule& M, const FiniteModule& N);

// R^b with the componentwise regular action.
FiniteModule free_module(AlgebraPtr A, int rank);

// Cokernel of the map R^{cols} -> R^{rows} given by a matrix of algebra
// elements.  Ungraded in general.
FiniteModule cokernel(AlgebraPtr A, const std::vector<std::vector<FpVec>>& entries);

// R/J for a monomial ideal J in the algebra's context (graded).
FiniteModule cyclic_quotient(AlgebraPtr A, const mono::MonomialIdeal& J);

AlgebraPtr product_algebra(const ArtinianAlgebra& A, const ArtinianAlgebra& B);
// M (x)_k N over product_algebra(A, B); A-variables act on the left factor.
FiniteModule external_tensor(const FiniteModule& M, const FiniteModule& N, AlgebraPtr AB);

struct HomothetyResult {
    bool bijective;
    int hom_dim;
    std::string witness; // empty when bijective
};
HomothetyResult homothety_check(const FiniteModule& M);

enum class IsoVerdict { Iso, NotIso, ProbablyNotIso };
IsoVerdict iso_test(const FiniteModule& M, const FiniteModule& N, uint64_t seed = 17);

} // namespace semidual::artin
