#pragma once

#include <vector>

#include "semidual/algebra.hpp"

namespace semidual::artin {

// Matrix of algebra elements; entries[r][c] holds basis coefficients.
struct RMatrix {
    std::vector<std::vector<FpVec>> entries;

    int rows() const { return int(entries.size()); }
    int cols() const { return entries.empty() ? 0 : int(entries[0].size()); }
};

// Minimal free resolution of a finite module, computed one stage at a time.
// Stage i provides beta_i, the generator degrees of F_i, and for i >= 1 the
// differential F_i -> F_{i-1}.  Degree bookkeeping is trivial (all zero) for
// ungraded modules; for graded modules every linear-algebra step is restricted
// to one internal degree at a time.
class ResolutionBuilder {
public:
    explicit ResolutionBuilder(FiniteModule M);

    void extend_to(int i);
    int computed() const { return int(betas_.size()) - 1; }

    int beta(int i);
    const std::vector<int>& gen_degrees(int i);
    const RMatrix& map(int i); // differential F_i -> F_{i-1}, i >= 1
    const FiniteModule& target() const { return M_; }

private:
    struct KBlock {
        int degree;
        std::vector<int> cols;       // ambient coordinates of this degree
        FpMat basis;                 // kernel vectors over those coordinates
        std::vector<int> free_local; // identity columns of the basis
    };

    void compute_stage();
    std::vector<KBlock> blocked_kernel(
        const std::vector<std::vector<std::pair<int, uint8_t>>>& columns,
        const std::vector<int>& col_degrees, const std::vector<int>& row_degrees);

    FiniteModule M_;
    AlgebraPtr A_;
    bool graded_;
    std::vector<int> betas_;
    std::vector<std::vector<int>> gdegs_;
    std::vector<RMatrix> maps_; // maps_[0] stays empty
    std::vector<KBlock> kernel_;
    std::vector<int> prev_fdeg_; // coordinate degrees of the last F_i
};

std::vector<int> betti_numbers(const FiniteModule& M, int i_max);

// dim_k Ext^i(M, N) computed from Hom(F_., N) with F_. built lazily from a
// shared resolution of M.
class ExtCalculator {
public:
    ExtCalculator(ResolutionBuilder& res, FiniteModule N);
    int ext_dim(int i);

private:
    int rank_of(int i); // rank of Hom(F_{i-1}, N) -> Hom(F_i, N)
    ResolutionBuilder& res_;
    FiniteModule N_;
    std::vector<FpMat> act_; // action of each algebra basis monomial on N
    std::vector<int> ranks_; // ranks_[i] = rank of the map into stage i
};

class TorCalculator {
public:
    TorCalculator(ResolutionBuilder& res, FiniteModule N);
    int tor_dim(int i);

private:
    int rank_of(int i); // rank of F_i (x) N -> F_{i-1} (x) N
    ResolutionBuilder& res_;
    FiniteModule N_;
    std::vector<FpMat> act_;
    std::vector<int> ranks_;
};

std::vector<int> ext_dims(const FiniteModule& M, const FiniteModule& N, int i_max);
std::vector<int> tor_dims(const FiniteModule& M, const FiniteModule& N, int i_max);

// Consistency checks on a computed resolution: consecutive differentials
// compose to zero and no entry has a unit coefficient.
bool resolution_exactness_ok(ResolutionBuilder& res, int i_max);
bool resolution_minimal_ok(ResolutionBuilder& res, int i_max);

// Monomial actions of every algebra basis element on N, indexed like the
// algebra basis.
std::vector<FpMat> module_action_table(const FiniteModule& N);

} // namespace semidual::artin
