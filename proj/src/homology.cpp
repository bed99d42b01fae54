#include "semidual/homology.hpp"

#include <algorithm>
#include <map>

namespace semidual::artin {

namespace {

// For each algebra basis monomial t > 0, a variable i and predecessor index
// t' with basis[t] = x_i * basis[t'].
std::vector<std::pair<int, int>> predecessor_table(const ArtinianAlgebra& A) {
    std::vector<std::pair<int, int>> pred(A.dim(), {-1, -1});
    std::map<mono::Monomial, int> index;
    for (int t = 0; t < A.dim(); ++t)
        index[A.basis()[t]] = t;
    for (int t = 1; t < A.dim(); ++t) {
        mono::Monomial m = A.basis()[t];
        for (size_t i = 0; i < m.exponents.size(); ++i)
            if (m.exponents[i] > 0) {
                mono::Monomial q = m;
                --q.exponents[i];
                pred[t] = {int(i), index.at(q)};
                break;
            }
    }
    return pred;
}

FpVec algebra_mul(const ArtinianAlgebra& A, const FpVec& a, const FpVec& b) {
    FpVec out(A.dim(), 0);
    int p = A.p();
    for (int s = 0; s < A.dim(); ++s)
        if (a[s])
            for (int t = 0; t < A.dim(); ++t)
                if (b[t]) {
                    int u = A.product(s, t);
                    if (u >= 0)
                        out[u] = uint8_t((out[u] + a[s] * b[t]) % p);
                }
    return out;
}

bool all_zero(const FpVec& v) {
    for (uint8_t x : v)
        if (x)
            return false;
    return true;
}

} // namespace

std::vector<FpMat> module_action_table(const FiniteModule& N) {
    const auto& A = *N.algebra;
    auto pred = predecessor_table(A);
    std::vector<FpMat> act;
    act.reserve(A.dim());
    act.push_back(FpMat::identity(N.dim(), A.p()));
    for (int t = 1; t < A.dim(); ++t)
        act.push_back(N.actions[pred[t].first] * act[pred[t].second]);
    return act;
}

ResolutionBuilder::ResolutionBuilder(FiniteModule M)
    : M_(std::move(M)), A_(M_.algebra), graded_(M_.graded()) {}

void ResolutionBuilder::extend_to(int i) {
    while (computed() < i)
        compute_stage();
}

int ResolutionBuilder::beta(int i) {
    extend_to(i);
    return betas_[i];
}

const std::vector<int>& ResolutionBuilder::gen_degrees(int i) {
    extend_to(i);
    return gdegs_[i];
}

const RMatrix& ResolutionBuilder::map(int i) {
    if (i < 1)
        throw AlgebraError("resolution map index must be >= 1");
    extend_to(i);
    return maps_[i];
}

std::vector<ResolutionBuilder::KBlock> ResolutionBuilder::blocked_kernel(
    const std::vector<std::vector<std::pair<int, uint8_t>>>& columns,
    const std::vector<int>& col_degrees, const std::vector<int>& row_degrees) {
    std::map<int, std::vector<int>> cols_by_deg, rows_by_deg;
    for (size_t c = 0; c < columns.size(); ++c)
        cols_by_deg[col_degrees[c]].push_back(int(c));
    std::vector<int> row_local(row_degrees.size());
    for (size_t r = 0; r < row_degrees.size(); ++r) {
        row_local[r] = int(rows_by_deg[row_degrees[r]].size());
        rows_by_deg[row_degrees[r]].push_back(int(r));
    }
    std::vector<KBlock> out;
    for (auto& [deg, cols] : cols_by_deg) {
        auto rit = rows_by_deg.find(deg);
        int nrows = rit == rows_by_deg.end() ? 0 : int(rit->second.size());
        FpMat block(nrows, int(cols.size()), A_->p());
        for (size_t j = 0; j < cols.size(); ++j)
            for (auto [r, v] : columns[cols[j]])
                block.set(row_local[r], int(j), v);
        KBlock kb;
        kb.degree = deg;
        kb.cols = cols;
        kb.basis = block.kernel_basis(&kb.free_local);
        if (kb.basis.rows() > 0)
            out.push_back(std::move(kb));
    }
    return out;
}

void ResolutionBuilder::compute_stage() {
    int dA = A_->dim(), p = A_->p();
    if (betas_.empty()) {
        MinimalGenerators mg = minimal_module_generators(M_);
        int b0 = int(mg.vectors.size());
        std::vector<int> gdeg = graded_ ? mg.degrees : std::vector<int>(b0, 0);
        auto pred = predecessor_table(*A_);
        std::vector<std::vector<std::pair<int, uint8_t>>> columns(size_t(b0) * dA);
        std::vector<int> coldeg(size_t(b0) * dA, 0);
        for (int j = 0; j < b0; ++j) {
            std::vector<FpVec> w(dA);
            w[0] = mg.vectors[j];
            for (int t = 1; t < dA; ++t)
                w[t] = M_.actions[pred[t].first].apply(w[pred[t].second]);
            for (int t = 0; t < dA; ++t) {
                size_t col = size_t(j) * dA + t;
                if (graded_)
                    coldeg[col] = gdeg[j] + A_->degrees()[t];
                for (int r = 0; r < M_.dim(); ++r)
                    if (w[t][r])
                        columns[col].push_back({r, w[t][r]});
            }
        }
        std::vector<int> rowdeg =
            graded_ ? *M_.degrees : std::vector<int>(M_.dim(), 0);
        kernel_ = blocked_kernel(columns, coldeg, rowdeg);
        prev_fdeg_ = coldeg;
        betas_.push_back(b0);
        gdegs_.push_back(std::move(gdeg));
        maps_.emplace_back();
        return;
    }

    int prev = computed();
    int bprev = betas_[prev];
    int dF = bprev * dA; // ambient dimension holding the current kernel

    // Select minimal generators of the kernel, one internal degree at a time.
    // mK lands in the degree-(d+1) component, whose kernel-basis coordinates
    // are read off at the free columns.
    std::vector<std::pair<int, int>> chosen; // (block index, local row)
    std::vector<int> gdeg;
    for (size_t bi = 0; bi < kernel_.size(); ++bi) {
        const KBlock& blk = kernel_[bi];
        int s = blk.basis.rows();
        std::vector<int> freepos(dF, -1);
        for (int a = 0; a < s; ++a)
            freepos[blk.cols[blk.free_local[a]]] = a;
        RowSpace rs(s, p);
        const KBlock* src = nullptr;
        if (graded_) {
            for (const auto& other : kernel_)
                if (other.degree == blk.degree - 1)
                    src = &other;
        } else {
            src = &blk;
        }
        if (src)
            for (int a = 0; a < src->basis.rows(); ++a)
                for (int i = 0; i < A_->nvars(); ++i) {
                    FpVec row(s, 0);
                    bool nonzero = false;
                    for (int lc = 0; lc < int(src->cols.size()); ++lc) {
                        uint8_t v = src->basis(a, lc);
                        if (!v)
                            continue;
                        int g = src->cols[lc];
                        int t2 = A_->var_product(i, g % dA);
                        if (t2 < 0)
                            continue;
                        int pos = freepos[(g / dA) * dA + t2];
                        if (pos >= 0) {
                            row[pos] = uint8_t((row[pos] + v) % p);
                            nonzero = true;
                        }
                    }
                    if (nonzero)
                        rs.insert(std::move(row));
                }
        for (int a = 0; a < s; ++a) {
            FpVec e(s, 0);
            e[a] = 1;
            if (rs.insert(std::move(e))) {
                chosen.push_back({int(bi), a});
                gdeg.push_back(blk.degree);
            }
        }
    }

    int b = int(chosen.size());
    std::vector<FpVec> gens;
    for (auto [bi, a] : chosen) {
        const KBlock& blk = kernel_[bi];
        FpVec v(dF, 0);
        for (int lc = 0; lc < int(blk.cols.size()); ++lc)
            v[blk.cols[lc]] = blk.basis(a, lc);
        gens.push_back(std::move(v));
    }

    RMatrix d;
    d.entries.assign(bprev, std::vector<FpVec>(b));
    for (int r = 0; r < bprev; ++r)
        for (int c = 0; c < b; ++c) {
            FpVec e(dA);
            for (int t = 0; t < dA; ++t)
                e[t] = gens[c][size_t(r) * dA + t];
            d.entries[r][c] = std::move(e);
        }

    std::vector<std::vector<std::pair<int, uint8_t>>> columns(size_t(b) * dA);
    std::vector<int> coldeg(size_t(b) * dA, 0);
    for (int c = 0; c < b; ++c)
        for (int t = 0; t < dA; ++t) {
            size_t col = size_t(c) * dA + t;
            if (graded_)
                coldeg[col] = gdeg[c] + A_->degrees()[t];
            for (int g = 0; g < dF; ++g) {
                uint8_t v = gens[c][g];
                if (!v)
                    continue;
                int t2 = A_->product(t, g % dA);
                if (t2 >= 0)
                    columns[col].push_back({(g / dA) * dA + t2, v});
            }
        }
    kernel_ = blocked_kernel(columns, coldeg, prev_fdeg_);
    prev_fdeg_ = coldeg;
    betas_.push_back(b);
    gdegs_.push_back(std::move(gdeg));
    maps_.push_back(std::move(d));
}

std::vector<int> betti_numbers(const FiniteModule& M, int i_max) {
    ResolutionBuilder res(M);
    std::vector<int> out;
    for (int i = 0; i <= i_max; ++i)
        out.push_back(res.beta(i));
    return out;
}

namespace {

// Rank of the induced map between the complexes Hom(F_., N) (transpose=true)
// or F_. (x) N (transpose=false), blocked by internal degree when available.
int induced_rank(ResolutionBuilder& res, const FiniteModule& N,
                 const std::vector<FpMat>& act, int i, bool transpose) {
    res.extend_to(i);
    const RMatrix& d = res.map(i);
    int dN = N.dim(), p = N.algebra->p();
    int bi = res.beta(i), bprev = res.beta(i - 1);
    bool graded = res.target().graded() && N.graded();
    const std::vector<int>& gi = res.gen_degrees(i);
    const std::vector<int>& gp = res.gen_degrees(i - 1);

    // transpose=true: rows (c,b') with degree deg_N[b'] - gi[c],
    //                 cols (r,b)  with degree deg_N[b] - gp[r]
    // transpose=false: rows (r,b') with degree gp[r] + deg_N[b'],
    //                  cols (c,b)  with degree gi[c] + deg_N[b]
    auto row_deg = [&](int x, int bb) {
        if (!graded)
            return 0;
        return transpose ? (*N.degrees)[bb] - gi[x] : gp[x] + (*N.degrees)[bb];
    };
    auto col_deg = [&](int x, int bb) {
        if (!graded)
            return 0;
        return transpose ? (*N.degrees)[bb] - gp[x] : gi[x] + (*N.degrees)[bb];
    };
    int nrow_outer = transpose ? bi : bprev;
    int ncol_outer = transpose ? bprev : bi;

    std::map<int, std::vector<int>> rows_by_deg, cols_by_deg;
    std::vector<int> row_local(size_t(nrow_outer) * dN), col_local(size_t(ncol_outer) * dN);
    for (int x = 0; x < nrow_outer; ++x)
        for (int bb = 0; bb < dN; ++bb) {
            int idx = x * dN + bb, dd = row_deg(x, bb);
            row_local[idx] = int(rows_by_deg[dd].size());
            rows_by_deg[dd].push_back(idx);
        }
    for (int x = 0; x < ncol_outer; ++x)
        for (int bb = 0; bb < dN; ++bb) {
            int idx = x * dN + bb, dd = col_deg(x, bb);
            col_local[idx] = int(cols_by_deg[dd].size());
            cols_by_deg[dd].push_back(idx);
        }
    std::map<int, FpMat> blocks;
    for (auto& [dd, cols] : cols_by_deg) {
        auto rit = rows_by_deg.find(dd);
        blocks.emplace(dd, FpMat(rit == rows_by_deg.end() ? 0 : int(rit->second.size()),
                                 int(cols.size()), p));
    }
    FpMat E(dN, dN, p);
    for (int r = 0; r < bprev; ++r)
        for (int c = 0; c < bi; ++c) {
            const FpVec& elem = d.entries[r][c];
            if (all_zero(elem))
                continue;
            E = FpMat(dN, dN, p);
            for (size_t t = 0; t < elem.size(); ++t)
                if (elem[t])
                    E = E + act[t].scaled(elem[t]);
            for (int b2 = 0; b2 < dN; ++b2)
                for (int b1 = 0; b1 < dN; ++b1) {
                    uint8_t v = E(b2, b1);
                    if (!v)
                        continue;
                    int ri = transpose ? c * dN + b2 : r * dN + b2;
                    int ci = transpose ? r * dN + b1 : c * dN + b1;
                    int dd = transpose ? row_deg(c, b2) : row_deg(r, b2);
                    blocks.at(dd).set(row_local[ri], col_local[ci], v);
                }
        }
    int rank = 0;
    for (auto& [dd, blk] : blocks)
        rank += blk.rank();
    return rank;
}

} // namespace

ExtCalculator::ExtCalculator(ResolutionBuilder& res, FiniteModule N)
    : res_(res), N_(std::move(N)), act_(module_action_table(N_)) {
    if (!res_.target().algebra->same_as(*N_.algebra))
        throw AlgebraError("ext: modules over different algebras");
}

int ExtCalculator::rank_of(int i) {
    if (i == 0)
        return 0;
    while (int(ranks_.size()) <= i)
        ranks_.push_back(-1);
    if (ranks_[i] < 0)
        ranks_[i] = induced_rank(res_, N_, act_, i, true);
    return ranks_[i];
}

int ExtCalculator::ext_dim(int i) {
    return res_.beta(i) * N_.dim() - rank_of(i + 1) - rank_of(i);
}

TorCalculator::TorCalculator(ResolutionBuilder& res, FiniteModule N)
    : res_(res), N_(std::move(N)), act_(module_action_table(N_)) {
    if (!res_.target().algebra->same_as(*N_.algebra))
        throw AlgebraError("tor: modules over different algebras");
}

int TorCalculator::rank_of(int i) {
    if (i == 0)
        return 0;
    while (int(ranks_.size()) <= i)
        ranks_.push_back(-1);
    if (ranks_[i] < 0)
        ranks_[i] = induced_rank(res_, N_, act_, i, false);
    return ranks_[i];
}

int TorCalculator::tor_dim(int i) {
    return res_.beta(i) * N_.dim() - rank_of(i) - rank_of(i + 1);
}

std::vector<int> ext_dims(const FiniteModule& M, const FiniteModule& N, int i_max) {
    ResolutionBuilder res(M);
    ExtCalculator ext(res, N);
    std::vector<int> out;
    for (int i = 0; i <= i_max; ++i)
        out.push_back(ext.ext_dim(i));
    return out;
}

std::vector<int> tor_dims(const FiniteModule& M, const FiniteModule& N, int i_max) {
    ResolutionBuilder res(M);
    TorCalculator tor(res, N);
    std::vector<int> out;
    for (int i = 0; i <= i_max; ++i)
        out.push_back(tor.tor_dim(i));
    return out;
}

bool resolution_exactness_ok(ResolutionBuilder& res, int i_max) {
    const auto& A = *res.target().algebra;
    for (int i = 2; i <= i_max; ++i) {
        const RMatrix& a = res.map(i - 1);
        const RMatrix& b = res.map(i);
        for (int r = 0; r < a.rows(); ++r)
            for (int c = 0; c < b.cols(); ++c) {
                FpVec sum(A.dim(), 0);
                for (int k = 0; k < a.cols(); ++k) {
                    FpVec prod = algebra_mul(A, a.entries[r][k], b.entries[k][c]);
                    for (int t = 0; t < A.dim(); ++t)
                        sum[t] = uint8_t((sum[t] + prod[t]) % A.p());
                }
                if (!all_zero(sum))
                    return false;
            }
    }
    return true;
}

bool resolution_minimal_ok(ResolutionBuilder& res, int i_max) {
    for (int i = 1; i <= i_max; ++i) {
        const RMatrix& d = res.map(i);
        for (const auto& row : d.entries)
            for (const auto& e : row)
                if (!e.empty() && e[0])
                    return false;
    }
    return true;
}

} // namespace semidual::artin
