#include "semidual/algebra.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace semidual::artin {

using mono::Monomial;
using mono::MonomialIdeal;

AlgebraPtr ArtinianAlgebra::create(const MonomialIdeal& I, int p) {
    if (p != 2 && p != 3 && p != 5)
        throw AlgebraError("base field must be F_p with p in {2, 3, 5}");
    int n = I.context.n();
    // Artinian certificate: a pure power of every variable among the generators
    for (int i = 0; i < n; ++i) {
        bool found = false;
        for (const auto& g : I.gens) {
            bool pure = g.exponents[i] > 0;
            for (int j = 0; j < n && pure; ++j)
                if (j != i && g.exponents[j] > 0)
                    pure = false;
            if (pure)
                found = true;
        }
        if (!found)
            throw AlgebraError("ideal is not Artinian: no pure power of " + I.context.names[i]);
    }
    auto alg = std::shared_ptr<ArtinianAlgebra>(new ArtinianAlgebra());
    alg->ideal_ = I;
    alg->p_ = p;
    for (int d = 0;; ++d) {
        auto monos = mono::monomials_of_degree(n, d);
        std::sort(monos.begin(), monos.end());
        int added = 0;
        for (const auto& m : monos)
            if (!mono::contains(I, m)) {
                alg->basis_.push_back(m);
                alg->degrees_.push_back(d);
                ++added;
            }
        if (added == 0)
            break;
    }
    int dim = alg->dim();
    std::map<Monomial, int> index;
    for (int i = 0; i < dim; ++i)
        index[alg->basis_[i]] = i;
    alg->mult_.assign(dim, std::vector<int>(dim, -1));
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            Monomial prod = mono::product(alg->basis_[a], alg->basis_[b]);
            auto it = index.find(prod);
            alg->mult_[a][b] = it == index.end() ? -1 : it->second;
        }
    alg->var_mult_.assign(n, std::vector<int>(dim, -1));
    for (int i = 0; i < n; ++i) {
        auto it = index.find(mono::mono_var(n, i));
        int vi = it == index.end() ? -1 : it->second;
        if (vi >= 0)
            alg->var_mult_[i] = alg->mult_[vi];
        if (vi >= 0)
            ++alg->edim_;
    }
    for (int b = 0; b < dim; ++b) {
        bool socle = true;
        for (int i = 0; i < n; ++i)
            if (alg->var_mult_[i][b] >= 0)
                socle = false;
        if (socle)
            ++alg->socle_dim_;
    }
    return alg;
}

int ArtinianAlgebra::index_of(const Monomial& m) const {
    for (int i = 0; i < dim(); ++i)
        if (basis_[i] == m)
            return i;
    return -1;
}

FpMat ArtinianAlgebra::var_action(int i) const {
    FpMat A(dim(), dim(), p_);
    for (int b = 0; b < dim(); ++b)
        if (var_mult_[i][b] >= 0)
            A.set(var_mult_[i][b], b, 1);
    return A;
}

FiniteModule make_module(AlgebraPtr A, std::vector<FpMat> actions,
                         std::optional<std::vector<int>> degrees, bool validate) {
    FiniteModule M{std::move(A), std::move(actions), std::move(degrees)};
    int n = M.algebra->nvars();
    if (int(M.actions.size()) != n)
        throw AlgebraError("need one action matrix per variable");
    int d = M.dim();
    for (const auto& a : M.actions)
        if (a.rows() != d || a.cols() != d || a.p() != M.algebra->p())
            throw AlgebraError("action matrices must be square over F_p");
    if (M.degrees) {
        if (int(M.degrees->size()) != d)
            throw AlgebraError("degree vector length mismatch");
        if (d > 0) {
            int lo = *std::min_element(M.degrees->begin(), M.degrees->end());
            for (int& x : *M.degrees)
                x -= lo;
        }
    }
    if (validate && d > 0) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (!(M.actions[i] * M.actions[j] == M.actions[j] * M.actions[i]))
                    throw AlgebraError("action matrices do not commute");
        for (const auto& g : M.algebra->ideal().gens)
            if (!monomial_action(M, g).is_zero())
                throw AlgebraError("ideal relation does not annihilate the module");
        if (M.degrees)
            for (int i = 0; i < n; ++i)
                for (int r = 0; r < d; ++r)
                    for (int c = 0; c < d; ++c)
                        if (M.actions[i](r, c) && (*M.degrees)[r] != (*M.degrees)[c] + 1)
                            throw AlgebraError("action does not raise degree by 1");
    }
    return M;
}

FiniteModule regular_module(AlgebraPtr A) {
    std::vector<FpMat> acts;
    for (int i = 0; i < A->nvars(); ++i)
        acts.push_back(A->var_action(i));
    auto degs = A->degrees();
    return make_module(A, std::move(acts), degs, false);
}

FiniteModule zero_module(AlgebraPtr A) {
    std::vector<FpMat> acts(A->nvars(), FpMat(0, 0, A->p()));
    return FiniteModule{A, std::move(acts), std::vector<int>{}};
}

FiniteModule matlis_dual(const FiniteModule& M) {
    std::vector<FpMat> acts;
    for (const auto& a : M.actions)
        acts.push_back(a.transposed());
    std::optional<std::vector<int>> degs;
    if (M.degrees) {
        degs.emplace();
        for (int d : *M.degrees)
            degs->push_back(-d);
    }
    return make_module(M.algebra, std::move(acts), std::move(degs), false);
}

FpMat monomial_action(const FiniteModule& M, const Monomial& m) {
    FpMat out = FpMat::identity(M.dim(), M.algebra->p());
    for (size_t i = 0; i < m.exponents.size(); ++i)
        for (int e = 0; e < m.exponents[i]; ++e)
            out = M.actions[i] * out;
    return out;
}

FpMat element_action(const FiniteModule& M, const FpVec& coeffs) {
    FpMat out(M.dim(), M.dim(), M.algebra->p());
    for (size_t t = 0; t < coeffs.size(); ++t)
        if (coeffs[t])
            out = out + monomial_action(M, M.algebra->basis()[t]).scaled(coeffs[t]);
    return out;
}

MinimalGenerators minimal_module_generators(const FiniteModule& M) {
    int d = M.dim(), p = M.algebra->p();
    RowSpace span(d, p);
    for (const auto& a : M.actions)
        for (int c = 0; c < d; ++c) {
            FpVec col(d);
            for (int r = 0; r < d; ++r)
                col[r] = a(r, c);
            span.insert(col);
        }
    std::vector<int> order(d);
    for (int i = 0; i < d; ++i)
        order[i] = i;
    if (M.degrees)
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return (*M.degrees)[a] < (*M.degrees)[b]; });
    MinimalGenerators out;
    for (int c : order) {
        FpVec e(d, 0);
        e[c] = 1;
        if (span.insert(e)) {
            out.vectors.push_back(e);
            if (M.degrees)
                out.degrees.push_back((*M.degrees)[c]);
        }
    }
    return out;
}

int beta0(const FiniteModule& M) {
    return int(minimal_module_generators(M).vectors.size());
}

namespace {

// Expresses vectors in the span of a fixed list of basis vectors.
class CoordSolver {
public:
    CoordSolver(const std::vector<FpVec>& basis, int cols, int p)
        : n_(int(basis.size())), cols_(cols), p_(p) {
        FpMat work(n_, cols + n_, p);
        for (int i = 0; i < n_; ++i) {
            for (int c = 0; c < cols; ++c)
                work.set(i, c, basis[i][c]);
            work.set(i, cols + i, 1);
        }
        work.rref();
        for (int i = 0; i < n_; ++i) {
            FpVec left(cols), right(n_);
            for (int c = 0; c < cols; ++c)
                left[c] = work(i, c);
            for (int c = 0; c < n_; ++c)
                right[c] = work(i, cols + c);
            int piv = -1;
            for (int c = 0; c < cols; ++c)
                if (left[c]) {
                    piv = c;
                    break;
                }
            if (piv < 0)
                throw AlgebraError("CoordSolver: dependent basis");
            pivots_.push_back(piv);
            echelon_.push_back(std::move(left));
            transform_.push_back(std::move(right));
        }
    }

    FpVec coords(const FpVec& v) const {
        FpVec r = v, out(n_, 0);
        for (int i = 0; i < n_; ++i) {
            int c = r[pivots_[i]];
            if (c) {
                for (int k = 0; k < cols_; ++k)
                    r[k] = uint8_t((r[k] + (p_ - c) * echelon_[i][k]) % p_);
                for (int k = 0; k < n_; ++k)
                    out[k] = uint8_t((out[k] + c * transform_[i][k]) % p_);
            }
        }
        for (int k = 0; k < cols_; ++k)
            if (r[k])
                throw AlgebraError("CoordSolver: vector not in span");
        return out;
    }

private:
    int n_, cols_, p_;
    std::vector<FpVec> echelon_, transform_;
    std::vector<int> pivots_;
};

FpVec vectorize(const FpMat& m) {
    FpVec v(size_t(m.rows()) * m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            v[size_t(r) * m.cols() + c] = m(r, c);
    return v;
}

FpMat unvectorize(const FpVec& v, int rows, int cols, int p) {
    FpMat m(rows, cols, p);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m.set(r, c, v[size_t(r) * cols + c]);
    return m;
}

} // namespace

HomModule hom_module(const FiniteModule& M, const FiniteModule& N) {
    if (!M.algebra->same_as(*N.algebra))
        throw AlgebraError("hom_module: modules over different algebras");
    int dM = M.dim(), dN = N.dim(), n = M.algebra->nvars(), p = M.algebra->p();
    size_t unknowns = size_t(dN) * dM; // phi[r][c], index r*dM + c
    bool graded = M.graded() && N.graded();

    std::vector<FpMat> basis_maps;
    std::vector<int> shifts;

    auto solve_block = [&](const std::vector<size_t>& cols_subset, int shift) {
        // constraints: for each var i and position (r,c):
        //   sum_r' A_N[r][r'] phi[r'][c] - sum_c' phi[r][c'] A_M[c'][c] = 0
        std::map<size_t, int> col_pos;
        for (size_t k = 0; k < cols_subset.size(); ++k)
            col_pos[cols_subset[k]] = int(k);
        std::vector<FpVec> rows;
        for (int i = 0; i < n; ++i)
            for (int r = 0; r < dN; ++r)
                for (int c = 0; c < dM; ++c) {
                    FpVec row(cols_subset.size(), 0);
                    bool nonzero = false;
                    for (int rp = 0; rp < dN; ++rp)
                        if (N.actions[i](r, rp)) {
                            auto it = col_pos.find(size_t(rp) * dM + c);
                            if (it != col_pos.end()) {
                                row[it->second] =
                                    uint8_t((row[it->second] + N.actions[i](r, rp)) % p);
                                nonzero = true;
                            }
                        }
                    for (int cp = 0; cp < dM; ++cp)
                        if (M.actions[i](cp, c)) {
                            auto it = col_pos.find(size_t(r) * dM + cp);
                            if (it != col_pos.end()) {
                                row[it->second] = uint8_t(
                                    (row[it->second] + (p - M.actions[i](cp, c))) % p);
                                nonzero = true;
                            }
                        }
                    if (nonzero)
                        rows.push_back(std::move(row));
                }
        FpMat sys(int(rows.size()), int(cols_subset.size()), p);
        for (size_t ri = 0; ri < rows.size(); ++ri)
            for (size_t ci = 0; ci < cols_subset.size(); ++ci)
                sys.set(int(ri), int(ci), rows[ri][ci]);
        FpMat ker = rows.empty() ? FpMat::identity(int(cols_subset.size()), p)
                               : sys.kernel_basis();
        for (int k = 0; k < ker.rows(); ++k) {
            FpVec full(unknowns, 0);
            for (size_t ci = 0; ci < cols_subset.size(); ++ci)
                full[cols_subset[ci]] = ker(k, int(ci));
            basis_maps.push_back(unvectorize(full, dN, dM, p));
            shifts.push_back(shift);
        }
    };

    if (graded && dM > 0 && dN > 0) {
        std::map<int, std::vector<size_t>> by_shift;
        for (int r = 0; r < dN; ++r)
            for (int c = 0; c < dM; ++c)
                by_shift[(*N.degrees)[r] - (*M.degrees)[c]].push_back(size_t(r) * dM + c);
        for (auto& [s, cols] : by_shift)
            solve_block(cols, s);
    } else {
        std::vector<size_t> all(unknowns);
        for (size_t k = 0; k < unknowns; ++k)
            all[k] = k;
        solve_block(all, 0);
    }

    int h = int(basis_maps.size());
    HomModule out;
    out.maps = basis_maps;
    // module structure: x_i . phi = A_i^N o phi
    std::vector<FpVec> vecs;
    for (const auto& m : basis_maps)
        vecs.push_back(vectorize(m));
    std::vector<FpMat> acts(n, FpMat(h, h, p));
    if (h > 0) {
        CoordSolver solver(vecs, int(unknowns), p);
        for (int i = 0; i < n; ++i)
            for (int c = 0; c < h; ++c) {
                FpVec coords = solver.coords(vectorize(N.actions[i] * basis_maps[c]));
                for (int r = 0; r < h; ++r)
                    acts[i].set(r, c, coords[r]);
            }
    }
    std::optional<std::vector<int>> degs;
    if (graded)
        degs = shifts;
    out.mod = make_module(M.algebra, std::move(acts), std::move(degs), false);
    return out;
}

TensorProduct tensor_product(const FiniteModule& M, const FiniteModule& N) {
    if (!M.algebra->same_as(*N.algebra))
        throw AlgebraError("tensor_product: modules over different algebras");
    int dM = M.dim(), dN = N.dim(), n = M.algebra->nvars(), p = M.algebra->p();
    size_t amb = size_t(dM) * dN;
    RowSpace rel(int(amb), p);
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < dM; ++a)
            for (int b = 0; b < dN; ++b) {
                FpVec v(amb, 0);
                for (int r = 0; r < dM; ++r)
                    if (M.actions[i](r, a))
                        v[size_t(r) * dN + b] = M.actions[i](r, a);
                for (int s = 0; s < dN; ++s)
                    if (N.actions[i](s, b))
                        v[size_t(a) * dN + s] =
                            uint8_t((v[size_t(a) * dN + s] + p - N.actions[i](s, b)) % p);
                rel.insert(v);
            }
    std::vector<char> is_pivot(amb, 0);
    for (int c : rel.pivots())
        is_pivot[c] = 1;
    TensorProduct out;
    for (size_t c = 0; c < amb; ++c)
        if (!is_pivot[c])
            out.basis_coords.push_back(int(c));
    int q = int(out.basis_coords.size());
    out.projection = FpMat(q, int(amb), p);
    for (size_t c = 0; c < amb; ++c) {
        FpVec e(amb, 0);
        e[c] = 1;
        FpVec r = rel.reduce(e);
        for (int k = 0; k < q; ++k)
            out.projection.set(k, int(c), r[out.basis_coords[k]]);
    }
    std::vector<FpMat> acts(n, FpMat(q, q, p));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < q; ++k) {
            size_t c = size_t(out.basis_coords[k]);
            int a = int(c / dN), b = int(c % dN);
            FpVec v(amb, 0);
            for (int r = 0; r < dM; ++r)
                if (M.actions[i](r, a))
                    v[size_t(r) * dN + b] = M.actions[i](r, a);
            FpVec qv = out.projection.apply(v);
            for (int r = 0; r < q; ++r)
                acts[i].set(r, k, qv[r]);
        }
    std::optional<std::vector<int>> degs;
    if (M.graded() && N.graded()) {
        degs.emplace();
        for (int c : out.basis_coords)
            degs->push_back((*M.degrees)[c / dN] + (*N.degrees)[c % dN]);
    }
    out.mod = make_module(M.algebra, std::move(acts), std::move(degs), false);
    return out;
}

FiniteModule free_module(AlgebraPtr A, int rank) {
    int dA = A->dim(), n = A->nvars(), p = A->p();
    std::vector<FpMat> acts(n, FpMat(rank * dA, rank * dA, p));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < rank; ++j)
            for (int t = 0; t < dA; ++t)
                if (A->var_product(i, t) >= 0)
                    acts[i].set(j * dA + A->var_product(i, t), j * dA + t, 1);
    std::vector<int> degs;
    for (int j = 0; j < rank; ++j)
        for (int t = 0; t < dA; ++t)
            degs.push_back(A->degrees()[t]);
    return make_module(A, std::move(acts), std::move(degs), false);
}

FiniteModule cokernel(AlgebraPtr A, const std::vector<std::vector<FpVec>>& entries) {
    int b = int(entries.size());
    int bp = b ? int(entries[0].size()) : 0;
    int dA = A->dim(), n = A->nvars(), p = A->p();
    FiniteModule F = free_module(A, b);
    size_t amb = size_t(b) * dA;
    RowSpace im(int(amb), p);
    std::deque<FpVec> queue;
    for (int j = 0; j < bp; ++j) {
        FpVec v(amb, 0);
        for (int i = 0; i < b; ++i)
            for (int t = 0; t < dA; ++t)
                v[size_t(i) * dA + t] = entries[i][j][t];
        queue.push_back(std::move(v));
    }
    while (!queue.empty()) {
        FpVec v = std::move(queue.front());
        queue.pop_front();
        if (!im.insert(v))
            continue;
        for (int i = 0; i < n; ++i)
            queue.push_back(F.actions[i].apply(v));
    }
    std::vector<char> is_pivot(amb, 0);
    for (int c : im.pivots())
        is_pivot[c] = 1;
    std::vector<int> basis_coords;
    for (size_t c = 0; c < amb; ++c)
        if (!is_pivot[c])
            basis_coords.push_back(int(c));
    int q = int(basis_coords.size());
    std::vector<FpMat> acts(n, FpMat(q, q, p));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < q; ++k) {
            FpVec e(amb, 0);
            e[basis_coords[k]] = 1;
            FpVec w = im.reduce(F.actions[i].apply(e));
            for (int r = 0; r < q; ++r)
                acts[i].set(r, k, w[basis_coords[r]]);
        }
    return make_module(A, std::move(acts), std::nullopt, true);
}

FiniteModule cyclic_quotient(AlgebraPtr A, const MonomialIdeal& J) {
    if (!(J.context == A->ideal().context))
        throw AlgebraError("cyclic_quotient: ideal context mismatch");
    int dA = A->dim(), n = A->nvars(), p = A->p();
    std::vector<int> keep, pos(dA, -1);
    for (int t = 0; t < dA; ++t)
        if (!mono::contains(J, A->basis()[t])) {
            pos[t] = int(keep.size());
            keep.push_back(t);
        }
    int q = int(keep.size());
    std::vector<FpMat> acts(n, FpMat(q, q, p));
    std::vector<int> degs;
    for (int k = 0; k < q; ++k)
        degs.push_back(A->degrees()[keep[k]]);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < q; ++k) {
            int tgt = A->var_product(i, keep[k]);
            if (tgt >= 0 && pos[tgt] >= 0)
                acts[i].set(pos[tgt], k, 1);
        }
    return make_module(A, std::move(acts), degs, false);
}

AlgebraPtr product_algebra(const ArtinianAlgebra& A, const ArtinianAlgebra& B) {
    if (A.p() != B.p())
        throw AlgebraError("product_algebra: prime mismatch");
    std::set<std::string> used;
    std::vector<std::string> names;
    auto add_name = [&](std::string s) {
        while (used.count(s))
            s += "'";
        used.insert(s);
        names.push_back(s);
    };
    for (const auto& s : A.ideal().context.names)
        add_name(s);
    for (const auto& s : B.ideal().context.names)
        add_name(s);
    mono::PolyContext ctx(names);
    int nA = A.nvars(), nB = B.nvars();
    std::vector<Monomial> gens;
    for (const auto& g : A.ideal().gens) {
        std::vector<int> e(nA + nB, 0);
        for (int i = 0; i < nA; ++i)
            e[i] = g.exponents[i];
        gens.emplace_back(std::move(e));
    }
    for (const auto& g : B.ideal().gens) {
        std::vector<int> e(nA + nB, 0);
        for (int i = 0; i < nB; ++i)
            e[nA + i] = g.exponents[i];
        gens.emplace_back(std::move(e));
    }
    return ArtinianAlgebra::create(mono::minimal_generators(ctx, gens), A.p());
}

FiniteModule external_tensor(const FiniteModule& M, const FiniteModule& N, AlgebraPtr AB) {
    const auto& A = *M.algebra;
    const auto& B = *N.algebra;
    if (A.p() != B.p() || AB->nvars() != A.nvars() + B.nvars())
        throw AlgebraError("external_tensor: incompatible algebras");
    int dM = M.dim(), dN = N.dim(), p = A.p();
    int dim = dM * dN;
    std::vector<FpMat> acts;
    for (int i = 0; i < A.nvars(); ++i) {
        FpMat a(dim, dim, p);
        for (int r = 0; r < dM; ++r)
            for (int c = 0; c < dM; ++c)
                if (M.actions[i](r, c))
                    for (int b = 0; b < dN; ++b)
                        a.set(r * dN + b, c * dN + b, M.actions[i](r, c));
        acts.push_back(std::move(a));
    }
    for (int i = 0; i < B.nvars(); ++i) {
        FpMat a(dim, dim, p);
        for (int r = 0; r < dN; ++r)
            for (int c = 0; c < dN; ++c)
                if (N.actions[i](r, c))
                    for (int m = 0; m < dM; ++m)
                        a.set(m * dN + r, m * dN + c, N.actions[i](r, c));
        acts.push_back(std::move(a));
    }
    std::optional<std::vector<int>> degs;
    if (M.graded() && N.graded()) {
        degs.emplace();
        for (int m = 0; m < dM; ++m)
            for (int b = 0; b < dN; ++b)
                degs->push_back((*M.degrees)[m] + (*N.degrees)[b]);
    }
    return make_module(AB, std::move(acts), std::move(degs), true);
}

HomothetyResult homothety_check(const FiniteModule& M) {
    const auto& A = *M.algebra;
    HomModule hom = hom_module(M, M);
    HomothetyResult out;
    out.hom_dim = hom.mod.dim();
    FpMat H(M.dim() * M.dim(), A.dim(), A.p());
    for (int t = 0; t < A.dim(); ++t) {
        FpVec col = vectorize(monomial_action(M, A.basis()[t]));
        for (size_t r = 0; r < col.size(); ++r)
            H.set(int(r), t, col[r]);
    }
    int rank = H.rank();
    if (rank < A.dim()) {
        out.bijective = false;
        out.witness = "homothety not injective: rank " + std::to_string(rank) + " < dim R = " +
                      std::to_string(A.dim());
    } else if (out.hom_dim != A.dim()) {
        out.bijective = false;
        out.witness = "homothety not surjective: dim Hom(M,M) = " + std::to_string(out.hom_dim) +
                      " != dim R = " + std::to_string(A.dim());
    } else {
        out.bijective = true;
    }
    return out;
}

IsoVerdict iso_test(const FiniteModule& M, const FiniteModule& N, uint64_t seed) {
    if (!M.algebra->same_as(*N.algebra))
        throw AlgebraError("iso_test: modules over different algebras");
    if (M.dim() != N.dim())
        return IsoVerdict::NotIso;
    if (M.dim() == 0)
        return IsoVerdict::Iso;
    if (M.graded() && N.graded()) {
        std::vector<int> a = *M.degrees, b = *N.degrees;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            return IsoVerdict::NotIso;
    }
    if (beta0(M) != beta0(N))
        return IsoVerdict::NotIso;
    HomModule hom = hom_module(M, N);
    int h = int(hom.maps.size()), p = M.algebra->p();
    if (h == 0)
        return IsoVerdict::NotIso;
    auto invertible = [&](const FpMat& m) { return m.inverse().has_value(); };
    // cheap deterministic candidates first
    for (int i = 0; i < h; ++i)
        if (invertible(hom.maps[i]))
            return IsoVerdict::Iso;
    for (int i = 0; i < h; ++i)
        for (int j = i + 1; j < h; ++j)
            if (invertible(hom.maps[i] + hom.maps[j]))
                return IsoVerdict::Iso;
    double total = std::pow(double(p), double(h));
    if (total <= 1e6) {
        FpVec coeff(h, 0);
        for (;;) {
            int k = 0;
            while (k < h && coeff[k] == p - 1)
                coeff[k++] = 0;
            if (k == h)
                break;
            ++coeff[k];
            FpMat cand(M.dim(), M.dim(), p);
            bool any = false;
            for (int i = 0; i < h; ++i)
                if (coeff[i]) {
                    cand = cand + hom.maps[i].scaled(coeff[i]);
                    any = true;
                }
            if (any && invertible(cand))
                return IsoVerdict::Iso;
        }
        return IsoVerdict::NotIso;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(0, p - 1);
    for (int trial = 0; trial < 200; ++trial) {
        FpMat cand(M.dim(), M.dim(), p);
        for (int i = 0; i < h; ++i) {
            int c = dist(rng);
            if (c)
                cand = cand + hom.maps[i].scaled(c);
        }
        if (invertible(cand))
            return IsoVerdict::Iso;
    }
    return IsoVerdict::ProbablyNotIso;
}

} // namespace semidual::artin
