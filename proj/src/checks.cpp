#include "semidual/checks.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace semidual::artin {

namespace {

std::string join_dims(const std::vector<int>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    return os.str();
}

} // namespace

SemidualVerdict is_semidualizing(const FiniteModule& M, int i_max) {
    SemidualVerdict v;
    v.i_max = i_max;
    HomothetyResult h = homothety_check(M);
    if (!h.bijective) {
        v.witness = h.witness;
        return v;
    }
    ResolutionBuilder res(M);
    ExtCalculator ext(res, M);
    for (int i = 1; i <= i_max; ++i) {
        int d = ext.ext_dim(i);
        if (d != 0) {
            v.failed_ext = i;
            v.witness = "Ext^" + std::to_string(i) + "(M,M) has dimension " +
                        std::to_string(d);
            return v;
        }
    }
    v.ok = true;
    return v;
}

bool CheckReport::all_pass() const {
    for (const auto& it : items)
        if (!it.pass)
            return false;
    return true;
}

namespace {

// delta : C -> Hom(Hom(C,D), D), c |-> (phi |-> phi(c)).  Bijective iff the
// column rank equals dim C and dim Hom(Cd, D) equals dim C.
bool biduality_iso(const FiniteModule& C, const HomModule& Cd, const FiniteModule& D,
                   std::string& detail) {
    int dC = C.dim(), dD = D.dim(), p = C.algebra->p();
    int h1 = Cd.mod.dim();
    HomModule CdD = hom_module(Cd.mod, D);
    FpMat delta(dD * h1, dC, p);
    for (int c = 0; c < dC; ++c)
        for (int j = 0; j < h1; ++j)
            for (int r = 0; r < dD; ++r)
                delta.set(r * h1 + j, c, Cd.maps[j](r, c));
    int rank = delta.rank();
    bool ok = rank == dC && CdD.mod.dim() == dC;
    if (!ok) {
        std::ostringstream os;
        os << "rank " << rank << ", dim Hom(Cd,D) " << CdD.mod.dim() << ", dim C " << dC;
        detail = os.str();
    }
    return ok;
}

// evaluation C (x) Hom(C,D) -> D, c (x) phi |-> phi(c)
bool evaluation_iso(const FiniteModule& C, const HomModule& Cd, const FiniteModule& D,
                    std::string& detail) {
    int dD = D.dim(), p = C.algebra->p();
    TensorProduct T = tensor_product(C, Cd.mod);
    int dT = T.mod.dim();
    FpMat ev(dD, dT, p);
    for (int k = 0; k < dT; ++k) {
        int amb = T.basis_coords[k];
        int a = amb / Cd.mod.dim(), b = amb % Cd.mod.dim();
        for (int r = 0; r < dD; ++r)
            ev.set(r, k, Cd.maps[b](r, a));
    }
    int rank = ev.rank();
    bool ok = dT == dD && rank == dD;
    if (!ok) {
        std::ostringstream os;
        os << "dim tensor " << dT << ", rank " << rank << ", dim D " << dD;
        detail = os.str();
    }
    return ok;
}

} // namespace

CheckReport dagger_checks(const FiniteModule& C, int i_max, uint64_t seed) {
    CheckReport rep;
    AlgebraPtr A = C.algebra;
    FiniteModule R = regular_module(A);
    FiniteModule D = matlis_dual(R);
    HomModule Cd = hom_module(C, D);

    {
        std::vector<int> e = ext_dims(C, D, i_max);
        bool ok = std::all_of(e.begin() + 1, e.end(), [](int x) { return x == 0; });
        rep.items.push_back({"ext_vanishing_against_dual", ok,
                             ok ? "" : "Ext dims " + join_dims(e)});
    }
    {
        SemidualVerdict v = is_semidualizing(Cd.mod, i_max);
        rep.items.push_back({"dual_hom_semidualizing", v.ok, v.witness});
    }
    {
        std::string detail;
        bool ok = biduality_iso(C, Cd, D, detail);
        rep.items.push_back({"biduality_isomorphism", ok, detail});
    }
    {
        std::vector<int> t = tor_dims(C, Cd.mod, i_max);
        bool ok = std::all_of(t.begin() + 1, t.end(), [](int x) { return x == 0; });
        rep.items.push_back({"tor_vanishing_with_dual_hom", ok,
                             ok ? "" : "Tor dims " + join_dims(t)});
    }
    {
        std::string detail;
        bool ok = evaluation_iso(C, Cd, D, detail);
        rep.items.push_back({"evaluation_isomorphism", ok, detail});
    }
    {
        bool applicable = iso_test(Cd.mod, R, seed) == IsoVerdict::Iso;
        bool ok = !applicable || iso_test(C, D, seed) == IsoVerdict::Iso;
        rep.items.push_back({"trivial_dual_hom_forces_dualizing", ok,
                             applicable ? "" : "not applicable: Hom(C,D) not iso R"});
    }
    return rep;
}

ConvolutionReport betti_convolution_check(const FiniteModule& C, int L) {
    ConvolutionReport rep;
    AlgebraPtr A = C.algebra;
    FiniteModule D = matlis_dual(regular_module(A));
    HomModule Cd = hom_module(C, D);
    rep.betti_D = betti_numbers(D, L);
    rep.betti_C = betti_numbers(C, L);
    rep.betti_Cd = betti_numbers(Cd.mod, L);
    rep.convolution.assign(L + 1, 0);
    for (int i = 0; i <= L; ++i)
        for (int j = 0; j <= i; ++j)
            rep.convolution[i] += rep.betti_C[j] * rep.betti_Cd[i - j];
    rep.pass = rep.convolution == rep.betti_D;
    return rep;
}

BettiIneqReport beta_inequality_check(const FiniteModule& C, int i_max, uint64_t seed) {
    BettiIneqReport rep;
    FiniteModule R = regular_module(C.algebra);
    if (iso_test(C, R, seed) == IsoVerdict::Iso) {
        rep.note = "rejected: C is isomorphic to R";
        return rep;
    }
    SemidualVerdict v = is_semidualizing(C, i_max);
    if (!v.ok) {
        rep.note = "rejected: C not certified (" + v.witness + ")";
        return rep;
    }
    rep.applicable = true;
    std::vector<int> b = betti_numbers(C, 1);
    rep.beta0 = b[0];
    rep.beta1 = b[1];
    rep.pass = rep.beta1 >= rep.beta0;
    return rep;
}

CorBettiReport cor_betti_check(AlgebraPtr A, const std::vector<FiniteModule>& candidates,
                               int i_max, uint64_t seed) {
    CorBettiReport rep;
    FiniteModule R = regular_module(A);
    FiniteModule D = matlis_dual(R);
    for (const auto& C : candidates) {
        if (iso_test(C, R, seed) == IsoVerdict::Iso ||
            iso_test(C, D, seed) == IsoVerdict::Iso)
            continue;
        if (!is_semidualizing(C, i_max).ok)
            continue;
        rep.applicable = true;
        break;
    }
    if (!rep.applicable) {
        rep.note = "not applicable: no certified class beyond R and D";
        return rep;
    }
    std::vector<int> b = betti_numbers(D, 1);
    rep.beta0_D = b[0];
    rep.beta1_D = b[1];
    rep.pass = rep.beta1_D >= 2 * rep.beta0_D;
    return rep;
}

SearchResult classification_search(AlgebraPtr A, int trials, int b_max, int i_max,
                                   uint64_t seed) {
    SearchResult result;
    FiniteModule R = regular_module(A);
    FiniteModule D = matlis_dual(R);
    int dimR = A->dim(), dimA = A->dim(), p = A->p();

    auto classify = [&](const FiniteModule& cand) {
        ++result.candidates_tested;
        if (cand.dim() != dimR) {
            ++result.length_filtered;
            return;
        }
        for (auto& cls : result.classes)
            if (iso_test(cand, cls.rep, seed) == IsoVerdict::Iso) {
                ++cls.hits;
                return;
            }
        if (!is_semidualizing(cand, i_max).ok)
            return;
        SearchClass cls;
        cls.rep = cand;
        cls.hits = 1;
        if (iso_test(cand, R, seed) == IsoVerdict::Iso)
            cls.label = "R";
        else if (iso_test(cand, D, seed) == IsoVerdict::Iso)
            cls.label = "D";
        else
            cls.label = "other";
        result.classes.push_back(std::move(cls));
    };

    classify(R);
    classify(D);

    // all cyclic quotients R/J for monomial ideals J
    std::vector<mono::Monomial> nonunit;
    for (int t = 1; t < dimA; ++t)
        nonunit.push_back(A->basis()[t]);
    std::set<std::vector<mono::Monomial>> seen;
    for (uint64_t mask = 1; mask < (uint64_t(1) << nonunit.size()); ++mask) {
        std::vector<mono::Monomial> gens;
        for (size_t i = 0; i < nonunit.size(); ++i)
            if (mask & (uint64_t(1) << i))
                gens.push_back(nonunit[i]);
        mono::MonomialIdeal J = mono::minimal_generators(A->ideal().context, gens);
        if (!seen.insert(J.gens).second)
            continue;
        classify(cyclic_quotient(A, J));
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size_dist(1, b_max);
    std::uniform_int_distribution<int> coeff_dist(0, p - 1);
    for (int t = 0; t < trials; ++t) {
        int b = size_dist(rng), bp = size_dist(rng);
        std::vector<std::vector<FpVec>> entries(b, std::vector<FpVec>(bp));
        for (int r = 0; r < b; ++r)
            for (int c = 0; c < bp; ++c) {
                FpVec e(dimA);
                for (int k = 0; k < dimA; ++k)
                    e[k] = uint8_t(coeff_dist(rng));
                entries[r][c] = std::move(e);
            }
        classify(cokernel(A, entries));
    }
    return result;
}

} // namespace semidual::artin
