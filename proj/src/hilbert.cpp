#include "semidual/hilbert.hpp"

#include <algorithm>
#include <numeric>

namespace semidual::hilbert {

using mono::MonomialIdeal;
using mono::Monomial;

long long binomial(long long a, long long b) {
    if (b < 0 || a < 0 || b > a)
        return 0;
    Integer r = 1;
    for (long long i = 0; i < b; ++i) {
        r *= (a - i);
        r /= (i + 1);
    }
    return r.convert_to<long long>();
}

std::vector<long long> hilbert_function(const MonomialIdeal& I, int d_max) {
    if (d_max < 0)
        throw HilbertError("d_max must be non-negative");
    std::vector<long long> v;
    for (int d = 0; d <= d_max; ++d)
        v.push_back(mono::standard_monomial_count(I, d));
    return v;
}

FitResult fit_polynomial(const std::vector<long long>& values, int window) {
    if (window < 2)
        window = 2;
    int m = int(values.size());
    // eventually-zero sequence: Artinian convention e = total length.  Two
    // trailing zeros suffice: the sequences fitted here are Hilbert functions
    // of m-primary quotients, which stay zero once they vanish.
    if (m >= 2) {
        bool tail_zero = values[m - 1] == 0 && values[m - 2] == 0;
        if (tail_zero) {
            FitResult out;
            out.dim = 0;
            out.multiplicity = std::accumulate(values.begin(), values.end(), 0LL);
            return out;
        }
    }
    std::vector<long long> diff = values;
    for (int r = 0; r + window <= m; ++r) {
        bool constant = true;
        for (int j = m - r - window; j + 1 < m - r; ++j)
            if (diff[j] != diff[j + 1])
                constant = false;
        if (constant) {
            long long c = diff[m - r - 1];
            if (c == 0)
                throw HilbertError("fit_polynomial: tail difference vanished unexpectedly");
            // Lagrange interpolation through the last r+1 sample points
            std::vector<Rational> poly(r + 1, Rational(0));
            for (int a = 0; a <= r; ++a) {
                long long xa = m - 1 - a;
                // basis polynomial for node xa over the other nodes
                std::vector<Rational> basis{Rational(1)};
                Rational denom(1);
                for (int b = 0; b <= r; ++b) {
                    if (b == a)
                        continue;
                    long long xb = m - 1 - b;
                    std::vector<Rational> next(basis.size() + 1, Rational(0));
                    for (size_t t = 0; t < basis.size(); ++t) {
                        next[t] += basis[t] * Rational(-xb);
                        next[t + 1] += basis[t];
                    }
                    basis = std::move(next);
                    denom *= Rational(xa - xb);
                }
                for (size_t t = 0; t < basis.size(); ++t)
                    poly[t] += basis[t] * Rational(values[xa]) / denom;
            }
            while (!poly.empty() && poly.back() == 0)
                poly.pop_back();
            // the fit must reproduce the verified tail exactly
            for (int j = std::max(0, m - r - window); j < m; ++j) {
                Rational y(0), x(1);
                for (const auto& cf : poly) {
                    y += cf * x;
                    x *= j;
                }
                if (y != Rational(values[j]))
                    throw NoStabilization("tail window contradicts the polynomial fit");
            }
            FitResult out;
            out.polynomial = std::move(poly);
            out.dim = r + 1;
            out.multiplicity = c; // r! * leading coefficient
            return out;
        }
        for (int j = 0; j + 1 < m - r; ++j)
            diff[j] = diff[j + 1] - diff[j];
    }
    throw NoStabilization("no stabilization within d_max; increase d_max");
}

HilbertData hilbert_data(const MonomialIdeal& I, int d_max) {
    int d = d_max >= 0 ? d_max : std::max(8, 2 * I.max_gen_degree() + 2 * I.context.n() + 6);
    const int cap = 96;
    for (;;) {
        auto values = hilbert_function(I, d);
        try {
            FitResult fit = fit_polynomial(values);
            return HilbertData{values, fit.polynomial, fit.dim, fit.multiplicity};
        } catch (const NoStabilization&) {
            if (d_max >= 0 || d >= cap)
                throw;
            d *= 2;
        }
    }
}

namespace {

long long length_of_quotient(const MonomialIdeal& K) {
    // K is m-primary, so once a degree has no standard monomials none do later
    return mono::artinian_length(K);
}

void require_primary(const MonomialIdeal& I, const MonomialIdeal& J) {
    MonomialIdeal total = mono::combine_sum(J, I);
    if (!(mono::radical(total) == mono::maximal_ideal(I.context)))
        throw HilbertError("J is not m-primary modulo I");
}

std::vector<long long> samuel_values(const MonomialIdeal& I, const MonomialIdeal& J, int j_max) {
    std::vector<long long> lens; // len of R/(J^j + I)
    lens.push_back(0);           // J^0 is the unit ideal
    MonomialIdeal Jpow{I.context, {mono::mono_one(I.context.n())}};
    for (int j = 1; j <= j_max + 1; ++j) {
        Jpow = mono::combine_product(Jpow, J);
        lens.push_back(length_of_quotient(mono::combine_sum(Jpow, I)));
    }
    std::vector<long long> H;
    for (int j = 0; j <= j_max; ++j)
        H.push_back(lens[j + 1] - lens[j]);
    return H;
}

} // namespace

HilbertData hilbert_samuel(const MonomialIdeal& I, const MonomialIdeal& J, int j_max) {
    require_primary(I, J);
    const int cap = 40;
    for (;;) {
        auto H = samuel_values(I, J, j_max);
        try {
            FitResult fit = fit_polynomial(H);
            return HilbertData{H, fit.polynomial, fit.dim, fit.multiplicity};
        } catch (const NoStabilization&) {
            if (j_max >= cap)
                throw;
            j_max = std::min(cap, 2 * j_max);
        }
    }
}

AdditivityReport additivity_check(const MonomialIdeal& I, const MonomialIdeal& J) {
    AdditivityReport rep;
    HilbertData left = hilbert_samuel(I, J);
    rep.lhs = left.multiplicity;
    rep.dim = left.dim;

    auto ass = mono::associated_primes(I);
    int n = I.context.n();
    rep.rhs = 0;
    for (size_t idx = 0; idx < ass.primes.size(); ++idx) {
        if (!ass.minimal[idx])
            continue;
        const auto& supp = ass.primes[idx].support;
        if (n - int(supp.size()) != ass.dim)
            continue; // only dimension-maximal components contribute
        AdditivityTerm term;
        term.support = supp;
        if (supp.empty()) {
            term.length = 1; // localization of a domain at (0) is a field
        } else {
            term.length = mono::artinian_length(mono::localize(I, ass.primes[idx]));
        }
        // e(J; R/P) computed in k[off-P variables]
        std::vector<int> off;
        for (int i = 0; i < n; ++i)
            if (std::find(supp.begin(), supp.end(), i) == supp.end())
                off.push_back(i);
        if (off.empty()) {
            term.mult = 1; // R/P = k
        } else {
            std::vector<std::string> names;
            for (int i : off)
                names.push_back(I.context.names[i]);
            mono::PolyContext sub(names);
            std::vector<Monomial> jbar;
            for (const auto& g : J.gens) {
                bool survives = true;
                for (int i : supp)
                    if (g.exponents[i] > 0)
                        survives = false;
                if (!survives)
                    continue;
                std::vector<int> e;
                for (int i : off)
                    e.push_back(g.exponents[i]);
                jbar.emplace_back(std::move(e));
            }
            MonomialIdeal zero{sub, {}};
            MonomialIdeal Jb = mono::minimal_generators(sub, jbar);
            term.mult = hilbert_samuel(zero, Jb).multiplicity;
        }
        rep.rhs += term.length * term.mult;
        rep.terms.push_back(std::move(term));
    }
    rep.pass = rep.lhs == rep.rhs;
    return rep;
}

CanonicalReport canonical_multiplicity_check(const MonomialIdeal& I, bool assert_cm) {
    int n = I.context.n();
    HilbertData hd = hilbert_data(I);
    if (hd.dim == 0)
        throw HilbertError("dimension 0: use the length equality instead");
    int d = hd.dim;
    if (d == 1) {
        auto ass = mono::associated_primes(I);
        for (bool minimal : ass.minimal)
            if (!minimal)
                throw HilbertError("embedded prime found: ring is not Cohen-Macaulay");
    } else if (!assert_cm) {
        throw HilbertError("dim >= 2: Cohen-Macaulayness must be asserted by the caller");
    }

    // numerator over the full ring: K(t) = HS(t) * (1-t)^n
    int m = int(hd.values.size());
    std::vector<long long> K(m, 0);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i <= n && i <= j; ++i)
            K[j] += (i % 2 ? -1 : 1) * binomial(n, i) * hd.values[j - i];
    int tail_zeros = 0;
    while (tail_zeros < m && K[m - 1 - tail_zeros] == 0)
        ++tail_zeros;
    if (tail_zeros < 3)
        throw HilbertError("numerator did not terminate; increase d_max");
    K.resize(m - tail_zeros);

    // strip (1-t)^(n-d) to reach the pole-order-d numerator Q
    std::vector<long long> Q = K;
    for (int step = 0; step < n - d; ++step) {
        long long sum = std::accumulate(Q.begin(), Q.end(), 0LL);
        if (sum != 0)
            throw HilbertError("series has pole order below the fitted dimension");
        std::vector<long long> next(Q.size() ? Q.size() - 1 : 0, 0);
        long long acc = 0;
        for (size_t j = 0; j + 1 < Q.size() + 1; ++j) {
            acc += Q[j];
            if (j < next.size())
                next[j] = acc;
        }
        Q = std::move(next);
        while (!Q.empty() && Q.back() == 0)
            Q.pop_back();
    }
    CanonicalReport rep;
    rep.dim = d;
    rep.e_ring = hd.multiplicity;
    rep.numerator = Q;

    // HS_omega(t) = (-1)^d HS_R(1/t): reverse the numerator (shift ignored)
    std::vector<long long> Qw(Q.rbegin(), Q.rend());
    rep.canonical_numerator = Qw;
    int jmax = int(Qw.size()) + d + 8;
    std::vector<long long> hw(jmax + 1, 0);
    for (int j = 0; j <= jmax; ++j)
        for (size_t i = 0; i < Qw.size(); ++i)
            hw[j] += Qw[i] * binomial(j - (long long)i + d - 1, d - 1);
    FitResult fw = fit_polynomial(hw);
    rep.e_canonical = fw.multiplicity;
    if (fw.dim != d)
        throw HilbertError("canonical module series has unexpected dimension");
    rep.pass = rep.e_canonical == rep.e_ring;
    return rep;
}

} // namespace semidual::hilbert
