#include "semidual/fatpoints.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "semidual/hilbert.hpp"
#include "semidual/monomial.hpp"

namespace semidual::fatpts {

FatPointScheme::FatPointScheme(int n_, std::vector<std::vector<Rational>> pts,
                               std::vector<int> mults)
    : n(n_), points(std::move(pts)), multiplicities(std::move(mults)) {
    if (n < 1)
        throw FatPointError("projective dimension must be at least 1");
    if (points.empty() || points.size() != multiplicities.size())
        throw FatPointError("points and multiplicities must be non-empty and parallel");
    for (auto& q : points) {
        if (int(q.size()) != n + 1)
            throw FatPointError("point has wrong coordinate count");
        int first = -1;
        for (int i = 0; i <= n; ++i)
            if (q[i] != 0) {
                first = i;
                break;
            }
        if (first < 0)
            throw FatPointError("zero vector is not a projective point");
        Rational lead = q[first];
        for (auto& c : q)
            c /= lead;
    }
    for (size_t a = 0; a < points.size(); ++a)
        for (size_t b = a + 1; b < points.size(); ++b)
            if (points[a] == points[b])
                throw FatPointError("points must be pairwise distinct");
    for (int m : multiplicities)
        if (m < 1)
            throw FatPointError("multiplicities must be at least 1");
}

int qmat_rank(QMat m) {
    int rank = 0;
    int rows = int(m.size());
    int cols = rows ? int(m[0].size()) : 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(m[piv], m[rank]);
        Rational inv = m[rank][col];
        for (auto& x : m[rank])
            x /= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0)
                continue;
            Rational c = m[r][col];
            for (int k = col; k < cols; ++k)
                m[r][k] -= c * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

QMat qmat_kernel(QMat m) {
    int rows = int(m.size());
    int cols = rows ? int(m[0].size()) : 0;
    std::vector<int> pivots;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(m[piv], m[rank]);
        Rational inv = m[rank][col];
        for (auto& x : m[rank])
            x /= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0)
                continue;
            Rational c = m[r][col];
            for (int k = 0; k < cols; ++k)
                m[r][k] -= c * m[rank][k];
        }
        pivots.push_back(col);
        ++rank;
    }
    std::vector<char> is_pivot(cols, 0);
    for (int c : pivots)
        is_pivot[c] = 1;
    QMat kernel;
    for (int free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col])
            continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free_col] = 1;
        for (int r = 0; r < rank; ++r)
            v[pivots[r]] = -m[r][free_col];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

namespace {

Rational rational_pow(const Rational& x, int e) {
    Rational r(1);
    for (int i = 0; i < e; ++i)
        r *= x;
    return r;
}

long long falling_factorial(int b, int a) {
    long long r = 1;
    for (int i = 0; i < a; ++i)
        r *= (b - i);
    return r;
}

} // namespace

QMat condition_matrix(const FatPointScheme& scheme, int d) {
    if (d < 0)
        throw FatPointError("degree must be non-negative");
    int vars = scheme.n + 1;
    auto basis = mono::monomials_of_degree(vars, d);
    QMat rows;
    for (size_t j = 0; j < scheme.points.size(); ++j) {
        const auto& Q = scheme.points[j];
        for (int order = 0; order < scheme.multiplicities[j]; ++order) {
            for (const auto& alpha : mono::monomials_of_degree(vars, order)) {
                std::vector<Rational> row;
                row.reserve(basis.size());
                for (const auto& beta : basis) {
                    // d^alpha x^beta evaluated at Q
                    bool ok = true;
                    Rational val(1);
                    for (int i = 0; i < vars; ++i) {
                        int b = beta.exponents[i], a = alpha.exponents[i];
                        if (a > b) {
                            ok = false;
                            break;
                        }
                        val *= falling_factorial(b, a);
                        val *= rational_pow(Q[i], b - a);
                    }
                    row.push_back(ok ? val : Rational(0));
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

DegreeSlice degree_slice(const FatPointScheme& scheme, int d) {
    return DegreeSlice{d, qmat_kernel(condition_matrix(scheme, d))};
}

FatPointHilbert scheme_hilbert_function(const FatPointScheme& scheme, int d_max) {
    long long mult_sum = std::accumulate(scheme.multiplicities.begin(),
                                         scheme.multiplicities.end(), 0LL);
    if (d_max < 0)
        d_max = int(mult_sum) + 4;
    FatPointHilbert out;
    out.degree = -1;
    out.stabilizes_at = -1;
    for (int d = 0; d <= d_max; ++d) {
        // dim (S/I)_d = dim S_d - dim I_d, and I_d is the kernel of the
        // condition matrix, so the quotient dimension is the rank
        long long hf = qmat_rank(condition_matrix(scheme, d));
        out.hf.push_back(hf);
        if (d >= mult_sum && d >= 1 && out.hf[d] == out.hf[d - 1]) {
            out.degree = hf;
            out.stabilizes_at = d - 1;
            break;
        }
    }
    if (out.degree < 0)
        throw FatPointError("Hilbert function did not stabilize within d_max");
    return out;
}

MultiplicityReport multiplicity_equality_check(const FatPointScheme& scheme) {
    FatPointHilbert h = scheme_hilbert_function(scheme);
    long long expected = 0;
    for (int m : scheme.multiplicities)
        expected += hilbert::binomial(m + scheme.n - 1, scheme.n);
    return MultiplicityReport{h.degree, expected, h.degree == expected, h.hf};
}

FatPointScheme parse_scheme(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<Rational>> pts;
    std::vector<int> mults;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok))
            continue;
        if (tok != "coords:")
            throw FatPointError("line " + std::to_string(lineno) + ": expected 'coords:'");
        std::vector<Rational> coords;
        int mult = -1;
        while (ls >> tok) {
            if (tok == "mult:") {
                if (!(ls >> mult))
                    throw FatPointError("line " + std::to_string(lineno) + ": missing multiplicity");
                break;
            }
            try {
                auto slash = tok.find('/');
                if (slash == std::string::npos)
                    coords.emplace_back(boost::multiprecision::cpp_int(tok));
                else
                    coords.emplace_back(boost::multiprecision::cpp_int(tok.substr(0, slash)),
                                        boost::multiprecision::cpp_int(tok.substr(slash + 1)));
            } catch (...) {
                throw FatPointError("line " + std::to_string(lineno) + ": bad coordinate '" + tok +
                                    "'");
            }
        }
        if (mult < 0)
            throw FatPointError("line " + std::to_string(lineno) + ": missing 'mult:'");
        pts.push_back(std::move(coords));
        mults.push_back(mult);
    }
    if (pts.empty())
        throw FatPointError("scheme file has no points");
    int n = int(pts[0].size()) - 1;
    return FatPointScheme(n, std::move(pts), std::move(mults));
}

FatPointScheme load_scheme(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw FatPointError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scheme(ss.str());
}

} // namespace semidual::fatpts
