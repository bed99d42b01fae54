#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace semidual::fatpts {

using Rational = boost::multiprecision::cpp_rational;

struct FatPointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Points of P^n with multiplicities; coordinates normalized so the first
// nonzero one is 1, and points pairwise distinct projectively.
struct FatPointScheme {
    int n; // projective dimension
    std::vector<std::vector<Rational>> points;
    std::vector<int> multiplicities;

    FatPointScheme(int n, std::vector<std::vector<Rational>> pts, std::vector<int> mults);
};

using QMat = std::vector<std::vector<Rational>>;

int qmat_rank(QMat m);
// Basis of { x : M x = 0 }.
QMat qmat_kernel(QMat m);

// Rows: derivative operators of order < m_j evaluated at Q_j, applied to the
// degree-d monomial basis of k[X_0..X_n].
QMat condition_matrix(const FatPointScheme& scheme, int d);

struct DegreeSlice {
    int degree;
    QMat kernel; // coefficient vectors over the degree-d monomial basis
};
DegreeSlice degree_slice(const FatPointScheme& scheme, int d);

struct FatPointHilbert {
    std::vector<long long> hf;
    long long degree;        // stabilized value
    int stabilizes_at;       // first degree where the stable value is reached
};
FatPointHilbert scheme_hilbert_function(const FatPointScheme& scheme, int d_max = -1);

struct MultiplicityReport {
    long long degree;
    long long expected; // sum of binomial(m_j + n - 1, n)
    bool pass;
    std::vector<long long> hf;
};
MultiplicityReport multiplicity_equality_check(const FatPointScheme& scheme);

// One line per point: "coords: 1 0 0  mult: 2".  '#' starts a comment.
FatPointScheme parse_scheme(const std::string& text);
FatPointScheme load_scheme(const std::string& path);

} // namespace semidual::fatpts
