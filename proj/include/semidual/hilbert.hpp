#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <vector>

#include "semidual/monomial.hpp"

namespace semidual::hilbert {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

struct HilbertError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Thrown when the finite-difference window never becomes constant; callers
// may retry with a longer value list.
struct NoStabilization : HilbertError {
    using HilbertError::HilbertError;
};

long long binomial(long long a, long long b);

struct HilbertData {
    std::vector<long long> values;
    std::vector<Rational> polynomial; // constant term first; empty = zero polynomial
    int dim = 0;
    long long multiplicity = 0;
};

std::vector<long long> hilbert_function(const mono::MonomialIdeal& I, int d_max);

struct FitResult {
    std::vector<Rational> polynomial;
    int dim = 0;
    long long multiplicity = 0;
};

// Interpolates the eventual polynomial of an integer sequence once some
// finite-difference order is constant over the trailing window.
FitResult fit_polynomial(const std::vector<long long>& values, int window = 3);

// Hilbert function of S/I together with its fitted polynomial; d_max grows
// automatically until the fit stabilizes.
HilbertData hilbert_data(const mono::MonomialIdeal& I, int d_max = -1);

// e_R(J; R) for R = S/I via lengths of J^j R / J^{j+1} R.  J must be
// m-primary modulo I.
HilbertData hilbert_samuel(const mono::MonomialIdeal& I, const mono::MonomialIdeal& J,
                           int j_max = 12);

struct AdditivityTerm {
    std::vector<int> support; // variables of the minimal prime
    long long length;         // len of the localization
    long long mult;           // e(J; R/P)
};

struct AdditivityReport {
    long long lhs = 0;
    long long rhs = 0;
    bool pass = false;
    int dim = 0;
    std::vector<AdditivityTerm> terms;
};

AdditivityReport additivity_check(const mono::MonomialIdeal& I, const mono::MonomialIdeal& J);

struct CanonicalReport {
    int dim = 0;
    long long e_ring = 0;
    long long e_canonical = 0;
    bool pass = false;
    std::vector<long long> numerator;           // Q(t) with HS_R = Q/(1-t)^d
    std::vector<long long> canonical_numerator; // reversed Q, numerator of HS_omega
};

// Compares e(m; omega) with e(m; R) through the graded series identity
// HS_omega(t) = (-1)^d HS_R(1/t), up to shift.  Cohen-Macaulayness is
// certified for dim 1 (no embedded primes); higher dimension needs assert_cm.
CanonicalReport canonical_multiplicity_check(const mono::MonomialIdeal& I, bool assert_cm = false);

} // namespace semidual::hilbert
