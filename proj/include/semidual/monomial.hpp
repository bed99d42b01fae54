#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace semidual::mono {

struct IdealError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ambient polynomial context k[x_1,...,x_n], standard grading.
struct PolyContext {
    std::vector<std::string> names;

    PolyContext() = default;
    explicit PolyContext(std::vector<std::string> vars);
    int n() const { return int(names.size()); }
    bool operator==(const PolyContext& o) const { return names == o.names; }
    int index_of(const std::string& name) const; // -1 if unknown
};

struct Monomial {
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}
    int degree() const;
    bool divides(const Monomial& o) const;
    bool is_one() const;
    auto operator<=>(const Monomial&) const = default;
};

Monomial mono_one(int n);
Monomial mono_var(int n, int i, int e = 1);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial product(const Monomial& a, const Monomial& b);
// a / gcd(a, b)
Monomial quotient_by(const Monomial& a, const Monomial& b);

// Monomial ideal given by its unique minimal (antichain) generating set.
// Empty generating set encodes the zero ideal; {1} the unit ideal.
struct MonomialIdeal {
    PolyContext context;
    std::vector<Monomial> gens; // sorted antichain

    bool is_zero() const { return gens.empty(); }
    bool is_unit() const;
    bool is_proper() const { return !is_unit(); }
    int max_gen_degree() const;
    bool operator==(const MonomialIdeal& o) const = default;

    std::string to_string() const;
};

struct VariablePrime {
    std::vector<int> support; // sorted variable indices
    bool operator==(const VariablePrime& o) const = default;
};

struct Polarization {
    PolyContext target;
    MonomialIdeal ideal;                          // square-free
    std::vector<std::pair<int, int>> depol_pairs; // (x_{i,j}, x_{i,1}) as target indices
    // target variable -> original variable
    std::vector<int> origin;
};

enum class CombineKind { Sum, Product, Power, Intersect, Colon };

MonomialIdeal minimal_generators(const PolyContext& ctx, const std::vector<Monomial>& gens);

MonomialIdeal combine_sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal combine_product(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal combine_power(const MonomialIdeal& I, int k);
MonomialIdeal combine_intersect(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal combine_colon(const MonomialIdeal& I, const MonomialIdeal& J);

bool contains(const MonomialIdeal& I, const Monomial& m);
// I subset of J, decided generator-wise.
bool ideal_subset(const MonomialIdeal& I, const MonomialIdeal& J);

MonomialIdeal radical(const MonomialIdeal& I);

// Components generated by pure variable powers, irredundant.
std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& I);

struct AssociatedPrimes {
    std::vector<VariablePrime> primes;   // deduplicated
    std::vector<bool> minimal;           // parallel to primes
    int dim;                             // Krull dimension of S/I
};
AssociatedPrimes associated_primes(const MonomialIdeal& I);

// Combinatorial localization at a monomial prime: off-P variables set to 1.
// The result lives in the context spanned by the P-variables.
MonomialIdeal localize(const MonomialIdeal& I, const VariablePrime& P);

// Total standard-monomial count of an Artinian monomial ideal (the length of
// the local ring obtained by localizing at a minimal prime).
long long artinian_length(const MonomialIdeal& I);

Polarization polarize(const MonomialIdeal& I);
// Substitute each polarized variable back to its origin.
MonomialIdeal depolarize(const Polarization& pol);

long long standard_monomial_count(const MonomialIdeal& I, int d);

std::vector<Monomial> monomials_of_degree(int n, int d);

// Text format: first line "vars: x y z", one generator per following line as
// space-separated var^exp factors. '#' starts a comment.
MonomialIdeal parse_ideal(const std::string& text);
MonomialIdeal load_ideal(const std::string& path);
std::string format_ideal(const MonomialIdeal& I);
std::string format_monomial(const PolyContext& ctx, const Monomial& m);

// The maximal ideal (x_1,...,x_n).
MonomialIdeal maximal_ideal(const PolyContext& ctx);

} // namespace semidual::mono
