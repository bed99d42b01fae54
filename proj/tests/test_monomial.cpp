#include <algorithm>

#include "doctest.h"
#include "semidual/monomial.hpp"

using namespace semidual::mono;

namespace {

MonomialIdeal ideal2(std::vector<std::vector<int>> exps) {
    PolyContext ctx({"x", "y"});
    std::vector<Monomial> gens;
    for (auto& e : exps)
        gens.emplace_back(std::move(e));
    return minimal_generators(ctx, gens);
}

MonomialIdeal ideal3(std::vector<std::vector<int>> exps) {
    PolyContext ctx({"x", "y", "z"});
    std::vector<Monomial> gens;
    for (auto& e : exps)
        gens.emplace_back(std::move(e));
    return minimal_generators(ctx, gens);
}

// brute-force membership sweep used as the oracle for ideal arithmetic
bool same_membership(const MonomialIdeal& a, const MonomialIdeal& b, int up_to) {
    for (int d = 0; d <= up_to; ++d)
        for (const auto& m : monomials_of_degree(a.context.n(), d))
            if (contains(a, m) != contains(b, m))
                return false;
    return true;
}

} // namespace

TEST_CASE("minimal generators drop divisible ones") {
    MonomialIdeal I = ideal2({{2, 0}, {3, 0}, {1, 1}, {2, 2}});
    CHECK(I.gens.size() == 2);
    CHECK(contains(I, Monomial({3, 0})));
    CHECK_FALSE(contains(I, Monomial({1, 0})));
}

TEST_CASE("sum product power intersect colon against membership oracle") {
    MonomialIdeal I = ideal2({{2, 0}, {1, 1}});
    MonomialIdeal J = ideal2({{0, 2}, {1, 1}});

    SUBCASE("intersect") {
        MonomialIdeal K = combine_intersect(I, J);
        for (int d = 0; d <= 6; ++d)
            for (const auto& m : monomials_of_degree(2, d))
                CHECK(contains(K, m) == (contains(I, m) && contains(J, m)));
    }
    SUBCASE("colon") {
        // (I : J) membership: m in colon iff m*g in I for every generator g of J
        MonomialIdeal K = combine_colon(I, J);
        for (int d = 0; d <= 6; ++d)
            for (const auto& m : monomials_of_degree(2, d)) {
                bool expect = true;
                for (const auto& g : J.gens)
                    if (!contains(I, product(m, g)))
                        expect = false;
                CHECK(contains(K, m) == expect);
            }
    }
    SUBCASE("power matches repeated product") {
        MonomialIdeal sq = combine_power(I, 2);
        CHECK(same_membership(sq, combine_product(I, I), 8));
    }
    SUBCASE("sum") {
        MonomialIdeal S = combine_sum(I, J);
        for (int d = 0; d <= 6; ++d)
            for (const auto& m : monomials_of_degree(2, d))
                CHECK(contains(S, m) == (contains(I, m) || contains(J, m)));
    }
}

TEST_CASE("radical by square-free supports") {
    MonomialIdeal I = ideal2({{2, 0}, {0, 3}});
    MonomialIdeal r = radical(I);
    CHECK(r == ideal2({{1, 0}, {0, 1}}));
    CHECK(radical(r) == r);
}

TEST_CASE("irreducible decomposition is sound and irredundant") {
    MonomialIdeal I = ideal3({{1, 1, 0}, {1, 0, 1}});
    auto comps = irreducible_decomposition(I);
    // (xy, xz) = (x) cap (y, z)
    CHECK(comps.size() == 2);
    for (int d = 0; d <= 5; ++d)
        for (const auto& m : monomials_of_degree(3, d)) {
            bool in_all = std::all_of(comps.begin(), comps.end(),
                                      [&](const MonomialIdeal& c) { return contains(c, m); });
            CHECK(contains(I, m) == in_all);
        }
    for (size_t i = 0; i < comps.size(); ++i)
        for (size_t j = 0; j < comps.size(); ++j)
            if (i != j)
                CHECK_FALSE(ideal_subset(comps[i], comps[j]));
}

TEST_CASE("radical equals intersection of component supports") {
    for (auto I : {ideal3({{2, 1, 0}, {0, 2, 2}}), ideal3({{3, 0, 0}, {0, 3, 0}, {1, 1, 1}}),
                   ideal2({{2, 0}, {1, 1}, {0, 3}})}) {
        auto comps = irreducible_decomposition(I);
        MonomialIdeal meet = radical(comps[0]);
        for (size_t i = 1; i < comps.size(); ++i)
            meet = combine_intersect(meet, radical(comps[i]));
        CHECK(meet == radical(I));
    }
}

TEST_CASE("associated primes and dimension") {
    MonomialIdeal I = ideal2({{1, 1}});
    auto ap = associated_primes(I);
    CHECK(ap.dim == 1);
    CHECK(ap.primes.size() == 2);
    for (bool m : ap.minimal)
        CHECK(m);

    auto ap2 = associated_primes(ideal2({{2, 0}, {1, 1}}));
    CHECK(ap2.dim == 1);
    bool has_embedded = false;
    for (bool m : ap2.minimal)
        if (!m)
            has_embedded = true;
    CHECK(has_embedded);

    auto zero = associated_primes(MonomialIdeal{PolyContext({"x", "y"}), {}});
    CHECK(zero.dim == 2);
    CHECK(zero.primes.size() == 1);
    CHECK(zero.primes[0].support.empty());
}

TEST_CASE("localization at a variable prime") {
    MonomialIdeal I = ideal2({{1, 1}});
    VariablePrime P{{0}};
    MonomialIdeal loc = localize(I, P); // y -> 1, leaving (x) in k[x]
    CHECK(loc.context.n() == 1);
    CHECK(artinian_length(loc) == 1);
}

TEST_CASE("artinian length equals standard monomial count") {
    MonomialIdeal I = ideal2({{2, 0}, {1, 1}, {0, 3}});
    CHECK(artinian_length(I) == 4); // 1, x, y, y^2
}

TEST_CASE("polarization round trip and square-freeness") {
    for (auto I : {ideal2({{2, 0}, {1, 1}, {0, 3}}), ideal2({{3, 0}, {1, 2}}),
                   ideal3({{2, 1, 0}, {0, 2, 2}, {1, 0, 3}})}) {
        Polarization pol = polarize(I);
        CHECK(pol.ideal == radical(pol.ideal));
        CHECK(depolarize(pol) == I);
        for (const auto& g : pol.ideal.gens)
            for (int e : g.exponents)
                CHECK(e <= 1);
    }
}

TEST_CASE("standard monomial counts") {
    MonomialIdeal I = ideal2({{2, 0}, {1, 1}, {0, 2}});
    CHECK(standard_monomial_count(I, 0) == 1);
    CHECK(standard_monomial_count(I, 1) == 2);
    CHECK(standard_monomial_count(I, 2) == 0);
}

TEST_CASE("parse and format round trip") {
    std::string text = "# comment\nvars: x y\nx^2\nx y\ny^3\n";
    MonomialIdeal I = parse_ideal(text);
    CHECK(I.gens.size() == 3);
    MonomialIdeal again = parse_ideal(format_ideal(I));
    CHECK(again == I);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_ideal("vars: x y\nx^\n"), IdealError);
    CHECK_THROWS_AS(parse_ideal("x^2\n"), IdealError); // missing vars header
    CHECK_THROWS_AS(parse_ideal("vars: x y\nz^2\n"), IdealError);
}
