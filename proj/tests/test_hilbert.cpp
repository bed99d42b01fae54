#include "doctest.h"
#include "semidual/hilbert.hpp"

using namespace semidual::hilbert;
using namespace semidual::mono;

namespace {

MonomialIdeal make(const std::string& text) { return parse_ideal(text); }

} // namespace

TEST_CASE("binomial values") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(10, 5) == 252);
}

TEST_CASE("polynomial fit of simple sequences") {
    SUBCASE("eventually constant") {
        FitResult f = fit_polynomial({1, 2, 2, 2, 2, 2});
        CHECK(f.dim == 1);
        CHECK(f.multiplicity == 2);
    }
    SUBCASE("eventually zero means finite length") {
        FitResult f = fit_polynomial({1, 2, 0, 0});
        CHECK(f.dim == 0);
        CHECK(f.multiplicity == 3);
    }
    SUBCASE("linear growth") {
        // values of d+1 for d = 0..6: polynomial of degree 1, leading coeff 1
        FitResult f = fit_polynomial({1, 2, 3, 4, 5, 6, 7});
        CHECK(f.dim == 2);
        CHECK(f.multiplicity == 1);
    }
    SUBCASE("no stabilization") {
        CHECK_THROWS_AS(fit_polynomial({1, 2, 4, 8, 16, 32, 64, 128}), NoStabilization);
    }
}

TEST_CASE("hilbert function of known quotients") {
    MonomialIdeal xy = make("vars: x y\nx y\n");
    auto hf = hilbert_function(xy, 5);
    CHECK(hf == std::vector<long long>{1, 2, 2, 2, 2, 2});

    MonomialIdeal zero3 = make("vars: x y z\n");
    auto hf3 = hilbert_function(zero3, 3);
    CHECK(hf3 == std::vector<long long>{1, 3, 6, 10});
}

TEST_CASE("hilbert data fits dimension and multiplicity") {
    HilbertData h = hilbert_data(make("vars: x y\nx y\n"));
    CHECK(h.dim == 1);
    CHECK(h.multiplicity == 2);

    HilbertData h0 = hilbert_data(make("vars: x y\nx^2\nx y\ny^2\n"));
    CHECK(h0.dim == 0);
    CHECK(h0.multiplicity == 3); // length of the quotient

    HilbertData hz = hilbert_data(make("vars: x y z\n"));
    CHECK(hz.dim == 3);
    CHECK(hz.multiplicity == 1);
}

TEST_CASE("hilbert samuel multiplicity two routes") {
    MonomialIdeal xy = make("vars: x y\nx y\n");
    MonomialIdeal m = maximal_ideal(xy.context);
    HilbertData hs = hilbert_samuel(xy, m);
    CHECK(hs.multiplicity == 2);
    CHECK(hs.dim == 1);
    CHECK(hilbert_data(xy).multiplicity == hs.multiplicity);

    MonomialIdeal J = make("vars: x y\nx^2\ny\n");
    HilbertData hs2 = hilbert_samuel(xy, J);
    CHECK(hs2.multiplicity == 3);
}

TEST_CASE("hilbert samuel rejects non primary J") {
    MonomialIdeal xy = make("vars: x y\nx y\n");
    MonomialIdeal J = make("vars: x y\nx\n"); // not m-primary mod (xy)
    CHECK_THROWS_AS(hilbert_samuel(xy, J), HilbertError);
}

TEST_CASE("additivity on the coordinate cross") {
    MonomialIdeal xy = make("vars: x y\nx y\n");
    AdditivityReport r = additivity_check(xy, maximal_ideal(xy.context));
    CHECK(r.pass);
    CHECK(r.lhs == 2);
    CHECK(r.rhs == 2);
    REQUIRE(r.terms.size() == 2);
    for (const auto& t : r.terms) {
        CHECK(t.length == 1);
        CHECK(t.mult == 1);
    }
}

TEST_CASE("additivity weights an embedded-free double line") {
    // (x^2) in k[x,y]: one minimal prime (x) with local length 2
    MonomialIdeal I = make("vars: x y\nx^2\n");
    AdditivityReport r = additivity_check(I, maximal_ideal(I.context));
    CHECK(r.pass);
    CHECK(r.lhs == 2);
    REQUIRE(r.terms.size() == 1);
    CHECK(r.terms[0].length == 2);
}

TEST_CASE("additivity with a non maximal-ideal J") {
    MonomialIdeal xy = make("vars: x y\nx y\n");
    MonomialIdeal J = make("vars: x y\nx^2\ny\n");
    AdditivityReport r = additivity_check(xy, J);
    CHECK(r.pass);
    CHECK(r.lhs == 3);
}

TEST_CASE("canonical multiplicity equality in dimension one") {
    for (const char* text : {"vars: x y\nx y\n", "vars: x y\nx^2\n", "vars: x y z\nx^2\ny^2\n",
                             "vars: x y z\nx y\nx z\ny z\n"}) {
        CanonicalReport r = canonical_multiplicity_check(make(text));
        CHECK(r.dim == 1);
        CHECK(r.pass);
        CHECK(r.e_canonical == r.e_ring);
    }
}

TEST_CASE("canonical check refuses uncertified higher dimension") {
    MonomialIdeal zero = make("vars: x y\n");
    CHECK_THROWS_AS(canonical_multiplicity_check(zero), HilbertError);
    CanonicalReport r = canonical_multiplicity_check(zero, true);
    CHECK(r.pass);
}
