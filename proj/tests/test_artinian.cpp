#include "doctest.h"
#include "semidual/algebra.hpp"

using namespace semidual;
using namespace semidual::artin;
using semidual::mono::parse_ideal;

namespace {

AlgebraPtr alg(const std::string& text, int p) {
    return ArtinianAlgebra::create(parse_ideal(text), p);
}

} // namespace

TEST_CASE("algebra construction basics") {
    AlgebraPtr A = alg("vars: x y\nx^2\nx y\ny^2\n", 3);
    CHECK(A->dim() == 3);
    CHECK(A->socle_dim() == 2);
    CHECK(A->edim() == 2);
    CHECK_FALSE(A->gorenstein());

    AlgebraPtr B = alg("vars: x\nx^3\n", 2);
    CHECK(B->dim() == 3);
    CHECK(B->socle_dim() == 1);
    CHECK(B->edim() == 1);
    CHECK(B->gorenstein());

    AlgebraPtr C = alg("vars: x y\nx^2\nx y\ny^3\n", 2);
    CHECK(C->dim() == 4);
    CHECK(C->max_degree() == 2); // basis 1, x, y, y^2
}

TEST_CASE("non artinian ideals are rejected") {
    CHECK_THROWS_AS(alg("vars: x y\nx^2\n", 2), AlgebraError);
    CHECK_THROWS_AS(alg("vars: x y\nx y\n", 3), AlgebraError);
}

TEST_CASE("only small primes are supported") {
    CHECK_THROWS_AS(alg("vars: x\nx^2\n", 7), AlgebraError);
}

TEST_CASE("module validation catches broken actions") {
    AlgebraPtr A = alg("vars: x y\nx^2\nx y\ny^2\n", 2);
    FiniteModule R = regular_module(A);
    auto actions = R.actions;
    actions[0].set(0, 0, 1); // x no longer nilpotent
    CHECK_THROWS_AS(make_module(A, actions, R.degrees, true), AlgebraError);
}

TEST_CASE("matlis dual dimensions and involution") {
    AlgebraPtr A = alg("vars: x y\nx^2\nx y\ny^2\n", 3);
    FiniteModule R = regular_module(A);
    FiniteModule D = matlis_dual(R);
    CHECK(D.dim() == R.dim());
    CHECK(beta0(D) == A->socle_dim());
    CHECK(iso_test(matlis_dual(D), R) == IsoVerdict::Iso);
    CHECK(iso_test(D, R) == IsoVerdict::NotIso);
}

TEST_CASE("gorenstein algebras have self-dual regular module") {
    AlgebraPtr A = alg("vars: x\nx^3\n", 3);
    FiniteModule R = regular_module(A);
    CHECK(iso_test(matlis_dual(R), R) == IsoVerdict::Iso);
}

TEST_CASE("hom module dimensions") {
    AlgebraPtr A = alg("vars: x y\nx^2\nx y\ny^2\n", 3);
    FiniteModule R = regular_module(A);
    FiniteModule D = matlis_dual(R);
    FiniteModule k = cyclic_quotient(A, mono::maximal_ideal(A->ideal().context));

    CHECK(hom_module(R, D).mod.dim() == D.dim());
    CHECK(hom_module(R, k).mod.dim() == 1);
    CHECK(hom_module(k, k).mod.dim() == 1);
    CHECK(hom_module(D, D).mod.dim() == 3);
}

TEST_CASE("hom maps intertwine the actions") {
    AlgebraPtr A = alg("vars: x y\nx^2\nx y\ny^3\n", 2);
    FiniteModule R = regular_module(A);
    FiniteModule D = matlis_dual(R);
    HomModule H = hom_module(D, R);
    for (const auto& phi : H.maps)
        for (int i = 0; i < 2; ++i)
            CHECK(phi * D.actions[i] == R.actions[i] * phi);
}

TEST_CASE("tensor product of cyclic modules") {
    AlgebraPtr A = alg("vars: x y\nx^2\nx y\ny^2\n", 2);
    FiniteModule R = regular_module(A);
    FiniteModule D = matlis_dual(R);
    FiniteModule k = cyclic_quotient(A, mono::maximal_ideal(A->ideal().context));

    CHECK(tensor_product(R, D).mod.dim() == D.dim());
    CHECK(iso_test(tensor_product(R, D).mod, D) == IsoVerdict::Iso);
    CHECK(tensor_product(k, k).mod.dim() == 1);
}

TEST_CASE("cokernel of the zero map is free") {
    AlgebraPtr A = alg("vars: x y\nx^2\nx y\ny^2\n", 2);
    std::vector<std::vector<FpVec>> zero(2, std::vector<FpVec>(1, FpVec(A->dim(), 0)));
    FiniteModule F = cokernel(A, zero);
    CHECK(F.dim() == 2 * A->dim());
    CHECK(iso_test(F, free_module(A, 2)) == IsoVerdict::Iso);
}

TEST_CASE("cokernel by a single element gives a cyclic quotient") {
    AlgebraPtr A = alg("vars: x y\nx^2\nx y\ny^3\n", 2);
    // present R / (y): matrix [y] as a map R -> R
    FpVec y(A->dim(), 0);
    y[A->index_of(mono::mono_var(2, 1))] = 1;
    FiniteModule M = cokernel(A, {{y}});
    mono::MonomialIdeal J = mono::minimal_generators(A->ideal().context, {mono::mono_var(2, 1)});
    CHECK(iso_test(M, cyclic_quotient(A, J)) == IsoVerdict::Iso);
}

TEST_CASE("external tensor of regular modules is regular") {
    AlgebraPtr A = alg("vars: x y\nx^2\nx y\ny^2\n", 2);
    AlgebraPtr B = alg("vars: s t\ns^2\ns t\nt^2\n", 2);
    AlgebraPtr AB = product_algebra(*A, *B);
    CHECK(AB->dim() == 9);
    FiniteModule RR = external_tensor(regular_module(A), regular_module(B), AB);
    CHECK(iso_test(RR, regular_module(AB)) == IsoVerdict::Iso);
}

TEST_CASE("product algebra renames colliding variables") {
    AlgebraPtr A = alg("vars: x\nx^2\n", 2);
    AlgebraPtr AB = product_algebra(*A, *A);
    CHECK(AB->nvars() == 2);
    CHECK(AB->ideal().context.names[0] != AB->ideal().context.names[1]);
}

TEST_CASE("homothety bijective exactly for faithful balanced modules") {
    AlgebraPtr A = alg("vars: x y\nx^2\nx y\ny^2\n", 3);
    CHECK(homothety_check(regular_module(A)).bijective);
    CHECK(homothety_check(matlis_dual(regular_module(A))).bijective);
    HomothetyResult h =
        homothety_check(cyclic_quotient(A, mono::maximal_ideal(A->ideal().context)));
    CHECK_FALSE(h.bijective);
    CHECK_FALSE(h.witness.empty());
}

TEST_CASE("iso test basics") {
    AlgebraPtr A = alg("vars: x y\nx^2\nx y\ny^2\n", 2);
    FiniteModule R = regular_module(A);
    FiniteModule D = matlis_dual(R);
    FiniteModule k = cyclic_quotient(A, mono::maximal_ideal(A->ideal().context));
    CHECK(iso_test(R, R) == IsoVerdict::Iso);
    CHECK(iso_test(R, D) == IsoVerdict::NotIso); // beta0 1 vs 2
    CHECK(iso_test(k, R) == IsoVerdict::NotIso); // dim mismatch
}

TEST_CASE("minimal generator count") {
    AlgebraPtr A = alg("vars: x y\nx^2\nx y\ny^2\n", 3);
    CHECK(beta0(regular_module(A)) == 1);
    CHECK(beta0(matlis_dual(regular_module(A))) == 2);
    CHECK(beta0(free_module(A, 3)) == 3);
}
