#include <catch2/catch_amalgamated.hpp>

#include "lfactor/euler_factor.hpp"
#include "lfactor/json_io.hpp"

#include "test_support.hpp"

using namespace lfactor;
using ts::qp;
using ts::zt;

TEST_CASE("ef_product is multiset union", "[euler_factor]") {
    CHECK(ef_product({{}, {}}) == EulerFactor::one());
    const EulerFactor doubled = ef_product({{Scalar::one()}, {Scalar::one()}});
    CHECK(doubled.multiplicity(Scalar::one()) == 2);
    CHECK(ef_product({{zt(1, 2)}, {qp(1)}}) == EulerFactor{zt(1, 2), qp(1)});
}

TEST_CASE("ef_shift realizes L(s) -> L(s + s0) on roots", "[euler_factor]") {
    // substituting s -> s+1 in (1 - q^{-s})^{-1} yields (1 - q^{-1} q^{-s})^{-1}
    CHECK(ef_shift({Scalar::one()}, qp(1)) == EulerFactor{qp(-1)});
    CHECK(ef_shift(EulerFactor::one(), zt(1, 5) * qp(7)) == EulerFactor::one());
    CHECK(ef_shift({zt(1, 2) * qp(2)}, qp(2)) == EulerFactor{zt(1, 2)});
}

TEST_CASE("ef_lcm takes per-root maxima", "[euler_factor]") {
    CHECK(ef_lcm({{Scalar::one()}, {Scalar::one(), zt(1, 2)}}) == EulerFactor{Scalar::one(), zt(1, 2)});
    CHECK(ef_lcm({{Scalar::one(), Scalar::one()}, {Scalar::one()}}) ==
          EulerFactor{Scalar::one(), Scalar::one()});
    CHECK(ef_lcm({{}, {}}) == EulerFactor::one());
}

TEST_CASE("ef_divide is multiset difference with a containment check", "[euler_factor]") {
    CHECK(ef_divide({Scalar::one(), qp(1)}, {Scalar::one()}) == EulerFactor{qp(1)});
    CHECK(ef_divide({}, {}) == EulerFactor::one());
    CHECK_THROWS_AS(ef_divide({Scalar::one()}, {zt(1, 2)}), NotDivisibleError);
    CHECK_THROWS_AS(ef_divide({Scalar::one()}, {Scalar::one(), Scalar::one()}), NotDivisibleError);
}

TEST_CASE("shift composes through scalar multiplication", "[euler_factor]") {
    const EulerFactor f{zt(1, 3) * qp(2), qp(-1, 2)};
    const Scalar c = zt(1, 2) * qp(1);
    const Scalar d = qp(-3, 2);
    CHECK(ef_shift(ef_shift(f, c), d) == ef_shift(f, c * d));
}

TEST_CASE("gamma_normalize converts the 1-s side and cancels", "[gamma]") {
    const GammaClass g = gamma_normalize({Scalar::one()}, {Scalar::one()});
    CHECK(g.num == EulerFactor{qp(1)});
    CHECK(g.den == EulerFactor{Scalar::one()});

    CHECK(gamma_normalize({}, {}).is_trivial());
    // (1 - q^{s-1}) matches the root q^{1}: full cancellation
    CHECK(gamma_normalize({Scalar::one()}, {qp(1)}).is_trivial());
}

TEST_CASE("gamma of a pair times the substituted swap is trivial", "[gamma]") {
    const EulerFactor a{zt(1, 3), qp(-1)};
    const EulerFactor b{qp(2), zt(1, 2) * qp(1, 2)};
    const GammaClass g = gamma_normalize(a, b);
    const GammaClass h = gamma_subst_one_minus_s(gamma_normalize(b, a));
    CHECK(gamma_mul(g, h).is_trivial());
}

TEST_CASE("factor rendering", "[euler_factor]") {
    CHECK(EulerFactor::one().str() == "1");
    CHECK(EulerFactor{Scalar::one()}.str() == "(1 - X)^-1");
    CHECK(EulerFactor{qp(-1)}.str() == "(1 - q^(-1) X)^-1");
    EulerFactor f;
    f.insert(Scalar::one(), 2);
    f.insert(zt(1, 2) * qp(-1));
    CHECK(f.str() == "(1 - X)^-1 (1 - X)^-1 (1 - z(1/2)*q^(-1) X)^-1");
}

TEST_CASE("JSON encoding of a factor is lossless", "[euler_factor][json]") {
    EulerFactor f;
    f.insert(zt(1, 3) * qp(-5, 2), 2);
    f.insert(qp(4));
    const json j = euler_factor_to_json(f);
    CHECK(euler_factor_from_json(j) == f);
    CHECK(j.at("roots").size() == 3);
}
