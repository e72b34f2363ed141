#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "lfactor/generate.hpp"
#include "lfactor/lfun.hpp"
#include "lfactor/selftest.hpp"

#include "test_support.hpp"

using namespace lfactor;
using ts::qp;
using ts::rep;
using ts::seg;
using ts::zt;

namespace {

const Registry reg = builtin_std_registry();

std::set<int> violated_conditions(const Representation& p) {
    std::set<int> out;
    for (const auto& v : check_general_position(reg, p).violations)
        out.insert(v.condition);
    return out;
}

} // namespace

TEST_CASE("cuspidal convolution factors", "[lfun]") {
    CHECK(l_cusp_rs(reg, "one", Scalar::one(), "one", Scalar::one()) == EulerFactor{Scalar::one()});
    CHECK(l_cusp_rs(reg, "one", qp(1, 2), "one", qp(1, 2)) == EulerFactor{qp(-1)});
    CHECK(l_cusp_rs(reg, "one", Scalar::one(), "rho2", Scalar::one()) == EulerFactor::one());
    CHECK(l_cusp_rs(reg, "rho2o", Scalar::one(), "rho2o", Scalar::one()) ==
          EulerFactor{Scalar::one(), zt(1, 2)});
}

TEST_CASE("cuspidal exterior square factors read off the Shalika set", "[lfun]") {
    CHECK(l_cusp_ext(reg, "rho3", Scalar::one()) == EulerFactor::one());
    CHECK(l_cusp_ext(reg, "rho2", Scalar::one()) == EulerFactor{Scalar::one()});
    CHECK(l_cusp_ext(reg, "rho2", qp(1, 2)) == EulerFactor{qp(-1)});
}

TEST_CASE("cuspidal symmetric square factors", "[lfun]") {
    CHECK(l_cusp_sym(reg, "one", Scalar::one()) == EulerFactor{Scalar::one()});
    CHECK(l_cusp_sym(reg, "rho2", Scalar::one()) == EulerFactor::one());
    CHECK(l_cusp_sym(reg, "rho2o", Scalar::one()) == EulerFactor{Scalar::one()});
}

TEST_CASE("segment convolution factors", "[lfun]") {
    CHECK(l_seg_rs(reg, ts::steinberg2(), ts::steinberg2()) == EulerFactor{Scalar::one(), qp(-1)});
    CHECK(l_seg_rs(reg, seg("one", 1), seg("rho2", 1)) == EulerFactor::one());
    CHECK(l_seg_rs(reg, seg("one", 2), seg("one", 1)) == EulerFactor{qp(-1)});
    CHECK(l_seg_rs(reg, seg("one", 1), seg("one", 2)) == l_seg_rs(reg, seg("one", 2), seg("one", 1)));
}

TEST_CASE("segment exterior square factors", "[lfun]") {
    CHECK(l_seg_ext(reg, ts::steinberg2()) == EulerFactor{Scalar::one()});
    CHECK(l_seg_ext(reg, ts::steinberg3()) == EulerFactor{qp(-1)});
    CHECK(l_seg_ext(reg, seg("rho2", 2, qp(-1, 2))) == EulerFactor{qp(-1)});
}

TEST_CASE("segment symmetric square factors", "[lfun]") {
    CHECK(l_seg_sym(reg, ts::steinberg2()) == EulerFactor{qp(-1)});
    CHECK(l_seg_sym(reg, seg("one", 1)) == EulerFactor{Scalar::one()});
    // ladder for even length over an odd-dimensional cuspidal: only the
    // symmetric-square tower survives, at the odd shifts
    CHECK(l_seg_sym(reg, seg("rho3", 2, qp(-1, 2))) == EulerFactor{qp(-1)});
    CHECK(ef_mul(l_seg_ext(reg, seg("rho3", 2, qp(-1, 2))), l_seg_sym(reg, seg("rho3", 2, qp(-1, 2)))) ==
          l_seg_rs(reg, seg("rho3", 2, qp(-1, 2)), seg("rho3", 2, qp(-1, 2))));
}

TEST_CASE("representation-level exterior square", "[lfun]") {
    SECTION("unramified principal series of GL_2") {
        const Scalar a1 = zt(1, 3) * qp(2);
        const Scalar a2 = zt(1, 2) * qp(-1);
        const Representation p = rep({seg("one", 1, a1.inverse()), seg("one", 1, a2.inverse())});
        CHECK(l_rep_ext(reg, p) == EulerFactor{a1 * a2});
    }
    SECTION("a single segment reduces to the segment factor") {
        const Representation p = rep({seg("rho2", 2, qp(5, 2))});
        CHECK(l_rep_ext(reg, p) == l_seg_ext(reg, p.segments[0]));
    }
    SECTION("Steinberg times a GL_2 cuspidal piles up the shared pole") {
        const Representation p = rep({ts::steinberg2(), seg("rho2", 1)});
        EulerFactor expected;
        expected.insert(Scalar::one(), 2);
        CHECK(l_rep_ext(reg, p) == expected);
    }
}

TEST_CASE("representation-level symmetric square and convolution square", "[lfun]") {
    const Scalar a1 = qp(1);
    const Scalar a2 = zt(1, 2);
    const Representation p = rep({seg("one", 1, a1.inverse()), seg("one", 1, a2.inverse())});
    CHECK(l_rep_sym(reg, p) == EulerFactor{a1 * a1, a2 * a2, a1 * a2});
    EulerFactor square{a1 * a1, a2 * a2};
    square.insert(a1 * a2, 2);
    CHECK(l_rep_rs(reg, p) == square);

    const Representation st = rep({ts::steinberg2()});
    CHECK(l_rep_sym(reg, st) == EulerFactor{qp(-1)});
    CHECK(l_rep_rs(reg, st) == EulerFactor{Scalar::one(), qp(-1)});
    CHECK(l_rep_rs(reg, st) == ef_mul(l_rep_ext(reg, st), l_rep_sym(reg, st)));
    CHECK(l_pair_rs(reg, p, p) == l_rep_rs(reg, p));
}

TEST_CASE("exceptional factors of segments", "[lfun]") {
    CHECK(l_ex_segment(reg, ts::steinberg2()) == EulerFactor{Scalar::one()});
    CHECK(l_ex_segment(reg, seg("rho2", 1)) == EulerFactor{Scalar::one()});
    CHECK(l_ex_segment(reg, seg("rho2o", 1)) == EulerFactor{zt(1, 2)});
    CHECK_THROWS_AS(l_ex_segment(reg, ts::steinberg3()), OddDimensionError);
}

TEST_CASE("exceptional factors of dual segment pairs", "[lfun]") {
    CHECK(l_ex_rs_pair(reg, ts::steinberg2(), ts::steinberg2()) == EulerFactor{Scalar::one()});
    CHECK(l_ex_rs_pair(reg, seg("one", 1), seg("one", 2)) == EulerFactor::one());
    CHECK(l_ex_rs_pair(reg, seg("one", 1), seg("rho3", 1)) == EulerFactor::one());
    CHECK(l_ex_rs_pair(reg, seg("rho2o", 1), seg("rho2o", 1, qp(1))) ==
          EulerFactor{qp(-1), zt(1, 2) * qp(-1)});
}

TEST_CASE("exceptional factors of constituents", "[lfun]") {
    SECTION("a single part is the segment case") {
        CHECK(l_ex_constituent(reg, {seg("rho2", 1)}) == l_ex_segment(reg, seg("rho2", 1)));
    }
    SECTION("a self-dual pair contributes through the swap involution") {
        CHECK(l_ex_constituent(reg, {ts::steinberg2(), ts::steinberg2()}) == EulerFactor{Scalar::one()});
    }
    SECTION("two unrelated odd parts contribute nothing") {
        CHECK(l_ex_constituent(reg, {seg("one", 1), seg("rho3", 1)}) == EulerFactor::one());
    }
    SECTION("a dual pair of characters produces the Satake product") {
        CHECK(l_ex_constituent(reg, {seg("one", 1), seg("one", 1, qp(1, 3))}) == EulerFactor{qp(-1, 3)});
    }
    SECTION("preconditions") {
        CHECK_THROWS_AS(l_ex_constituent(reg, {seg("one", 1), seg("rho2", 1)}), OddDimensionError);
        CHECK_THROWS_AS(l_ex_constituent(reg, {seg("one", 2), seg("one", 2, qp(1))}), LinkedPartsError);
    }
}

TEST_CASE("general position report", "[lfun]") {
    CHECK(check_general_position(reg, rep({seg("one", 3, qp(9, 7))})).ok);
    CHECK(check_general_position(reg, rep({seg("one", 1), seg("one", 1, qp(1, 3))})).ok);

    CHECK(violated_conditions(rep({seg("one", 1), seg("one", 1)})).contains(2));
    CHECK(violated_conditions(rep({seg("one", 2), seg("one", 2, qp(1))})).contains(1));
    CHECK(violated_conditions(rep({seg("rho2o", 2), seg("rho2o", 1, zt(1, 2) * qp(1))})).contains(5));
    CHECK(violated_conditions(rep({seg("rho2o", 1), seg("rho2o", 1, zt(1, 2))})).contains(3));
    CHECK(violated_conditions(rep({seg("one", 1), seg("one", 1, qp(1, 4)), seg("one", 1, qp(3, 4)),
                                   seg("one", 1, qp(-1, 2))}))
              .contains(4));
}

TEST_CASE("the derivative route reproduces the closed forms", "[lfun][oracle]") {
    CHECK(l_ext_via_derivatives(reg, rep({ts::steinberg2()})) == EulerFactor{Scalar::one()});
    CHECK(l_ext_via_derivatives(reg, rep({ts::steinberg3()})) == EulerFactor{qp(-1)});

    const Representation ps = rep({seg("one", 1), seg("one", 1, qp(1, 3))});
    CHECK(l_ext_via_derivatives(reg, ps) == EulerFactor{qp(-1, 3)});
    CHECK(l_ext_via_derivatives(reg, ps) == l_rep_ext(reg, ps));

    CHECK_THROWS_AS(l_ext_via_derivatives(reg, rep({seg("one", 2), seg("one", 2, qp(1))})),
                    NotGenericError);
    CHECK_THROWS_AS(l_ext_via_derivatives(reg, rep({seg("one", 1), seg("one", 1)})),
                    NotGeneralPositionError);
}

TEST_CASE("the derivative route holds over registries with cross-label dual pairs", "[lfun][oracle]") {
    gen::Rng rng(321);
    int pair_reps = 0;
    for (int i = 0; i < 30; ++i) {
        Registry random = gen::registry(rng);
        bool has_pair = false;
        for (const auto& [label, c] : random.cuspidals())
            has_pair = has_pair || (c.dual && c.dual->label != label);
        for (int j = 0; j < 5; ++j) {
            Representation p;
            try {
                p = gen::general_position_representation(rng, random, 3, 8);
            } catch (const Error&) {
                continue; // torsion-only registries can make general position scarce
            }
            CAPTURE(render(p));
            REQUIRE(l_ext_via_derivatives(random, p) == l_rep_ext(random, p));
            REQUIRE(gamma_ext(random, p) == gamma_ext_via_parts(random, p));
            if (has_pair)
                ++pair_reps;
        }
    }
    CHECK(pair_reps > 20); // the sample genuinely exercises dual pairs
}

TEST_CASE("per-segment truncation factorization on worked segments", "[lfun][oracle]") {
    CHECK(l_seg_ext_via_truncations(reg, ts::steinberg3()) == l_seg_ext(reg, ts::steinberg3()));
    CHECK(l_seg_ext_via_truncations(reg, seg("rho2", 2, qp(1, 3))) ==
          l_seg_ext(reg, seg("rho2", 2, qp(1, 3))));
    CHECK(l_seg_ext_via_truncations(reg, seg("rho2o", 3, zt(1, 2) * qp(-1))) ==
          l_seg_ext(reg, seg("rho2o", 3, zt(1, 2) * qp(-1))));
}

TEST_CASE("gamma classes", "[lfun][gamma]") {
    const GammaClass st = gamma_ext(reg, rep({ts::steinberg2()}));
    CHECK(st.num == EulerFactor{qp(1)});
    CHECK(st.den == EulerFactor{Scalar::one()});

    CHECK(gamma_ext(reg, rep({seg("one", 1)})).is_trivial());

    const Representation p = rep({seg("rho2o", 2, qp(3, 4)), seg("chi", 1, zt(1, 4))});
    CHECK(gamma_ext(reg, p) == gamma_ext_via_parts(reg, p));

    Registry no_dual;
    no_dual.add({"mute", 1, 1, Scalar::one(), std::nullopt, {}});
    CHECK_THROWS_AS(gamma_ext(no_dual, rep({Segment{"mute", 1, Scalar::one()}})), NoDualDataError);
}

TEST_CASE("exterior square of a 2-dimensional representation is its central character", "[lfun]") {
    gen::Rng rng(9);
    const std::vector<std::string> gl1{"one", "chi"};
    for (int i = 0; i < 50; ++i) {
        const Scalar t1 = gen::twist(rng, 4, 3), t2 = gen::twist(rng, 4, 3);
        for (const std::string& a : gl1)
            for (const std::string& b : gl1) {
                const Representation p = rep({seg(a, 1, t1), seg(b, 1, t2)});
                const Scalar omega = central_char(reg, p.segments[0]) * central_char(reg, p.segments[1]);
                const bool paired = reg.at(a).dual && reg.at(a).dual->label == b;
                CHECK(l_rep_ext(reg, p) == (paired ? EulerFactor{omega} : EulerFactor::one()));
            }
        for (const std::string& a : gl1) {
            const Representation st = rep({seg(a, 2, t1)});
            CHECK(l_rep_ext(reg, st) == EulerFactor{central_char(reg, st.segments[0])});
        }
    }
}
