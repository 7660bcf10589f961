#include <gtest/gtest.h>

#include "support.hpp"

using namespace mero;
using namespace testing_support;

TEST(Structure, Example26ZeroAtMinusOne) {
    const RatMatFun q = load("ex_2_6.json");
    const StructureReport r = zero_pole_structure(q, GaussRat(-1));
    EXPECT_EQ(r.kind, PointKind::Zero);
    EXPECT_EQ(r.omega0, (std::vector<std::size_t>{1}));
    EXPECT_EQ(r.partial_zero_mults, (std::vector<int>{4}));
    EXPECT_EQ(r.total_zero_mult, 4);
    ASSERT_EQ(r.root_functions.size(), 1u);
    const PolyVec& t2 = r.root_functions[0];
    EXPECT_TRUE(constant_ratio(RatFun(t2[1]), F("(z^2+4*z+5)/5")) == constant_ratio(RatFun(t2[0]), RatFun(1)));
}

TEST(Structure, Example26PoleAtZero) {
    const StructureReport r = zero_pole_structure(load("ex_2_6.json"), GaussRat(0));
    EXPECT_EQ(r.kind, PointKind::Pole);
    EXPECT_EQ(r.omegaP, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(r.partial_pole_mults, (std::vector<int>{2, 2}));
    EXPECT_EQ(r.total_pole_mult, 4);
    EXPECT_EQ(r.geometric_mult_pole, 2);
}

TEST(Structure, Example31BothAtZero) {
    const StructureReport r = zero_pole_structure(load("ex_3_1.json"), GaussRat(0));
    EXPECT_EQ(r.kind, PointKind::Both);
    EXPECT_EQ(r.total_zero_mult, 1);
    EXPECT_EQ(r.total_pole_mult, 1);
}

TEST(Structure, RegularPointGivesEmptyReport) {
    const StructureReport r = zero_pole_structure(load("ex_2_6.json"), GaussRat(3));
    EXPECT_TRUE(r.empty());
    EXPECT_TRUE(r.root_functions.empty());
}

TEST(VerifyOrder, Examples) {
    const RatMatFun q = load("ex_2_6.json");
    const OrderResult o = verify_order(q, PV({"1", "(z^2+4*z+5)/5"}), GaussRat(-1));
    EXPECT_EQ(o.order, 4);
    EXPECT_FALSE(o.pole);
    EXPECT_EQ(verify_order(q, PV({"0", "-1"}), GaussRat(-1)).order, 0);
    EXPECT_EQ(verify_order(RatMatFun::identity(2), PV({"1", "0"}), GaussRat(5)).order, 0);
    try {
        verify_order(q, PV({"z+1", "0"}), GaussRat(-1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::EigvecZero);
    }
}

TEST(VerifyPoleCancellation, Examples) {
    const PoleCancellationResult a = verify_pole_cancellation(load("ex_2_6.json"), RV({"0", "-z^2/5"}), GaussRat(0));
    EXPECT_EQ(a.order, 2);
    // Q psi = (1, -5/4 (z^2+1)) by hand
    EXPECT_EQ(a.limit, (GaussVec{GaussRat(1), GaussRat(Rat(-5, 4))}));

    const RatMatFun qt = scale(load("ex_5_5.json"), F("1/(z+1)"));
    const PoleCancellationResult b = verify_pole_cancellation(qt, RV({"z*(z+1)", "0"}), GaussRat(0));
    EXPECT_EQ(b.order, 1);
    EXPECT_TRUE(b.is_pole_cancellation);

    const PoleCancellationResult c = verify_pole_cancellation(RatMatFun::identity(2), RV({"1", "0"}), GaussRat(0));
    EXPECT_EQ(c.order, 0);
    EXPECT_FALSE(c.is_pole_cancellation);

    try {
        verify_pole_cancellation(RatMatFun::identity(2), RV({"z", "0"}), GaussRat(0));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::LimitZero);
    }
    try {
        verify_pole_cancellation(load("ex_2_6.json"), RV({"1", "0"}), GaussRat(0));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::LimitInfinite);
    }
}

TEST(PropositionL, Examples) {
    EXPECT_TRUE(proposition_L_equivalence(load("ex_2_6.json"), PV({"1", "(z^2+4*z+5)/5"}), GaussRat(-1)));
    const RatMatFun q31 = load("ex_3_1.json");
    const SmithResult s = smith_diagonalize(q31.numerator());
    try {
        proposition_L_equivalence(q31, s.T.column(1), GaussRat(0));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::PremiseViolated);
    }
    EXPECT_TRUE(proposition_L_equivalence(M({{"z-1", "0"}, {"0", "z-1"}}), PV({"1", "0"}), GaussRat(1)));
}

TEST(TaylorJordan, Examples) {
    const auto v = taylor_jordan_vectors(PV({"1", "(z^2+4*z+5)/5"}), GaussRat(-1), 3);
    ASSERT_EQ(v.size(), 3u);
    EXPECT_EQ(v[0], (GaussVec{GaussRat(1), GaussRat(Rat(2, 5))}));
    EXPECT_EQ(v[1], (GaussVec{GaussRat(0), GaussRat(Rat(2, 5))}));
    EXPECT_EQ(v[2], (GaussVec{GaussRat(0), GaussRat(Rat(1, 5))}));

    const auto c = taylor_jordan_vectors(PV({"3", "i"}), GaussRat(7), 2);
    EXPECT_EQ(c[0], (GaussVec{GaussRat(3), GaussRat::i()}));
    EXPECT_EQ(c[1], (GaussVec{GaussRat(0), GaussRat(0)}));

    const auto m = taylor_jordan_vectors(PV({"z^2", "z"}), GaussRat(0), 3);
    EXPECT_EQ(m[0], (GaussVec{GaussRat(0), GaussRat(0)}));
    EXPECT_EQ(m[1], (GaussVec{GaussRat(0), GaussRat(1)}));
    EXPECT_EQ(m[2], (GaussVec{GaussRat(1), GaussRat(0)}));
}

TEST(Infinity, Examples) {
    const StructureReport l = structure_at_infinity(load("ex_5_4.json"));
    EXPECT_TRUE(l.point.is_infinity());
    EXPECT_EQ(l.total_pole_mult, 3);
    std::vector<int> t = l.partial_pole_mults;
    std::sort(t.begin(), t.end());
    EXPECT_EQ(t, (std::vector<int>{1, 2}));

    EXPECT_EQ(structure_at_infinity(load("ex_5_5.json")).pole_order(), 1);
    EXPECT_TRUE(structure_at_infinity(M({{"2", "1"}, {"1", "1"}})).empty());
}

TEST(Analyze, GlobalBalanceOnExamples) {
    for (const char* name : {"ex_2_6.json", "ex_3_1.json", "ex_4_2.json", "ex_5_4.json", "ex_5_5.json"}) {
        const Analysis a = analyze(load(name));
        EXPECT_TRUE(global_balance_holds(a)) << name;
    }
}

// --- properties -------------------------------------------------------------

TEST(StructureProperties, RootFunctionsAreMaximalAndIndependent) {
    RandomFunctions gen(41);
    for (int t = 0; t < 40; ++t) {
        const RatMatFun q = gen.function(t % 2 ? 2 : 3);
        const Analysis a = analyze(q);
        for (const auto& r : a.finite) {
            if (!r.point.is_exact()) continue;
            MatGauss ev(q.n(), r.omega0.size());
            for (std::size_t k = 0; k < r.omega0.size(); ++k) {
                const RatVec qphi = mat_vec(q, r.root_functions[k]);
                EXPECT_EQ(taylor_order(qphi, r.point.exact), r.partial_zero_mults[k]);
                EXPECT_EQ(verify_order(q, r.root_functions[k], r.point.exact).order, r.partial_zero_mults[k]);
                const GaussVec v = eval(r.root_functions[k], r.point.exact);
                for (std::size_t i = 0; i < q.n(); ++i) ev(i, k) = v[i];
            }
            EXPECT_EQ(rank(ev), r.omega0.size());
        }
    }
}

TEST(StructureProperties, PoleCancellationFunctionsCertified) {
    RandomFunctions gen(42);
    for (int t = 0; t < 40; ++t) {
        const RatMatFun q = gen.function(t % 2 ? 2 : 3);
        const Analysis a = analyze(q);
        for (const auto& r : a.finite) {
            if (!r.point.is_exact()) continue;
            for (std::size_t k = 0; k < r.omegaP.size(); ++k) {
                const PoleCancellationResult pc = verify_pole_cancellation(q, r.pole_cancellation_functions[k], r.point.exact);
                EXPECT_EQ(pc.order, r.partial_pole_mults[k]);
                EXPECT_EQ(pc.limit, eval(r.pole_functions[k], r.point.exact));
            }
        }
    }
}

TEST(StructureProperties, ValuationsMatchDivisionOracle) {
    RandomFunctions gen(43);
    for (int t = 0; t < 40; ++t) {
        const RatMatFun q = gen.function(2);
        const Analysis a = analyze(q);
        for (const auto& r : a.finite) {
            if (!r.point.is_exact()) continue;
            int n = 0, p = 0;
            for (const auto& d : a.diag.dtilde) {
                const int v = oracle_valuation(d, r.point.exact);
                (v > 0 ? n : p) += std::abs(v);
            }
            EXPECT_EQ(n, r.total_zero_mult);
            EXPECT_EQ(p, r.total_pole_mult);
        }
    }
}
