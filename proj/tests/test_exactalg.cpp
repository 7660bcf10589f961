#include <gtest/gtest.h>

#include "support.hpp"

using namespace mero;
using namespace testing_support;

TEST(GaussRat, CanonicalRationals) {
    Rat r(6, 4);
    r.canonicalize();
    EXPECT_EQ(to_string(GaussRat(r)), "3/2");
    EXPECT_EQ(to_string(GaussRat()), "0");
    EXPECT_EQ(to_string(GaussRat(Rat(1, 2), Rat(3))), "1/2+3*i");
    EXPECT_EQ(to_string(GaussRat(Rat(0), Rat(-1))), "-1*i");
}

TEST(GaussRat, FieldAxiomsAndConjugation) {
    const GaussRat a(Rat(1, 3), Rat(-2)), b(Rat(5, 7), Rat(1, 2));
    EXPECT_EQ(a * a.inverse(), GaussRat(1));
    EXPECT_EQ((a + b) * b, a * b + b * b);
    EXPECT_EQ(a.conj().conj(), a);
    EXPECT_TRUE((a * a.conj()).is_real());
    EXPECT_EQ((a * a.conj()).re(), a.norm());
    EXPECT_EQ(GaussRat::i() * GaussRat::i(), GaussRat(-1));
}

TEST(PolyDivrem, FrozenExample) {
    // oracle: quotient * divisor + remainder rebuilds the dividend
    const Poly a = P("z^2+4*z+5"), b = P("z+1");
    auto [q, r] = poly_divrem(a, b);
    EXPECT_EQ(q, P("z+3"));
    EXPECT_EQ(r, Poly(2));
    EXPECT_EQ(q * b + r, a);
}

TEST(PolyDivrem, TrivialCases) {
    const Poly p = P("3*z^3-z+7");
    EXPECT_EQ(poly_divrem(p, Poly(1)).first, p);
    EXPECT_TRUE(poly_divrem(p, Poly(1)).second.is_zero());
    auto [q, r] = poly_divrem(P("z+1"), P("z^2"));
    EXPECT_TRUE(q.is_zero());
    EXPECT_EQ(r, P("z+1"));
}

TEST(PolyDivrem, ZeroDivisorThrows) {
    try {
        poly_divrem(P("z"), Poly());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::DivisionByZeroPoly);
    }
}

TEST(PolyGcd, FrozenExamples) {
    // z^2-1 = (z-1)(z+1), z^2+4z+3 = (z+1)(z+3): common factor z+1
    EXPECT_EQ(poly_gcd(P("z^2-1"), P("z^2+4*z+3")), P("z+1"));
    EXPECT_EQ(poly_gcd(P("2*z^2+2"), Poly()), P("z^2+1"));
    // resultant of z+1 and z+2 is 1, nonzero
    EXPECT_EQ(poly_gcd(P("z+1"), P("z+2")), Poly(1));
    EXPECT_THROW(poly_gcd(Poly(), Poly()), Error);
}

TEST(PolyGcd, GaussianCoefficients) {
    EXPECT_EQ(poly_gcd(P("z^2+1"), P("z^2-2*i*z-1")), P("z-i"));
}

TEST(Squarefree, FrozenExamples) {
    auto sf = squarefree_decompose(P("(z+1)^4*(z-1)"));
    ASSERT_EQ(sf.size(), 2u);
    EXPECT_EQ(sf[0].factor, P("z-1"));
    EXPECT_EQ(sf[0].multiplicity, 1);
    EXPECT_EQ(sf[1].factor, P("z+1"));
    EXPECT_EQ(sf[1].multiplicity, 4);

    sf = squarefree_decompose(P("z"));
    ASSERT_EQ(sf.size(), 1u);
    EXPECT_EQ(sf[0].multiplicity, 1);

    sf = squarefree_decompose(P("(z^2+1)^2"));
    ASSERT_EQ(sf.size(), 1u);
    EXPECT_EQ(sf[0].factor, P("z^2+1"));
    EXPECT_EQ(sf[0].multiplicity, 2);
    EXPECT_THROW(squarefree_decompose(Poly()), Error);
}

TEST(Roots, FrozenExamples) {
    RootSet rs = roots_with_multiplicity(P("5/4*(z+1)^4"));
    ASSERT_EQ(rs.exact_roots.size(), 1u);
    EXPECT_EQ(rs.exact_roots[0].value, GaussRat(-1));
    EXPECT_EQ(rs.exact_roots[0].multiplicity, 4);
    EXPECT_TRUE(rs.numeric_roots.empty());

    EXPECT_EQ(roots_with_multiplicity(Poly(5)).total_multiplicity(), 0);

    rs = roots_with_multiplicity(P("z^2+1"));
    ASSERT_EQ(rs.exact_roots.size(), 2u);
    for (const auto& r : rs.exact_roots) {
        EXPECT_TRUE(P("z^2+1").eval(r.value).is_zero());
        EXPECT_EQ(r.multiplicity, 1);
    }
    EXPECT_THROW(roots_with_multiplicity(Poly()), Error);
}

TEST(Roots, RationalAndGaussianCandidates) {
    const Poly p = P("(3*z-2)^2*(2*z+5*i)*(z-1/2+i)");
    RootSet rs = roots_with_multiplicity(p);
    EXPECT_TRUE(rs.numeric_roots.empty());
    EXPECT_EQ(rs.total_multiplicity(), 4);
    for (const auto& r : rs.exact_roots) EXPECT_TRUE(p.eval(r.value).is_zero());
}

TEST(Roots, IrrationalRootsGoNumeric) {
    const Poly p = P("(z^2-2)*(z-3)^2");
    RootSet rs = roots_with_multiplicity(p);
    ASSERT_EQ(rs.exact_roots.size(), 1u);
    EXPECT_EQ(rs.exact_roots[0].value, GaussRat(3));
    EXPECT_EQ(rs.exact_roots[0].multiplicity, 2);
    ASSERT_EQ(rs.numeric_roots.size(), 2u);
    for (const auto& r : rs.numeric_roots) {
        EXPECT_NEAR(std::abs(r.value), std::sqrt(2.0), 1e-12);
        EXPECT_EQ(r.multiplicity, 1);
        EXPECT_LE(std::abs(horner(to_complex_coeffs(p), r.value)), r.residual_bound + 1e-12);
    }
    EXPECT_EQ(rs.total_multiplicity(), 4);
}

// --- properties over random polynomials -------------------------------------

namespace {

Poly random_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg), c(-5, 5);
    std::vector<GaussRat> co;
    for (int k = 0, d = deg(rng); k <= d; ++k) co.emplace_back(GaussRat(static_cast<long>(c(rng)), static_cast<long>(c(rng) / 3)));
    if (co.back().is_zero()) co.back() = GaussRat(1);
    return Poly(co);
}

} // namespace

TEST(ExactAlgProperties, DivremReconstruction) {
    std::mt19937 rng(11);
    for (int t = 0; t < 300; ++t) {
        const Poly a = random_poly(rng, 8), b = random_poly(rng, 5);
        auto [q, r] = poly_divrem(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_LT(r.degree(), b.degree() == 0 ? 0 : b.degree());
    }
}

TEST(ExactAlgProperties, GcdDividesAndScales) {
    std::mt19937 rng(12);
    for (int t = 0; t < 150; ++t) {
        const Poly a = random_poly(rng, 5), b = random_poly(rng, 5), g = random_poly(rng, 3).monic();
        const Poly d = poly_gcd(a, b);
        EXPECT_TRUE(divides(d, a));
        EXPECT_TRUE(divides(d, b));
        EXPECT_EQ(poly_gcd(a * g, b * g), (g * d).monic());
    }
}

TEST(ExactAlgProperties, SquarefreeRebuildsInput) {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> e(1, 3);
    for (int t = 0; t < 80; ++t) {
        const Poly p = pow(random_poly(rng, 2), e(rng)) * pow(random_poly(rng, 2), e(rng)) * random_poly(rng, 2);
        const auto sf = squarefree_decompose(p);
        Poly rebuilt(1);
        for (std::size_t k = 0; k < sf.size(); ++k) {
            rebuilt *= pow(sf[k].factor, sf[k].multiplicity);
            EXPECT_EQ(sf[k].factor, sf[k].factor.monic());
            EXPECT_EQ(poly_gcd(sf[k].factor, sf[k].factor.derivative()), Poly(1));
            if (k > 0) {
                EXPECT_LT(sf[k - 1].multiplicity, sf[k].multiplicity);
            }
            for (std::size_t j = 0; j < k; ++j) EXPECT_EQ(poly_gcd(sf[j].factor, sf[k].factor), Poly(1));
        }
        EXPECT_EQ(rebuilt, p.monic());
    }
}

TEST(ExactAlgProperties, RootsAreExactAndComplete) {
    std::mt19937 rng(14);
    std::uniform_int_distribution<int> c(-3, 3), e(1, 3);
    for (int t = 0; t < 60; ++t) {
        const int lead = c(rng);
        Poly p(GaussRat(static_cast<long>(lead == 0 ? 2 : lead)));
        for (int k = 0; k < 3; ++k) {
            const long re = c(rng), im = c(rng);
            p *= pow(Poly{GaussRat(make_rat(re, 2), make_rat(im)), GaussRat(1)}, e(rng));
        }
        p *= random_poly(rng, 2);
        const RootSet rs = roots_with_multiplicity(p);
        EXPECT_EQ(rs.total_multiplicity(), p.degree());
        for (const auto& r : rs.exact_roots) {
            EXPECT_TRUE(p.eval(r.value).is_zero());
            EXPECT_EQ(division_count(p, r.value), r.multiplicity);
        }
    }
}
