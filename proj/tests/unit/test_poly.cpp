#include <doctest.h>

#include <random>

#include "lcdc/poly.hpp"

using namespace lcdc;
using u32 = std::uint32_t;
using u64 = std::uint64_t;

namespace {
FieldPtr gf2() {
    static FieldPtr f = make_field(2, 1);
    return f;
}
FieldPtr gf3() {
    static FieldPtr f = make_field(3, 1);
    return f;
}
Poly p2(std::vector<u32> c) { return Poly::from_coeffs(gf2(), std::move(c)); }
}  // namespace

TEST_CASE("arithmetic and canonical form") {
    Poly a = p2({1, 1, 0, 0, 1});  // x^4+x+1
    Poly b = p2({1, 0, 0, 1, 1});  // x^4+x^3+1
    CHECK(poly_gcd(a, b).is_one());
    CHECK((a + a).is_zero());
    CHECK(a * Poly::one(gf2()) == a);

    Poly xm1 = p2({1, 1});
    CHECK(poly_lcm(xm1, xm1) == xm1);

    auto [q, r] = divrem(Poly::x_pow_n_minus_1(gf2(), 15), a);
    CHECK(r.is_zero());
    CHECK(q * a == Poly::x_pow_n_minus_1(gf2(), 15));
    CHECK_THROWS_AS((void)divrem(a, Poly::zero(gf2())), std::invalid_argument);

    // mixed fields rejected
    Poly over3 = Poly::from_coeffs(gf3(), {1, 1});
    CHECK_THROWS_AS((void)(a * over3), std::invalid_argument);

    // gcd and lcm come back monic over GF(3)
    Poly c3 = Poly::from_coeffs(gf3(), {2, 1, 2});  // 2x^2+x+2
    Poly d3 = Poly::from_coeffs(gf3(), {1, 2});
    CHECK(poly_gcd(c3 * d3, d3 * d3).is_monic());
    CHECK(poly_lcm(c3, d3).is_monic());
}

TEST_CASE("reciprocals") {
    CHECK(reciprocal(p2({1, 1, 0, 0, 1})) == p2({1, 0, 0, 1, 1}));
    CHECK(reciprocal(p2({1, 1})) == p2({1, 1}));
    CHECK(reciprocal(p2({1, 1, 1})) == p2({1, 1, 1}));
    CHECK(is_self_reciprocal(p2({1, 1, 1, 1, 1})));
    CHECK_FALSE(is_self_reciprocal(p2({1, 1, 0, 0, 1})));
    CHECK(is_self_reciprocal(Poly::from_coeffs(gf3(), {2, 1})));  // x - 1 over GF(3)
    CHECK_THROWS_AS((void)reciprocal(p2({0, 1})), std::invalid_argument);
    CHECK_THROWS_AS((void)reciprocal(Poly::zero(gf2())), std::invalid_argument);
}

TEST_CASE("reciprocal is a degree-preserving involution on monic polynomials") {
    std::mt19937 rng(7);
    for (FieldPtr f : {gf2(), gf3(), make_field(2, 2)}) {
        u64 q = static_cast<u64>(f->size());
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<u32> c(1 + rng() % 9);
            for (auto& x : c) x = static_cast<u32>(rng() % q);
            c[0] = 1 + static_cast<u32>(rng() % (q - 1));  // nonzero constant term
            c.push_back(1);                                // monic
            Poly fpoly = Poly::from_coeffs(f, c);
            Poly rec = reciprocal(fpoly);
            CHECK(rec.degree() == fpoly.degree());
            CHECK(reciprocal(rec) == fpoly);
        }
    }
}

TEST_CASE("minimal polynomials of the 15-th roots of unity over GF(2)") {
    ModulusOverrides ov{{{2, 4}, {1, 1, 0, 0, 1}}};  // x^4+x+1, the published table field
    RootContextPtr ctx = get_root_context(gf2(), 15, ov);
    CHECK(ctx->minimal_polynomial(0) == p2({1, 1}));
    CHECK(ctx->minimal_polynomial(1) == p2({1, 1, 0, 0, 1}));
    CHECK(ctx->minimal_polynomial(3) == p2({1, 1, 1, 1, 1}));
    CHECK(ctx->minimal_polynomial(5) == p2({1, 1, 1}));
    CHECK(ctx->minimal_polynomial(7) == p2({1, 0, 0, 1, 1}));
    // coset invariance m_s = m_{sq}
    for (u64 s = 0; s < 15; ++s) CHECK(ctx->minimal_polynomial(s) == ctx->minimal_polynomial(s * 2 % 15));
    for (u64 s : {0, 1, 3, 5, 7}) {
        Poly m = ctx->minimal_polynomial(s);
        CHECK(m.is_monic());
        CHECK(is_irreducible(m));
        CHECK(m.degree() == static_cast<std::int64_t>(ctx->cosets().coset_of(s).size()));
    }
}

TEST_CASE("explicit extension/beta construction validates the root order") {
    auto ext = make_field(2, 4, std::vector<u32>{1, 1, 0, 0, 1});
    FieldElement beta = ext->generator();
    RootContext ctx(gf2(), ext, beta);
    CHECK(ctx.n() == 15);
    CHECK(ctx.minimal_polynomial(1) == p2({1, 1, 0, 0, 1}));
    // beta of order 5 gives a length-5 context, not 15
    RootContext ctx5(gf2(), ext, ext->pow(beta, 3));
    CHECK(ctx5.n() == 5);
    CHECK_THROWS(RootContext(gf3(), ext, beta));  // wrong characteristic
}

TEST_CASE("factorization of x^n - 1") {
    auto fs = factor_xn_minus_1(gf2(), 15);
    REQUIRE(fs.size() == 5);
    std::vector<std::int64_t> degs;
    for (auto& [leader, f] : fs) degs.push_back(f.degree());
    CHECK(degs == std::vector<std::int64_t>{1, 4, 4, 2, 4});

    auto f3s = factor_xn_minus_1(gf2(), 3);
    REQUIRE(f3s.size() == 2);
    CHECK(f3s[0].second == p2({1, 1}));
    CHECK(f3s[1].second == p2({1, 1, 1}));

    auto f23 = factor_xn_minus_1(gf3(), 2);
    REQUIRE(f23.size() == 2);
    CHECK(f23[0].second == Poly::from_coeffs(gf3(), {2, 1}));  // x - 1
    CHECK(f23[1].second == Poly::from_coeffs(gf3(), {1, 1}));  // x + 1

    CHECK_THROWS_AS((void)factor_xn_minus_1(gf3(), 9), std::invalid_argument);
}

TEST_CASE("factorization identity across the full sweep") {
    // the product assert inside factor_xn_minus_1 is the identity check;
    // GF(4) exercises the subfield embedding, large primes the wide fields
    for (u64 q : {2, 3, 4, 5}) {
        FieldPtr base = q == 4 ? make_field(2, 2) : make_field(static_cast<u32>(q), 1);
        for (u64 n = 2; n <= 200; ++n) {
            if (std::gcd(n, q) != 1) continue;
            auto fs = factor_xn_minus_1(base, n);
            u64 total = 0;
            for (auto& [leader, f] : fs) total += static_cast<u64>(f.degree());
            REQUIRE(total == n);
        }
    }
}

TEST_CASE("polynomial text forms") {
    Poly a = p2({1, 1, 0, 0, 1});
    CHECK(to_coeff_list(a) == "1,1,0,0,1");
    CHECK(to_human(a) == "x^4+x+1");
    CHECK(parse_poly(gf2(), "1,1,0,0,1") == a);
    CHECK(parse_poly(gf2(), "x^4+x+1") == a);
    CHECK(parse_poly(gf2(), " x^4 + x + 1 ") == a);
    CHECK(parse_poly(gf3(), "2x^2+x+2") == Poly::from_coeffs(gf3(), {2, 1, 2}));
    CHECK(parse_poly(gf3(), "x^2-1") == Poly::from_coeffs(gf3(), {2, 0, 1}));
    CHECK(parse_poly(gf2(), "1") == Poly::one(gf2()));
    CHECK(to_human(Poly::zero(gf2())) == "0");
    CHECK_THROWS_AS((void)parse_poly(gf2(), "x^4+3x"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_poly(gf2(), ""), std::invalid_argument);
}
