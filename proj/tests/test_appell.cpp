#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "whp/appell.hpp"
#include "whp/core_quotient.hpp"
#include "whp/hermite.hpp"

using namespace whp;

TEST_CASE("single family members") {
    CHECK(q_poly(3, 3) == IntPoly({Int(-2), Int(0), Int(0), Int(1)}));
    for (long n = 0; n <= 10; ++n) CHECK(q_poly(2, n) == hermite(n));
    // p = 1 gives the binomial expansion of (x-1)^n.
    IntPoly power(Int(1));
    const IntPoly x_minus_1({Int(-1), Int(1)});
    for (long n = 0; n <= 10; ++n) {
        CHECK(q_poly(1, n) == power);
        power *= x_minus_1;
    }
    // Recurrence matches the explicit expansion.
    for (int p : {1, 2, 3, 5})
        for (long n = 0; n <= 12; ++n) CHECK(q_poly(p, n) == q_poly_expansion(p, n));
}

TEST_CASE("wronskians of the p-family by three routes") {
    CHECK(wronskian_appell(3, Partition({3}), AppellMethod::determinant) ==
          IntPoly({Int(-2), Int(0), Int(0), Int(1)}));
    for (long n = 0; n <= 9; ++n)
        for (const Partition& lam : enumerate_partitions(n)) {
            CHECK(wronskian_appell(2, lam, AppellMethod::determinant) ==
                  wronskian_hermite(lam, HermiteMethod::determinant));
            for (int p : {1, 3}) {
                const IntPoly det = wronskian_appell(p, lam, AppellMethod::determinant);
                CHECK(wronskian_appell(p, lam, AppellMethod::recurrence) == det);
                CHECK(wronskian_appell(p, lam, AppellMethod::characters) == det);
            }
            IntPoly power(Int(1));
            for (long i = 0; i < n; ++i) power *= IntPoly({Int(-1), Int(1)});
            CHECK(wronskian_appell(1, lam, AppellMethod::determinant) == power);
        }
}

TEST_CASE("factorization over p-cores") {
    const AppellFactorization f3 = factor_p(3, Partition({3}));
    CHECK(f3.core_size == 0);
    CHECK(f3.remainder == IntPoly({Int(-2), Int(1)}));

    for (long n = 0; n <= 9; ++n)
        for (const Partition& lam : enumerate_partitions(n))
            for (int p : {2, 3}) {
                const AppellFactorization f = factor_p(p, lam);
                const QuotientDataP q = core_and_quotient_p(lam, p);
                CHECK(f.core_size == q.core.size());
                CHECK(f.full ==
                      IntPoly::monomial(f.core_size) * f.remainder.power_substituted(p));
                CHECK(f.full == wronskian_appell(p, lam, AppellMethod::recurrence));
                CHECK(f.remainder.leading() == 1);
                CHECK(f.remainder.degree() == q.quotient_size());
                const Int ratio =
                    exact_div(hook_products_split(lam, p).first, hook_product(q.core));
                CHECK(f.r0 == (f.h_parity ? -ratio : ratio));
                CHECK(remainder_via_recurrence(p, lam) == f.remainder);
                CHECK(remainder_via_hooks(p, lam) == f.remainder);
            }

    // A p-core has trivial remainder.
    CHECK(factor_p(3, Partition({3, 1, 1})).remainder ==
          IntPoly(Int(1)));  // hooks 5,2,1,2,1: none divisible by 3
}

TEST_CASE("conjugation symmetry for odd p") {
    for (long n = 0; n <= 9; ++n)
        for (const Partition& lam : enumerate_partitions(n))
            CHECK(factor_p(3, lam).remainder == factor_p(3, lam.conjugate()).remainder);
}

TEST_CASE("plancherel average for p = 3") {
    for (long n = 0; n <= 9; ++n) {
        IntPoly sum;
        for (const Partition& lam : enumerate_partitions(n)) {
            const Int f = path_count(lam);
            sum += Int(f * f) * wronskian_appell(3, lam, AppellMethod::recurrence);
        }
        CHECK(sum == IntPoly::monomial(n, factorial(n)));
    }
}

TEST_CASE("generic appell sequences") {
    // z_n equal to the Hermite value at 0 reproduces the Hermite family.
    std::vector<Rat> hermite_z;
    for (long i = 0; i <= 10; ++i) hermite_z.emplace_back(hermite(i).coeff(0));
    for (long n = 0; n <= 6; ++n) CHECK(appell_poly(hermite_z, n) == to_rational(hermite(n)));

    const std::vector<Rat> z{Rat(1), Rat(2, 3), Rat(-1, 2)};
    CHECK(wronskian_appell_generic(z, Partition({2})) ==
          RatPoly({z[2], Rat(2) * z[1], Rat(1)}));
    CHECK(wronskian_appell_generic(z, Partition({1, 1})) ==
          RatPoly({Rat(2) * z[1] * z[1] - z[2], Rat(2) * z[1], Rat(1)}));
}

TEST_CASE("generic leading coefficients match the determinant route") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    for (int round = 0; round < 50; ++round) {
        const long n = 2 + static_cast<long>(rng() % 7);
        const auto parts = enumerate_partitions(n);
        const Partition& lam = parts[rng() % parts.size()];
        std::vector<Rat> z{Rat(1)};
        for (long i = 0; i < n; ++i) {
            Rat v(num(rng), den(rng));
            v.canonicalize();
            z.push_back(v);
        }
        const RatPoly w = wronskian_appell_generic(z, lam);
        const auto [a1, a2] = appell_leading_coeffs(z, lam);
        CHECK(w.coeff(n - 1) == a1);
        CHECK(w.coeff(n - 2) == a2);
    }
    CHECK_THROWS(appell_leading_coeffs({Rat(1), Rat(0)}, Partition({1})));
}

TEST_CASE("hermite specialization of the leading coefficients") {
    const std::vector<Rat> z{Rat(1), Rat(0), Rat(-1), Rat(0), Rat(0), Rat(0), Rat(0)};
    for (long n = 2; n <= 6; ++n)
        for (const Partition& lam : enumerate_partitions(n)) {
            const auto [a1, a2] = appell_leading_coeffs(z, lam);
            CHECK(a1 == 0);
            CHECK(a2 == Rat(-content_sum(lam)));
        }
}

TEST_CASE("coefficient support respects the degree class") {
    for (long n = 0; n <= 12; ++n)
        for (const Partition& lam : enumerate_partitions(n))
            for (int p : {2, 3, 5}) {
                const IntPoly q = wronskian_appell(p, lam, AppellMethod::recurrence);
                for (long m = 0; m <= q.degree(); ++m)
                    if ((m - n) % p != 0) CHECK(q.coeff(m) == 0);
            }
}
