#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "whp/core_quotient.hpp"
#include "whp/hermite.hpp"

using namespace whp;

namespace {

Int double_factorial(long n) {
    Int r(1);
    for (long v = n; v > 1; v -= 2) r *= v;
    return r;
}

const std::vector<HermiteMethod> kAllMethods{HermiteMethod::determinant, HermiteMethod::recurrence,
                                             HermiteMethod::characters, HermiteMethod::hooks};

}  // namespace

TEST_CASE("single hermite polynomials") {
    CHECK(hermite(0) == IntPoly(Int(1)));
    CHECK(hermite(1) == IntPoly::x());
    CHECK(hermite(2) == IntPoly({Int(-1), Int(0), Int(1)}));
    for (long n = 2; n <= 10; ++n) {
        // Values and derivatives at the origin follow double factorials.
        const Int value = hermite(n).coeff(0);
        const Int slope = hermite(n).coeff(1);
        if (n % 2 == 0) {
            CHECK(value == ((n / 2) % 2 ? -double_factorial(n - 1) : double_factorial(n - 1)));
            CHECK(slope == 0);
        } else {
            CHECK(value == 0);
            CHECK(slope == (((n - 1) / 2) % 2 ? -double_factorial(n) : double_factorial(n)));
        }
    }
}

TEST_CASE("golden wronskian values") {
    const IntPoly expected =
        IntPoly::monomial(3) * IntPoly({Int(-35), Int(0), Int(-7), Int(0), Int(1), Int(0), Int(1)});
    for (HermiteMethod m : kAllMethods)
        CHECK(wronskian_hermite(Partition({4, 2, 2, 1}), m) == expected);
    CHECK(wronskian_hermite(Partition({3, 2, 1}), HermiteMethod::determinant) ==
          IntPoly::monomial(6));
    CHECK(wronskian_hermite(Partition({1, 1}), HermiteMethod::determinant) ==
          IntPoly({Int(1), Int(0), Int(1)}));
    CHECK(wronskian_hermite(Partition(), HermiteMethod::determinant) == IntPoly(Int(1)));
}

TEST_CASE("four routes agree") {
    for (long n = 0; n <= 9; ++n)
        for (const Partition& lam : enumerate_partitions(n)) {
            const IntPoly det = wronskian_hermite(lam, HermiteMethod::determinant);
            for (HermiteMethod m : kAllMethods) CHECK(wronskian_hermite(lam, m) == det);
        }
}

TEST_CASE("factorization structure") {
    const HermiteFactorization f = remainder_polynomial(Partition({4, 2, 2, 1}));
    CHECK(f.remainder == IntPoly({Int(-35), Int(-7), Int(1), Int(1)}));
    CHECK(f.core_size == 3);
    CHECK(f.h_parity == 1);
    CHECK(f.r0 == -35);

    CHECK(remainder_polynomial(Partition({2})).remainder == IntPoly({Int(-1), Int(1)}));
    CHECK(remainder_polynomial(Partition({3, 2, 1})).remainder == IntPoly(Int(1)));
    CHECK(remainder_polynomial(Partition()).remainder == IntPoly(Int(1)));

    for (long n = 0; n <= 10; ++n)
        for (const Partition& lam : enumerate_partitions(n)) {
            const HermiteFactorization g = remainder_polynomial(lam);
            const QuotientData2 q = core_and_quotient_2(lam);
            CHECK(g.core_size == q.k * (q.k + 1) / 2);
            CHECK(g.full == IntPoly::monomial(g.core_size) * g.remainder.power_substituted(2));
            CHECK(g.full == wronskian_hermite(lam, HermiteMethod::determinant));
            CHECK(g.remainder.degree() == q.quotient_size());
            CHECK(g.remainder.leading() == 1);
            CHECK(g.r0 != 0);
            const Int ratio = exact_div(hook_product_odd(lam), hook_product(q.core()));
            CHECK(g.r0 == (g.h_parity ? -ratio : ratio));
        }
}

TEST_CASE("subleading coefficient by two routes") {
    CHECK(subleading_coefficient(Partition({5, 4, 2})).first == -9);
    CHECK(subleading_coefficient(Partition({2, 2, 2})).first == 3);
    CHECK(subleading_coefficient(Partition({3})).first == -3);
    CHECK_THROWS(subleading_coefficient(Partition({2, 1})));
    for (long n = 2; n <= 10; ++n)
        for (const Partition& lam : enumerate_partitions(n)) {
            const HermiteFactorization f = remainder_polynomial(lam);
            if (f.remainder.degree() < 1) continue;
            const auto [via_contents, via_quotient] = subleading_coefficient(lam);
            CHECK(via_contents == via_quotient);
            CHECK(via_contents == f.remainder.coeff(f.remainder.degree() - 1));
        }
}

TEST_CASE("conjugation symmetry") {
    for (long n = 0; n <= 10; ++n)
        for (const Partition& lam : enumerate_partitions(n)) CHECK(conjugation_check(lam));
}

TEST_CASE("plancherel average is a monomial") {
    for (long n = 0; n <= 10; ++n) {
        IntPoly sum;
        for (const Partition& lam : enumerate_partitions(n)) {
            const Int f = path_count(lam);
            sum += Int(f * f) * wronskian_hermite(lam, HermiteMethod::recurrence);
        }
        CHECK(sum == IntPoly::monomial(n, factorial(n)));
    }
}

TEST_CASE("equal-size quotient components leave the near-constant coefficient zero") {
    for (long a = 1; a <= 2; ++a)
        for (const Partition& mu : enumerate_partitions(a))
            for (const Partition& nu : enumerate_partitions(a))
                for (long k = 0; k <= 4; ++k) {
                    const IntPoly r = remainder_polynomial(phi(mu, nu, k)).remainder;
                    CHECK(r.coeff(1) == 0);  // coefficient r_{d-1}
                }
}
