#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "whp/characters.hpp"
#include "whp/partition.hpp"

using namespace whp;

TEST_CASE("known character values") {
    CHECK(character_path_sum(Partition({1, 1}), 2, 1) == -1);
    CHECK(character_path_sum(Partition({2, 1}), 2, 1) == 0);
    CHECK(character_path_sum(Partition({4, 2, 2, 1}), 2, 0) == 216);
    CHECK(character_path_sum(Partition({4, 2, 2, 1}), 2, 1) == -6);
    CHECK(character_path_sum(Partition({4, 2, 2, 1}), 2, 2) == -4);
    CHECK(character_path_sum(Partition({4, 2, 2, 1}), 2, 3) == 6);
    CHECK(character_path_sum(Partition({4, 2, 2, 1}), 2, 4) == 0);
}

TEST_CASE("identity class gives tableau counts") {
    for (long n = 0; n <= 10; ++n)
        for (const Partition& lam : enumerate_partitions(n)) {
            CHECK(character_path_sum(lam, 2, 0) == path_count(lam));
            CHECK(character_path_sum(lam, 3, 0) == path_count(lam));
        }
}

TEST_CASE("trivial and sign representations") {
    for (long n = 1; n <= 8; ++n) {
        std::vector<long> column(n, 1);
        for (long j = 0; 2 * j <= n; ++j) {
            CHECK(character_mn_oracle(Partition({n}), 2, j) == 1);
            CHECK(character_mn_oracle(Partition(column), 2, j) == (j % 2 ? -1 : 1));
        }
    }
}

TEST_CASE("two routes agree everywhere in range") {
    for (long n = 0; n <= 10; ++n)
        for (const Partition& lam : enumerate_partitions(n))
            for (int p : {2, 3})
                for (long j = 0; p * j <= n; ++j)
                    CHECK(character_path_sum(lam, p, j) == character_mn_oracle(lam, p, j));
}

TEST_CASE("full cycle type evaluation") {
    // Characters of S_3: the standard 2-dimensional representation.
    CHECK(character_mn_full(Partition({2, 1}), Partition({1, 1, 1})) == 2);
    CHECK(character_mn_full(Partition({2, 1}), Partition({2, 1})) == 0);
    CHECK(character_mn_full(Partition({2, 1}), Partition({3})) == -1);
    // Column orthogonality for a full character sum at a non-identity class.
    for (long n = 2; n <= 8; ++n) {
        Int sum(0);
        for (const Partition& lam : enumerate_partitions(n))
            sum += character_mn_full(lam, Partition({n})) * path_count(lam);
        CHECK(sum == 0);
    }
}

TEST_CASE("orthogonality of the identity column") {
    for (long n = 1; n <= 10; ++n)
        for (long j = 0; 2 * j <= n; ++j) {
            Int sum(0);
            for (const Partition& lam : enumerate_partitions(n))
                sum += character_path_sum(lam, 2, 0) * character_path_sum(lam, 2, j);
            CHECK(sum == (j == 0 ? factorial(n) : Int(0)));
        }
}

TEST_CASE("transposition class relates to contents") {
    for (long n = 2; n <= 10; ++n)
        for (const Partition& lam : enumerate_partitions(n))
            CHECK(binomial(n, 2) * character_path_sum(lam, 2, 1) ==
                  path_count(lam) * content_sum(lam));
}
