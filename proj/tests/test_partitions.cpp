#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "whp/partition.hpp"

using namespace whp;

TEST_CASE("construction and parsing") {
    CHECK(Partition({4, 2, 2, 1}).to_string() == "4,2,2,1");
    CHECK(Partition::parse("4,2,2,1").parts() == std::vector<long>{4, 2, 2, 1});
    CHECK(Partition::parse("-").empty());
    CHECK(Partition({3, 2, 0, 0}).length() == 2);  // trailing zeros stripped
    CHECK_THROWS(Partition::parse("2,3"));
    CHECK_THROWS(Partition::parse("4,x,1"));
    CHECK(Partition({4, 2, 2, 1}).size() == 9);
}

TEST_CASE("degree vector") {
    CHECK(Partition({4, 2, 2, 1}).degree_vector() == std::vector<long>{7, 4, 3, 1});
    CHECK(Partition().degree_vector().empty());
}

TEST_CASE("conjugate") {
    CHECK(Partition().conjugate() == Partition());
    CHECK(Partition({4, 2, 2, 1}).conjugate() == Partition({4, 3, 1, 1}));
    CHECK(Partition({3, 2}).conjugate() == Partition({2, 2, 1}));
    for (long n = 0; n <= 8; ++n)
        for (const Partition& lam : enumerate_partitions(n))
            CHECK(lam.conjugate().conjugate() == lam);
}

TEST_CASE("hook table") {
    const HookTable t = hook_table(Partition({4, 4, 2, 2, 1}));
    CHECK(t.hooks == std::vector<std::vector<long>>{{8, 6, 3, 2}, {7, 5, 2, 1}, {4, 2}, {3, 1}, {1}});
    CHECK(hook_table(Partition({1})).hooks == std::vector<std::vector<long>>{{1}});
    // First-column hooks equal the degree vector.
    for (long n = 0; n <= 12; ++n)
        for (const Partition& lam : enumerate_partitions(n)) {
            const HookTable ht = hook_table(lam);
            const std::vector<long> dv = lam.degree_vector();
            for (std::size_t i = 0; i < lam.length(); ++i) CHECK(ht.hooks[i][0] == dv[i]);
        }
}

TEST_CASE("content sum") {
    CHECK(content_sum(Partition({5, 4, 2})) == 9);
    CHECK(content_sum(Partition({2, 2, 2})) == -3);
    CHECK(content_sum(Partition()) == 0);
    for (long n = 0; n <= 10; ++n)
        for (const Partition& lam : enumerate_partitions(n))
            CHECK(content_sum(lam.conjugate()) == -content_sum(lam));
}

TEST_CASE("path counts") {
    CHECK(path_count(Partition({2, 1})) == 2);
    CHECK(path_count(Partition({7})) == 1);
    CHECK(path_count(Partition({4, 2, 2, 1})) == 216);
    CHECK(skew_path_count(Partition({2, 1}), Partition({2, 1})) == 1);
    CHECK(skew_path_count(Partition({2, 1}), Partition({1})) == 2);
    CHECK_THROWS(skew_path_count(Partition({1}), Partition({2})));
    for (long n = 1; n <= 10; ++n)
        for (const Partition& lam : enumerate_partitions(n)) {
            CHECK(skew_path_count(lam, Partition()) == path_count(lam));
            Int branch(0);
            for (const Partition& below : covers_below(lam)) branch += path_count(below);
            CHECK(branch == path_count(lam));
        }
}

TEST_CASE("covers") {
    CHECK(covers_below(Partition({1})) == std::vector<Partition>{Partition()});
    CHECK(covers_below(Partition({2, 2})) == std::vector<Partition>{Partition({2, 1})});
    const auto above = covers_above(Partition({2, 1}));
    CHECK(above.size() == 3);
    for (const Partition& p :
         {Partition({3, 1}), Partition({2, 2}), Partition({2, 1, 1})})
        CHECK(std::find(above.begin(), above.end(), p) != above.end());
}

TEST_CASE("enumeration") {
    CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition()});
    CHECK(enumerate_partitions(4).size() == 5);
    CHECK(enumerate_partitions(10).size() == 42);
}

TEST_CASE("hook product and factorial identity") {
    for (long n = 0; n <= 12; ++n)
        for (const Partition& lam : enumerate_partitions(n))
            CHECK(hook_product(lam) * path_count(lam) == factorial(n));
}

TEST_CASE("content identities over the lattice") {
    for (long n = 2; n <= 9; ++n)
        for (const Partition& lam : enumerate_partitions(n)) {
            Int lhs(0);
            for (const Partition& below : covers_below(lam))
                lhs += path_count(below) * content_sum(below);
            CHECK(Int(n) * lhs == Int(n - 2) * path_count(lam) * content_sum(lam));
            auto skew_or_zero = [&](const Partition& sub) {
                return lam.contains(sub) ? skew_path_count(lam, sub) : Int(0);
            };
            const Int via_skew =
                binomial(n, 2) * (skew_or_zero(Partition({2})) - skew_or_zero(Partition({1, 1})));
            CHECK(path_count(lam) * content_sum(lam) == via_skew);
        }
}

TEST_CASE("sub partitions") {
    const auto subs = sub_partitions(Partition({2, 1}));
    CHECK(subs.size() == 5);  // -, 1, 1,1, 2, 2,1
}
