#include <doctest.h>

#include "pqblocks/errors.hpp"
#include "pqblocks/numtheory.hpp"
#include "pqblocks/oracle.hpp"
#include "pqblocks/partition.hpp"
#include "pqblocks/symbol.hpp"

using namespace pqblocks;

TEST_CASE("beta-set degrees and rim-hook cores agree with the library") {
    for (int n = 1; n <= 20; ++n)
        for (const auto& lam : oracle::partitions(n)) {
            CHECK(oracle::degree_by_beta(lam) == degree(lam));
            for (int e = 1; e <= n; ++e) CHECK(oracle::core_by_rim_hooks(lam, e) == e_core(lam, e));
        }
}

TEST_CASE("partition counts") {
    CHECK(oracle::partitions(0).size() == 1);
    CHECK(oracle::partitions(10).size() == 42);
    CHECK(oracle::partitions(30).size() == 5604);
    CHECK_THROWS_AS(oracle::partitions(61), InvalidArgument);
    CHECK_THROWS_AS(oracle::symbols(13), InvalidArgument);
}

TEST_CASE("symmetric and alternating intersections") {
    auto s = oracle::intersection_sym(9, 3, 2);
    CHECK(s.size() == 2);
    CHECK(s.contains(Partition::row(9).to_string()));
    CHECK(s.contains(Partition::column(9).to_string()));
    auto a = oracle::intersection_alt(9, 3, 2);
    CHECK(a.size() == 3);
    CHECK(a.contains(Partition::row(9).to_string()));

    auto b = oracle::intersection_sym(10, 3, 7);
    CHECK(b.contains(Partition::parse("1^5,2,3").to_string()));
    CHECK(oracle::intersection_alt(5, 5, 2).size() == 3);

    for (int n = 4; n <= 20; ++n) {
        oracle::SymmetricTable table(n);
        for (auto p : primes_up_to(n))
            for (auto q : primes_up_to(n)) {
                if (p == q) continue;
                auto rep = table.sym(p, q);
                INFO("n=" << n << " p=" << p << " q=" << q);
                CHECK(rep.contains(Partition::row(n).to_string()));
                bool sign = n % p <= 1 && n % q <= 1;
                CHECK(rep.contains(Partition::column(n).to_string()) == sign);
                CHECK(rep.labels == table.sym(q, p).labels);
            }
    }
    CHECK_THROWS_AS(oracle::intersection_sym(31, 2, 3), InvalidArgument);
    CHECK_THROWS_AS(oracle::intersection_sym(10, 2, 2), InvalidArgument);
    CHECK_THROWS_AS(oracle::intersection_alt(3, 2, 3), InvalidArgument);
}

TEST_CASE("finite group intersections") {
    auto a = oracle::intersection_typeA(4, 3, 1, 2, 5);
    CHECK(a.contains(Partition::row(4).to_string()));
    CHECK(a.contains(Partition::column(4).to_string()));
    auto bc = oracle::intersection_typeBC(3, 3, 2, 5);
    CHECK(bc.contains("[0,2|2]"));
    CHECK(bc.contains(trivial_symbol(3).to_string()));
    for (int n = 2; n <= 6; ++n) {
        auto rep = oracle::intersection_typeBC(n, 2, 3, 5);
        CHECK(rep.contains(trivial_symbol(n).to_string()));
    }
    CHECK_THROWS_AS(oracle::intersection_typeA(11, 2, 1, 3, 7), InvalidArgument);
    CHECK_THROWS_AS(oracle::intersection_typeA(4, 11, 1, 2, 3), InvalidArgument);
    CHECK_THROWS_AS(oracle::intersection_typeA(4, 3, 1, 3, 5), InvalidArgument);
    CHECK_THROWS_AS(oracle::intersection_typeBC(9, 2, 3, 5), InvalidArgument);
    CHECK_THROWS_AS(oracle::intersection_typeBC(2, 2, 3, 31), InvalidArgument);
}

TEST_CASE("unipotent degree products") {
    // SL_3(2): degrees 1, 6, 8
    CHECK(oracle::typeA_qprime(Partition::row(3), 2) == 1);
    CHECK(oracle::typeA_qprime(Partition({2, 1}), 2) == 3);
    CHECK(oracle::typeA_qprime(Partition::column(3), 2) == 1);
    // Sp_4(Q): Q(Q^2+1)/2, Q(Q+1)^2/2, Q(Q-1)^2/2
    CHECK(oracle::typeBC_qprime(Symbol({1, 2}, {0}), 3) == 5);
    CHECK(oracle::typeBC_qprime(Symbol({0, 2}, {1}), 3) == 8);
    CHECK(oracle::typeBC_qprime(Symbol({0, 1, 2}, {}), 5) == 8);
    CHECK(oracle::typeBC_qprime(trivial_symbol(2), 2) == 1);
    CHECK(oracle::typeBC_qprime(steinberg_symbol(2), 3) == 1);
}
