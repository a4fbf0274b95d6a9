#include <doctest.h>

#include <map>
#include <optional>
#include <set>

#include "pqblocks/errors.hpp"
#include "pqblocks/numtheory.hpp"
#include "pqblocks/oracle.hpp"
#include "pqblocks/partition.hpp"
#include "pqblocks/witness_sym.hpp"

using namespace pqblocks;

namespace {

bool principal_sym(const Partition& lam, std::int64_t p) {
    int e = static_cast<int>(p);
    return oracle::core_by_rim_hooks(lam, e) == Partition::row(lam.size() % e);
}

bool principal_alt(const Partition& lam, std::int64_t p) {
    return principal_sym(lam, p) || principal_sym(lam.conjugate(), p);
}

bool coprime(const mpz_class& d, std::int64_t p, std::int64_t q) { return d % p != 0 && d % q != 0; }

// (k, l) with lam = (1^{n-k-l-1}, k+1, l), if lam is an almost hook.
std::optional<AlmostHookSpec> as_almost_hook(const Partition& lam) {
    int n = lam.size();
    for (int k = 0; 2 * k + 1 < n; ++k)
        for (int l = k + 1; l < n - k; ++l)
            if (AlmostHookSpec{n, k, l}.expand() == lam) return AlmostHookSpec{n, k, l};
    return std::nullopt;
}

}  // namespace

TEST_CASE("symmetric group examples") {
    auto a = witness_symmetric(9, 3, 2);
    CHECK(a.partition == Partition::column(9));
    CHECK(a.case_tag == SymCase::Sign);
    auto b = witness_symmetric(10, 3, 7);
    CHECK(b.partition == Partition::parse("1^5,2,3"));
    CHECK(b.case_tag == SymCase::IIa);
    CHECK(degree(b.partition) == 160);
    auto c = witness_symmetric(23, 3, 7);
    CHECK(c.partition == Partition::parse("1^21,2"));
    CHECK(c.case_tag == SymCase::I);
    auto d = witness_symmetric(11, 2, 3);
    CHECK(d.partition == Partition::parse("1^5,3^2"));
    CHECK(d.case_tag == SymCase::IIbb);
    CHECK(std::string(to_string(SymCase::IIbb)) == "IIbb");
    CHECK_THROWS_AS(witness_symmetric(2, 2, 3), InvalidArgument);
    CHECK_THROWS_AS(witness_symmetric(10, 3, 3), InvalidArgument);
    CHECK_THROWS_AS(witness_symmetric(10, 4, 3), InvalidArgument);
}

TEST_CASE("alternating group examples") {
    auto a = witness_alternating(9, 3, 2);
    CHECK(a.partition == Partition::parse("1^4,5"));
    CHECK(a.constituent == Constituent::SplitPlus);
    CHECK(a.degree == 35);
    CHECK(a.case_tag == AltCase::Case2_4);
    auto b = witness_alternating(15, 3, 5);
    CHECK(b.partition == Partition({14, 1}));
    CHECK(b.constituent == Constituent::FullRestriction);
    CHECK(b.degree == 14);
    CHECK(b.case_tag == AltCase::Case1);
    auto c = witness_alternating(10, 3, 7);
    CHECK(c.partition == Partition::parse("1^5,2,3"));
    CHECK(c.constituent == Constituent::FullRestriction);
    CHECK(c.degree == 160);
    CHECK_THROWS_AS(witness_alternating(3, 2, 3), InvalidArgument);
}

TEST_CASE("symmetric witnesses for n <= 60") {
    for (std::int64_t n = 3; n <= 60; ++n) {
        auto primes = primes_up_to(n);
        for (std::size_t i = 0; i < primes.size(); ++i)
            for (std::size_t j = i + 1; j < primes.size(); ++j) {
                std::int64_t p = primes[i], q = primes[j];
                INFO("n=" << n << " p=" << p << " q=" << q);
                auto w = witness_symmetric(n, p, q);
                CHECK(w.partition.size() == n);
                CHECK(w.partition != Partition::row(static_cast<int>(n)));
                CHECK(principal_sym(w.partition, p));
                CHECK(principal_sym(w.partition, q));
                CHECK(coprime(oracle::degree_by_beta(w.partition), p, q));
                CHECK(verify_symmetric(w, p, q));
                bool sign = std::max(n % p, n % q) <= 1;
                CHECK((w.case_tag == SymCase::Sign) == sign);
                if (w.case_tag != SymCase::Sign) {
                    auto spec = as_almost_hook(w.partition);
                    REQUIRE(spec.has_value());
                    CHECK(almost_hook_degree(*spec) == degree(w.partition));
                }
                auto swapped = witness_symmetric(n, q, p);
                CHECK(swapped.partition == w.partition);
                if (n % p != n % q) CHECK(swapped.primes_swapped != w.primes_swapped);
            }
    }
}

TEST_CASE("alternating witnesses for n <= 60") {
    for (std::int64_t n = 4; n <= 60; ++n) {
        auto primes = primes_up_to(n);
        for (std::size_t i = 0; i < primes.size(); ++i)
            for (std::size_t j = i + 1; j < primes.size(); ++j) {
                std::int64_t p = primes[i], q = primes[j];
                INFO("n=" << n << " p=" << p << " q=" << q);
                auto w = witness_alternating(n, p, q);
                const auto& lam = w.partition;
                CHECK(lam != Partition::row(static_cast<int>(n)));
                CHECK(lam != Partition::column(static_cast<int>(n)));
                CHECK(principal_alt(lam, p));
                CHECK(principal_alt(lam, q));
                CHECK(is_p_principal_alt(lam, p));
                CHECK(is_p_principal_alt(lam, q));
                bool split = w.constituent != Constituent::FullRestriction;
                CHECK(split == lam.is_self_conjugate());
                mpz_class d = oracle::degree_by_beta(lam);
                CHECK(w.degree == (split ? mpz_class(d / 2) : d));
                CHECK(coprime(w.degree, p, q));
                CHECK(verify_alternating(w, p, q));
            }
    }
}

TEST_CASE("every case is reached") {
    std::map<SymCase, int> sym;
    std::map<AltCase, int> alt;
    for (std::int64_t n = 4; n <= 200; ++n) {
        auto primes = primes_up_to(std::min<std::int64_t>(n, 60));
        for (std::size_t i = 0; i < primes.size(); ++i)
            for (std::size_t j = i + 1; j < primes.size(); ++j) {
                sym[witness_symmetric(n, primes[i], primes[j]).case_tag]++;
                alt[witness_alternating(n, primes[i], primes[j]).case_tag]++;
            }
    }
    for (auto c : {SymCase::Sign, SymCase::I, SymCase::IIa, SymCase::IIb, SymCase::IIbb, SymCase::IIIa, SymCase::IIIb}) {
        INFO(to_string(c));
        CHECK(sym[c] > 0);
    }
    for (auto c : {AltCase::FromSym, AltCase::Case1, AltCase::Case2_1, AltCase::Case2_2, AltCase::Case2_3,
                   AltCase::Case2_4, AltCase::Case3_1, AltCase::Case3_2, AltCase::Case3_3a, AltCase::Case3_3b,
                   AltCase::Case3_3c}) {
        INFO(to_string(c));
        CHECK(alt[c] > 0);
    }
}

TEST_CASE("small intersections") {
    CHECK(classify_small_intersection(9, 3, 2) == SmallIntersection::LinearOnly);
    CHECK(classify_small_intersection(8, 7, 2) == SmallIntersection::LinearOnly);
    CHECK(classify_small_intersection(17, 17, 2) == SmallIntersection::LinearOnly);
    CHECK(classify_small_intersection(10, 7, 3) == SmallIntersection::Larger);
    CHECK(classify_small_intersection(9, 5, 3) == SmallIntersection::Larger);
    CHECK_THROWS_AS(classify_small_intersection(9, 2, 3), InvalidArgument);

    using Set = std::set<std::pair<std::int64_t, std::int64_t>>;
    CHECK(classify_triples(40) == Set{{4, 3}, {5, 5}, {8, 7}, {9, 3}, {17, 17}, {32, 31}});
    CHECK(classify_triples(9) == Set{{4, 3}, {5, 5}, {8, 7}, {9, 3}});
    CHECK(classify_triples(4) == Set{{4, 3}});

    for (int n = 4; n <= 30; ++n) {
        oracle::SymmetricTable table(n);
        auto primes = primes_up_to(n);
        for (std::size_t i = 0; i < primes.size(); ++i)
            for (std::size_t j = i + 1; j < primes.size(); ++j) {
                std::int64_t q = primes[i], p = primes[j];
                auto sym = table.sym(p, q);
                bool linear_only = sym.size() == 2 && sym.contains(Partition::row(n).to_string()) &&
                                   sym.contains(Partition::column(n).to_string());
                INFO("n=" << n << " p=" << p << " q=" << q);
                CHECK(linear_only == (classify_small_intersection(n, p, q) == SmallIntersection::LinearOnly));
                if (linear_only) CHECK(table.alt(p, q).size() == 3);
            }
    }
}
