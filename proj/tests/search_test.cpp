#include <doctest.h>

#include <random>
#include <sstream>

#include "mincw/search.hpp"
#include "test_util.hpp"

using namespace mincw;
using search::SearchBudget;
using codes::Word;

TEST_CASE("MinimalCounter matches the sieve") {
    std::mt19937_64 rng(47);
    search::MinimalCounter counter;
    for (int trial = 0; trial < 300; ++trial) {
        const codes::LinearCode c = testutil::random_code(rng, 12, 8, 2);
        const auto expected = codes::minimal_codewords(c).count();
        CHECK(counter.count(c.generator().row_data.data(), c.k(), c.n()) ==
              static_cast<std::int64_t>(expected));
        // abandon threshold at the exact count must not abandon below it
        CHECK(counter.count(c.generator().row_data.data(), c.k(), c.n(),
                            static_cast<std::int64_t>(expected) - 1) ==
              static_cast<std::int64_t>(expected));
    }
}

TEST_CASE("exhaustive search on settled small cells") {
    CHECK(search::exhaustive_max_M(5, 3).claimed_m == 6);
    CHECK(search::exhaustive_max_M(6, 4).claimed_m == 11);
    CHECK(search::exhaustive_max_M(7, 4).claimed_m == 14);
    for (int n = 3; n <= 7; ++n) {
        CHECK(search::exhaustive_max_M(n, n - 1).claimed_m ==
              static_cast<std::uint64_t>(n) * (n - 1) / 2);
        CHECK(search::exhaustive_max_M(n, n).claimed_m == static_cast<std::uint64_t>(n));
        CHECK(search::exhaustive_max_M(n, 1).claimed_m == 1);
    }
}

TEST_CASE("exhaustive certificates verify and carry metadata") {
    const auto cert = search::exhaustive_max_M(7, 4);
    CHECK(cert.method == "exhaustive");
    CHECK(cert.candidates_examined > 0);
    CHECK(search::verify_certificate(cert));

    auto tampered = cert;
    tampered.claimed_m += 1;
    CHECK_FALSE(search::verify_certificate(tampered));

    search::SearchCertificate hamming;
    hamming.n = 8;
    hamming.k = 4;
    hamming.generator = codes::extended_hamming().generator();
    hamming.claimed_m = 14;
    hamming.method = "exhaustive";
    CHECK(search::verify_certificate(hamming));
}

namespace {

std::uint64_t brute_force_max_M(int n, int k) {
    // every full-rank generator, no canonicalization
    std::uint64_t best = 0;
    const std::uint64_t mats = std::uint64_t{1} << (k * n);
    for (std::uint64_t bits = 0; bits < mats; ++bits) {
        gf2::BitMatrix g(k, n);
        for (int i = 0; i < k; ++i) g.row(i) = (bits >> (i * n)) & gf2::length_mask(n);
        if (gf2::rank(g) != k) continue;
        best = std::max<std::uint64_t>(
            best, codes::minimal_codewords(codes::LinearCode(n, std::move(g))).count());
    }
    return best;
}

}  // namespace

TEST_CASE("canonical restriction is complete on tiny parameters") {
    for (int n = 3; n <= 5; ++n) {
        for (int k = 1; k <= std::min(n, 3); ++k) {
            CHECK(search::exhaustive_max_M(n, k).claimed_m == brute_force_max_M(n, k));
        }
    }
    CHECK(search::exhaustive_max_M(5, 4).claimed_m == brute_force_max_M(5, 4));
    CHECK(search::exhaustive_max_M(6, 3).claimed_m == brute_force_max_M(6, 3));
}

TEST_CASE("worker partitioning is deterministic") {
    SearchBudget one;
    one.workers = 1;
    SearchBudget four;
    four.workers = 4;
    const auto a = search::exhaustive_max_M(7, 4, one);
    const auto b = search::exhaustive_max_M(7, 4, four);
    CHECK(a.claimed_m == b.claimed_m);
    CHECK(a.generator == b.generator);
}

TEST_CASE("budget truncation downgrades the method") {
    SearchBudget tiny;
    tiny.max_candidates = 64;
    const auto cert = search::exhaustive_max_M(8, 4, tiny);
    CHECK(cert.method == "heuristic");
    CHECK(search::verify_certificate(cert));
}

TEST_CASE("compute_g reproduces known values") {
    CHECK(search::compute_g(3).value == 2);
    CHECK(search::compute_g(4).value == 2);
    CHECK(search::compute_g(6).value == 3);
    CHECK(search::compute_g(9).value == 4);
    CHECK(search::compute_g(9).exhaustive);
}

TEST_CASE("compute_d") {
    const auto d84 = search::compute_d(8, 4);
    CHECK(d84.value == 4);
    CHECK(codes::min_distance(codes::LinearCode(8, d84.witness)) == 4);
    for (int n = 3; n <= 6; ++n) {
        CHECK(search::compute_d(n, n).value == 1);
        CHECK(search::compute_d(n, 1).value == n);
    }
}

TEST_CASE("heuristic search is reproducible and capped") {
    SearchBudget b;
    b.seed = 5;
    b.restarts = 8;
    const auto first = search::heuristic_max_M(8, 4, b);
    const auto second = search::heuristic_max_M(8, 4, b);
    CHECK(first.claimed_m == second.claimed_m);
    CHECK(first.generator == second.generator);
    CHECK(first.method == "heuristic");
    CHECK(first.claimed_m <= 15);
    CHECK(search::verify_certificate(first));

    // never exceeds the exhaustive value on a settled cell
    CHECK(first.claimed_m <= search::exhaustive_max_M(8, 4).claimed_m);
}

TEST_CASE("certificate file round trip") {
    const auto cert = search::exhaustive_max_M(6, 3);
    std::stringstream buf;
    buf << "# certificate\n";
    search::write_certificate(buf, cert);
    const auto back = search::read_certificate(buf);
    CHECK(back.n == cert.n);
    CHECK(back.k == cert.k);
    CHECK(back.claimed_m == cert.claimed_m);
    CHECK(back.method == cert.method);
    CHECK(back.generator == cert.generator);
    CHECK(search::verify_certificate(back));

    std::stringstream bad("6 3 7 magic 0 0\n110000\n011000\n000110\n");
    CHECK_THROWS_AS(search::read_certificate(bad), codes::ParseError);
}
