#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mincw/codes.hpp"

// Certified lower-bound searches for M(n,k), g(n) and d(n,k) over systematic
// generators [I | A]. Sorting the columns of A is a coordinate permutation of
// the code, so restricting to nondecreasing column values keeps the search
// complete up to permutation equivalence.

namespace mincw::search {

using codes::Word;

struct SearchBudget {
    std::uint64_t max_candidates = ~std::uint64_t{0};
    double max_seconds = 0;  // 0 = unlimited
    int workers = 1;
    int restarts = 64;       // heuristic only
    std::uint64_t seed = 1;
};

struct SearchCertificate {
    int n = 0;
    int k = 0;
    gf2::BitMatrix generator;
    std::uint64_t claimed_m = 0;
    std::string method;  // "exhaustive" | "heuristic"
    std::uint64_t candidates_examined = 0;
    std::uint64_t seed = 0;
    double wall_seconds = 0;
};

/// Fast M(C) evaluation with reusable buffers; search inner loop.
class MinimalCounter {
public:
    /// M of the code spanned by `rows` (k rows, n columns). When
    /// `abandon_leq` >= 0, returns -1 as soon as the final count provably
    /// cannot exceed it.
    std::int64_t count(const Word* rows, int k, int n, std::int64_t abandon_leq = -1);

private:
    std::vector<std::vector<Word>> by_weight_;
    std::vector<Word> accepted_;
};

/// Scan of all canonical [I | A] generators; complete up to coordinate
/// permutation. Downgrades to "heuristic" when the budget truncates the scan.
SearchCertificate exhaustive_max_M(int n, int k, const SearchBudget& budget = {});

/// Steepest-ascent hill climbing over single-bit flips of A with seeded
/// random restarts.
SearchCertificate heuristic_max_M(int n, int k, const SearchBudget& budget = {});

struct GResult {
    int value = 0;
    bool exhaustive = true;  // false when the budget truncated the scan
};

/// Largest k such that an intersecting [n,k] code exists.
GResult compute_g(int n, const SearchBudget& budget = {});

struct DResult {
    int value = 0;
    bool exhaustive = true;
    gf2::BitMatrix witness;
};

/// Largest minimum distance of an [n,k] code, by canonical scan.
DResult compute_d(int n, int k, const SearchBudget& budget = {});

/// Recomputes M from the stored generator with both minimality algorithms.
bool verify_certificate(const SearchCertificate& cert);

// Certificate file format:
//   line 1: "n k claimed_m method seed candidates_examined"
//   then k generator rows as 0/1 strings.
SearchCertificate read_certificate(std::istream& in);
SearchCertificate read_certificate_file(const std::string& path);
void write_certificate(std::ostream& out, const SearchCertificate& cert);

}  // namespace mincw::search
