#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mincw/codes.hpp"

// Closed-form and recursive bounds on M(n,k), the maximum number of minimal
// codewords of a binary [n,k] code, plus bound-table assembly. All arithmetic
// is exact; no floating point.

namespace mincw::bounds {

using codes::BadParameter;

struct UnknownG : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// g(n): the largest k for which an intersecting [n,k] code exists.
class GTable {
public:
    /// Known exact values for 3 <= n <= 15.
    static GTable embedded();

    bool known(int n) const { return values_.count(n) != 0; }
    int at(int n) const;
    void set(int n, int g, bool computed);
    bool computed(int n) const;

    const std::map<int, int>& values() const { return values_; }

private:
    std::map<int, int> values_;
    std::map<int, bool> computed_;
};

std::uint64_t binomial(int n, int k);

std::uint64_t trivial_upper(int n, int k);  // 2^k - 1

/// 2^k - 1 when k <= g(n), else 2^k - 2. Throws UnknownG when g(n) is unknown.
std::uint64_t refined_trivial_upper(int n, int k, const GTable& g);

std::uint64_t matroid_upper(int n, int k);  // binomial(n, k-1)

/// floor(2^k * n / (2(k-1) - n)^2) when (k-1)/n > 1/2, nullopt otherwise.
std::optional<std::uint64_t> agrell_upper(int n, int k);

/// DP over U(n,k) = min(trivial, matroid, agrell, U(n-1,k-1) + C(n-1,k-1))
/// with base cases U(n,1) = 1 and U(n,n) = n.
std::map<std::pair<int, int>, std::uint64_t> recursion_upper_table(int N, int K);

/// Smallest integer M with M * 2^(n-k) >= sum_{j=0}^{n-k+1} C(n,j)
/// prod_{i=0}^{j-2} (1 - 2^-(n-k-i)), in exact rationals. Requires k < n.
std::uint64_t random_coding_lower(int n, int k);

/// Smallest M with sum_{i=1}^{floor(n/d)} C(M,i) >= 2^k - 1.
std::uint64_t abch_lower(int n, int k, int d);

/// Monotone closure of lower bounds: L(n+1,k) >= L(n,k) and
/// L(n+m,k+j) >= L(n,k) + L(m,j), iterated to fixpoint. Each improved cell is
/// labeled "monotone" or "superadditive" in the returned source map.
struct ClosureResult {
    std::map<std::pair<int, int>, std::uint64_t> lower;
    std::map<std::pair<int, int>, std::string> source;  // only cells the closure improved
};
ClosureResult closure_lower(const std::map<std::pair<int, int>, std::uint64_t>& cells);

/// Cycle-count bounds for a connected graph on p vertices and q edges.
/// bound_new = floor(q * 2^(q-p+1) / (q-2p)^2), defined only when q > 2p;
/// bound_old = floor((15/16) * 2^(q-p+1)).
struct GraphCycleBounds {
    std::optional<std::uint64_t> bound_new;
    std::uint64_t bound_old;
};
GraphCycleBounds graph_cycle_upper(int p, int q);

struct BoundsCell {
    int n = 0;
    int k = 0;
    std::uint64_t lower = 1;
    std::string lower_src;
    std::uint64_t upper = 0;
    std::string upper_src;
    bool exact() const { return lower == upper; }
};

/// Best available bounds for one cell. `recursion_upper` is the DP value for
/// (n,k) when available; `search_lower` and `d` (best minimum distance, for
/// the ABCH bound) are optional.
BoundsCell best_bounds(int n, int k, const GTable& g,
                       std::optional<std::uint64_t> search_lower = std::nullopt,
                       std::optional<int> d = std::nullopt,
                       std::optional<std::uint64_t> recursion_upper = std::nullopt);

/// The eight cells where the published table prints C(n,k-1) - 1 for the
/// matroid bound instead of C(n,k-1).
const std::vector<std::pair<int, int>>& published_matroid_discrepancies();

}  // namespace mincw::bounds
