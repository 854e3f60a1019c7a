#include "mincw/bounds.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <array>

namespace mincw::bounds {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

std::uint64_t to_u64_saturating(const cpp_int& v) {
    static const cpp_int max_u64 = cpp_int(~std::uint64_t{0});
    if (v < 0) return 0;
    if (v > max_u64) return ~std::uint64_t{0};
    return static_cast<std::uint64_t>(v);
}

cpp_int big_binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    cpp_int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

void check_nk(int n, int k) {
    if (n < 1 || k < 1 || k > n) throw BadParameter("require 1 <= k <= n");
}

}  // namespace

GTable GTable::embedded() {
    static constexpr std::array<int, 13> kValues = {2, 2, 2, 3, 3, 3, 4, 4, 4, 4, 5, 5, 6};
    GTable t;
    for (int n = 3; n <= 15; ++n) t.set(n, kValues[static_cast<std::size_t>(n - 3)], false);
    return t;
}

int GTable::at(int n) const {
    const auto it = values_.find(n);
    if (it == values_.end()) throw UnknownG("g(" + std::to_string(n) + ") unknown");
    return it->second;
}

void GTable::set(int n, int g, bool computed) {
    values_[n] = g;
    computed_[n] = computed;
}

bool GTable::computed(int n) const {
    const auto it = computed_.find(n);
    return it != computed_.end() && it->second;
}

std::uint64_t binomial(int n, int k) {
    if (n < 0) throw BadParameter("binomial: n < 0");
    return to_u64_saturating(big_binomial(n, k));
}

std::uint64_t trivial_upper(int n, int k) {
    check_nk(n, k);
    return k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
}

std::uint64_t refined_trivial_upper(int n, int k, const GTable& g) {
    check_nk(n, k);
    const std::uint64_t trivial = trivial_upper(n, k);
    if (k <= g.at(n)) return trivial;
    return trivial - 1;
}

std::uint64_t matroid_upper(int n, int k) {
    check_nk(n, k);
    return binomial(n, k - 1);
}

std::optional<std::uint64_t> agrell_upper(int n, int k) {
    if (n < 1 || k < 1 || k > n) return std::nullopt;
    const int denom_root = 2 * (k - 1) - n;  // 4n((k-1)/n - 1/2)^2 = (2(k-1)-n)^2 / n
    if (denom_root <= 0) return std::nullopt;
    const cpp_int num = (cpp_int(1) << k) * n;
    const cpp_int den = cpp_int(denom_root) * denom_root;
    return to_u64_saturating(num / den);
}

std::map<std::pair<int, int>, std::uint64_t> recursion_upper_table(int N, int K) {
    if (N < 1 || K < 1) throw BadParameter("recursion_upper_table: N, K >= 1");
    std::map<std::pair<int, int>, std::uint64_t> u;
    for (int n = 1; n <= N; ++n) {
        for (int k = 1; k <= std::min(n, K); ++k) {
            std::uint64_t best;
            if (k == 1) {
                best = 1;
            } else if (k == n) {
                best = static_cast<std::uint64_t>(n);
            } else {
                best = std::min(trivial_upper(n, k), matroid_upper(n, k));
                if (const auto a = agrell_upper(n, k)) best = std::min(best, *a);
                const std::uint64_t rec = u.at({n - 1, k - 1}) + binomial(n - 1, k - 1);
                best = std::min(best, rec);
            }
            u[{n, k}] = best;
        }
    }
    return u;
}

std::uint64_t random_coding_lower(int n, int k) {
    check_nk(n, k);
    if (k >= n) throw BadParameter("random_coding_lower requires k < n");
    const int r = n - k;
    cpp_rational rhs = 0;
    cpp_rational product = 1;  // prod_{i=0}^{j-2} (1 - 2^-(r-i)); empty for j <= 1
    for (int j = 0; j <= r + 1; ++j) {
        if (j >= 2) {
            const int e = r - (j - 2);
            product *= cpp_rational(cpp_int((cpp_int(1) << e) - 1), cpp_int(1) << e);
        }
        rhs += cpp_rational(big_binomial(n, j)) * product;
    }
    const cpp_rational bound = rhs / (cpp_int(1) << r);
    // ceiling of a nonnegative rational
    cpp_int m = numerator(bound) / denominator(bound);
    if (m * denominator(bound) != numerator(bound)) ++m;
    return std::min(to_u64_saturating(m), trivial_upper(n, k));
}

std::uint64_t abch_lower(int n, int k, int d) {
    check_nk(n, k);
    if (d < 1 || d > n) throw BadParameter("abch_lower requires 1 <= d <= n");
    const int t = n / d;
    const cpp_int target = (cpp_int(1) << k) - 1;
    if (t == 1) return to_u64_saturating(target);
    for (std::uint64_t m = 0;; ++m) {
        cpp_int sum = 0;
        for (int i = 1; i <= t; ++i) sum += big_binomial(static_cast<int>(m), i);
        if (sum >= target) return m;
    }
}

ClosureResult closure_lower(const std::map<std::pair<int, int>, std::uint64_t>& cells) {
    ClosureResult res;
    res.lower = cells;
    std::vector<std::pair<int, int>> keys;
    keys.reserve(cells.size());
    for (const auto& [nk, v] : cells) keys.push_back(nk);

    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [n, k] : keys) {
            const std::uint64_t v = res.lower.at({n, k});
            const auto mono = res.lower.find({n + 1, k});
            if (mono != res.lower.end() && mono->second < v) {
                mono->second = v;
                res.source[{n + 1, k}] = "monotone";
                changed = true;
            }
            for (const auto& [n2, k2] : keys) {
                const auto sup = res.lower.find({n + n2, k + k2});
                if (sup != res.lower.end() && sup->second < v + res.lower.at({n2, k2})) {
                    sup->second = v + res.lower.at({n2, k2});
                    res.source[{n + n2, k + k2}] = "superadditive";
                    changed = true;
                }
            }
        }
    }
    return res;
}

GraphCycleBounds graph_cycle_upper(int p, int q) {
    if (p < 1 || q < 0) throw BadParameter("graph_cycle_upper: need p >= 1, q >= 0");
    GraphCycleBounds b;
    const int e = q - p + 1;
    if (e < 0) {
        b.bound_old = 0;
        return b;
    }
    const cpp_int pow2 = cpp_int(1) << e;
    b.bound_old = to_u64_saturating(pow2 * 15 / 16);
    if (q > 2 * p) {
        const cpp_int d = cpp_int(q - 2 * p) * (q - 2 * p);
        b.bound_new = to_u64_saturating(pow2 * q / d);
    }
    return b;
}

BoundsCell best_bounds(int n, int k, const GTable& g, std::optional<std::uint64_t> search_lower,
                       std::optional<int> d, std::optional<std::uint64_t> recursion_upper) {
    check_nk(n, k);
    BoundsCell cell;
    cell.n = n;
    cell.k = k;

    // Upper bounds: first minimal candidate in precedence order wins the label.
    std::vector<std::pair<std::uint64_t, std::string>> uppers;
    if (g.known(n)) uppers.emplace_back(refined_trivial_upper(n, k, g), "refined_trivial");
    if (const auto a = agrell_upper(n, k)) uppers.emplace_back(*a, "agrell");
    uppers.emplace_back(matroid_upper(n, k), "matroid");
    uppers.emplace_back(trivial_upper(n, k), "trivial");
    if (recursion_upper) uppers.emplace_back(*recursion_upper, "recursion");
    cell.upper = uppers.front().first;
    cell.upper_src = uppers.front().second;
    for (const auto& [v, src] : uppers) {
        if (v < cell.upper) {
            cell.upper = v;
            cell.upper_src = src;
        }
    }

    // Lower bounds.
    std::vector<std::pair<std::uint64_t, std::string>> lowers;
    if (k == 1) lowers.emplace_back(1, "construction");
    if (k == n) lowers.emplace_back(static_cast<std::uint64_t>(n), "construction");
    if (k == n - 1 && n >= 3) lowers.emplace_back(binomial(n, 2), "construction");
    if (g.known(n) && k <= g.at(n)) lowers.emplace_back(trivial_upper(n, k), "construction");
    if (search_lower) lowers.emplace_back(*search_lower, "search");
    if (k < n) lowers.emplace_back(random_coding_lower(n, k), "random_coding");
    if (d) lowers.emplace_back(abch_lower(n, k, *d), "abch");
    cell.lower = 1;
    cell.lower_src = lowers.empty() ? "trivial" : lowers.front().second;
    for (const auto& [v, src] : lowers) {
        if (v > cell.lower) {
            cell.lower = v;
            cell.lower_src = src;
        }
    }
    return cell;
}

const std::vector<std::pair<int, int>>& published_matroid_discrepancies() {
    static const std::vector<std::pair<int, int>> cells = {
        {8, 6}, {9, 7}, {10, 8}, {11, 9}, {12, 10}, {13, 11}, {14, 12}, {15, 13}};
    return cells;
}

}  // namespace mincw::bounds
