#include "mincw/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

namespace mincw::search {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

gf2::BitMatrix systematic_generator(int n, int k, const std::vector<std::uint32_t>& cols) {
    gf2::BitMatrix g(k, n);
    for (int i = 0; i < k; ++i) {
        Word row = Word{1} << i;
        for (int j = 0; j < n - k; ++j) {
            if ((cols[static_cast<std::size_t>(j)] >> i) & 1) row |= Word{1} << (k + j);
        }
        g.row(i) = row;
    }
    return g;
}

void build_rows(int k, int m, const std::vector<std::uint32_t>& cols, Word* rows) {
    for (int i = 0; i < k; ++i) rows[i] = Word{1} << i;
    for (int j = 0; j < m; ++j) {
        std::uint32_t c = cols[static_cast<std::size_t>(j)];
        while (c != 0) {
            const int i = std::countr_zero(c);
            rows[i] |= Word{1} << (k + j);
            c &= c - 1;
        }
    }
}

void check_params(int n, int k) {
    if (n < 1 || n > gf2::kMaxBits || k < 1 || k > n) throw codes::BadParameter("require 1 <= k <= n <= 64");
    if (k > 24) throw codes::TooLarge("search limited to k <= 24");
}

// Shared control for budget-truncated scans.
struct ScanControl {
    std::atomic<std::uint64_t> examined{0};
    std::atomic<bool> stop{false};
    std::uint64_t max_candidates;
    double max_seconds;
    Clock::time_point start;

    explicit ScanControl(const SearchBudget& b)
        : max_candidates(b.max_candidates), max_seconds(b.max_seconds), start(Clock::now()) {}

    // Returns true if the scan should halt. Called with batched counts.
    bool charge(std::uint64_t batch) {
        const std::uint64_t total = examined.fetch_add(batch, std::memory_order_relaxed) + batch;
        if (total > max_candidates || (max_seconds > 0 && seconds_since(start) > max_seconds)) {
            stop.store(true, std::memory_order_relaxed);
        }
        return stop.load(std::memory_order_relaxed);
    }
};

constexpr std::uint64_t kBatch = 1024;

struct WorkerBest {
    std::int64_t m = -1;
    std::vector<std::uint32_t> cols;
};

// Enumerates nondecreasing column sequences with first column in [lo, hi).
class ExhaustiveWorker {
public:
    ExhaustiveWorker(int n, int k, std::uint32_t lo, std::uint32_t hi, ScanControl& control)
        : n_(n), k_(k), m_(n - k), lo_(lo), hi_(hi), control_(control),
          cols_(static_cast<std::size_t>(m_)), rows_(static_cast<std::size_t>(k_)) {}

    void run() {
        if (m_ == 0) {
            evaluate();
        } else {
            descend(0, lo_, hi_);
        }
        control_.charge(pending_);
        pending_ = 0;
    }

    const WorkerBest& best() const { return best_; }
    bool halted() const { return halted_; }

private:
    void descend(int depth, std::uint32_t lo, std::uint32_t hi) {
        if (halted_) return;
        for (std::uint32_t v = lo; v < hi; ++v) {
            cols_[static_cast<std::size_t>(depth)] = v;
            if (depth + 1 == m_) {
                evaluate();
                if (halted_) return;
            } else {
                descend(depth + 1, v, std::uint32_t{1} << k_);
            }
        }
    }

    void evaluate() {
        build_rows(k_, m_, cols_, rows_.data());
        const std::int64_t m = counter_.count(rows_.data(), k_, n_, best_.m);
        if (m > best_.m) {
            best_.m = m;
            best_.cols = cols_;
        }
        if (++pending_ >= kBatch) {
            if (control_.charge(pending_)) halted_ = true;
            pending_ = 0;
        }
    }

    int n_, k_, m_;
    std::uint32_t lo_, hi_;
    ScanControl& control_;
    std::vector<std::uint32_t> cols_;
    std::vector<Word> rows_;
    MinimalCounter counter_;
    WorkerBest best_;
    std::uint64_t pending_ = 0;
    bool halted_ = false;
};

}  // namespace

std::int64_t MinimalCounter::count(const Word* rows, int k, int n, std::int64_t abandon_leq) {
    if (static_cast<int>(by_weight_.size()) < n + 1) by_weight_.resize(static_cast<std::size_t>(n) + 1);
    for (auto& bucket : by_weight_) bucket.clear();
    accepted_.clear();

    Word w = 0;
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t i = 1; i < total; ++i) {
        w ^= rows[std::countr_zero(i)];
        by_weight_[static_cast<std::size_t>(std::popcount(w))].push_back(w);
    }

    std::uint64_t remaining = total - 1;
    for (int wt = 1; wt <= n; ++wt) {
        const auto& bucket = by_weight_[static_cast<std::size_t>(wt)];
        if (abandon_leq >= 0 &&
            static_cast<std::int64_t>(accepted_.size() + remaining) <= abandon_leq)
            return -1;
        remaining -= bucket.size();
        // equal-weight words cannot dominate each other
        const std::size_t lighter = accepted_.size();
        for (Word x : bucket) {
            bool dominated = false;
            for (std::size_t i = 0; i < lighter; ++i) {
                if ((accepted_[i] & ~x) == 0) { dominated = true; break; }
            }
            if (!dominated) accepted_.push_back(x);
        }
    }
    return static_cast<std::int64_t>(accepted_.size());
}

SearchCertificate exhaustive_max_M(int n, int k, const SearchBudget& budget) {
    check_params(n, k);
    const Clock::time_point start = Clock::now();
    ScanControl control(budget);

    const std::uint32_t col_space = std::uint32_t{1} << k;
    const int workers = std::max(1, std::min<int>(budget.workers, static_cast<int>(col_space)));

    std::vector<ExhaustiveWorker> states;
    states.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) {
        const std::uint32_t lo = static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(col_space) * static_cast<std::uint64_t>(t)) / static_cast<std::uint64_t>(workers));
        const std::uint32_t hi = static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(col_space) * static_cast<std::uint64_t>(t + 1)) / static_cast<std::uint64_t>(workers));
        states.emplace_back(n, k, n == k ? 0 : lo, n == k ? 0 : hi, control);
    }
    if (n == k) {
        // single empty candidate: the universe code
        states.front().run();
    } else if (workers == 1) {
        states.front().run();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(states.size());
        for (auto& s : states) threads.emplace_back([&s] { s.run(); });
        for (auto& t : threads) t.join();
    }

    // merge: max M, ties resolved toward the lexicographically earlier range
    const WorkerBest* best = nullptr;
    bool truncated = control.stop.load();
    for (const auto& s : states) {
        if (s.best().m >= 0 && (best == nullptr || s.best().m > best->m)) best = &s.best();
    }
    if (best == nullptr) throw codes::BadParameter("exhaustive_max_M: budget allowed no candidates");

    SearchCertificate cert;
    cert.n = n;
    cert.k = k;
    cert.generator = systematic_generator(n, k, best->cols);
    cert.claimed_m = static_cast<std::uint64_t>(best->m);
    cert.method = truncated ? "heuristic" : "exhaustive";
    cert.candidates_examined = control.examined.load();
    cert.seed = budget.seed;
    cert.wall_seconds = seconds_since(start);
    return cert;
}

SearchCertificate heuristic_max_M(int n, int k, const SearchBudget& budget) {
    check_params(n, k);
    const Clock::time_point start = Clock::now();
    const int m = n - k;
    const std::uint32_t col_mask = (k == 32) ? ~std::uint32_t{0} : (std::uint32_t{1} << k) - 1;

    std::mt19937_64 rng(budget.seed);
    MinimalCounter counter;
    std::vector<Word> rows(static_cast<std::size_t>(k));
    std::vector<std::uint32_t> cols(static_cast<std::size_t>(m));
    std::uint64_t examined = 0;

    const auto evaluate = [&](const std::vector<std::uint32_t>& c) {
        build_rows(k, m, c, rows.data());
        ++examined;
        return counter.count(rows.data(), k, n, -1);
    };

    std::int64_t best_m = -1;
    std::vector<std::uint32_t> best_cols;
    for (int restart = 0; restart < budget.restarts; ++restart) {
        if (examined > budget.max_candidates) break;
        if (budget.max_seconds > 0 && seconds_since(start) > budget.max_seconds) break;
        for (auto& c : cols) c = static_cast<std::uint32_t>(rng()) & col_mask;
        std::int64_t current = evaluate(cols);
        for (;;) {
            // steepest ascent over single-bit flips, ties by lowest flat index
            std::int64_t best_gain = 0;
            int best_flip = -1;
            for (int b = 0; b < k * m; ++b) {
                const int j = b / k, i = b % k;
                cols[static_cast<std::size_t>(j)] ^= std::uint32_t{1} << i;
                const std::int64_t v = evaluate(cols);
                cols[static_cast<std::size_t>(j)] ^= std::uint32_t{1} << i;
                if (v - current > best_gain) {
                    best_gain = v - current;
                    best_flip = b;
                }
            }
            if (best_flip < 0) break;
            cols[static_cast<std::size_t>(best_flip / k)] ^= std::uint32_t{1} << (best_flip % k);
            current += best_gain;
        }
        if (current > best_m) {
            best_m = current;
            best_cols = cols;
        }
    }

    SearchCertificate cert;
    cert.n = n;
    cert.k = k;
    cert.generator = systematic_generator(n, k, best_cols);
    cert.claimed_m = static_cast<std::uint64_t>(best_m);
    cert.method = "heuristic";
    cert.candidates_examined = examined;
    cert.seed = budget.seed;
    cert.wall_seconds = seconds_since(start);
    return cert;
}

namespace {

// True iff the code spanned by rows is intersecting; scratch reused by caller.
bool rows_intersecting(const Word* rows, int k, std::vector<Word>& words) {
    words.clear();
    Word w = 0;
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t i = 1; i < total; ++i) {
        w ^= rows[std::countr_zero(i)];
        for (Word x : words) {
            if ((x & w) == 0) return false;
        }
        words.push_back(w);
    }
    return true;
}

}  // namespace

GResult compute_g(int n, const SearchBudget& budget) {
    if (n < 3) throw codes::BadParameter("compute_g requires n >= 3");
    ScanControl control(budget);
    std::vector<Word> scratch;
    std::vector<Word> rows;
    std::uint64_t pending = 0;

    int best = 1;  // repetition code is intersecting
    for (int k = 2; k <= n; ++k) {
        const int m = n - k;
        rows.assign(static_cast<std::size_t>(k), 0);
        std::vector<std::uint32_t> cols(static_cast<std::size_t>(m), 0);
        bool found = false;
        bool halted = false;

        // odometer over nondecreasing column sequences
        const std::uint32_t top = std::uint32_t{1} << k;
        const std::function<void(int, std::uint32_t)> descend = [&](int depth, std::uint32_t lo) {
            if (found || halted) return;
            if (depth == m) {
                build_rows(k, m, cols, rows.data());
                if (rows_intersecting(rows.data(), k, scratch)) found = true;
                if (++pending >= kBatch) {
                    if (control.charge(pending)) halted = true;
                    pending = 0;
                }
                return;
            }
            for (std::uint32_t v = lo; v < top && !found && !halted; ++v) {
                cols[static_cast<std::size_t>(depth)] = v;
                descend(depth + 1, v);
            }
        };
        descend(0, 0);
        if (halted) return {best, false};
        if (!found) return {best, true};
        best = k;
    }
    return {best, true};
}

DResult compute_d(int n, int k, const SearchBudget& budget) {
    check_params(n, k);
    ScanControl control(budget);
    const int m = n - k;
    std::vector<Word> rows(static_cast<std::size_t>(k));
    std::vector<std::uint32_t> cols(static_cast<std::size_t>(m), 0);
    std::uint64_t pending = 0;

    DResult res;
    res.value = 0;
    bool halted = false;
    const std::uint32_t top = std::uint32_t{1} << k;
    const std::function<void(int, std::uint32_t)> descend = [&](int depth, std::uint32_t lo) {
        if (halted) return;
        if (depth == m) {
            build_rows(k, m, cols, rows.data());
            Word w = 0;
            int min_wt = n + 1;
            const std::uint64_t total = std::uint64_t{1} << k;
            for (std::uint64_t i = 1; i < total && min_wt > res.value; ++i) {
                w ^= rows[std::countr_zero(i)];
                min_wt = std::min(min_wt, std::popcount(w));
            }
            if (min_wt > res.value && min_wt <= n) {
                res.value = min_wt;
                res.witness = systematic_generator(n, k, cols);
            }
            if (++pending >= kBatch) {
                if (control.charge(pending)) halted = true;
                pending = 0;
            }
            return;
        }
        for (std::uint32_t v = lo; v < top && !halted; ++v) {
            cols[static_cast<std::size_t>(depth)] = v;
            descend(depth + 1, v);
        }
    };
    descend(0, 0);
    res.exhaustive = !halted;
    return res;
}

bool verify_certificate(const SearchCertificate& cert) {
    try {
        const codes::LinearCode code(cert.n, cert.generator);
        const std::uint64_t sieve = codes::minimal_codewords(code).count();
        if (sieve != cert.claimed_m) return false;
        if (code.k() <= 16) {
            const std::uint64_t oracle = codes::minimal_codewords_oracle(code).count();
            if (oracle != cert.claimed_m) return false;
        }
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

SearchCertificate read_certificate(std::istream& in) {
    std::string line;
    if (!codes::next_content_line(in, line)) throw codes::ParseError("empty certificate");
    std::istringstream header(line);
    SearchCertificate cert;
    if (!(header >> cert.n >> cert.k >> cert.claimed_m >> cert.method >> cert.seed >> cert.candidates_examined))
        throw codes::ParseError("bad certificate header");
    if (cert.n < 1 || cert.n > gf2::kMaxBits || cert.k < 1 || cert.k > cert.n)
        throw codes::ParseError("bad certificate parameters");
    if (cert.method != "exhaustive" && cert.method != "heuristic")
        throw codes::ParseError("bad certificate method: " + cert.method);

    cert.generator = gf2::BitMatrix(cert.k, cert.n);
    for (int i = 0; i < cert.k; ++i) {
        if (!codes::next_content_line(in, line)) throw codes::ParseError("missing generator row");
        cert.generator.row(i) = codes::parse_binary_row(line, cert.n);
    }
    return cert;
}

SearchCertificate read_certificate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw codes::ParseError("cannot open " + path);
    return read_certificate(in);
}

void write_certificate(std::ostream& out, const SearchCertificate& cert) {
    out << cert.n << ' ' << cert.k << ' ' << cert.claimed_m << ' ' << cert.method << ' '
        << cert.seed << ' ' << cert.candidates_examined << '\n';
    for (int i = 0; i < cert.k; ++i)
        out << codes::to_binary_string(cert.generator.row(i), cert.n) << '\n';
}

}  // namespace mincw::search
