#include "mincw/codes.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mincw::codes {

namespace {

constexpr int kEnumerationLimit = 28;  // 2^k codewords are materialized or streamed

void check_enumerable(const LinearCode& c) {
    if (c.k() > kEnumerationLimit)
        throw TooLarge("codeword enumeration limited to k <= " + std::to_string(kEnumerationLimit));
}

}  // namespace

std::vector<int> Codeword::support() const {
    std::vector<int> s;
    s.reserve(static_cast<std::size_t>(weight()));
    Word w = bits;
    while (w != 0) {
        s.push_back(std::countr_zero(w));
        w &= w - 1;
    }
    return s;
}

LinearCode::LinearCode(int n, BitMatrix generator)
    : n_(n), k_(generator.rows), generator_(std::move(generator)) {
    if (n < 1 || n > gf2::kMaxBits) throw BadParameter("code length must be in 1..64");
    if (k_ < 1 || k_ > n_) throw BadParameter("code dimension must be in 1..n");
    if (generator_.cols != n_) throw BadParameter("generator width != n");
    if (gf2::rank(generator_) != k_) throw gf2::RankDeficient("generator rows are dependent");
}

bool LinearCode::contains(Word w) const {
    w &= gf2::length_mask(n_);
    // Reduce w against an echelon basis of the row space.
    Word pivots[gf2::kMaxBits] = {};
    for (Word g : generator_.row_data) {
        while (g != 0) {
            const int lead = std::countr_zero(g);
            if (pivots[lead] == 0) { pivots[lead] = g; break; }
            g ^= pivots[lead];
        }
    }
    while (w != 0) {
        const int lead = std::countr_zero(w);
        if (pivots[lead] == 0) return false;
        w ^= pivots[lead];
    }
    return true;
}

void for_each_codeword(const LinearCode& c, const std::function<void(Word)>& fn) {
    check_enumerable(c);
    const auto& rows = c.generator().row_data;
    Word w = 0;
    fn(w);
    const std::uint64_t total = std::uint64_t{1} << c.k();
    for (std::uint64_t i = 1; i < total; ++i) {
        w ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
        fn(w);
    }
}

std::vector<Word> all_codewords(const LinearCode& c) {
    check_enumerable(c);
    std::vector<Word> out;
    out.reserve(std::size_t{1} << c.k());
    for_each_codeword(c, [&](Word w) { out.push_back(w); });
    return out;
}

bool is_minimal(const LinearCode& c, const Codeword& w) {
    if (w.bits == 0) throw ZeroWord("is_minimal: zero word");
    if (w.length != c.n() || !c.contains(w.bits))
        throw NotACodeword("is_minimal: not a codeword of this code");
    const Word outside = ~w.bits & gf2::length_mask(c.n());
    return gf2::rank_on_columns(c.generator(), outside) == c.k() - 1;
}

MinimalSet minimal_codewords(const LinearCode& c) {
    check_enumerable(c);
    // Bucket nonzero codewords by weight; a word can only be dominated by a
    // strictly lighter accepted word, so one ascending pass suffices.
    std::vector<std::vector<Word>> by_weight(static_cast<std::size_t>(c.n()) + 1);
    for_each_codeword(c, [&](Word w) {
        if (w != 0) by_weight[static_cast<std::size_t>(std::popcount(w))].push_back(w);
    });

    MinimalSet out;
    out.n = c.n();
    out.k = c.k();
    std::vector<Word> accepted;
    for (std::size_t wt = 1; wt < by_weight.size(); ++wt) {
        auto& bucket = by_weight[wt];
        std::sort(bucket.begin(), bucket.end());
        const std::size_t lighter = accepted.size();
        for (Word w : bucket) {
            bool dominated = false;
            for (std::size_t i = 0; i < lighter; ++i) {
                if ((accepted[i] & ~w) == 0) { dominated = true; break; }
            }
            if (!dominated) accepted.push_back(w);
        }
    }
    out.members.reserve(accepted.size());
    for (Word w : accepted) out.members.push_back(Codeword{w, c.n()});
    return out;
}

MinimalSet minimal_codewords_oracle(const LinearCode& c) {
    if (c.k() > 16) throw TooLarge("oracle limited to k <= 16");
    std::vector<Word> words;
    for_each_codeword(c, [&](Word w) {
        if (w != 0) words.push_back(w);
    });

    MinimalSet out;
    out.n = c.n();
    out.k = c.k();
    for (Word w : words) {
        bool dominated = false;
        for (Word x : words) {
            if (x != w && (x & ~w) == 0) { dominated = true; break; }
        }
        if (!dominated) out.members.push_back(Codeword{w, c.n()});
    }
    std::sort(out.members.begin(), out.members.end(), [](const Codeword& a, const Codeword& b) {
        return std::pair{a.weight(), a.bits} < std::pair{b.weight(), b.bits};
    });
    return out;
}

bool is_intersecting(const LinearCode& c) {
    check_enumerable(c);
    std::vector<Word> words;
    for_each_codeword(c, [&](Word w) {
        if (w != 0) words.push_back(w);
    });
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            if ((words[i] & words[j]) == 0) return false;
        }
    }
    return true;
}

LinearCode direct_sum(const LinearCode& c, const LinearCode& d) {
    const int n = c.n() + d.n();
    if (n > gf2::kMaxBits) throw LengthOverflow("direct_sum: combined length exceeds 64");
    BitMatrix g(c.k() + d.k(), n);
    for (int i = 0; i < c.k(); ++i) g.row(i) = c.generator().row(i);
    for (int i = 0; i < d.k(); ++i) g.row(c.k() + i) = d.generator().row(i) << c.n();
    return LinearCode(n, std::move(g));
}

LinearCode extend_zero_column(const LinearCode& c) {
    if (c.n() >= gf2::kMaxBits) throw LengthOverflow("extend_zero_column: length already 64");
    BitMatrix g = c.generator();
    g.cols = c.n() + 1;
    return LinearCode(c.n() + 1, std::move(g));
}

LinearCode permute_coordinates(const LinearCode& c, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != c.n()) throw BadPermutation("permutation size != n");
    std::vector<bool> seen(static_cast<std::size_t>(c.n()), false);
    for (int p : perm) {
        if (p < 0 || p >= c.n() || seen[static_cast<std::size_t>(p)])
            throw BadPermutation("not a permutation of 0..n-1");
        seen[static_cast<std::size_t>(p)] = true;
    }
    return LinearCode(c.n(), gf2::permute_columns(c.generator(), perm));
}

int min_distance(const LinearCode& c) {
    check_enumerable(c);
    int best = c.n() + 1;
    for_each_codeword(c, [&](Word w) {
        if (w != 0) best = std::min(best, std::popcount(w));
    });
    return best;
}

std::vector<Codeword> decompose_into_minimal(const LinearCode& c, const Codeword& w) {
    if (w.bits == 0) throw ZeroWord("decompose_into_minimal: zero word");
    if (w.length != c.n() || !c.contains(w.bits))
        throw NotACodeword("decompose_into_minimal: not a codeword");

    const MinimalSet minimal = minimal_codewords(c);  // already (weight, bits) sorted
    std::vector<Codeword> parts;
    Word residual = w.bits;
    while (residual != 0) {
        bool found = false;
        for (const Codeword& m : minimal.members) {
            if ((m.bits & ~residual) == 0) {
                parts.push_back(m);
                residual ^= m.bits;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("decompose_into_minimal: no minimal part fits");
    }
    return parts;
}

LinearCode parity_code(int x) {
    if (x < 2) throw BadParameter("parity code needs length >= 2");
    BitMatrix g(x - 1, x);
    for (int i = 0; i < x - 1; ++i) g.row(i) = (Word{1} << i) | (Word{1} << (x - 1));
    return LinearCode(x, std::move(g));
}

LinearCode universe_code(int y) {
    if (y < 1) throw BadParameter("universe code needs length >= 1");
    BitMatrix g(y, y);
    for (int i = 0; i < y; ++i) g.row(i) = Word{1} << i;
    return LinearCode(y, std::move(g));
}

LinearCode repetition_code(int n) {
    if (n < 1) throw BadParameter("repetition code needs length >= 1");
    BitMatrix g(1, n);
    g.row(0) = gf2::length_mask(n);
    return LinearCode(n, std::move(g));
}

LinearCode extended_hamming() {
    // [I | A] with A rows 0111, 1011, 1101, 1110.
    const Word a_rows[4] = {0b0111, 0b1011, 0b1101, 0b1110};
    BitMatrix g(4, 8);
    for (int i = 0; i < 4; ++i) g.row(i) = (Word{1} << i) | (a_rows[i] << 4);
    return LinearCode(8, std::move(g));
}

std::string to_binary_string(Word bits, int length) {
    std::string s(static_cast<std::size_t>(length), '0');
    for (int i = 0; i < length; ++i) {
        if ((bits >> i) & 1) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
}

Word parse_binary_row(const std::string& s, int expected_length) {
    if (static_cast<int>(s.size()) != expected_length)
        throw ParseError("row has " + std::to_string(s.size()) + " characters, expected " +
                         std::to_string(expected_length));
    Word w = 0;
    for (int i = 0; i < expected_length; ++i) {
        const char ch = s[static_cast<std::size_t>(i)];
        if (ch == '1') w |= Word{1} << i;
        else if (ch != '0') throw ParseError("row characters must be 0 or 1");
    }
    return w;
}

bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        // trim
        const auto end = line.find_last_not_of(" \t\r");
        line = line.substr(pos, end - pos + 1);
        return true;
    }
    return false;
}

LinearCode read_code(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw ParseError("empty code file");
    std::istringstream header(line);
    int n = 0, k = 0;
    if (!(header >> n >> k)) throw ParseError("bad header, expected \"n k\"");
    if (n < 1 || n > gf2::kMaxBits || k < 1 || k > n) throw ParseError("bad code parameters");

    BitMatrix g(k, n);
    for (int i = 0; i < k; ++i) {
        if (!next_content_line(in, line)) throw ParseError("missing generator row");
        g.row(i) = parse_binary_row(line, n);
    }
    try {
        return LinearCode(n, std::move(g));
    } catch (const gf2::RankDeficient&) {
        throw ParseError("generator rows are linearly dependent");
    }
}

LinearCode read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_code(in);
}

void write_code(std::ostream& out, const LinearCode& c) {
    out << c.n() << ' ' << c.k() << '\n';
    for (int i = 0; i < c.k(); ++i) out << to_binary_string(c.generator().row(i), c.n()) << '\n';
}

}  // namespace mincw::codes
