#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "mincw/gf2.hpp"

namespace mincw::codes {

using gf2::BitMatrix;
using gf2::Word;

struct NotACodeword : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ZeroWord : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct LengthOverflow : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadPermutation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct TooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Codeword {
    Word bits = 0;
    int length = 0;

    int weight() const { return std::popcount(bits); }
    std::vector<int> support() const;

    friend bool operator==(const Codeword&, const Codeword&) = default;
};

/// An [n, k] binary linear code held as a full-rank k x n generator matrix.
/// Zero columns are legal; k = 0 is not.
class LinearCode {
public:
    LinearCode(int n, BitMatrix generator);

    int n() const { return n_; }
    int k() const { return k_; }
    const BitMatrix& generator() const { return generator_; }

    /// Membership test via rank: w is a codeword iff stacking it onto the
    /// generator does not raise the rank.
    bool contains(Word w) const;

private:
    int n_;
    int k_;
    BitMatrix generator_;
};

struct MinimalSet {
    int n = 0;
    int k = 0;
    std::vector<Codeword> members;  // sorted by (weight, bits)

    std::size_t count() const { return members.size(); }
};

/// Calls fn for each of the 2^k codewords exactly once, starting from zero.
/// Gray-code order over messages: each step XORs a single generator row.
void for_each_codeword(const LinearCode& c, const std::function<void(Word)>& fn);

/// All 2^k codewords in the Gray-code enumeration order.
std::vector<Word> all_codewords(const LinearCode& c);

/// Rank test: w is minimal iff the generator restricted to the columns outside
/// supp(w) has rank k - 1.
bool is_minimal(const LinearCode& c, const Codeword& w);

/// All minimal codewords by the weight-ascending sieve.
MinimalSet minimal_codewords(const LinearCode& c);

/// Independent oracle: pairwise proper-subset test over all nonzero codewords.
/// Guarded to k <= 16.
MinimalSet minimal_codewords_oracle(const LinearCode& c);

/// True iff every pair of distinct nonzero codewords has intersecting supports.
bool is_intersecting(const LinearCode& c);

LinearCode direct_sum(const LinearCode& c, const LinearCode& d);

LinearCode extend_zero_column(const LinearCode& c);

LinearCode permute_coordinates(const LinearCode& c, const std::vector<int>& perm);

int min_distance(const LinearCode& c);

/// Greedy support-disjoint decomposition of a nonzero codeword into minimal
/// codewords; at most floor(n / min_distance) parts.
std::vector<Codeword> decompose_into_minimal(const LinearCode& c, const Codeword& w);

// Constructions.
LinearCode parity_code(int x);      // [x, x-1], all even-weight vectors, x >= 2
LinearCode universe_code(int y);    // [y, y], full space
LinearCode repetition_code(int n);  // [n, 1]
LinearCode extended_hamming();      // [8, 4, 4] self-dual

// Code file format: line 1 "n k", then k generator rows as 0/1 strings.
// Blank lines and lines starting with '#' are ignored.
LinearCode read_code(std::istream& in);
LinearCode read_code_file(const std::string& path);
void write_code(std::ostream& out, const LinearCode& c);

std::string to_binary_string(Word bits, int length);
Word parse_binary_row(const std::string& s, int expected_length);

/// Next non-blank, non-'#' line, trimmed. Returns false at end of stream.
bool next_content_line(std::istream& in, std::string& line);

}  // namespace mincw::codes
