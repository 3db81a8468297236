// Words in the 3-strand braid group: numeric-token parsing, the two braid
// families handled by the pipeline, free reduction, strand permutations, and
// rewriting into the {s, t} = {sigma2, sigma2*sigma1} generator set.

#ifndef DBCOVER_BRAID_HPP
#define DBCOVER_BRAID_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dbcover::braid {

// Letters are +1/-1 for sigma1^{+1/-1} and +2/-2 for sigma2^{+1/-1}.
struct BraidWord {
    std::vector<std::int8_t> letters;
    bool operator==(const BraidWord&) const = default;
};

// Letters are +1/-1 for s^{+1/-1} and +2/-2 for t^{+1/-1},
// where s = sigma2 and t = sigma2*sigma1.
struct STWord {
    std::vector<std::int8_t> letters;
    bool operator==(const STWord&) const = default;
};

enum class Family { Even, Odd };

struct ParseError : std::invalid_argument {
    ParseError(std::size_t token_index, const std::string& what)
        : std::invalid_argument("token " + std::to_string(token_index) + ": " + what),
          token_index(token_index) {}
    std::size_t token_index;  // 1-based position of the offending token
};

// Token grammar (whitespace separated):
//   token := sign? ("1"|"2") ("^" sign? digits)?
// A sign on the base inverts the generator; the exponent repeats it and a
// negative exponent inverts.
BraidWord parse_braid(const std::string& text);

// Family::Even with params (a_1..a_2n), all > 0:
//   sigma1 sigma2^{-2a_1} ... sigma1 sigma2^{-2a_2n}
// Family::Odd with params (a,b,c), all >= 0:
//   sigma1 sigma2^{-2a-1} sigma1 sigma2^{-2b-1} sigma1 sigma2^{-2c-1}
BraidWord family_braid(Family kind, const std::vector<std::int64_t>& params);

BraidWord free_reduce(const BraidWord& w);
STWord free_reduce(const STWord& w);

// Permutation of {0,1,2} induced on strands; perm[i] is where strand i ends.
std::array<int, 3> strand_permutation(const BraidWord& w);

// Letterwise rewriting sigma2 -> s, sigma1 -> s^-1 t, sigma1^-1 -> t^-1 s,
// freely reduced. The result equals w as a group element.
STWord to_st_word(const BraidWord& w);

// Inverse substitution s -> sigma2, t -> sigma2 sigma1, freely reduced.
BraidWord st_to_braid(const STWord& w);

// Shortest freely reduced ST length found over all cyclic rotations of w
// conjugated by sigma2^k, |k| <= k_max, together with a realizing word.
// An upper bound for the minimal ST word length, not a geodesic length.
struct STLengthBound {
    std::size_t length;
    STWord witness;
    int conjugation_power;  // the k realizing the bound
    std::size_t rotation;
};

STLengthBound st_length_upper_bound(const BraidWord& w, int k_max);

// Canonical token rendering, runs collapsed ("1 2^-2 1 2^-4").
std::string to_token_string(const BraidWord& w);
std::string to_string(const STWord& w);

int exponent_sum(const BraidWord& w);
int exponent_sum_braid_image(const STWord& w);  // of st_to_braid(w)

}  // namespace dbcover::braid

#endif  // DBCOVER_BRAID_HPP
