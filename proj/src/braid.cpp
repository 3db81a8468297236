#include "dbcover/braid.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dbcover::braid {

namespace {

template <typename Word>
Word reduce_word(const Word& w) {
    Word out;
    out.letters.reserve(w.letters.size());
    for (std::int8_t l : w.letters) {
        if (!out.letters.empty() && out.letters.back() == -l)
            out.letters.pop_back();
        else
            out.letters.push_back(l);
    }
    return out;
}

void append_power(std::vector<std::int8_t>& letters, std::int8_t base, std::int64_t exp) {
    const std::int8_t letter = exp >= 0 ? base : static_cast<std::int8_t>(-base);
    for (std::int64_t i = 0; i < (exp >= 0 ? exp : -exp); ++i) letters.push_back(letter);
}

}  // namespace

BraidWord parse_braid(const std::string& text) {
    BraidWord w;
    std::istringstream in(text);
    std::string tok;
    std::size_t index = 0;
    while (in >> tok) {
        ++index;
        std::size_t pos = 0;
        int base_sign = 1;
        if (tok[pos] == '-' || tok[pos] == '+') {
            base_sign = tok[pos] == '-' ? -1 : 1;
            ++pos;
        }
        std::size_t digits_start = pos;
        while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos == digits_start) throw ParseError(index, "malformed token '" + tok + "'");
        const std::string base_digits = tok.substr(digits_start, pos - digits_start);
        if (base_digits != "1" && base_digits != "2")
            throw ParseError(index, "generator index outside {1,2} in '" + tok + "'");
        std::int8_t base = static_cast<std::int8_t>(base_sign * (base_digits == "1" ? 1 : 2));

        std::int64_t exp = 1;
        if (pos < tok.size()) {
            if (tok[pos] != '^') throw ParseError(index, "malformed token '" + tok + "'");
            ++pos;
            int exp_sign = 1;
            if (pos < tok.size() && (tok[pos] == '-' || tok[pos] == '+')) {
                exp_sign = tok[pos] == '-' ? -1 : 1;
                ++pos;
            }
            std::size_t exp_start = pos;
            while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
            if (pos == exp_start) throw ParseError(index, "empty exponent in '" + tok + "'");
            if (pos != tok.size()) throw ParseError(index, "malformed token '" + tok + "'");
            exp = exp_sign * std::stoll(tok.substr(exp_start, pos - exp_start));
        }
        append_power(w.letters, base, exp);
    }
    return w;
}

BraidWord family_braid(Family kind, const std::vector<std::int64_t>& params) {
    BraidWord w;
    if (kind == Family::Even) {
        if (params.size() < 2 || params.size() % 2 != 0)
            throw std::invalid_argument("even family needs 2n parameters, n > 0");
        for (std::int64_t a : params) {
            if (a <= 0) throw std::invalid_argument("even family parameters must be positive");
            w.letters.push_back(1);
            append_power(w.letters, 2, -2 * a);
        }
    } else {
        if (params.size() != 3)
            throw std::invalid_argument("odd family needs exactly 3 parameters");
        for (std::int64_t a : params) {
            if (a < 0) throw std::invalid_argument("odd family parameters must be nonnegative");
            w.letters.push_back(1);
            append_power(w.letters, 2, -2 * a - 1);
        }
    }
    return w;
}

BraidWord free_reduce(const BraidWord& w) { return reduce_word(w); }
STWord free_reduce(const STWord& w) { return reduce_word(w); }

std::array<int, 3> strand_permutation(const BraidWord& w) {
    std::array<int, 3> perm{0, 1, 2};
    for (std::int8_t l : w.letters) {
        const int a = std::abs(l) == 1 ? 0 : 1;
        for (int& p : perm)
            if (p == a)
                p = a + 1;
            else if (p == a + 1)
                p = a;
    }
    return perm;
}

STWord to_st_word(const BraidWord& w) {
    STWord out;
    out.letters.reserve(2 * w.letters.size());
    for (std::int8_t l : w.letters) {
        switch (l) {
            case 2: out.letters.push_back(1); break;
            case -2: out.letters.push_back(-1); break;
            case 1:
                out.letters.push_back(-1);
                out.letters.push_back(2);
                break;
            case -1:
                out.letters.push_back(-2);
                out.letters.push_back(1);
                break;
            default: throw std::logic_error("invalid braid letter");
        }
    }
    return free_reduce(out);
}

BraidWord st_to_braid(const STWord& w) {
    BraidWord out;
    out.letters.reserve(2 * w.letters.size());
    for (std::int8_t l : w.letters) {
        switch (l) {
            case 1: out.letters.push_back(2); break;
            case -1: out.letters.push_back(-2); break;
            case 2:
                out.letters.push_back(2);
                out.letters.push_back(1);
                break;
            case -2:
                out.letters.push_back(-1);
                out.letters.push_back(-2);
                break;
            default: throw std::logic_error("invalid st letter");
        }
    }
    return free_reduce(out);
}

STLengthBound st_length_upper_bound(const BraidWord& w, int k_max) {
    if (k_max < 0) throw std::invalid_argument("k_max must be nonnegative");
    const BraidWord reduced = free_reduce(w);
    const std::size_t len = reduced.letters.size();

    STLengthBound best{to_st_word(reduced).letters.size(), to_st_word(reduced), 0, 0};
    for (std::size_t r = 0; r < std::max<std::size_t>(len, 1); ++r) {
        BraidWord rotated;
        rotated.letters.reserve(len);
        for (std::size_t i = 0; i < len; ++i)
            rotated.letters.push_back(reduced.letters[(i + r) % len]);
        for (int k = -k_max; k <= k_max; ++k) {
            BraidWord conj;
            conj.letters.reserve(len + 2 * static_cast<std::size_t>(std::abs(k)));
            append_power(conj.letters, 2, k);
            conj.letters.insert(conj.letters.end(), rotated.letters.begin(),
                                rotated.letters.end());
            append_power(conj.letters, 2, -static_cast<std::int64_t>(k));
            STWord cand = to_st_word(free_reduce(conj));
            if (cand.letters.size() < best.length)
                best = STLengthBound{cand.letters.size(), std::move(cand), k, r};
        }
    }
    return best;
}

std::string to_token_string(const BraidWord& w) {
    std::string out;
    std::size_t i = 0;
    while (i < w.letters.size()) {
        std::size_t j = i;
        while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
        const std::size_t run = j - i;
        const int gen = std::abs(w.letters[i]);
        const int sign = w.letters[i] > 0 ? 1 : -1;
        if (!out.empty()) out += ' ';
        if (run == 1)
            out += (sign < 0 ? "-" : "") + std::to_string(gen);
        else
            out += std::to_string(gen) + "^" + (sign < 0 ? "-" : "") + std::to_string(run);
        i = j;
    }
    return out;
}

std::string to_string(const STWord& w) {
    std::string out;
    std::size_t i = 0;
    while (i < w.letters.size()) {
        std::size_t j = i;
        while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
        const std::size_t run = j - i;
        const char* gen = std::abs(w.letters[i]) == 1 ? "s" : "t";
        const bool inv = w.letters[i] < 0;
        if (!out.empty()) out += ' ';
        out += gen;
        if (inv || run > 1)
            out += "^" + std::string(inv ? "-" : "") + std::to_string(run);
        i = j;
    }
    return out;
}

int exponent_sum(const BraidWord& w) {
    int s = 0;
    for (std::int8_t l : w.letters) s += l > 0 ? 1 : -1;
    return s;
}

int exponent_sum_braid_image(const STWord& w) {
    int s = 0;
    for (std::int8_t l : w.letters) {
        const int weight = std::abs(l) == 1 ? 1 : 2;  // t maps to two braid letters
        s += l > 0 ? weight : -weight;
    }
    return s;
}

}  // namespace dbcover::braid
