#pragma once
// Exact fractional-power detection and return words.

#include <optional>
#include <vector>

#include "palinword/rational.hpp"
#include "palinword/words.hpp"

namespace palinword {

struct Repetition {
    long long start = 0;
    long long period = 1;
    long long length = 1;
    Rational exponent() const { return make_rational(length, period); }
};

struct MaxExponent {
    Rational exponent;
    Repetition witness;
};

// Maximum of length/period over all periodic factors, with one witness.
// Exact; based on suffix-array longest-common-extension maxima, which covers
// exponents below 2 as well (the interesting ones here live in (11/6, 2)).
// Throws on the empty word.  A 10^5-letter prefix takes well under a minute.
MaxExponent max_exponent(const Word& w);

// A violating repetition if one exists, std::nullopt when w satisfies t.
std::optional<Repetition> freeness_violation(const Word& w, const Threshold& t);
inline bool is_free(const Word& w, const Threshold& t) { return !freeness_violation(w, t).has_value(); }

// Checks only repetitions ending at position n-1 of w[0..n).  Given that
// w without its last letter satisfies t, this is equivalent to is_free.
// This is the per-extension check of the backtracking search.
bool extend_free_check(const char* data, long long n, const Threshold& t);
inline bool extend_free_check(const Word& w, const Threshold& t) {
    return extend_free_check(w.data(), static_cast<long long>(w.size()), t);
}

// Start positions of all (possibly overlapping) occurrences.
std::vector<long long> occurrences(const Word& text, const Word& pattern);

struct ReturnWordSet {
    Word anchor;
    std::vector<Word> returns;  // sorted, distinct
};

// Words between consecutive occurrence starts of anchor in prefix.
// Throws if the anchor occurs fewer than twice.
ReturnWordSet return_words(const Word& prefix, const Word& anchor);

}  // namespace palinword
