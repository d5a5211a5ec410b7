#pragma once
// Constrained exhaustive search: backtracking under a conjunction of
// constraints, counting, letter patterns and overpals.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "palinword/rational.hpp"
#include "palinword/words.hpp"

namespace palinword {

// A letter pattern like abaca, stored with variables as letters 0,1,2,...
// Different variables must map to different letters.
struct LetterPattern {
    Word symbols;
    friend bool operator==(const LetterPattern&, const LetterPattern&) = default;
};

LetterPattern parse_letter_pattern(std::string_view text);  // "abaca"
std::string format_letter_pattern(const LetterPattern& p);
bool letter_pattern_occurs(const Word& w, const LetterPattern& p);

// Overpal: a x a x^R a.  Equivalently an odd palindrome of length >= 3 whose
// central letter equals its first letter.
bool contains_overpal(const Word& w);

struct ConstraintSet {
    int alphabet_size = 3;
    std::optional<Threshold> threshold;
    std::optional<int> max_palindromes;  // distinct, counting the empty word
    std::vector<Word> forbidden_factors;
    bool square_free = false;  // the pattern AA
    std::vector<LetterPattern> letter_patterns;  // forbidden
    bool forbid_overpals = false;
    // Every distinct palindrome must belong to this set (when present).
    std::optional<std::vector<Word>> allowed_palindromes;
    // At most .second distinct palindromes from .first may occur.
    std::optional<std::pair<std::vector<Word>, int>> capped_palindromes;

    bool any_active() const;
    bool needs_palindrome_index() const;
};

// Key/value lines: alphabet=3, threshold=52/27, max_palindromes=16,
// forbid=0210,1021, square_free=yes, letter_patterns=abaca, overpals=no,
// allowed_palindromes=..., cap_palindromes=1:00,11,22.
ConstraintSet parse_constraints(const std::string& text);
std::string format_constraints(const ConstraintSet& c);

struct Violation {
    std::string constraint;
    Word witness;
};
// std::nullopt when w satisfies all active constraints.
std::optional<Violation> check_constraints(const Word& w, const ConstraintSet& c);
inline bool satisfies(const Word& w, const ConstraintSet& c) { return !check_constraints(w, c); }

// True when all active constraints are invariant under every permutation of
// the alphabet letters; only then may the search fix initial letters.
bool permutation_invariant(const ConstraintSet& c);

enum class Outcome { Reached, Exhausted, Budget };
const char* to_string(Outcome o);

struct SearchCertificate {
    Outcome outcome = Outcome::Exhausted;
    long long longest_length = 0;
    Word witness;  // word of the longest length reached (target word if Reached)
    unsigned long long nodes = 0;
    long long frontier_depth = 0;  // depth at budget exhaustion
    std::string symmetry;          // "none" or "canonical-first-occurrence"
};

struct SearchOptions {
    unsigned long long budget = 1'000'000'000ULL;
    bool use_symmetry = true;  // applied only when permutation_invariant
    std::string checkpoint_path;             // empty: no checkpointing
    unsigned long long checkpoint_every = 50'000'000ULL;  // nodes
    bool resume = false;                     // load checkpoint_path first
};

// Depth-first search over words extended letter by letter with incremental
// constraint checks, letters tried in ascending order.  Reached: a word of
// target length satisfies c.  Exhausted: the whole tree (up to the recorded
// symmetry reduction) was explored; no satisfying word is longer than
// longest_length.  Budget: no claim either way; a checkpoint is written when
// a path is configured.
SearchCertificate backtrack(const ConstraintSet& c, long long target, const SearchOptions& opts = {});

// Exact number of satisfying words of each length 1..n_max (no symmetry
// reduction; these are plain counts).
std::vector<unsigned long long> count_words(const ConstraintSet& c, int n_max);

// Full-tree enumeration; emits every satisfying word of exactly the given
// length.  Returns false if the node budget ran out.
bool enumerate_words(const ConstraintSet& c, int length,
                     const std::function<void(const Word&)>& emit,
                     unsigned long long budget = 1'000'000'000ULL);

// General DFS over satisfying words extending the given root, up to max_len
// letters.  on_push runs after every accepted extension and steers the walk;
// it is matched by exactly one on_pop when the letter is removed.  Returns
// false if stopped early or out of budget.
enum class WalkAction { Descend, Prune, Stop };
bool walk_words(const ConstraintSet& c, int max_len, const Word& root,
                const std::function<WalkAction(const Word&, char)>& on_push,
                const std::function<void()>& on_pop = {},
                unsigned long long budget = 1'000'000'000ULL);

struct EquivalenceReport {
    // Per sample: palindromes within the 17-word whitelist bound, overpal
    // freedom, and abcacba freedom, plus the two finite-word implications.
    struct Row {
        Word sample;  // truncated for display by callers if long
        int palindromes;
        bool within_16_set;
        bool overpal_free;
        bool abcacba_free;
        bool implication_16_to_overpal;   // within 16-set => no overpal
        bool implication_overpal_to_pattern;  // overpal-free => abcacba-free
    };
    std::vector<Row> rows;
    bool all_consistent = true;
};
// Finite-word checks of the overpal equivalence on square-free ternary
// samples; non-square-free samples are rejected.
EquivalenceReport verify_equivalence_lemma(const std::vector<Word>& samples);

}  // namespace palinword
