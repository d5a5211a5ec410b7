#pragma once
// Core word representation.
//
// A Word is a std::string whose bytes are the letters themselves, stored as
// ASCII digits: letter k is the char '0' + k.  All CLI and file formats use
// the same digit syntax, so parsing a word is mostly validation.  The empty
// string is the empty word.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace palinword {

using Word = std::string;

struct Alphabet {
    int size = 0;
};

inline constexpr int kMaxAlphabet = 64;

inline int letter_index(char c) { return c - '0'; }
inline char letter_char(int k) { return static_cast<char>('0' + k); }

// Validates that every letter fits the alphabet (letters are '0'+k).
Word word_from_digits(std::string_view digits, Alphabet alphabet = {10});

// Smallest alphabet the word fits in.
Alphabet alphabet_of(const Word& w);

Word reverse_word(const Word& w);
bool is_palindrome(const Word& w);

using ParikhVector = std::vector<long long>;
ParikhVector parikh(const Word& w, int alphabet_size);

// Inserts `marker` between every occurrence of the two-letter `trigger`.
// Rejects triggers of length != 2 or a marker equal to a trigger letter.
Word insert_marker(const Word& w, const Word& trigger, char marker);

Word erase_letter(const Word& w, char a);

// Incremental palindromic-factor index (palindromic tree).  Appending a
// letter creates at most one new distinct palindrome, and push/pop are exact
// inverses, which is what the backtracking search relies on.
class PalindromeIndex {
  public:
    explicit PalindromeIndex(int alphabet_size);

    struct Push {
        bool created;      // a new distinct palindrome appeared
        int suffix_len;    // length of the longest palindromic suffix
    };
    Push push(char letter);
    void pop();

    // Number of distinct palindromic factors, counting the empty word.
    int distinct_count() const { return static_cast<int>(nodes_.size()) - 1; }
    long long size() const { return static_cast<long long>(text_.size()); }
    const std::string& text() const { return text_; }

    // Lengths of all palindromic suffixes of the current word, longest first.
    std::vector<int> suffix_palindrome_lengths() const;

    // All distinct palindromic factors including the empty word,
    // sorted by length then lexicographically.
    std::vector<Word> collect() const;

  private:
    struct Node {
        int len;
        int link;
        int end_pos;  // inclusive end index of one occurrence in text_
        std::vector<int> next;
    };
    int find_suffix(int v) const;

    int alphabet_size_;
    std::string text_;
    std::vector<Node> nodes_;  // nodes_[0]: len -1 root, nodes_[1]: empty word
    int last_ = 1;
    struct Undo {
        int prev_last;
        bool created;
        int parent;
        char letter;
    };
    std::vector<Undo> undo_;
};

std::vector<Word> distinct_palindromes(const Word& w);
int distinct_palindrome_count(const Word& w);

}  // namespace palinword
