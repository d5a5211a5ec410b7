#include "palinword/words.hpp"

#include <algorithm>

namespace palinword {

Word word_from_digits(std::string_view digits, Alphabet alphabet) {
    if (alphabet.size < 1 || alphabet.size > kMaxAlphabet)
        throw std::invalid_argument("alphabet size out of range");
    Word w(digits);
    for (char c : w) {
        int k = letter_index(c);
        if (k < 0 || k >= alphabet.size)
            throw std::invalid_argument("letter out of alphabet: " + std::string(1, c));
    }
    return w;
}

Alphabet alphabet_of(const Word& w) {
    int m = 0;
    for (char c : w) m = std::max(m, letter_index(c) + 1);
    return Alphabet{std::max(m, 1)};
}

Word reverse_word(const Word& w) { return Word(w.rbegin(), w.rend()); }

bool is_palindrome(const Word& w) {
    for (size_t i = 0, j = w.size(); i + 1 < j; ++i, --j)
        if (w[i] != w[j - 1]) return false;
    return true;
}

ParikhVector parikh(const Word& w, int alphabet_size) {
    ParikhVector v(alphabet_size, 0);
    for (char c : w) {
        int k = letter_index(c);
        if (k < 0 || k >= alphabet_size) throw std::invalid_argument("letter out of alphabet");
        ++v[k];
    }
    return v;
}

Word insert_marker(const Word& w, const Word& trigger, char marker) {
    if (trigger.size() != 2) throw std::invalid_argument("trigger must have length 2");
    if (marker == trigger[0] || marker == trigger[1])
        throw std::invalid_argument("marker must differ from trigger letters");
    Word out;
    out.reserve(w.size() + w.size() / 2);
    for (size_t i = 0; i < w.size(); ++i) {
        out.push_back(w[i]);
        if (i + 1 < w.size() && w[i] == trigger[0] && w[i + 1] == trigger[1])
            out.push_back(marker);
    }
    return out;
}

Word erase_letter(const Word& w, char a) {
    Word out;
    out.reserve(w.size());
    for (char c : w)
        if (c != a) out.push_back(c);
    return out;
}

PalindromeIndex::PalindromeIndex(int alphabet_size) : alphabet_size_(alphabet_size) {
    if (alphabet_size < 1 || alphabet_size > kMaxAlphabet)
        throw std::invalid_argument("alphabet size out of range");
    nodes_.push_back({-1, 0, -1, std::vector<int>(alphabet_size_, 0)});
    nodes_.push_back({0, 0, -1, std::vector<int>(alphabet_size_, 0)});
}

int PalindromeIndex::find_suffix(int v) const {
    const long long n = static_cast<long long>(text_.size());
    while (true) {
        long long i = n - 2 - nodes_[v].len;
        if (i >= 0 && text_[i] == text_.back()) return v;
        v = nodes_[v].link;
    }
}

PalindromeIndex::Push PalindromeIndex::push(char letter) {
    int k = letter_index(letter);
    if (k < 0 || k >= alphabet_size_) throw std::invalid_argument("letter out of alphabet");
    text_.push_back(letter);
    int v = find_suffix(last_);
    Undo u{last_, false, v, letter};
    if (nodes_[v].next[k] == 0) {
        u.created = true;
        Node node;
        node.len = nodes_[v].len + 2;
        node.end_pos = static_cast<int>(text_.size()) - 1;
        node.next.assign(alphabet_size_, 0);
        node.link = node.len == 1 ? 1 : nodes_[find_suffix(nodes_[v].link)].next[k];
        nodes_.push_back(std::move(node));
        nodes_[v].next[k] = static_cast<int>(nodes_.size()) - 1;
    }
    last_ = nodes_[v].next[k];
    int suffix_len = nodes_[last_].len;
    undo_.push_back(u);
    return {u.created, suffix_len};
}

void PalindromeIndex::pop() {
    const Undo u = undo_.back();
    undo_.pop_back();
    if (u.created) {
        nodes_[u.parent].next[letter_index(u.letter)] = 0;
        nodes_.pop_back();
    }
    last_ = u.prev_last;
    text_.pop_back();
}

std::vector<int> PalindromeIndex::suffix_palindrome_lengths() const {
    std::vector<int> lens;
    for (int v = last_; nodes_[v].len > 0; v = nodes_[v].link) lens.push_back(nodes_[v].len);
    return lens;
}

std::vector<Word> PalindromeIndex::collect() const {
    std::vector<Word> out;
    out.reserve(nodes_.size() - 1);
    out.emplace_back();  // empty word
    for (size_t i = 2; i < nodes_.size(); ++i)
        out.push_back(text_.substr(nodes_[i].end_pos - nodes_[i].len + 1, nodes_[i].len));
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

std::vector<Word> distinct_palindromes(const Word& w) {
    PalindromeIndex idx(std::max(alphabet_of(w).size, 1));
    for (char c : w) idx.push(c);
    return idx.collect();
}

int distinct_palindrome_count(const Word& w) {
    PalindromeIndex idx(std::max(alphabet_of(w).size, 1));
    for (char c : w) idx.push(c);
    return idx.distinct_count();
}

}  // namespace palinword
