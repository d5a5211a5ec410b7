#include "palinword/avoidance.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "palinword/repetitions.hpp"

namespace palinword {

LetterPattern parse_letter_pattern(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty letter pattern");
    LetterPattern p;
    int next = 0;
    std::array<int, 26> var{};
    var.fill(-1);
    for (char c : text) {
        if (c < 'a' || c > 'z') throw std::invalid_argument("letter pattern uses a..z variables");
        if (var[c - 'a'] < 0) {
            if (c - 'a' != next)
                throw std::invalid_argument("pattern variables must appear in order a, b, c, ...");
            var[c - 'a'] = next++;
        }
        p.symbols.push_back(letter_char(var[c - 'a']));
    }
    return p;
}

std::string format_letter_pattern(const LetterPattern& p) {
    std::string s;
    for (char c : p.symbols) s.push_back(static_cast<char>('a' + letter_index(c)));
    return s;
}

namespace {

// Injective variable -> letter match of p against w ending at position end.
bool pattern_matches_at_end(const char* w, long long n, const Word& p) {
    const long long m = static_cast<long long>(p.size());
    if (m > n) return false;
    std::array<char, 32> assign{};
    assign.fill(0);
    unsigned long long used = 0;
    const char* win = w + (n - m);
    for (long long i = 0; i < m; ++i) {
        int v = letter_index(p[i]);
        char letter = win[i];
        if (assign[v] != 0) {
            if (assign[v] != letter) return false;
        } else {
            if (used & (1ULL << letter_index(letter))) return false;
            assign[v] = letter;
            used |= 1ULL << letter_index(letter);
        }
    }
    return true;
}

const std::vector<Word>& sixteen_palindrome_set() {
    static const std::vector<Word> kSet = {
        "",    "0",   "1",   "2",   "010",   "020",   "101",   "121",
        "202", "212", "01210", "02120", "10201", "12021", "20102", "21012"};
    return kSet;
}

}  // namespace

bool letter_pattern_occurs(const Word& w, const LetterPattern& p) {
    const long long m = static_cast<long long>(p.symbols.size());
    for (long long end = m; end <= static_cast<long long>(w.size()); ++end)
        if (pattern_matches_at_end(w.data(), end, p.symbols)) return true;
    return false;
}

bool contains_overpal(const Word& w) {
    if (w.empty()) return false;
    PalindromeIndex idx(alphabet_of(w).size);
    for (size_t i = 0; i < w.size(); ++i) {
        idx.push(w[i]);
        for (int len : idx.suffix_palindrome_lengths()) {
            if (len < 3 || len % 2 == 0) continue;
            size_t start = i + 1 - len;
            if (w[start] == w[start + (len - 1) / 2]) return true;
        }
    }
    return false;
}

bool ConstraintSet::any_active() const {
    return threshold || max_palindromes || !forbidden_factors.empty() || square_free ||
           !letter_patterns.empty() || forbid_overpals || allowed_palindromes || capped_palindromes;
}

bool ConstraintSet::needs_palindrome_index() const {
    return max_palindromes || forbid_overpals || allowed_palindromes || capped_palindromes;
}

// ---------------------------------------------------------------------------
// Incremental searcher
// ---------------------------------------------------------------------------

namespace {

class Searcher {
  public:
    explicit Searcher(const ConstraintSet& c) : c_(c) {
        if (c.alphabet_size < 1 || c.alphabet_size > kMaxAlphabet)
            throw std::invalid_argument("alphabet size out of range");
        if (!c.any_active()) throw std::invalid_argument("at least one constraint must be active");
        for (const Word& f : c.forbidden_factors)
            if (alphabet_of(f).size > c.alphabet_size)
                throw std::invalid_argument("forbidden factor outside alphabet");
        if (c.needs_palindrome_index()) pal_.emplace(c.alphabet_size);
        if (c.threshold) thresholds_.push_back({*c.threshold, "threshold"});
        if (c.square_free) thresholds_.push_back({Threshold{make_rational(2, 1), false}, "square_free"});
        if (c.allowed_palindromes)
            allowed_.insert(c.allowed_palindromes->begin(), c.allowed_palindromes->end());
        if (c.capped_palindromes)
            capped_.insert(c.capped_palindromes->first.begin(), c.capped_palindromes->first.end());
    }

    // Appends the letter and checks every constraint incrementally. Returns
    // false on violation (the letter stays appended; callers must pop).
    bool push(char letter) {
        buf_.push_back(letter);
        bool counted_cap = false;
        bool pal_pushed = false;
        bool ok = true;
        const long long n = static_cast<long long>(buf_.size());

        for (const Word& f : c_.forbidden_factors) {
            if (n >= static_cast<long long>(f.size()) &&
                std::equal(f.begin(), f.end(), buf_.end() - f.size())) {
                fail("forbidden_factor", f);
                ok = false;
                break;
            }
        }
        if (ok) {
            for (const auto& [t, name] : thresholds_) {
                if (!extend_free_check(buf_.data(), n, t)) {
                    fail(name, suffix_violation_witness(t));
                    ok = false;
                    break;
                }
            }
        }
        if (ok && pal_) {
            auto info = pal_->push(letter);
            pal_pushed = true;
            if (info.created) {
                Word p = buf_.substr(buf_.size() - info.suffix_len);
                if (c_.max_palindromes && pal_->distinct_count() > *c_.max_palindromes) {
                    fail("max_palindromes", p);
                    ok = false;
                }
                if (ok && c_.allowed_palindromes && !allowed_.count(p)) {
                    fail("allowed_palindromes", p);
                    ok = false;
                }
                if (ok && c_.capped_palindromes && capped_.count(p)) {
                    counted_cap = true;
                    ++cap_count_;
                    if (cap_count_ > c_.capped_palindromes->second) {
                        fail("cap_palindromes", p);
                        ok = false;
                    }
                }
            }
            if (ok && c_.forbid_overpals) {
                for (int len : pal_->suffix_palindrome_lengths()) {
                    if (len < 3 || len % 2 == 0) continue;
                    long long start = n - len;
                    if (buf_[start] == buf_[start + (len - 1) / 2]) {
                        fail("overpals", buf_.substr(start));
                        ok = false;
                        break;
                    }
                }
            }
        }
        if (ok) {
            for (const LetterPattern& p : c_.letter_patterns) {
                if (pattern_matches_at_end(buf_.data(), n, p.symbols)) {
                    fail("letter_pattern " + format_letter_pattern(p),
                         buf_.substr(n - p.symbols.size()));
                    ok = false;
                    break;
                }
            }
        }
        cap_stack_.push_back(counted_cap);
        pal_stack_.push_back(pal_pushed);
        return ok;
    }

    void pop() {
        if (cap_stack_.back()) --cap_count_;
        if (pal_stack_.back()) pal_->pop();
        cap_stack_.pop_back();
        pal_stack_.pop_back();
        buf_.pop_back();
    }

    const Word& word() const { return buf_; }
    const Violation& last_violation() const { return violation_; }

  private:
    void fail(std::string name, Word witness) {
        violation_ = Violation{std::move(name), std::move(witness)};
    }

    Word suffix_violation_witness(const Threshold& t) {
        // Rebuild the violating suffix repetition for reporting.
        const long long n = static_cast<long long>(buf_.size());
        for (long long p = 1; p < n; ++p) {
            long long e = 0;
            while (e < n - p && buf_[n - 1 - e] == buf_[n - 1 - e - p]) {
                ++e;
                if (t.violated_by(p + e, p)) return buf_.substr(n - p - e);
            }
        }
        return buf_;
    }

    const ConstraintSet& c_;
    Word buf_;
    std::optional<PalindromeIndex> pal_;
    std::vector<std::pair<Threshold, const char*>> thresholds_;
    std::set<Word> allowed_, capped_;
    int cap_count_ = 0;
    std::vector<bool> cap_stack_, pal_stack_;
    Violation violation_;
};

}  // namespace

std::optional<Violation> check_constraints(const Word& w, const ConstraintSet& c) {
    Searcher s(c);
    for (char letter : w) {
        int k = letter_index(letter);
        if (k < 0 || k >= c.alphabet_size) throw std::invalid_argument("word outside alphabet");
        if (!s.push(letter)) return s.last_violation();
    }
    return std::nullopt;
}

bool permutation_invariant(const ConstraintSet& c) {
    auto closed = [&](const std::vector<Word>& ws) {
        std::set<Word> base(ws.begin(), ws.end());
        for (int i = 0; i + 1 < c.alphabet_size; ++i) {
            // adjacent transpositions generate all permutations
            for (const Word& w : ws) {
                Word m = w;
                for (char& ch : m) {
                    if (letter_index(ch) == i) ch = letter_char(i + 1);
                    else if (letter_index(ch) == i + 1) ch = letter_char(i);
                }
                if (!base.count(m)) return false;
            }
        }
        return true;
    };
    if (!closed(c.forbidden_factors)) return false;
    if (c.allowed_palindromes && !closed(*c.allowed_palindromes)) return false;
    if (c.capped_palindromes && !closed(c.capped_palindromes->first)) return false;
    return true;
}

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::Reached: return "REACHED";
        case Outcome::Exhausted: return "EXHAUSTED";
        case Outcome::Budget: return "BUDGET";
    }
    return "?";
}

namespace {

struct DfsState {
    Word path;
    std::vector<int> next;  // per depth, next letter to try
    unsigned long long nodes = 0;
    long long longest = 0;
    Word witness;
};

void write_checkpoint(const std::string& path, const ConstraintSet& c, long long target,
                      const DfsState& st) {
    std::ofstream out(path, std::ios::trunc);
    out << "palinword-checkpoint/1\n";
    out << "constraints-begin\n" << format_constraints(c) << "constraints-end\n";
    out << "target: " << target << "\n";
    out << "nodes: " << st.nodes << "\n";
    out << "longest: " << st.longest << "\n";
    out << "witness: " << st.witness << "\n";
    out << "path: " << st.path << "\n";
    out << "next:";
    for (int v : st.next) out << ' ' << v;
    out << "\n";
}

bool read_checkpoint(const std::string& path, const ConstraintSet& c, long long target,
                     DfsState& st) {
    std::ifstream in(path);
    if (!in) return false;
    std::string line;
    std::getline(in, line);
    if (line != "palinword-checkpoint/1") throw std::runtime_error("bad checkpoint header");
    std::getline(in, line);  // constraints-begin
    std::string constraints;
    while (std::getline(in, line) && line != "constraints-end") constraints += line + "\n";
    if (constraints != format_constraints(c))
        throw std::runtime_error("checkpoint constraints do not match");
    auto field = [&](const char* key) {
        std::getline(in, line);
        std::string prefix = std::string(key) + ":";
        if (line.rfind(prefix, 0) != 0) throw std::runtime_error("bad checkpoint field");
        std::string v = line.substr(prefix.size());
        if (!v.empty() && v[0] == ' ') v.erase(0, 1);
        return v;
    };
    if (std::stoll(field("target")) != target) throw std::runtime_error("checkpoint target mismatch");
    st.nodes = std::stoull(field("nodes"));
    st.longest = std::stoll(field("longest"));
    st.witness = field("witness");
    st.path = field("path");
    std::istringstream nexts(field("next"));
    st.next.clear();
    for (int v; nexts >> v;) st.next.push_back(v);
    return true;
}

}  // namespace

SearchCertificate backtrack(const ConstraintSet& c, long long target, const SearchOptions& opts) {
    if (target < 1) throw std::invalid_argument("target must be >= 1");
    const bool symmetric = opts.use_symmetry && permutation_invariant(c);
    Searcher s(c);
    DfsState st;
    st.next.push_back(0);

    if (opts.resume && !opts.checkpoint_path.empty()) {
        if (read_checkpoint(opts.checkpoint_path, c, target, st)) {
            for (char letter : st.path)
                if (!s.push(letter)) throw std::runtime_error("checkpoint path violates constraints");
        }
    }

    SearchCertificate cert;
    cert.symmetry = symmetric ? "canonical-first-occurrence" : "none";
    unsigned long long next_checkpoint = st.nodes + opts.checkpoint_every;

    std::vector<int> distinct_stack(1, 0);  // distinct letters used, per depth
    for (size_t i = 0; i < st.path.size(); ++i)
        distinct_stack.push_back(
            std::max(distinct_stack.back(), letter_index(st.path[i]) + 1));

    while (true) {
        if (st.nodes >= opts.budget) {
            if (!opts.checkpoint_path.empty()) write_checkpoint(opts.checkpoint_path, c, target, st);
            cert.outcome = Outcome::Budget;
            cert.frontier_depth = static_cast<long long>(st.path.size());
            break;
        }
        if (!opts.checkpoint_path.empty() && st.nodes >= next_checkpoint) {
            write_checkpoint(opts.checkpoint_path, c, target, st);
            next_checkpoint += opts.checkpoint_every;
        }
        const size_t depth = st.path.size();
        const int limit =
            symmetric ? std::min(distinct_stack.back() + 1, c.alphabet_size) : c.alphabet_size;
        if (st.next[depth] >= limit) {
            if (depth == 0) {
                cert.outcome = Outcome::Exhausted;
                break;
            }
            s.pop();
            st.path.pop_back();
            st.next.pop_back();
            distinct_stack.pop_back();
            continue;
        }
        const char letter = letter_char(st.next[depth]++);
        if (!s.push(letter)) {
            s.pop();
            continue;
        }
        ++st.nodes;
        st.path.push_back(letter);
        st.next.push_back(0);
        distinct_stack.push_back(std::max(distinct_stack.back(), letter_index(letter) + 1));
        if (static_cast<long long>(st.path.size()) > st.longest) {
            st.longest = static_cast<long long>(st.path.size());
            st.witness = st.path;
        }
        if (static_cast<long long>(st.path.size()) >= target) {
            cert.outcome = Outcome::Reached;
            break;
        }
    }
    cert.longest_length = st.longest;
    cert.witness = st.witness;
    cert.nodes = st.nodes;
    return cert;
}

bool walk_words(const ConstraintSet& c, int max_len, const Word& root,
                const std::function<WalkAction(const Word&, char)>& on_push,
                const std::function<void()>& on_pop, unsigned long long budget) {
    Searcher s(c);
    Word path;
    size_t pushed = 0;  // on_push calls not yet matched by on_pop
    auto unwind = [&](bool complete) {
        while (pushed > 0) {
            if (on_pop) on_pop();
            --pushed;
        }
        return complete;
    };
    for (char letter : root) {
        if (!s.push(letter)) return unwind(true);  // root violates: empty subtree
        path.push_back(letter);
        ++pushed;
        if (on_push(path, letter) != WalkAction::Descend) return unwind(true);
    }
    const size_t base = root.size();
    std::vector<int> next(path.size() + 1, 0);
    unsigned long long nodes = 0;
    while (true) {
        size_t depth = path.size();
        if (nodes >= budget) return unwind(false);
        if (depth == static_cast<size_t>(max_len) || next[depth] >= c.alphabet_size) {
            if (depth == base) break;
            s.pop();
            if (on_pop) on_pop();
            --pushed;
            path.pop_back();
            next.pop_back();
            continue;
        }
        char letter = letter_char(next[depth]++);
        if (!s.push(letter)) {
            s.pop();
            continue;
        }
        ++nodes;
        path.push_back(letter);
        ++pushed;
        WalkAction action = on_push(path, letter);
        if (action == WalkAction::Stop) return unwind(false);
        if (action == WalkAction::Prune) {
            s.pop();
            if (on_pop) on_pop();
            --pushed;
            path.pop_back();
            continue;
        }
        next.push_back(0);
    }
    return unwind(true);
}

std::vector<unsigned long long> count_words(const ConstraintSet& c, int n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    Searcher s(c);
    std::vector<unsigned long long> counts(n_max + 1, 0);
    Word path;
    std::vector<int> next(1, 0);
    while (true) {
        size_t depth = path.size();
        if (next[depth] >= c.alphabet_size || depth == static_cast<size_t>(n_max)) {
            if (depth == 0) break;
            s.pop();
            path.pop_back();
            next.pop_back();
            continue;
        }
        char letter = letter_char(next[depth]++);
        if (!s.push(letter)) {
            s.pop();
            continue;
        }
        path.push_back(letter);
        next.push_back(0);
        ++counts[path.size()];
    }
    return std::vector<unsigned long long>(counts.begin() + 1, counts.end());
}

bool enumerate_words(const ConstraintSet& c, int length,
                     const std::function<void(const Word&)>& emit, unsigned long long budget) {
    if (length < 1) throw std::invalid_argument("length must be >= 1");
    Searcher s(c);
    Word path;
    std::vector<int> next(1, 0);
    unsigned long long nodes = 0;
    while (true) {
        if (nodes >= budget) return false;
        size_t depth = path.size();
        if (next[depth] >= c.alphabet_size || depth == static_cast<size_t>(length)) {
            if (depth == 0) break;
            s.pop();
            path.pop_back();
            next.pop_back();
            continue;
        }
        char letter = letter_char(next[depth]++);
        if (!s.push(letter)) {
            s.pop();
            continue;
        }
        path.push_back(letter);
        next.push_back(0);
        ++nodes;
        if (path.size() == static_cast<size_t>(length)) emit(path);
    }
    return true;
}

EquivalenceReport verify_equivalence_lemma(const std::vector<Word>& samples) {
    EquivalenceReport rep;
    std::set<Word> sixteen(sixteen_palindrome_set().begin(), sixteen_palindrome_set().end());
    LetterPattern abcacba = parse_letter_pattern("abcacba");
    for (const Word& w : samples) {
        if (alphabet_of(w).size > 3) throw std::invalid_argument("samples must be ternary");
        if (freeness_violation(w, Threshold{make_rational(2, 1), false}))
            throw std::invalid_argument("samples must be square-free");
        auto pals = distinct_palindromes(w);
        bool within = std::all_of(pals.begin(), pals.end(),
                                  [&](const Word& p) { return sixteen.count(p) > 0; });
        bool overpal_free = !contains_overpal(w);
        bool pattern_free = !letter_pattern_occurs(w, abcacba);
        EquivalenceReport::Row row{w,
                                   static_cast<int>(pals.size()),
                                   within,
                                   overpal_free,
                                   pattern_free,
                                   !within || overpal_free,
                                   !overpal_free || pattern_free};
        rep.all_consistent = rep.all_consistent && row.implication_16_to_overpal &&
                             row.implication_overpal_to_pattern;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Constraint text format
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

bool parse_bool(const std::string& v) {
    if (v == "yes" || v == "true" || v == "1") return true;
    if (v == "no" || v == "false" || v == "0") return false;
    throw std::invalid_argument("expected yes/no: " + v);
}

}  // namespace

ConstraintSet parse_constraints(const std::string& text) {
    ConstraintSet c;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t'))
            line.pop_back();
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        line.erase(0, start);
        auto eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("expected key=value: " + line);
        std::string key = line.substr(0, eq), value = line.substr(eq + 1);
        if (key == "alphabet") {
            c.alphabet_size = std::stoi(value);
        } else if (key == "threshold") {
            c.threshold = parse_threshold(value);
        } else if (key == "max_palindromes") {
            c.max_palindromes = std::stoi(value);
        } else if (key == "forbid") {
            for (auto& f : split(value, ','))
                if (!f.empty()) c.forbidden_factors.push_back(word_from_digits(f));
        } else if (key == "square_free") {
            c.square_free = parse_bool(value);
        } else if (key == "letter_patterns") {
            for (auto& p : split(value, ','))
                if (!p.empty()) c.letter_patterns.push_back(parse_letter_pattern(p));
        } else if (key == "overpals") {
            c.forbid_overpals = !parse_bool(value);  // overpals=no forbids them
        } else if (key == "allowed_palindromes") {
            std::vector<Word> ws;
            for (auto& f : split(value, ','))
                if (!f.empty()) ws.push_back(word_from_digits(f));
            c.allowed_palindromes = std::move(ws);
        } else if (key == "cap_palindromes") {
            auto colon = value.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("cap_palindromes expects K:w1,w2,...");
            int cap = std::stoi(value.substr(0, colon));
            std::vector<Word> ws;
            for (auto& f : split(value.substr(colon + 1), ','))
                if (!f.empty()) ws.push_back(word_from_digits(f));
            c.capped_palindromes = std::make_pair(std::move(ws), cap);
        } else {
            throw std::invalid_argument("unknown constraint key: " + key);
        }
    }
    return c;
}

std::string format_constraints(const ConstraintSet& c) {
    std::ostringstream out;
    out << "alphabet=" << c.alphabet_size << "\n";
    if (c.threshold) out << "threshold=" << to_string(*c.threshold) << "\n";
    if (c.square_free) out << "square_free=yes\n";
    if (c.max_palindromes) out << "max_palindromes=" << *c.max_palindromes << "\n";
    if (!c.forbidden_factors.empty()) {
        out << "forbid=";
        for (size_t i = 0; i < c.forbidden_factors.size(); ++i)
            out << (i ? "," : "") << c.forbidden_factors[i];
        out << "\n";
    }
    if (!c.letter_patterns.empty()) {
        out << "letter_patterns=";
        for (size_t i = 0; i < c.letter_patterns.size(); ++i)
            out << (i ? "," : "") << format_letter_pattern(c.letter_patterns[i]);
        out << "\n";
    }
    if (c.forbid_overpals) out << "overpals=no\n";
    if (c.allowed_palindromes) {
        out << "allowed_palindromes=";
        for (size_t i = 0; i < c.allowed_palindromes->size(); ++i)
            out << (i ? "," : "") << (*c.allowed_palindromes)[i];
        out << "\n";
    }
    if (c.capped_palindromes) {
        out << "cap_palindromes=" << c.capped_palindromes->second << ":";
        for (size_t i = 0; i < c.capped_palindromes->first.size(); ++i)
            out << (i ? "," : "") << c.capped_palindromes->first[i];
        out << "\n";
    }
    return out.str();
}

}  // namespace palinword
