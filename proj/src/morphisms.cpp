#include "palinword/morphisms.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "palinword/avoidance.hpp"

namespace palinword {

size_t Morphism::max_image_length() const {
    size_t m = 0;
    for (const Word& w : images) m = std::max(m, w.size());
    return m;
}
size_t Morphism::min_image_length() const {
    size_t m = images.empty() ? 0 : images[0].size();
    for (const Word& w : images) m = std::min(m, w.size());
    return m;
}

Morphism make_morphism(std::vector<Word> images) {
    Morphism m;
    m.source_size = static_cast<int>(images.size());
    if (m.source_size == 0) throw std::invalid_argument("morphism needs at least one image");
    int target = 1;
    for (const Word& w : images) {
        if (w.empty()) throw std::invalid_argument("erasing morphisms are not supported");
        target = std::max(target, alphabet_of(w).size);
    }
    m.target_size = target;
    m.images = std::move(images);
    return m;
}

Morphism parse_morphism(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::map<int, Word> images;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string letter, arrow, image;
        if (!(ls >> letter)) continue;
        if (!(ls >> arrow >> image) || arrow != "->" || letter.size() != 1)
            throw std::invalid_argument("expected '<letter> -> <image>': " + line);
        int k = letter_index(letter[0]);
        if (k < 0 || k >= kMaxAlphabet) throw std::invalid_argument("bad source letter: " + letter);
        if (images.count(k)) throw std::invalid_argument("duplicate image for letter " + letter);
        images[k] = word_from_digits(image);
    }
    if (images.empty()) throw std::invalid_argument("no images in morphism text");
    std::vector<Word> v(images.rbegin()->first + 1);
    for (auto& [k, w] : images) v[k] = w;
    for (size_t k = 0; k < v.size(); ++k)
        if (v[k].empty())
            throw std::invalid_argument("missing image for letter " + std::string(1, letter_char(k)));
    return make_morphism(std::move(v));
}

std::string format_morphism(const Morphism& m) {
    std::string out;
    for (int k = 0; k < m.source_size; ++k) {
        out += letter_char(k);
        out += " -> ";
        out += m.images[k];
        out += "\n";
    }
    return out;
}

Word apply(const Morphism& m, const Word& w) {
    Word out;
    size_t total = 0;
    for (char c : w) {
        int k = letter_index(c);
        if (k < 0 || k >= m.source_size) throw std::invalid_argument("letter outside source alphabet");
        total += m.images[k].size();
    }
    out.reserve(total);
    for (char c : w) out += m.images[letter_index(c)];
    return out;
}

bool prolongable_on(const Morphism& m, char seed) {
    int k = letter_index(seed);
    if (k < 0 || k >= m.source_size) return false;
    const Word& img = m.images[k];
    return img.size() >= 2 && img[0] == seed;
}

Word fixed_point_prefix(const Morphism& m, char seed, size_t n) {
    if (!prolongable_on(m, seed))
        throw std::invalid_argument("morphism is not prolongable on the seed letter");
    if (m.target_size > m.source_size)
        throw std::invalid_argument("fixed point requires an endomorphism");
    Word w = m.image(seed);
    for (size_t i = 1; w.size() < n; ++i) w += m.image(w[i]);
    w.resize(std::min(w.size(), n));
    return w;
}

Matrix incidence_matrix(const Morphism& m) {
    if (m.target_size > m.source_size)
        throw std::invalid_argument("incidence matrix requires an endomorphism");
    const int d = m.source_size;
    Matrix mat(d, std::vector<long long>(d, 0));
    for (int j = 0; j < d; ++j)
        for (char c : m.images[j]) ++mat[letter_index(c)][j];
    return mat;
}

namespace {

bool boolean_primitive(const Matrix& m) {
    const size_t d = m.size();
    std::vector<std::vector<bool>> reach(d, std::vector<bool>(d));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) reach[i][j] = m[i][j] > 0;
    // positivity of some power up to d*d (sufficient bound)
    auto positive = [&](const std::vector<std::vector<bool>>& a) {
        for (const auto& row : a)
            for (bool b : row)
                if (!b) return false;
        return true;
    };
    auto mul = [&](const std::vector<std::vector<bool>>& a, const std::vector<std::vector<bool>>& b) {
        std::vector<std::vector<bool>> r(d, std::vector<bool>(d, false));
        for (size_t i = 0; i < d; ++i)
            for (size_t k = 0; k < d; ++k)
                if (a[i][k])
                    for (size_t j = 0; j < d; ++j)
                        if (b[k][j]) r[i][j] = true;
        return r;
    };
    auto power = reach;
    for (size_t n = 1; n <= d * d; ++n) {
        if (positive(power)) return true;
        power = mul(power, reach);
    }
    return false;
}

}  // namespace

MorphismClass classify(const Morphism& m) {
    MorphismClass cls;
    size_t len0 = m.images[0].size();
    bool uniform = std::all_of(m.images.begin(), m.images.end(),
                               [&](const Word& w) { return w.size() == len0; });
    if (uniform) cls.uniform_length = static_cast<int>(len0);

    // f(ab) = u f(c) v forces u empty with a == c, or v empty with b == c.
    cls.synchronizing = true;
    for (int a = 0; a < m.source_size && cls.synchronizing; ++a) {
        for (int b = 0; b < m.source_size && cls.synchronizing; ++b) {
            Word ab = m.images[a] + m.images[b];
            for (int c = 0; c < m.source_size && cls.synchronizing; ++c) {
                for (long long at : occurrences(ab, m.images[c])) {
                    bool left = at == 0 && a == c;
                    bool right =
                        at + static_cast<long long>(m.images[c].size()) ==
                            static_cast<long long>(ab.size()) &&
                        b == c;
                    if (!left && !right) {
                        cls.synchronizing = false;
                        break;
                    }
                }
            }
        }
    }

    if (m.target_size <= m.source_size) cls.primitive = boolean_primitive(incidence_matrix(m));
    for (int k = 0; k < m.source_size; ++k)
        if (prolongable_on(m, letter_char(k))) cls.prolongable.push_back(letter_char(k));
    return cls;
}

Rational mrs_bound(const Rational& a, const Rational& b, long long q) {
    Rational one = make_rational(1, 1);
    if (!(one < a && a < b) || q < 1) throw std::invalid_argument("mrs_bound needs 1 < a < b, q >= 1");
    Rational first = div(mul(make_rational(2, 1), b), sub(b, a));
    Rational second = div(mul(make_rational(2 * (q - 1), 1), sub(mul(make_rational(2, 1), b), one)),
                          mul(make_rational(q, 1), sub(b, one)));
    return std::max(first, second, [](const Rational& x, const Rational& y) { return x < y; });
}

namespace {

// DFS over alpha-free source words with the image maintained incrementally;
// each appended image position is checked once against beta.
struct TransferResult {
    unsigned long long checked = 0;
    unsigned long long full_length = 0;
    std::optional<Word> counterexample;
    std::optional<Repetition> violation;
};

Repetition locate_suffix_violation(const Word& image, const Threshold& beta) {
    const long long n = static_cast<long long>(image.size());
    for (long long p = 1; p < n; ++p) {
        long long e = 0;
        while (e < n - p && image[n - 1 - e] == image[n - 1 - e - p]) {
            ++e;
            if (beta.violated_by(p + e, p)) return Repetition{n - p - e, p, p + e};
        }
    }
    return Repetition{0, 1, 1};
}

TransferCertificate run_transfer(const Morphism& m, const ConstraintSet& source_constraints,
                                 const Threshold& beta, long long enum_len, int jobs) {
    TransferCertificate cert;
    cert.enumeration_length = enum_len;

    std::vector<Word> roots;
    for (int k = 0; k < source_constraints.alphabet_size; ++k)
        roots.push_back(Word(1, letter_char(k)));

    auto run_root = [&](const Word& root) {
        TransferResult res;
        Word image;
        std::vector<size_t> image_lens;
        walk_words(
            source_constraints, enum_len, root,
            [&](const Word& source, char letter) {
                image_lens.push_back(image.size());
                image += m.image(letter);
                for (size_t k = image.size() - m.image(letter).size(); k < image.size(); ++k) {
                    if (!extend_free_check(image.data(), static_cast<long long>(k) + 1, beta)) {
                        res.counterexample = source;
                        image.resize(k + 1);
                        res.violation = locate_suffix_violation(image, beta);
                        return WalkAction::Stop;
                    }
                }
                ++res.checked;
                if (static_cast<long long>(source.size()) == enum_len) ++res.full_length;
                return WalkAction::Descend;
            },
            [&]() {
                image.resize(image_lens.back());
                image_lens.pop_back();
            });
        return res;
    };

    std::vector<TransferResult> results;
    if (jobs <= 1) {
        for (const Word& r : roots) results.push_back(run_root(r));
    } else {
        std::vector<std::future<TransferResult>> futs;
        for (const Word& r : roots)
            futs.push_back(std::async(std::launch::async, [&run_root, r] { return run_root(r); }));
        for (auto& f : futs) results.push_back(f.get());
    }

    cert.pass = true;
    for (const TransferResult& r : results) {
        cert.words_checked += r.checked;
        cert.full_length_words += r.full_length;
        if (r.counterexample && cert.pass) {  // roots in ascending order: first hit is least
            cert.pass = false;
            cert.counterexample = r.counterexample;
            cert.image_violation = r.violation;
        }
    }
    return cert;
}

}  // namespace

TransferCertificate verify_transfer(const Morphism& m, const Threshold& alpha,
                                    const Threshold& beta, int jobs) {
    MorphismClass cls = classify(m);
    if (!cls.uniform_length || !cls.synchronizing)
        throw std::invalid_argument("transfer lemma needs a uniform synchronizing morphism");
    Rational t = mrs_bound(alpha.value, beta.value, *cls.uniform_length);
    long long enum_len = (t.num + t.den - 1) / t.den;  // ceil(t)

    ConstraintSet c;
    c.alphabet_size = m.source_size;
    c.threshold = alpha;
    TransferCertificate cert = run_transfer(m, c, beta, enum_len, jobs);
    cert.t_bound = t;
    return cert;
}

TransferCertificate verify_cubefree_transfer_nonuniform(const Threshold& beta, int length, int jobs) {
    Morphism f = make_morphism({Word("012"), Word("0012")});
    ConstraintSet c;
    c.alphabet_size = 2;
    c.threshold = Threshold{make_rational(3, 1), false};  // cube-free
    TransferCertificate cert = run_transfer(f, c, beta, length, jobs);
    cert.t_bound = make_rational(length, 1);
    // words_checked counts all cube-free words of length <= `length`; the
    // reported count below is the number of full-length ones.
    return cert;
}

size_t sync_locality_bound(const Morphism& m, const Word& w) {
    return w.size() + 2 * m.max_image_length();
}

bool synchronization_point_check(const Morphism& m, const Word& context_prefix, const Word& w,
                                 size_t split, size_t source_bound) {
    if (split > w.size()) throw std::invalid_argument("split outside word");
    size_t needed = w.size() / std::max<size_t>(m.min_image_length(), 1) + 2;
    if (source_bound < needed)
        throw std::invalid_argument("source bound below the locality radius");

    // all source factors of length <= source_bound
    std::set<Word> factors;
    for (size_t len = 1; len <= source_bound; ++len) {
        if (len > context_prefix.size()) break;
        for (size_t i = 0; i + len <= context_prefix.size(); ++i)
            factors.insert(context_prefix.substr(i, len));
    }
    const long long w1 = static_cast<long long>(split);
    for (const Word& v : factors) {
        Word img = palinword::apply(m, v);
        std::set<long long> cuts;
        long long acc = 0;
        cuts.insert(0);
        for (char c : v) {
            acc += static_cast<long long>(m.image(c).size());
            cuts.insert(acc);
        }
        for (long long at : occurrences(img, w))
            if (!cuts.count(at + w1)) return false;
    }
    return true;
}

bool has_synchronization_point(const Morphism& m, const Word& context_prefix, const Word& w) {
    size_t bound = sync_locality_bound(m, w);
    for (size_t split = 0; split <= w.size(); ++split)
        if (synchronization_point_check(m, context_prefix, w, split, bound)) return true;
    return false;
}

}  // namespace palinword
