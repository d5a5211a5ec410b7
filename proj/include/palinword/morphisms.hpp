#pragma once
// Morphisms, fixed points, incidence matrices, classification, and the
// uniform-synchronizing freeness-transfer verifier.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "palinword/rational.hpp"
#include "palinword/repetitions.hpp"
#include "palinword/words.hpp"

namespace palinword {

struct Morphism {
    int source_size = 0;
    int target_size = 0;
    std::vector<Word> images;  // one per source letter, all non-empty

    const Word& image(char letter) const { return images[letter_index(letter)]; }
    size_t max_image_length() const;
    size_t min_image_length() const;
};

Morphism make_morphism(std::vector<Word> images);

// Text format: one line per letter, "<letter> -> <image>"; blank lines and
// '#' comments ignored.
Morphism parse_morphism(const std::string& text);
std::string format_morphism(const Morphism& m);

Word apply(const Morphism& m, const Word& w);

// Length-n prefix of the fixed point m^w(seed).  Requires the image of seed
// to start with seed and have length >= 2.
Word fixed_point_prefix(const Morphism& m, char seed, size_t n);
bool prolongable_on(const Morphism& m, char seed);

using Matrix = std::vector<std::vector<long long>>;
Matrix incidence_matrix(const Morphism& m);  // column j = parikh(image of j); endomorphisms only

struct MorphismClass {
    std::optional<int> uniform_length;
    bool synchronizing = false;
    bool primitive = false;        // meaningful for endomorphisms
    std::string prolongable;       // letters the morphism is prolongable on
};
MorphismClass classify(const Morphism& m);

// t = max(2b/(b-a), 2(q-1)(2b-1)/(q(b-1))), exact.  Requires 1 < a < b, q >= 1.
Rational mrs_bound(const Rational& a, const Rational& b, long long q);

struct TransferCertificate {
    Rational t_bound;                  // from mrs_bound
    long long enumeration_length = 0;  // ceil(t)
    unsigned long long words_checked = 0;      // all enumerated source words
    unsigned long long full_length_words = 0;  // those of exactly the enumeration length
    bool pass = false;
    std::optional<Word> counterexample;       // alpha-free source word
    std::optional<Repetition> image_violation;
};

// Checks the transfer hypothesis: images of all alpha-free source words of
// length <= ceil(t) are beta-free.  Throws if m is not uniform and
// synchronizing (the lemma does not apply).  Enumerated words may be checked
// in parallel; the certificate is independent of scheduling.
TransferCertificate verify_transfer(const Morphism& m, const Threshold& alpha,
                                    const Threshold& beta, int jobs = 1);

// Fixed instance 0 -> 012, 1 -> 0012 on binary cube-free sources: enumerates
// all cube-free words of the given length and checks every image against
// beta.  Reports the number of enumerated words.
TransferCertificate verify_cubefree_transfer_nonuniform(const Threshold& beta,
                                                        int length = 24, int jobs = 1);

// Whether (w[0..split), w[split..)) is a synchronization point of w for m
// over the language of the given context prefix.  Bounded semi-decision:
// checks all occurrences of w inside images of source factors of length up
// to source_bound; a pass certifies the property because a violation is
// witnessed inside an image of a factor of at most locality_bound letters.
// Throws if source_bound is below the locality radius.
bool synchronization_point_check(const Morphism& m, const Word& context_prefix,
                                 const Word& w, size_t split, size_t source_bound);
size_t sync_locality_bound(const Morphism& m, const Word& w);
bool has_synchronization_point(const Morphism& m, const Word& context_prefix, const Word& w);

}  // namespace palinword
