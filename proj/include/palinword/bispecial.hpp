#pragma once
// Extension profiles, bispecial factors and triplets, f-image towers with
// exact integer matrix arithmetic, shortest return words under Parikh
// dominance, and the return-word formula for the critical exponent.

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "palinword/languages.hpp"
#include "palinword/morphisms.hpp"
#include "palinword/rational.hpp"
#include "palinword/words.hpp"

namespace palinword {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;
using BigVec = std::vector<BigInt>;
using BigMatrix = std::vector<BigVec>;

BigMatrix to_big(const Matrix& m);
BigVec to_big(const ParikhVector& v);
BigMatrix mat_mul(const BigMatrix& a, const BigMatrix& b);
BigVec mat_vec(const BigMatrix& a, const BigVec& v);
BigVec vec_add(const BigVec& a, const BigVec& b);
BigInt vec_sum(const BigVec& v);
BigMatrix mat_pow(const BigMatrix& m, unsigned n);
BigMatrix identity_matrix(int d);

struct ExtensionProfile {
    Word word;
    std::string left, right;                  // extension letters, sorted
    std::vector<std::pair<char, char>> bi;    // bi-extension pairs, sorted
    int b = 0;                                // #bi - #left - #right + 1
    bool left_special() const { return left.size() > 1; }
    bool right_special() const { return right.size() > 1; }
    bool bispecial() const { return left_special() && right_special(); }
};

// Profile from all internal occurrences in the prefix; throws if w does not
// occur with context on both sides.
ExtensionProfile extension_profile(const Word& prefix, const Word& w);

// All bispecial factors of length <= max_len, ordered by length then
// lexicographically, from a stabilized prefix (doubling until two
// consecutive doublings agree).
std::vector<Word> enumerate_bispecial(const WordGenerator& gen, int max_len,
                                      size_t max_prefix = 1u << 26);
std::vector<Word> bispecial_factors_of_prefix(const Word& prefix, int max_len);

struct BispecialTriplet {
    std::array<char, 2> left;   // unordered pair, stored ascending
    Word core;
    std::array<char, 2> right;
    friend bool operator==(const BispecialTriplet&, const BispecialTriplet&) = default;
    friend auto operator<=>(const BispecialTriplet&, const BispecialTriplet&) = default;
};
BispecialTriplet make_triplet(char a, char b, Word core, char c, char d);

// ((a', b'), u1 m(core) u2, (c', d')) with u1 the longest common suffix of the
// left-pair images and u2 the longest common prefix of the right-pair images.
// Throws in the degenerate case where one image is a suffix (resp. prefix)
// of the other.
BispecialTriplet f_image(const BispecialTriplet& t, const Morphism& m);

// Chains of n successive f-images for each start; verifies that extension
// pairs repeat with period 3 along every chain and throws otherwise.
std::vector<std::vector<BispecialTriplet>> iterate_f_images(
    const std::vector<BispecialTriplet>& initials, const Morphism& m, int n);

// Triplet with the core replaced by its Parikh vector, for towers whose
// cores outgrow memory.
struct SymbolicTriplet {
    std::array<char, 2> left;
    BigVec core_parikh;
    std::array<char, 2> right;
};
SymbolicTriplet to_symbolic(const BispecialTriplet& t, int alphabet_size);
SymbolicTriplet f_image_symbolic(const SymbolicTriplet& t, const Morphism& m,
                                 const BigMatrix& incidence);

// All bispecial triplets over initial (synchronization-point-free) bispecial
// factors of the fixed point, discovered rather than hard-coded.
std::vector<BispecialTriplet> discover_initial_triplets(const Morphism& m, const Word& prefix,
                                                        int max_core_len);

// Return words to w that are minimal under componentwise Parikh dominance.
// The dominance order may lack a minimum; all minimal elements are returned.
// Throws if w occurs fewer than three times.
std::vector<Word> shortest_return_words(const Word& prefix, const Word& w);

// parikh(apply(m, r)) = incidence(m) * parikh(r).
ParikhVector return_word_pushforward(const Word& r, const Morphism& m);

// ---------------------------------------------------------------------------
// Critical exponent via the bispecial/return-word formula
// ---------------------------------------------------------------------------

struct RatioRecord {
    Word word;            // empty for symbolic tower entries
    long long word_length = 0;
    long long return_length = 0;
    std::string provenance;  // "brute-force" or "family <k> n=<j>"
};

struct CriticalExponentAudit {
    Rational exponent;   // 1 + max ratio
    Rational max_ratio;
    std::vector<RatioRecord> records;
};

// Brute force on a stabilized prefix: every bispecial factor of length up to
// max_len, with the shortest return length read off consecutive occurrences.
CriticalExponentAudit critical_exponent_ddp(const WordGenerator& gen, int max_len,
                                            size_t max_prefix = 1u << 26);

// ---------------------------------------------------------------------------
// The h/g instance: 18 fixture families and exact ratio towers
// ---------------------------------------------------------------------------

// The 18 initial bispecial triplets of the fixed point of h whose f-image
// towers generate all bispecial factors.
const std::vector<BispecialTriplet>& family_initial_triplets();

struct ReturnFixture {
    int family = 0;       // 1..18
    int base_n = 0;       // chain index of the base bispecial (0 = initial core)
    Word bispecial;       // the base bispecial factor
    std::vector<Word> returns;  // its Parikh-minimal return words
};
const std::vector<ReturnFixture>& family_return_fixtures();

struct FamilyRatio {
    int n = 0;
    BigInt w_len, r_len;
    BigRat ratio;
};

// Exact ratio lists from the explicit per-family recurrences (families 1 and
// 15 only; throws for others).  Asserts every ratio <= 19/22 with equality
// only at family 15, n = 0, and throws on violation.
std::vector<FamilyRatio> family_ratio_bound(int family, int n_max);

struct TowerSweep {
    int family = 0;
    int base_n = 0;
    std::vector<FamilyRatio> ratios;  // n = base_n .. n_max, image-word side
    bool empirical_ok = false;        // base cross-checks against the prefixes
};

// Image-word ratios |W_n| / |R_n| for all 18 families, n up to n_max, by
// symbolic Parikh towers pushed with exact matrix powers; base return data
// cross-checked by brute force against the supplied prefixes.
std::vector<TowerSweep> sweep_all_families(int n_max, const Word& h_prefix, const Word& g_prefix);

// (1,1,1) N M^j against the closed form (44 6^j - 9, 11 6^j + 9, 44 6^j - 9,
// 55 6^j) / 5 for j = 0..j_max.
bool check_row_closed_form(int j_max);

// The diagonalization test fixture: X D X^{-1} reproduces the incidence
// matrix of h in exact arithmetic.
bool check_eigen_fixture();

}  // namespace palinword
