#pragma once
// Built-in morphisms and constraint sets used throughout the toolkit and by
// the reproduce command.  Everything here is also expressible through the
// external file formats; the registry just saves callers the files.

#include <map>
#include <string>
#include <vector>

#include "palinword/avoidance.hpp"
#include "palinword/morphisms.hpp"

namespace palinword {

// Names: t (ternary insertion word), eta, gamma, h, g (the two morphic-word
// pairs), cubefree_embed (0 -> 012, 1 -> 0012), uN (the N-uniform palindrome
// morphisms), lpN (the N-uniform letter-pattern morphisms).
const std::map<std::string, Morphism>& builtin_morphisms();
const Morphism& fixture_morphism(const std::string& name);

const std::vector<Word>& forbidden_factors_eta();
const std::vector<Word>& forbidden_factors_gamma();
const std::vector<Word>& palindrome_whitelist_17();

ConstraintSet eta_good_constraints();    // square-free, avoids the eta factor list
ConstraintSet gamma_good_constraints();  // square-free, avoids the gamma factor list
ConstraintSet sixteen_good_constraints();     // 52/27-free, <= 16 palindromes
ConstraintSet seventeen_better_constraints(); // 25/13-free, <= 17, whitelisted

Word thue_morse_prefix(size_t n);
Word periodic_prefix(const Word& base, size_t n);

}  // namespace palinword
