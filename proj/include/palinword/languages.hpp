#pragma once
// Extendable-core languages, Rauzy graphs, digraph analysis, factor-set
// comparison, and decoding over morphism image codes.

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "palinword/avoidance.hpp"
#include "palinword/morphisms.hpp"
#include "palinword/words.hpp"

namespace palinword {

struct FactorLanguage {
    int length = 0;
    std::vector<Word> members;  // sorted, distinct
};

// Length-ell words v admitting a word p v s satisfying c with |p| = |s| = ell;
// computed by enumerating satisfying words of length 3*ell.
// Throws on budget exhaustion.
FactorLanguage extendable_core(const ConstraintSet& c, int ell,
                               unsigned long long budget = 1'000'000'000ULL);

std::set<Word> factor_set(const Word& prefix, int ell);

// A generator returns the length-n prefix of an infinite word.
using WordGenerator = std::function<Word(size_t)>;

// Length-ell factors of the generated word, grown from 64*ell until two
// consecutive doublings leave the set unchanged.  Throws if the set does not
// stabilize within the length budget.
FactorLanguage stabilized_factors(const WordGenerator& gen, int ell,
                                  size_t max_prefix = 1u << 26);

struct RauzyGraph {
    int order = 0;                            // ell
    std::vector<Word> vertices;               // sorted words of length ell-1
    std::vector<std::pair<int, int>> arcs;    // (from, to) vertex indices
    std::vector<Word> arc_words;              // parallel to arcs
};

RauzyGraph rauzy_graph(const FactorLanguage& language);

// Weak connectivity: component id per vertex and the number of components.
std::pair<std::vector<int>, int> weak_components(const RauzyGraph& g);
// Tarjan strongly connected components.
std::pair<std::vector<int>, int> strong_components(const RauzyGraph& g);

struct Condensation {
    int n_components = 0;
    std::vector<int> component_of;           // per vertex
    std::vector<int> component_size;
    std::vector<bool> nontrivial;            // >= 2 vertices or a self-loop
    std::vector<std::pair<int, int>> arcs;   // between distinct components, deduplicated
};
Condensation scc_condensation(const RauzyGraph& g);

// The subgraph carrying all cycles: vertices in nontrivial strongly
// connected components and arcs inside one component.
RauzyGraph recurrent_subgraph(const RauzyGraph& g);

// Subgraph induced by a weak component (by component id from weak_components).
RauzyGraph component_subgraph(const RauzyGraph& g, const std::vector<int>& comp_of, int comp);

// Exact digraph isomorphism (labels ignored), degree-refinement plus
// backtracking; meant for the few-thousand-vertex graphs that appear here.
bool digraph_isomorphic(const RauzyGraph& a, const RauzyGraph& b);

// Whether the two generated words have the same set of length-ell factors,
// with both factor sets stabilized by prefix doubling.
bool factor_sets_equal(const WordGenerator& a, const WordGenerator& b, int ell,
                       size_t max_prefix = 1u << 26);

// Whether the image set is a code (unique decodability), by the dangling
// suffix construction; the suffix universe is finite so this terminates.
bool images_form_code(const Morphism& m);

// The unique preimage when w lies in images(m)*, std::nullopt otherwise.
// Throws if the image set is not a code.
std::optional<Word> decompose_over_code(const Word& w, const Morphism& m);

}  // namespace palinword
