#include "palinword/fixtures.hpp"
#include <stdexcept>
namespace palinword {
namespace {
// Built-in morphism registry, in the standard morphism file format.
struct Entry { const char* name; const char* text; };
const Entry kMorphisms[] = {
    {"t",
     "0 -> 01120\n"
     "1 -> 12001\n"
     "2 -> 2\n"},
    {"eta",
     "0 -> 010203\n"
     "1 -> 2013\n"
     "2 -> 0132\n"
     "3 -> 0102013203\n"},
    {"gamma",
     "0 -> 012021201210120102\n"
     "1 -> 012101202120102\n"
     "2 -> 012021201020121\n"
     "3 -> 012021201210120212010201210120102\n"},
    {"h",
     "0 -> 01213012\n"
     "1 -> 31\n"
     "2 -> 01201312\n"
     "3 -> 0121301312\n"},
    {"g",
     "0 -> 0102012\n"
     "1 -> 0212\n"
     "2 -> 0121012\n"
     "3 -> 01020121012\n"},
    {"cubefree_embed",
     "0 -> 012\n"
     "1 -> 0012\n"},
    {"u25",
     "0 -> 0112001200112011200112012\n"
     "1 -> 0012011200112012001120012\n"
     "2 -> 0011201120012011201200112\n"},
    {"u4",
     "0 -> 0012\n"
     "1 -> 0112\n"
     "2 -> 0122\n"},
    {"u609",
     "0 -> 012021201210120102012101202120102012021201210120102012021201020121012021201210120102012021201210120212010201210120102012021201020121012021201210120102012101202120102012021201210120212010201210120102012021201210120102012101202120102012021201210120102012021201020121012021201210120102012101202120102012021201210120212010201210120102012021201020121012021201210120102012101202120102012021201210120102012021201020121012021201210120102012021201210120212010201210120102012021201210120102012101202120102012021201210120212010201210120102012021201020121012021201210120102012101202120102012021201210120212010201210120102\n"
     "1 -> 012021201210120102012101202120102012021201210120102012021201020121012021201210120102012021201210120212010201210120102012021201020121012021201210120102012101202120102012021201210120212010201210120102012021201020121012021201210120102012021201210120212010201210120102012021201210120102012101202120102012021201210120212010201210120102012021201020121012021201210120102012101202120102012021201210120212010201210120102012021201210120102012101202120102012021201210120102012021201020121012021201210120102012021201210120212010201210120102012021201210120102012101202120102012021201210120212010201210120102012021201020121\n"
     "2 -> 012021201210120102012101202120102012021201210120102012021201020121012021201210120102012021201210120212010201210120102012021201020121012021201210120102012101202120102012021201210120212010201210120102012021201020121012021201210120102012021201210120212010201210120102012021201210120102012101202120102012021201210120212010201210120102012021201020121012021201210120102012101202120102012021201210120102012021201020121012021201210120102012021201210120212010201210120102012021201210120102012101202120102012021201210120102012021201020121012021201210120102012101202120102012021201210120212010201210120102012021201020121\n"},
    {"u121",
     "0 -> 2010210120212010201202101201020120212010210120210201021202101201021202102010210120210201021202101201020120210120102120210\n"
     "1 -> 2010210120212010201202101201020120212010210120210201021202101201020120210120102120210201021012021020102120210120102120210\n"
     "2 -> 2010210120212010201202101201020120212010210120210201021012021201020120210120102120210201021012021020102120210120102012021\n"},
    {"u87",
     "0 -> 120102012021012102010210120212012101202102010212021012010201210120210201021012021201210\n"
     "1 -> 120102012021012102010210120212012101202102010210121021202101201020121012021020102120210\n"
     "2 -> 120102012021012102010210120212012101202102010210120212010201210120210201021012102120210\n"
     "3 -> 120102012021012102010210120212010201202101210212021012010201202120121012021020102101202\n"},
    {"lp72",
     "0 -> 010210120102120121020120210120102101202102012102120102101201021201210212\n"
     "1 -> 010210120210201202101201021012021020121021201210201202101201021201210212\n"
     "2 -> 010210120210201210212012102012021012010210120210201202101201021201210212\n"},
    {"lp73",
     "0 -> 0121020102120210120212010212021012102012101202120102120210120212010201210\n"
     "1 -> 1202101210201021201020121020102120210120212010201210201021201020121012021\n"
     "2 -> 2010212021012102012101202101210201021201020121012021012102012101202120102\n"},
    {"lp128",
     "0 -> 02120121012010201202102010210120102012021201210120102101210212012101201020120210201021012102120210201202120121021202102010210121\n"
     "1 -> 02120121012010201202102010210120102012021201210120102101210212021020102101201020120210201021012102120121012010210121021202102012\n"
     "2 -> 02120121012010201202102010210120102012021201210120102101210212021020120212012102120210201021012010201202102010210121021202102012\n"
     "3 -> 02120121012010201202102010210120102012021201210212021020102101210212012101201021012102120210201021012010201202120121021202102012\n"},
};
}  // namespace

const std::map<std::string, Morphism>& builtin_morphisms() {
    static const std::map<std::string, Morphism> kMap = [] {
        std::map<std::string, Morphism> m;
        for (const Entry& e : kMorphisms) m.emplace(e.name, parse_morphism(e.text));
        return m;
    }();
    return kMap;
}

const Morphism& fixture_morphism(const std::string& name) {
    const auto& m = builtin_morphisms();
    auto it = m.find(name);
    if (it == m.end()) throw std::invalid_argument("unknown morphism fixture: " + name);
    return it->second;
}

const std::vector<Word>& forbidden_factors_eta() {
    static const std::vector<Word> kF = {"12",      "21",      "23",      "31",
                                         "103",     "302",     "303",     "132013",
                                         "320132",  "2010201", "2013201", "3013203",
                                         "030102030"};
    return kF;
}

const std::vector<Word>& forbidden_factors_gamma() {
    static const std::vector<Word> kF = {"0210",
                                         "1021",
                                         "2102",
                                         "012010201210120212012",
                                         "020121012021201020121",
                                         "101202120102012101202",
                                         "120121012021201020120",
                                         "201202120102012101201",
                                         "212010201210120212010"};
    return kF;
}

// The sixteen palindromes of the 16-palindrome words plus the one extra
// heptad allowed in the 17-palindrome class.
const std::vector<Word>& palindrome_whitelist_17() {
    static const std::vector<Word> kW = {"",      "0",     "1",     "2",     "010",  "020",
                                         "101",   "121",   "202",   "212",   "01210", "02120",
                                         "10201", "12021", "20102", "21012", "0120210"};
    return kW;
}

ConstraintSet eta_good_constraints() {
    ConstraintSet c;
    c.alphabet_size = 4;
    c.square_free = true;
    c.forbidden_factors = forbidden_factors_eta();
    return c;
}

ConstraintSet gamma_good_constraints() {
    ConstraintSet c;
    c.alphabet_size = 3;
    c.square_free = true;
    c.forbidden_factors = forbidden_factors_gamma();
    return c;
}

ConstraintSet sixteen_good_constraints() {
    ConstraintSet c;
    c.alphabet_size = 3;
    c.threshold = parse_threshold("52/27");
    c.max_palindromes = 16;
    return c;
}

ConstraintSet seventeen_better_constraints() {
    ConstraintSet c;
    c.alphabet_size = 3;
    c.threshold = parse_threshold("25/13");
    c.max_palindromes = 17;
    c.allowed_palindromes = palindrome_whitelist_17();
    return c;
}

Word thue_morse_prefix(size_t n) {
    static const Morphism kTm = parse_morphism("0 -> 01\n1 -> 10\n");
    return fixed_point_prefix(kTm, '0', n);
}

Word periodic_prefix(const Word& base, size_t n) {
    if (base.empty()) throw std::invalid_argument("empty period");
    Word w;
    w.reserve(n);
    while (w.size() < n) w += base;
    w.resize(n);
    return w;
}

}  // namespace palinword
