#pragma once

#include <indcat/object.hpp>
#include <indcat/verdict.hpp>

#include <string>
#include <string_view>
#include <vector>

// Witness checking for finitely presented groups: permutation images that
// separate words, and explicit rewrite derivations that force equations.
namespace indcat::grp {

Letters reduce(Letters w);
Letters inverse(const Letters& w);
Letters concat(const Letters& a, const Letters& b);

/// Freely reduced word.
struct GroupWord {
    Letters letters;

    GroupWord() = default;
    explicit GroupWord(Letters w) : letters(reduce(std::move(w))) {}

    friend bool operator==(const GroupWord&, const GroupWord&) = default;
};

/// Whitespace separated tokens `x`, `x^-1`, `x^k`; "1" or "" is the empty word.
/// Not reduced, so derivation steps keep their literal shape.
Letters parse_word(const std::vector<std::string>& generators, std::string_view text);
std::string format_word(const std::vector<std::string>& generators, const Letters& w);

/// Images of 0..n-1. A word acts left to right.
using Perm = std::vector<int>;

Perm perm_identity(int degree);
Perm perm_then(const Perm& first, const Perm& second);
Perm perm_inverse(const Perm& p);
/// Cycle notation over points 1..degree: "(12)(34)", "(1 2 3)", "id" or "()".
Perm parse_perm(std::string_view text, int degree);
std::string format_perm(const Perm& p);

struct Hom {
    int degree = 0;
    std::vector<Perm> images;  // one per generator
};

Perm eval(const Hom& h, const Letters& w);

/// x x^-1 for a letter x, or a cyclic rotation of a relator or of its inverse.
bool is_trivial_piece(const Presentation& pres, const Letters& piece);

/// Throws BadDerivationStep naming the first consecutive pair that does not
/// differ by inserting or deleting one trivial piece.
void check_derivation(const Presentation& pres, const std::vector<Letters>& steps);

/// Throws RelatorNotKilled if some relator does not map to the identity.
void check_hom(const Presentation& pres, const Hom& h);

/// Closure of the given permutations under composition.
std::vector<Perm> generated_subgroup(const std::vector<Perm>& gens, int degree);

struct WitnessRequest {
    Presentation pres;
    Letters w1, w2;
    const Hom* hom = nullptr;                      // separation of w1, w2 in `pres`
    const std::vector<Letters>* derivation = nullptr;  // proof of w1 = w2 ...
    const Presentation* derivation_pres = nullptr;     // ... in this presentation (default: pres)
};

/// Holds iff every supplied part checks out: the hom kills the relators and
/// separates the words; the derivation runs from w1 to w2.
Verdict verify_witness(const WitnessRequest& req);

/// Membership certificate: `expr` is a word in the subgroup generators
/// (letters index into `subgens`) whose substitution reduces to `w`.
bool member_by_expression(const std::vector<Letters>& subgens, const Letters& expr, const Letters& w);

/// Non-membership certificate: h(w) lies outside <h(subgens)>.
bool separated_from_subgroup(const Hom& h, const std::vector<Letters>& subgens, const Letters& w);

}  // namespace indcat::grp
