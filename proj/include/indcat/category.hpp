#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace indcat {

/// The concrete finite-structure categories the library knows about.
enum class Cat { Set, Gra, Pos, BinFunc, TwoGraph, KDist, Bil, GrpWitness };

/// A category tag plus the parameters a few of the categories carry.
struct CategoryId {
    Cat tag = Cat::Set;
    std::vector<int> labels;   // KDIST: the finite label set K, sorted
    bool metric = false;       // KDIST: objects must satisfy the triangle inequality
    int prime = 2;             // BIL: characteristic of the ground field
    int maxdim = 2;            // BIL: largest dimension handled
    bool symmetric = false;    // BIL: restrict to symmetric forms

    friend bool operator==(const CategoryId&, const CategoryId&) = default;
};

enum class Errc {
    InvariantViolation,
    BoundTooLarge,
    NotAMorphism,
    UnsupportedCategory,
    NotFactorizable,
    BadDerivationStep,
    RelatorNotKilled,
    NoIndependentAmalgam,
    NotAHorn,
    SpanMismatch,
    MalformedProblem,
    ConstructionStuck,
    UnknownFixture,
    PreconditionViolated,
    ParseError,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

std::string_view cat_name(Cat tag);
Cat parse_cat(std::string_view name);

CategoryId make_category(Cat tag);
CategoryId make_kdist(std::vector<int> labels, bool metric = false);
CategoryId make_bil(int prime, int maxdim, bool symmetric = false);

/// SET, GRA, POS and BINFUNC have genuine pushouts of embeddings.
bool pushout_complete(Cat tag);

/// Everything carried by a plain carrier map (i.e. not BIL or GRPWITNESS).
bool carrier_based(Cat tag);

/// Largest carrier `enumerate` accepts for the category.
int size_cap(const CategoryId& cat);

void check_category(const CategoryId& cat);

}  // namespace indcat
