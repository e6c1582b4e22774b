#include <indcat/category.hpp>

#include <algorithm>

namespace indcat {

std::string_view errc_name(Errc code) {
    switch (code) {
        case Errc::InvariantViolation: return "InvariantViolation";
        case Errc::BoundTooLarge: return "BoundTooLarge";
        case Errc::NotAMorphism: return "NotAMorphism";
        case Errc::UnsupportedCategory: return "UnsupportedCategory";
        case Errc::NotFactorizable: return "NotFactorizable";
        case Errc::BadDerivationStep: return "BadDerivationStep";
        case Errc::RelatorNotKilled: return "RelatorNotKilled";
        case Errc::NoIndependentAmalgam: return "NoIndependentAmalgam";
        case Errc::NotAHorn: return "NotAHorn";
        case Errc::SpanMismatch: return "SpanMismatch";
        case Errc::MalformedProblem: return "MalformedProblem";
        case Errc::ConstructionStuck: return "ConstructionStuck";
        case Errc::UnknownFixture: return "UnknownFixture";
        case Errc::PreconditionViolated: return "PreconditionViolated";
        case Errc::ParseError: return "ParseError";
    }
    return "Error";
}

std::string_view cat_name(Cat tag) {
    switch (tag) {
        case Cat::Set: return "set";
        case Cat::Gra: return "gra";
        case Cat::Pos: return "pos";
        case Cat::BinFunc: return "binfunc";
        case Cat::TwoGraph: return "twograph";
        case Cat::KDist: return "kdist";
        case Cat::Bil: return "bil";
        case Cat::GrpWitness: return "grp";
    }
    return "?";
}

Cat parse_cat(std::string_view name) {
    for (Cat c : {Cat::Set, Cat::Gra, Cat::Pos, Cat::BinFunc, Cat::TwoGraph, Cat::KDist, Cat::Bil, Cat::GrpWitness})
        if (cat_name(c) == name) return c;
    throw Error(Errc::ParseError, "unknown category '" + std::string(name) + "'");
}

CategoryId make_category(Cat tag) {
    CategoryId c;
    c.tag = tag;
    if (tag == Cat::KDist) c.labels = {0, 1};
    return c;
}

CategoryId make_kdist(std::vector<int> labels, bool metric) {
    CategoryId c;
    c.tag = Cat::KDist;
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    c.labels = std::move(labels);
    c.metric = metric;
    check_category(c);
    return c;
}

CategoryId make_bil(int prime, int maxdim, bool symmetric) {
    CategoryId c;
    c.tag = Cat::Bil;
    c.prime = prime;
    c.maxdim = maxdim;
    c.symmetric = symmetric;
    check_category(c);
    return c;
}

bool pushout_complete(Cat tag) {
    return tag == Cat::Set || tag == Cat::Gra || tag == Cat::Pos || tag == Cat::BinFunc;
}

bool carrier_based(Cat tag) { return tag != Cat::Bil && tag != Cat::GrpWitness; }

int size_cap(const CategoryId& cat) {
    switch (cat.tag) {
        case Cat::Set:
        case Cat::Gra:
        case Cat::Pos: return 6;
        case Cat::TwoGraph:
        case Cat::KDist: return 4;
        case Cat::BinFunc: return 3;
        case Cat::Bil: return cat.maxdim;
        case Cat::GrpWitness: return 0;
    }
    return 0;
}

void check_category(const CategoryId& cat) {
    if (cat.tag == Cat::KDist) {
        if (cat.labels.empty()) throw Error(Errc::InvariantViolation, "KDIST needs a non-empty label set");
        if (!std::is_sorted(cat.labels.begin(), cat.labels.end()) ||
            std::adjacent_find(cat.labels.begin(), cat.labels.end()) != cat.labels.end())
            throw Error(Errc::InvariantViolation, "KDIST labels must be sorted and distinct");
    }
    if (cat.tag == Cat::Bil) {
        if (cat.prime != 2 && cat.prime != 3 && cat.prime != 5)
            throw Error(Errc::InvariantViolation, "BIL prime must be 2, 3 or 5");
        if (cat.maxdim < 0 || cat.maxdim > 4) throw Error(Errc::InvariantViolation, "BIL maxdim must be <= 4");
    }
}

}  // namespace indcat
