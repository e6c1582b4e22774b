#pragma once

#include <indcat/category.hpp>

#include <string>
#include <vector>

namespace indcat {

/// Letters are signed 1-based generator indices: +k is generator k-1, -k its inverse.
using Letters = std::vector<int>;

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Letters> relators;

    friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// A finite structure in one of the supported categories.
///
/// Atoms are addressed by index 0..n-1; `carrier` keeps the external atom ids.
/// Layout of `data`:
///   SET       empty
///   GRA       n*n adjacency, symmetric, zero diagonal
///   POS       n*n strict order, transitively closed
///   TWOGRAPH  n*n*n edge flags, symmetric under permutation, zero on repeats
///   BINFUNC   n*n table into Y indices 0..ny-1
///   KDIST     n*n table of indices into cat.labels
///   BIL       n*n Gram matrix over GF(cat.prime); n is the dimension
///   GRPWITNESS unused, see `pres`
struct Object {
    CategoryId cat;
    int n = 0;
    int ny = 0;
    std::vector<int> carrier;
    std::vector<int> ycarrier;
    std::vector<int> data;
    Presentation pres;

    int at(int i, int j) const { return data[static_cast<std::size_t>(i * n + j)]; }
    int at(int i, int j, int k) const { return data[static_cast<std::size_t>((i * n + j) * n + k)]; }
    int& at(int i, int j) { return data[static_cast<std::size_t>(i * n + j)]; }
    int& at(int i, int j, int k) { return data[static_cast<std::size_t>((i * n + j) * n + k)]; }

    friend bool operator==(const Object&, const Object&) = default;
};

/// `map` sends X atoms of src to X atoms of dst (for BIL it is the column-major
/// dst.n x src.n matrix); `ymap` is the Y-sort map of a BINFUNC morphism.
struct Morphism {
    Object src;
    Object dst;
    std::vector<int> map;
    std::vector<int> ymap;

    friend bool operator==(const Morphism&, const Morphism&) = default;
};

struct Flags {
    bool is_mono = false;
    bool is_embedding = false;
    bool is_surjection = false;

    friend bool operator==(const Flags&, const Flags&) = default;
};

}  // namespace indcat
