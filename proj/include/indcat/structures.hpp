#pragma once

#include <indcat/gf.hpp>
#include <indcat/object.hpp>

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

namespace indcat {

// ---------------------------------------------------------------------------
// Construction helpers. Atom ids default to 0..n-1.

Object make_set(int n);
Object make_graph(int n, const std::vector<std::pair<int, int>>& edges);
/// `pairs` are strict relations i < j; the transitive closure is taken.
Object make_poset(int n, const std::vector<std::pair<int, int>>& pairs);
Object make_binfunc(int nx, int ny, std::vector<int> table);
Object make_twograph(int n, const std::vector<std::array<int, 3>>& triples);
Object make_kdist(const CategoryId& cat, int n, const std::vector<int>& values);
Object make_bil(const CategoryId& cat, int dim, std::vector<int> gram);
Object make_group(Presentation pres);

/// Throws InvariantViolation if the object breaks a category invariant.
void validate(const Object& obj);
bool is_valid(const Object& obj);

gf::Mat gram(const Object& bil);
gf::Mat matrix(const Morphism& bil_morphism);

// ---------------------------------------------------------------------------
// Canonical forms and enumeration.

/// Lexicographically least structure encoding over all relabelings.
std::vector<int> canonical_key(const Object& obj);

/// Canonical relabeling onto 0..n-1; isomorphic objects compare equal afterwards.
Object canonicalize(const Object& obj);

/// Relabels atoms: atom i of `obj` becomes atom perm[i] (and Y atom j becomes yperm[j]).
Object relabel(const Object& obj, const std::vector<int>& perm, const std::vector<int>& yperm = {});

/// One canonical representative per isomorphism class with carrier <= max_size,
/// ordered by size and then by canonical key.
std::vector<Object> enumerate(const CategoryId& cat, int max_size);

/// Every structure on the fixed carrier 0..n-1 (and 0..ny-1 for BINFUNC).
std::vector<Object> labeled_structures(const CategoryId& cat, int n, int ny = 0);

/// Fills the entries of `partial.data` marked -1 in every valid way.
/// BIL and GRPWITNESS are not supported. Throws BoundTooLarge past `cap` results.
std::vector<Object> completions(const Object& partial, std::size_t cap = 1u << 20);

/// Structures on n+k atoms (n+k X atoms, ny+ky Y atoms for BINFUNC) restricting to `obj`.
std::vector<Object> extensions(const Object& obj, int k, int ky = 0);

// ---------------------------------------------------------------------------
// Morphisms.

bool is_morphism(const Morphism& m);
Flags classify(const Morphism& m);
bool is_embedding(const Morphism& m);
bool is_iso(const Morphism& m);

Morphism make_morphism(const Object& src, const Object& dst, std::vector<int> map, std::vector<int> ymap = {});
Morphism identity(const Object& obj);
/// g after f.
Morphism compose(const Morphism& g, const Morphism& f);
bool same_arrow(const Morphism& a, const Morphism& b);

/// Substructure on the given atoms (BINFUNC also takes Y atoms, which must be
/// closed under the table). Atom order is preserved.
Object restrict(const Object& obj, const std::vector<int>& xs, const std::vector<int>& ys = {});
Morphism inclusion(const Object& obj, const std::vector<int>& xs, const std::vector<int>& ys = {});

/// Every subobject of `obj`, as an embedding into it.
std::vector<Morphism> subobjects(const Object& obj);

/// Every morphism src -> dst (structure preserving), at most `cap`.
std::vector<Morphism> all_morphisms(const Object& src, const Object& dst, std::size_t cap = 1u << 20);
std::vector<Morphism> embeddings(const Object& src, const Object& dst);

/// Image sets of a carrier-based morphism.
std::vector<int> image_x(const Morphism& m);
std::vector<int> image_y(const Morphism& m);

}  // namespace indcat
