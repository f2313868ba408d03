#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "k3lat/glue.hpp"
#include "k3lat/lattice.hpp"
#include "k3lat/quadform.hpp"

namespace k3lat {

// E8 node lists (1-based, chain 1..7 with 8 on node 5).
inline const std::vector<int> kA5A1Nodes{1, 2, 3, 4, 5, 7};
inline const std::vector<int> kA2A1cNodes{1, 2, 4, 6, 8};

// Coordinates of V: U1 (0,1), U2 (2,3), U3 (4,5), E8 (6..13), E8' (14..21).
// Specs: "A5+A1 in E8", "A2+A1^3 in E8", "U+E8+A5+A1 in V",
// "L2-isogeny-complement" (same lattice as the previous one), "rank17 in V",
// "vector_of_norm(k) in U".
Lattice embed_standard(const std::string& spec);
std::vector<std::string> standard_embeddings();
IntVector vector_of_norm(const Int& k);
// Lp into Lambda(3): <-2>+<-6>+U identically, <4p> onto (1, 2p) in the last U.
Lattice embed_Lp_in_Lambda3(const Int& p);

Lattice transcendental_of(const Lattice& embedded);

// Images of the generators of a under an isometry a -> b, if one exists.
std::optional<std::vector<IntVector>> disc_form_isomorphism(const FiniteQuadraticForm& a,
                                                            const FiniteQuadraticForm& b);
bool genus_equal(const Lattice& a, const Lattice& b, std::size_t max_order = 1u << 14);
// rank >= 2 + (number of p-divisible invariant factors) for every p, and indefinite.
bool nikulin_uniqueness_applies(const Lattice& l);
bool is_two_elementary(const Lattice& l);

// All nonzero x with x^T g x <= bound, g positive definite.
std::vector<IntVector> short_vectors(const IntMatrix& g, const Int& bound);
// Number of vectors by |norm| for 0 < |norm| <= bound.
std::map<Int, std::size_t> theta_counts(const Lattice& l, const Int& bound);

// Columns: images of the basis of a, in coordinates of b.
std::optional<IntMatrix> definite_isometry(const Lattice& a, const Lattice& b);
bool definite_isomorphic(const Lattice& a, const Lattice& b);
// Isometry search with image coordinates in [-box, box]; works for indefinite lattices.
std::optional<IntMatrix> bounded_isometry(const Lattice& a, const Lattice& b, long box);

QuadFormInvariants quadric_certificate(const Lattice& l);

}  // namespace k3lat
