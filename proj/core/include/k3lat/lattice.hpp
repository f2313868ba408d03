#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "k3lat/exact.hpp"

namespace k3lat {

// An integral lattice given by its Gram matrix.  When `ambient` is set,
// the columns of `basis` are the basis vectors written in ambient
// coordinates (rational, so overlattices of the ambient are allowed).
struct Lattice {
  IntMatrix gram;
  std::string name;
  std::shared_ptr<const Lattice> ambient;
  RatMatrix basis;

  std::size_t rank() const { return gram.rows(); }
  bool has_ambient() const { return static_cast<bool>(ambient); }
  Int det() const;
  Signature signature() const;
  bool is_even() const;
  // Vector in own coordinates mapped to ambient coordinates.
  RatVector to_ambient(const RatVector& own) const;
};

Lattice make_lattice(IntMatrix gram, std::string name = {});
// Lattice spanned by the given (rational) vectors of `ambient`.  The basis
// must be linearly independent and span an integral lattice.
Lattice embed(const Lattice& ambient, RatMatrix basis, std::string name = {});
Lattice embed(const Lattice& ambient, const IntMatrix& basis, std::string name = {});

enum class RootType { A, D, E };
// Negative definite root lattice; diagonal -2, adjacent simple roots pair to +1.
// A_n: chain.  D_n: chain 1..n-1, node n attached to node n-2.
// E_n: chain 1..n-1, node n attached to node n-3.
Lattice root_lattice(RootType t, int n);
IntMatrix dynkin_gram(RootType t, int n);

Lattice hyperbolic();
// Odd k only with allow_odd.
Lattice rank_one(const Int& k, bool allow_odd = false);
Lattice rescale(const Lattice& l, const Int& n);
Lattice direct_sum(const Lattice& a, const Lattice& b);
Lattice direct_sum(const std::vector<Lattice>& parts);
Lattice diagonal_lattice(const std::vector<long>& d, std::string name = {});

bool is_even(const IntMatrix& gram);

struct FiniteQuadraticForm {
  std::vector<Int> invariant_factors;  // all > 1, each divides the next
  std::vector<RatVector> generators;   // dual vectors in lattice coordinates
  std::vector<Rat> q;                  // q(g_i), mod 2 (mod 1 for odd lattices)
  RatMatrix b;                         // b(g_i, g_j) mod 1
  bool even = true;
  IntMatrix to_coords;  // c_i = (to_coords row i) . (G x) mod d_i

  std::size_t length() const { return invariant_factors.size(); }
  Int order() const;
  Rat q_of(const IntVector& c) const;
  Rat b_of(const IntVector& x, const IntVector& y) const;
  std::size_t element_order(const IntVector& c) const;
  std::vector<IntVector> elements() const;
  IntVector reduce(const IntVector& c) const;
  IntVector add(const IntVector& x, const IntVector& y) const;
  // Dual vector (own coordinates) of a group element.
  RatVector lift(const IntVector& c) const;
  FiniteQuadraticForm negated() const;
};

FiniteQuadraticForm discriminant_group(const Lattice& l);
// Coordinates of a dual vector in the generators of `f` built from gram `g`.
IntVector disc_coords(const FiniteQuadraticForm& f, const IntMatrix& g, const RatVector& x);

// Saturated complement of the span of `sub` (ambient coordinates, columns).
Lattice orthogonal_complement(const Lattice& ambient, const IntMatrix& sub, std::string name = {});
Lattice orthogonal_complement(const Lattice& sublattice);

// Primitive closure (span(basis) tensor Q) meet Z^n, as columns.
IntMatrix saturation(const IntMatrix& basis);
bool is_primitive(const IntMatrix& basis);
// [sup : sub] for lattices of equal rank, from the determinant ratio.
Int index_in(const Lattice& sub, const Lattice& sup);

// Coordinates of an ambient vector in the basis of l, if v lies in l.
std::optional<IntVector> coords_in(const Lattice& l, const RatVector& ambient_vec);
bool contains(const Lattice& l, const RatVector& ambient_vec);
// Largest n with v . L contained in n Z (v in own coordinates).
Int divisibility(const Lattice& l, const IntVector& v);
Int norm(const Lattice& l, const IntVector& v);

}  // namespace k3lat
