#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3lat/exact.hpp"

namespace k3lat {

// A place of Q: 0 stands for the real place, otherwise a prime.
using Place = Int;
inline const Place kInfinity{0};

std::vector<Int> factor(const Int& n);          // prime factors of |n| with multiplicity, sorted
std::vector<Int> prime_divisors(const Int& n);  // distinct, sorted
bool is_prime(const Int& n);
Int squarefree_part(const Int& n);   // keeps the sign
Int squarefree_class(const Rat& r);  // class of r in Q*/Q*^2 as a squarefree integer
int valuation(const Int& n, const Int& p);
bool is_local_square(const Rat& a, const Place& v);

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

// Squarefree entries of a diagonal form rationally equivalent to g.
std::vector<Int> diagonalize(const IntMatrix& g);

// prod_{i<j} (a_i, a_j)_v
int hasse_invariant(const std::vector<Int>& diag, const Place& v);
int hasse_invariant(const IntMatrix& g, const Place& v);

std::size_t anisotropic_dimension(const IntMatrix& g, const Place& v);
std::size_t witt_index(const IntMatrix& g, const Place& v);
std::size_t witt_index_global(const IntMatrix& g);
// Totally isotropic subspaces of dimension k+1 exist (v empty = over Q).
bool has_k_planes(const IntMatrix& g, std::size_t k, const std::optional<Place>& v = std::nullopt);

struct QuadFormInvariants {
  std::size_t rank = 0;
  Int disc_class;  // squarefree class of det
  Signature signature;
  std::vector<Place> hasse_minus;  // places where the Hasse invariant is -1, sorted (0 first)
  bool operator==(const QuadFormInvariants&) const = default;
};
std::string to_string(const QuadFormInvariants& q);

// Places that can carry a nontrivial invariant: infinity and primes dividing 2 det.
std::vector<Place> relevant_places(const Int& det);
QuadFormInvariants invariants(const IntMatrix& g);
bool rationally_equivalent(const IntMatrix& a, const IntMatrix& b);
// Invariants of n*g predicted from those of g.
QuadFormInvariants rescaled(const QuadFormInvariants& q, const Int& n);
// Is there c in Q* with c*a rationally equivalent to b (same projective quadric)?
bool quadrics_isomorphic(const IntMatrix& a, const IntMatrix& b);

// Square class of (-1)^(r/2) det for even rank r = 2k+2; odd rank is an error.
Int ruling_disc(const IntMatrix& g);

}  // namespace k3lat
