#pragma once

// Local analysis of a trace-one cubic at a single prime p.
//
// Splitting behaviour at primes dividing disc(f) cannot be read off the
// factorization of f mod p when p divides the index [O_K : Z[theta]], so it
// is decided by p-adic root lifting instead: a root in Z_p means split, a
// root only in the unramified cubic extension W of Z_p means inert, neither
// means ramified.
//
// Lifting precision. If d = v_p(disc f), a residue r with f(r) = 0 mod
// p^(2d+1) has v_p(f'(r)) <= d (disc = A f + B f' for integral A, B), so
// Hensel's lemma turns it into a true root. The lifting routines therefore
// decide "is there a root modulo p^(2d+1)". They search residue classes
// rather than residues: a class r + p^k Z_p is refined only along the roots of
// the reduced shifted polynomial, which keeps the search tree at width <= 3
// even when every residue of a class is a root to the working precision.

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "cubictrace/fp_poly.hpp"
#include "cubictrace/poly.hpp"

namespace cubictrace {

enum class SplittingType { Split, Inert, Ramified };

std::string_view to_string(SplittingType t);

/// Raised when local data contradicts the cyclic cubic structure. Valid
/// inputs never trigger it.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Residues r in [0, p) with f(r) = 0 mod p, ascending.
std::vector<std::uint64_t> roots_mod_p(const TraceOnePoly& f, std::uint64_t p);

/// Whether f has a root in Z_p; d must equal v_p(disc f).
bool lift_root_zp(const TraceOnePoly& f, std::uint64_t p, unsigned d);
bool lift_root_zp(const TraceOnePoly& f, std::uint64_t p);

/// Whether f has a root in the unramified cubic extension of Z_p.
bool lift_root_unramified(const TraceOnePoly& f, std::uint64_t p);

/// Requires f cyclic. At p = 3 a Ramified outcome is impossible for a
/// trace-one cubic and raises InconsistencyError instead.
SplittingType splitting_type(const TraceOnePoly& f, std::uint64_t p);

/// Dedekind's criterion: true iff p divides [O_K : Z[theta]], theta a root of f.
bool dedekind_index_test(const TraceOnePoly& f, std::uint64_t p);

/// The lexicographically least monic irreducible cubic over F_p, ordered by
/// (t^2, t, 1) coefficients.
fp::Poly least_irreducible_cubic(std::uint64_t p);

}  // namespace cubictrace
