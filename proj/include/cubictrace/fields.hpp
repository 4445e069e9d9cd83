#pragma once

// Global classification of cyclic trace-one cubics.
//
// A cyclic cubic field K of conductor c corresponds to an index-3 subgroup H
// of (Z/c)*: a prime p not dividing c splits in K exactly when p mod c lies
// in H. Two cyclic cubics define isomorphic fields iff they have the same
// conductor and the same H. H is recovered by collecting residues of split
// primes until they generate a subgroup of index exactly 3; split/inert
// agreement on a fixed generating set would not be enough to separate
// distinct index-3 subgroups.

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "cubictrace/padic.hpp"
#include "cubictrace/poly.hpp"

namespace cubictrace {

/// Isomorphism-class identity: conductor and splitting subgroup.
struct FieldKey {
  std::uint64_t conductor = 0;
  std::vector<std::uint64_t> subgroup;  // sorted residues mod conductor

  friend auto operator<=>(const FieldKey&, const FieldKey&) = default;
};

struct FieldClass {
  std::uint64_t conductor = 0;
  Int discriminant = 0;  // conductor^2
  std::vector<std::uint64_t> splitting_subgroup;
  TraceOnePoly canonical_poly;

  FieldKey key() const { return {conductor, splitting_subgroup}; }

  // Ordered and compared by key; canonical_poly is a function of the key.
  friend bool operator==(const FieldClass& x, const FieldClass& y) { return x.key() == y.key(); }
  friend auto operator<=>(const FieldClass& x, const FieldClass& y) { return x.key() <=> y.key(); }
};

/// Local data at one prime dividing disc(f).
struct LocalData {
  std::uint64_t prime = 0;
  unsigned disc_valuation = 0;
  SplittingType type = SplittingType::Split;
  bool index_divisor = false;
};

/// Throws std::invalid_argument naming the failed predicate when f is not
/// cyclic ("reducible", "discriminant ... is not a positive square").
void require_cyclic(const TraceOnePoly& f);

/// Product of the ramified primes. Requires f cyclic.
std::uint64_t conductor(const TraceOnePoly& f);

/// Local data at every prime dividing disc(f), ascending by prime.
std::vector<LocalData> local_data(const TraceOnePoly& f);

/// Bound on the primes scanned by the subgroup fingerprint. Defaults to 10^6;
/// the CUBICTRACE_MAX_PRIME environment variable overrides it.
std::uint64_t fingerprint_prime_bound();

std::vector<std::uint64_t> splitting_subgroup(const TraceOnePoly& f);
std::vector<std::uint64_t> splitting_subgroup(const TraceOnePoly& f, std::uint64_t conductor);

/// The fingerprint over an explicit prime sequence (any order; primes
/// dividing the conductor are skipped). Throws std::runtime_error if the
/// sequence runs out before the subgroup has index 3.
std::vector<std::uint64_t> splitting_subgroup(const TraceOnePoly& f, std::uint64_t conductor,
                                              std::span<const std::uint64_t> primes);

FieldKey field_key(const TraceOnePoly& f);

/// Full descriptor, including the canonical defining polynomial at minimal
/// height. Canonical polynomials are cached process-wide per key.
FieldClass field_invariants(const TraceOnePoly& f);
FieldClass field_class(const FieldKey& key);

bool is_isomorphic(const TraceOnePoly& f, const TraceOnePoly& g);

/// Tie-break among same-height candidates: smallest -a, then smallest |b|,
/// then positive b.
TraceOnePoly pick_canonical(std::span<const TraceOnePoly> candidates);

}  // namespace cubictrace
