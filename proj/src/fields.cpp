#include "cubictrace/fields.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <string>

#include "cubictrace/enumerate.hpp"

namespace cubictrace {

namespace {

constexpr std::uint64_t kDefaultPrimeBound = 1'000'000;

std::string residues_to_string(const std::vector<std::uint64_t>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

// Accumulates split residues from `next()` (0 ends the supply) until their
// closure has index 3 in (Z/c)*.
template <typename NextPrime>
std::vector<std::uint64_t> fingerprint(const TraceOnePoly& f, std::uint64_t c, NextPrime&& next) {
  const std::uint64_t phi = euler_phi(c);
  if (c < 7 || phi % 3 != 0)
    throw InconsistencyError("conductor " + std::to_string(c) + " of " + f.to_string() +
                             " admits no index-3 subgroup");
  const std::size_t target = phi / 3;
  std::vector<std::uint64_t> gens;
  std::vector<std::uint64_t> closure{1};
  std::size_t scanned = 0;
  for (std::uint64_t p = next(); p != 0; p = next()) {
    if (c % p == 0) continue;
    ++scanned;
    const std::uint64_t r = p % c;
    const bool inside = std::binary_search(closure.begin(), closure.end(), r);
    const SplittingType t = splitting_type(f, p);
    if (t == SplittingType::Inert) {
      if (inside)
        throw InconsistencyError("inert prime " + std::to_string(p) + " has residue in split subgroup " +
                                 residues_to_string(closure) + " mod " + std::to_string(c));
      continue;
    }
    if (t != SplittingType::Split)
      throw InconsistencyError("prime " + std::to_string(p) + " ramifies in " + f.to_string() +
                               " but does not divide the conductor " + std::to_string(c));
    if (inside) continue;
    gens.push_back(r);
    closure = subgroup_closure(c, gens);
    if (closure.size() > target)
      throw InconsistencyError("split residues " + residues_to_string(gens) + " generate " +
                               std::to_string(closure.size()) + " elements of (Z/" + std::to_string(c) +
                               ")*, more than the index-3 size " + std::to_string(target));
    if (closure.size() == target) return closure;
  }
  throw std::runtime_error("prime supply exhausted for " + f.to_string() + ": conductor " + std::to_string(c) +
                           ", " + std::to_string(scanned) + " primes scanned, split residues " +
                           residues_to_string(gens) + " generate " + std::to_string(closure.size()) + " of " +
                           std::to_string(target) + " required elements");
}

struct CanonicalCache {
  std::mutex mutex;
  std::map<FieldKey, TraceOnePoly> entries;
};

CanonicalCache& canonical_cache() {
  static CanonicalCache cache;
  return cache;
}

}  // namespace

void require_cyclic(const TraceOnePoly& f) {
  if (!is_irreducible(f)) throw std::invalid_argument(f.to_string() + " is reducible");
  const Int d = discriminant(f);
  if (d <= 0 || !is_perfect_square(d))
    throw std::invalid_argument("discriminant " + to_string(d) + " of " + f.to_string() +
                                " is not a positive square; the root field is not cyclic");
}

std::uint64_t conductor(const TraceOnePoly& f) {
  require_cyclic(f);
  const Int root = isqrt(discriminant(f));
  std::uint64_t c = 1;
  for (const auto& [p, e] : factorize(root).entries) {
    if (splitting_type(f, p) != SplittingType::Ramified) continue;
    if (p % 3 != 1)
      throw InconsistencyError("ramified prime " + std::to_string(p) + " of " + f.to_string() +
                               " is not 1 mod 3; the field would be wildly ramified or not cyclic");
    c *= p;
  }
  return c;
}

std::vector<LocalData> local_data(const TraceOnePoly& f) {
  require_cyclic(f);
  const Int d = discriminant(f);
  std::vector<LocalData> out;
  for (const auto& pe : factorize(isqrt(d)).entries) {
    LocalData ld;
    ld.prime = pe.prime;
    ld.disc_valuation = 2 * pe.exponent;
    ld.type = splitting_type(f, pe.prime);
    ld.index_divisor = ld.disc_valuation > (ld.type == SplittingType::Ramified ? 2u : 0u);
    out.push_back(ld);
  }
  return out;
}

std::uint64_t fingerprint_prime_bound() {
  const char* env = std::getenv("CUBICTRACE_MAX_PRIME");
  if (env == nullptr || *env == '\0') return kDefaultPrimeBound;
  const Int v = parse_int(env);
  if (v < 2) throw std::invalid_argument("CUBICTRACE_MAX_PRIME must be at least 2");
  return to_u64(v);
}

std::vector<std::uint64_t> splitting_subgroup(const TraceOnePoly& f) {
  return splitting_subgroup(f, conductor(f));
}

std::vector<std::uint64_t> splitting_subgroup(const TraceOnePoly& f, std::uint64_t c) {
  const std::uint64_t bound = fingerprint_prime_bound();
  std::uint64_t p = 1;
  return fingerprint(f, c, [&]() -> std::uint64_t {
    p = next_prime(p);
    return p <= bound ? p : 0;
  });
}

std::vector<std::uint64_t> splitting_subgroup(const TraceOnePoly& f, std::uint64_t c,
                                              std::span<const std::uint64_t> primes) {
  std::size_t i = 0;
  return fingerprint(f, c, [&]() -> std::uint64_t {
    if (i == primes.size()) return 0;
    const std::uint64_t p = primes[i++];
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    return p;
  });
}

FieldKey field_key(const TraceOnePoly& f) {
  const std::uint64_t c = conductor(f);
  return {c, splitting_subgroup(f, c)};
}

TraceOnePoly pick_canonical(std::span<const TraceOnePoly> candidates) {
  if (candidates.empty()) throw std::invalid_argument("no canonical candidate");
  auto rank = [](const TraceOnePoly& f) { return std::make_tuple(-f.a, abs(f.b), f.b < 0); };
  return *std::min_element(candidates.begin(), candidates.end(),
                           [&](const TraceOnePoly& x, const TraceOnePoly& y) { return rank(x) < rank(y); });
}

FieldClass field_class(const FieldKey& key) {
  FieldClass out;
  out.conductor = key.conductor;
  out.discriminant = checked_mul(key.conductor, key.conductor);
  out.splitting_subgroup = key.subgroup;
  auto& cache = canonical_cache();
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.entries.find(key); it != cache.entries.end()) {
      out.canonical_poly = it->second;
      return out;
    }
  }
  // Minimal height is H^2 = c, i.e. a = (1 - c)/3.
  const Int c = static_cast<Int>(key.conductor);
  if (mod(1 - c, 3) != 0)
    throw InconsistencyError("conductor " + to_string(c) + " is not 1 mod 3");
  const Int a0 = (1 - c) / 3;
  std::vector<TraceOnePoly> candidates;
  for (const TraceOnePoly& g : cyclic_polys_for_a(a0)) {
    const std::uint64_t cg = conductor(g);
    if (cg == key.conductor && splitting_subgroup(g, cg) == key.subgroup) candidates.push_back(g);
  }
  if (candidates.empty())
    throw InconsistencyError("no generator of height^2 = conductor " + to_string(c) + " for subgroup " +
                             residues_to_string(key.subgroup));
  out.canonical_poly = pick_canonical(candidates);
  std::lock_guard lock(cache.mutex);
  cache.entries.emplace(key, out.canonical_poly);
  return out;
}

FieldClass field_invariants(const TraceOnePoly& f) { return field_class(field_key(f)); }

bool is_isomorphic(const TraceOnePoly& f, const TraceOnePoly& g) {
  const std::uint64_t cf = conductor(f);
  const std::uint64_t cg = conductor(g);
  if (cf != cg) return false;
  return splitting_subgroup(f, cf) == splitting_subgroup(g, cg);
}

}  // namespace cubictrace
