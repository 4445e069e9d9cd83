#include "cubictrace/eisenstein.hpp"

#include <stdexcept>

#include "cubictrace/arith.hpp"

namespace cubictrace {

namespace {

void require_positive(std::uint64_t n) {
  if (n == 0) throw std::domain_error("ideal norms start at 1");
}

}  // namespace

std::uint64_t ideal_count(std::uint64_t n) {
  require_positive(n);
  std::uint64_t count = 1;
  for (const auto& [p, k] : factorize(n).entries) {
    if (p % 3 == 1)
      count *= k + 1;
    else if (p % 3 == 2 && k % 2 == 1)
      return 0;
  }
  return count;
}

std::uint64_t ideal_count_oracle(std::uint64_t n) {
  require_positive(n);
  // Divisors by direct trial, so this path shares nothing with factorize().
  std::int64_t sum = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    sum += chi3(d);
    if (d * d != n) sum += chi3(n / d);
  }
  if (sum < 0) throw std::logic_error("negative character sum");
  return static_cast<std::uint64_t>(sum);
}

std::uint64_t series_coeff(std::uint64_t n) {
  require_positive(n);
  const std::uint64_t d = ideal_count(n);
  if (n % 3 != 0) return d;
  const std::uint64_t below = ideal_count(n / 3);
  if (below > d) throw std::logic_error("series coefficient would be negative");
  return d - below;
}

std::uint64_t p1_part(std::uint64_t n) {
  require_positive(n);
  std::uint64_t part = 1;
  for (const auto& [p, k] : factorize(n).entries)
    if (p % 3 == 1)
      for (unsigned i = 0; i < k; ++i) part *= p;
  return part;
}

std::uint64_t formula3_count(std::uint64_t n) { return factorize(p1_part(n)).divisor_count(); }

bool inert_part_is_square(std::uint64_t n) {
  require_positive(n);
  for (const auto& [p, k] : factorize(n).entries)
    if (p % 3 == 2 && k % 2 == 1) return false;
  return true;
}

IdealCountTable ideal_count_table(std::uint64_t max_n, bool use_oracle) {
  IdealCountTable table;
  table.max_n = max_n;
  table.counts.reserve(max_n);
  for (std::uint64_t n = 1; n <= max_n; ++n)
    table.counts.push_back(use_oracle ? ideal_count_oracle(n) : ideal_count(n));
  return table;
}

}  // namespace cubictrace
