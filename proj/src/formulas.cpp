#include "b3cryst/formulas.hpp"

#include "b3cryst/errors.hpp"

#include <vector>

namespace b3cryst {

int moebius(std::uint64_t n) {
  if (n == 0) throw precondition_error("moebius needs n >= 1");
  int factors = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;  // square factor
    ++factors;
  }
  if (n > 1) ++factors;
  return factors % 2 == 0 ? 1 : -1;
}

bool is_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

Int witt_rank(const Int& m, int k) {
  if (m < 1 || k < 1) throw precondition_error("witt_rank needs M >= 1, k >= 1");
  Int sum = 0;
  for (int d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    Int term = 1;
    for (int i = 0; i < k / d; ++i) term *= m;
    sum += moebius(d) * term;
  }
  return sum / k;
}

Int lyndon_word_count(int m, int k) {
  if (m < 1 || k < 1) throw precondition_error("lyndon_word_count needs M >= 1, k >= 1");
  // A word is Lyndon iff it is strictly smaller than each of its proper
  // rotations. Plain odometer enumeration over all M^k words.
  std::vector<int> w(k, 0);
  Int count = 0;
  while (true) {
    bool lyndon = true;
    for (int s = 1; s < k && lyndon; ++s) {
      // compare w with its rotation by s
      for (int i = 0; i < k; ++i) {
        const int a = w[i], b = w[(i + s) % k];
        if (a != b) {
          lyndon = a < b;
          break;
        }
        if (i == k - 1) lyndon = false;  // equal to a proper rotation: periodic
      }
    }
    if (lyndon) ++count;
    int pos = k - 1;
    while (pos >= 0 && w[pos] == m - 1) w[pos--] = 0;
    if (pos < 0) break;
    ++w[pos];
  }
  return count;
}

Int hirsch_length(const Int& m, int k) {
  if (k < 2) throw precondition_error("hirsch_length needs k >= 2");
  Int sum = 1;
  for (int q = 1; q <= k - 1; ++q) sum += witt_rank(m, q);
  return sum;
}

Int rank_m(std::uint64_t p) {
  if (!is_odd_prime(p)) throw precondition_error("rank_m needs an odd prime");
  const Int q(p);
  return 1 + (q - 1) * q * (q + 1) / 12;
}

Int free_factor_rank(std::uint64_t m) {
  if (m == 4) return 5;
  if (is_odd_prime(m)) return rank_m(m);
  throw precondition_error("level must be 4 or an odd prime");
}

Int almost_cryst_dimension(std::uint64_t m, int k) {
  return hirsch_length(free_factor_rank(m), k);
}

}  // namespace b3cryst
