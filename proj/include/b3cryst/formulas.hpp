#pragma once

#include "b3cryst/matrix.hpp"

#include <cstdint>

namespace b3cryst {

/// Moebius function (n >= 1).
int moebius(std::uint64_t n);

bool is_odd_prime(std::uint64_t p);

/// Rank of the k-th lower central quotient of a free group of rank M:
/// (1/k) sum_{d|k} mu(d) M^{k/d}. Equals the number of Lyndon words of
/// length k over M letters.
Int witt_rank(const Int& m, int k);

/// Number of Lyndon words of length k over an M-letter alphabet, counted by
/// explicit enumeration. Independent cross-check of witt_rank; keep the
/// search space modest (M^k words are visited).
Int lyndon_word_count(int m, int k);

/// Hirsch length of the free-by-cyclic nilpotent quotient of class k-1:
/// sum_{q=1}^{k-1} witt_rank(M, q) + 1.
Int hirsch_length(const Int& m, int k);

/// Free rank M(p) = 1 + (p-1)p(p+1)/12 of the congruence factor for an odd
/// prime p.
Int rank_m(std::uint64_t p);

/// M(m): 5 when m = 4, rank_m(m) when m is an odd prime.
Int free_factor_rank(std::uint64_t m);

/// Dimension of the almost-crystallographic quotient at level m and class
/// index k: hirsch_length(M(m), k). m must be 4 or an odd prime.
Int almost_cryst_dimension(std::uint64_t m, int k);

}  // namespace b3cryst
