#pragma once

#include "b3cryst/braid.hpp"
#include "b3cryst/matrix.hpp"

#include <cstdint>

namespace b3cryst {

/// Unreduced integral Burau generator image (dimension n): identity with the
/// 2x2 block [[2,-1],[1,0]] at rows/cols (i, i+1).
IntMatrix unreduced_burau_gen(int i, int n);

/// Reduced integral Burau generator image (dimension n-1). Convention:
///   sigma_1       -> [[1,0],[1,1]] on rows/cols (1,2)          (n >= 3)
///   sigma_i       -> [[1,-1,0],[0,1,0],[0,1,1]] on (i-1,i,i+1) (1 < i < n-1)
///   sigma_{n-1}   -> [[1,-1],[0,1]] on rows/cols (n-2,n-1)
/// For n = 2 the reduced representation is trivial (dimension 1).
IntMatrix reduced_burau_gen(int i, int n);

/// Exact image of a word under the unreduced representation.
IntMatrix unreduced_burau(const BraidWord& w);

/// Exact image of a word under the reduced representation (dimension n-1).
IntMatrix reduced_burau_neg1(const BraidWord& w);

/// Mod-m image under the representation that defines the congruence
/// subgroups: reduced for odd strand count, unreduced for even. The even
/// case is an extended definition (the fixed-vector target group is not made
/// explicit by the construction); congruence_uses_extended_definition flags it.
ModMatrix rho_m(const BraidWord& w, std::uint64_t m);
bool congruence_uses_extended_definition(int strands);

/// Level-m congruence membership: rho_m(w) is the identity mod m.
bool in_congruence(const BraidWord& w, std::uint64_t m);

/// Result of solving B^T J B = J, J skew-symmetric, simultaneously for every
/// reduced generator image.
struct InvariantFormReport {
  IntMatrix form;        // primitive integer representative (gcd of entries 1)
  int solution_dim = 0;  // dimension of the rational solution space
  bool unimodular = false;
};

/// Discovers the invariant skew form of the reduced representation (odd n).
/// A zero solution space would falsify the symplectic-image claim and is
/// reported as a hard failure.
InvariantFormReport discover_invariant_form(int n);

struct FixedVectorReport {
  IntMatrix basis;  // columns form an integer basis of the common fixed space
};

/// Integer basis of {u : B u = u for every unreduced generator image B}.
FixedVectorReport common_fixed_vectors(int n);

}  // namespace b3cryst
