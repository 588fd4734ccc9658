#pragma once

#include "b3cryst/catalog.hpp"
#include "b3cryst/matrix.hpp"
#include "b3cryst/rewriting.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace b3cryst {

/// Holonomy action of one coset on the lattice: column j is the class of
/// t_q b_j t_q^-1 in the given basis. Throws membership_error if a conjugate
/// leaves the subgroup (possible only in subgroup-preimage contexts).
IntMatrix action_matrix(int coset, const AbelianizationContext& ctx, const BasisSpec& basis);

/// The extension 1 -> Z^r -> B_3/[H,H] -> Q -> 1 made computable: for every
/// holonomy element its lift (transversal word), order and action matrix.
struct CrystPresentation {
  std::shared_ptr<const AbelianizationContext> ab;
  BasisSpec basis;
  int rank = 0;
  std::vector<int> holonomy;       // coset ids, base coset first
  std::vector<IntMatrix> theta;    // aligned with holonomy
  std::vector<int> orders;         // orders of the holonomy elements
  std::vector<BraidWord> lifts;    // transversal words, aligned with holonomy

  int position_of(int coset) const;  // index into the aligned vectors, -1 if absent
};

/// Builds the extension for a kernel mode (the lattice must be torsion free,
/// which holds for every mode this artifact certifies; a torsionful
/// abelianization is rejected). Basis defaults to the SNF basis.
CrystPresentation build_extension(std::uint64_t m, SubgroupMode mode,
                                  const std::optional<std::vector<BraidWord>>& basis_words =
                                      std::nullopt);
CrystPresentation build_extension(std::shared_ptr<const AbelianizationContext> ab,
                                  const std::optional<std::vector<BraidWord>>& basis_words =
                                      std::nullopt);

/// Restriction of the extension to a subgroup S of the holonomy group.
CrystPresentation sub_extension(const CrystPresentation& p, const std::vector<int>& subgroup);

struct TorsionWitness {
  int coset = 0;                 // holonomy element the witness lies above
  int order = 0;                 // its order, and the order of the witness
  std::vector<Int> translate;    // lattice vector x solving the norm equation
  BraidWord word{3};             // explicit braid word b(x) * t_q
};

struct TorsionReport {
  bool torsion_free = false;
  std::optional<TorsionWitness> witness;
};

/// Decides torsion of the extension: a coset q of order o admits a torsion
/// lift iff (sum_i theta(q)^i) x = -class(t_q^o) has an integer solution.
/// Only lifts of order exactly o(q) need testing: the o-th power of a torsion
/// lift lands in the torsion-free lattice, so its order equals o(q).
/// Every returned witness is certified on the spot: its image has order o and
/// the class of its o-th power vanishes.
TorsionReport torsion_test(const CrystPresentation& p);

/// Holonomy elements acting trivially on the lattice (positions in p.holonomy
/// whose theta is the identity).
std::vector<int> holonomy_kernel(const CrystPresentation& p);

struct Verdict {
  bool holonomy_faithful = false;
  bool torsion_free = false;
  bool crystallographic = false;  // faithful holonomy on the maximal lattice
  bool bieberbach = false;        // crystallographic and torsion free
  int dimension = 0;
  std::string holonomy_name;      // catalog match or "unknown"
  GroupFingerprint holonomy_fingerprint;
  std::vector<int> kernel;        // coset ids with trivial action
  std::optional<TorsionWitness> witness;
};

Verdict crystallographic_verdict(const CrystPresentation& p);

}  // namespace b3cryst
