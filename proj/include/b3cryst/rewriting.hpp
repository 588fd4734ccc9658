#pragma once

#include "b3cryst/braid.hpp"
#include "b3cryst/finite_image.hpp"
#include "b3cryst/matrix.hpp"
#include "b3cryst/snf.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace b3cryst {

/// Which finite-index subgroup of B_3 a context describes, as the preimage
/// of a subgroup S of a finite quotient Q:
///   FullKernel            S = 1 in Q = rho_m(B_3), the subgroup is B_3[m]
///   CenterQuotientKernel  S = 1 in Q = rho_m(B_3)/Z, i.e. rho_m^-1(Z(rho_m(B_3)))
///   SubgroupPreimage      S arbitrary; cosets are the right cosets S\Q
enum class SubgroupMode { FullKernel, CenterQuotientKernel, SubgroupPreimage };

const BraidWord& braid_relator_b3();  // s1 s2 s1 s2^-1 s1^-1 s2^-1

/// Coset table of the preimage subgroup, with a Schreier transversal from a
/// BFS spanning tree and the Schreier generators of the non-tree edges.
class CosetContext {
 public:
  /// `letter_order` is the BFS exploration order over the alphabet indices
  /// {0: s1, 1: s1^-1, 2: s2, 3: s2^-1}; the default reproduces the group
  /// enumeration tie-breaking. Changing it changes transversals but must not
  /// change any downstream verdict (tested).
  CosetContext(FiniteMatrixGroup quotient, SubgroupMode mode, std::vector<int> subgroup_elems = {},
               std::array<int, 4> letter_order = {0, 1, 2, 3});

  const FiniteMatrixGroup& quotient() const { return quotient_; }
  SubgroupMode mode() const { return mode_; }
  const std::vector<int>& subgroup() const { return subgroup_; }

  int num_cosets() const { return static_cast<int>(transversal_.size()); }
  int table(int coset, int letter_idx) const { return table_[coset][letter_idx]; }
  const BraidWord& transversal(int coset) const { return transversal_[coset]; }
  /// Representative element of a coset, as an element index of the quotient.
  int coset_element(int coset) const { return coset_elem_[coset]; }

  int num_schreier_generators() const { return static_cast<int>(sgen_words_.size()); }
  const BraidWord& schreier_word(int sgen) const { return sgen_words_[sgen]; }
  const std::vector<BraidWord>& schreier_words() const { return sgen_words_; }

  /// Coset reached by tracing w from the base coset.
  int coset_of(const BraidWord& w) const;
  bool in_subgroup(const BraidWord& w) const { return coset_of(w) == 0; }

  /// Reidemeister-Schreier rewriting of a subgroup word: sequence of signed
  /// 1-based Schreier generator ids (tree edges vanish). Throws
  /// membership_error if w is not in the subgroup.
  std::vector<int> rewrite(const BraidWord& w) const;
  /// Abelianized exponent vector of the rewrite.
  std::vector<long long> rewrite_abelianized(const BraidWord& w) const;

 private:
  FiniteMatrixGroup quotient_;
  SubgroupMode mode_;
  std::vector<int> subgroup_;
  std::vector<std::array<int, 4>> table_;
  std::vector<BraidWord> transversal_;
  std::vector<int> coset_elem_;
  std::vector<std::array<int, 2>> sgen_of_;  // coset x positive generator -> id or -1 (tree)
  std::vector<BraidWord> sgen_words_;
};

/// Abelianization H_1 of the subgroup: relation matrix from the transversal
/// conjugates of the braid relator, its Smith normal form, and the induced
/// coordinates on the free part Z^r.
class AbelianizationContext {
 public:
  explicit AbelianizationContext(CosetContext cosets);

  const CosetContext& cosets() const { return cosets_; }
  const IntMatrix& relation_matrix() const { return relations_; }
  const SmithForm& smith() const { return smith_; }
  int free_rank() const { return free_rank_; }
  const std::vector<Int>& torsion() const { return torsion_; }

  /// Coordinates of a subgroup word in the SNF basis of the free part.
  std::vector<Int> class_of(const BraidWord& w) const;

  /// Explicit subgroup words whose classes are the standard basis of Z^r.
  const std::vector<BraidWord>& snf_basis_words() const { return snf_basis_words_; }

 private:
  CosetContext cosets_;
  IntMatrix relations_;
  SmithForm smith_;
  int free_rank_ = 0;
  std::vector<Int> torsion_;
  IntMatrix projection_;  // r x num_sgens
  std::vector<BraidWord> snf_basis_words_;
};

/// A user-declared lattice basis: r subgroup words whose classes span Z^r
/// with determinant +-1, plus the change of basis to SNF coordinates.
struct BasisSpec {
  std::vector<BraidWord> words;
  IntMatrix to_snf;    // columns are the classes of `words`
  IntMatrix from_snf;  // integer inverse
};

/// Validates the words as a basis; throws basis_error (with the offending
/// determinant) otherwise.
BasisSpec change_basis(const AbelianizationContext& ctx, const std::vector<BraidWord>& words);

/// The SNF basis itself as a BasisSpec (identity change of basis).
BasisSpec snf_basis(const AbelianizationContext& ctx);

std::vector<Int> class_in_basis(const AbelianizationContext& ctx, const BasisSpec& basis,
                                const BraidWord& w);

/// Convenience builders from the level m. Subgroup words are only consulted
/// in SubgroupPreimage mode: they generate S inside rho_m(B_3).
CosetContext build_coset_context(std::uint64_t m, SubgroupMode mode,
                                 const std::vector<BraidWord>& subgroup_words = {},
                                 std::array<int, 4> letter_order = {0, 1, 2, 3});
AbelianizationContext abelianization(std::uint64_t m, SubgroupMode mode,
                                     const std::vector<BraidWord>& subgroup_words = {});

}  // namespace b3cryst
