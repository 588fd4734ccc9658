#pragma once

#include "b3cryst/braid.hpp"
#include "b3cryst/matrix.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace b3cryst {

/// BFS letter alphabet shared by group enumeration and coset tables:
/// sigma_1 < sigma_1^-1 < sigma_2 < sigma_2^-1 (index 0..3).
inline constexpr std::array<int, 4> kLetterOf = {1, -1, 2, -2};
int letter_index(int letter);

struct GroupFingerprint {
  std::uint64_t order = 0;
  std::map<int, std::uint64_t> order_histogram;  // element order -> count
  std::uint64_t center_order = 0;
  bool operator==(const GroupFingerprint&) const = default;
};

/// A fully enumerated finite image rho_m(B_3) or its central quotient.
/// Elements are deduplicated by their canonical row-major encoding; in
/// center-quotient groups each element is the lexicographically least member
/// of its central coset {M, zM, z^2 M, ...}.
class FiniteMatrixGroup {
 public:
  /// BFS closure of the mod-m reduced Burau images of sigma_1^{+-1},
  /// sigma_2^{+-1} on 3 strands. Throws guard_error beyond order_guard.
  /// threads > 1 computes each BFS frontier's products in parallel; the
  /// merge stays sequential, so the result is bit-identical to serial.
  static FiniteMatrixGroup enumerate_image(std::uint64_t m, std::uint64_t order_guard = 1000000,
                                           int threads = 1);

  std::uint64_t modulus() const { return modulus_; }
  bool is_center_quotient() const { return center_quotient_; }
  std::uint64_t order() const { return elements_.size(); }
  const std::vector<ModMatrix>& elements() const { return elements_; }
  const ModMatrix& element(int i) const { return elements_[i]; }
  const BraidWord& transversal_word(int i) const { return transversal_[i]; }
  int cayley(int elem, int letter_idx) const { return cayley_[elem][letter_idx]; }
  const ModMatrix& generator_image(int letter_idx) const { return gen_images_[letter_idx]; }

  /// Index of a matrix (canonicalized first in quotient groups); -1 if absent.
  int index_of(const ModMatrix& m) const;
  /// Group multiplication on element indices.
  int multiply(int a, int b) const;
  int inverse(int a) const;
  /// Image of a braid word (3 strands) as an element index.
  int image_of_word(const BraidWord& w) const;

  ModMatrix canonicalize(const ModMatrix& m) const;

  /// Elements commuting with both generators (which suffices: they generate).
  std::vector<int> center() const;
  FiniteMatrixGroup quotient_by_center() const;

  int element_order(int i) const;
  /// Partition of the elements into conjugacy classes (orbit closure under
  /// conjugation by the generators); classes sorted by least member index.
  std::vector<std::vector<int>> conjugacy_classes() const;

  GroupFingerprint fingerprint() const;
  /// Fingerprint of a subgroup given by its element indices (orders are
  /// intrinsic; the center is computed within the subset).
  GroupFingerprint subset_fingerprint(const std::vector<int>& subgroup) const;

  /// Closure of the given elements under multiplication; sorted indices.
  std::vector<int> generated_subgroup(const std::vector<int>& gens) const;

 private:
  FiniteMatrixGroup() = default;
  void index_elements();
  void enumerate_from(const std::array<ModMatrix, 4>& gens, const ModMatrix& id,
                      std::uint64_t order_guard, int threads);

  std::uint64_t modulus_ = 0;
  bool center_quotient_ = false;
  std::vector<ModMatrix> center_reps_;  // central elements used for canonicalization
  std::array<ModMatrix, 4> gen_images_;
  std::vector<ModMatrix> elements_;              // BFS order; element 0 is the identity
  std::vector<std::array<int, 4>> cayley_;       // element x letter -> element
  std::vector<BraidWord> transversal_;           // shortest BFS words, deterministic ties
  std::map<std::vector<std::uint64_t>, int> by_encoding_;
};

}  // namespace b3cryst
