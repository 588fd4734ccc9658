#pragma once

#include <string>
#include <utility>
#include <vector>

namespace b3cryst {

/// A word in the Artin generators of the braid group on `strands` strands.
/// Letter +i stands for sigma_i, letter -i for its inverse, 1 <= i < strands.
/// Words are kept freely reduced at all times (free reduction holds in any
/// group, so it never changes the represented braid).
class BraidWord {
 public:
  explicit BraidWord(int strands) : strands_(strands) { check_strands(); }
  BraidWord(int strands, std::vector<int> letters);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }

  BraidWord inverse() const;
  BraidWord power(int k) const;
  bool operator==(const BraidWord& rhs) const = default;

  /// Text form: whitespace-separated signed generator indices ("1 2 -1").
  std::string str() const;
  /// Accepts "1 2 -1" and the letter form "s1 s2 S1" (capital = inverse).
  static BraidWord parse(const std::string& text, int strands);

 private:
  void check_strands() const;
  int strands_;
  std::vector<int> letters_;
};

/// Concatenation, freely reduced. Both words must live on the same strand count.
BraidWord compose(const BraidWord& w1, const BraidWord& w2);
BraidWord conjugate(const BraidWord& t, const BraidWord& w);  // t w t^-1
BraidWord commutator(const BraidWord& a, const BraidWord& b);  // a b a^-1 b^-1

/// Single Artin generator sigma_i^sign as a word.
BraidWord artin_generator(int i, int n, int sign = 1);

/// Pure braid generator A_{i,j} = (sigma_{j-1} ... sigma_{i+1}) sigma_i^2 (...)^-1.
BraidWord pure_generator(int i, int j, int n);

/// Full twist (sigma_1 ... sigma_{n-1})^n; generates the center of B_n.
BraidWord full_twist(int n);

/// Sum of letter signs; a homomorphism onto the integers.
int exponent_sum(const BraidWord& w);

/// Exact word problem for B_3. A word is trivial iff its reduced integral
/// Burau image is the identity and its exponent sum vanishes: the image
/// determines the word up to a power of the central element (s1 s2)^6, and
/// the exponent sum 12k of such a power pins k = 0.
bool is_trivial_b3(const BraidWord& w);
bool equal_b3(const BraidWord& w1, const BraidWord& w2);

/// All instances of the pure braid presentation relations on n strands, as
/// (lhs, rhs) word pairs.
std::vector<std::pair<BraidWord, BraidWord>> pure_braid_relations(int n);

/// Checks every instantiated pure-braid relation under equal_b3. Only n = 3
/// is decidable.
bool verify_pure_braid_relations(int n = 3);

/// Checks the full twist product identity against equal_b3 at n = 3:
/// Delta_3^2 = A_{1,2} A_{1,3} A_{2,3}.
bool verify_full_twist_product(int n = 3);

/// The product expansion of the full twist over pure braid generators, valid
/// for any n.
BraidWord full_twist_pure_product(int n);

}  // namespace b3cryst
