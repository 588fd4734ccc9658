#include "b3cryst/braid.hpp"

#include "b3cryst/burau.hpp"
#include "b3cryst/errors.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace b3cryst {

void BraidWord::check_strands() const {
  if (strands_ < 2) throw precondition_error("braid words need at least 2 strands");
}

BraidWord::BraidWord(int strands, std::vector<int> letters) : strands_(strands) {
  check_strands();
  letters_.reserve(letters.size());
  for (int x : letters) {
    if (x == 0 || std::abs(x) > strands_ - 1)
      throw precondition_error("generator index out of range for strand count");
    if (!letters_.empty() && letters_.back() == -x)
      letters_.pop_back();
    else
      letters_.push_back(x);
  }
}

BraidWord BraidWord::inverse() const {
  std::vector<int> inv(letters_.rbegin(), letters_.rend());
  for (int& x : inv) x = -x;
  return BraidWord(strands_, std::move(inv));
}

BraidWord BraidWord::power(int k) const {
  BraidWord base = k >= 0 ? *this : inverse();
  std::vector<int> out;
  for (int i = 0; i < std::abs(k); ++i)
    out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  return BraidWord(strands_, std::move(out));
}

std::string BraidWord::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < letters_.size(); ++i) os << (i ? " " : "") << letters_[i];
  return os.str();
}

BraidWord BraidWord::parse(const std::string& text, int strands) {
  std::vector<int> letters;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    int sign = 1;
    size_t pos = 0;
    if (tok[0] == 's' || tok[0] == 'S') {
      sign = (tok[0] == 'S') ? -1 : 1;
      pos = 1;
      if (pos == tok.size()) throw parse_error("bare generator letter in word: '" + tok + "'");
    }
    int v = 0;
    try {
      size_t used = 0;
      v = std::stoi(tok.substr(pos), &used);
      if (used != tok.size() - pos) throw parse_error("");
    } catch (...) {
      throw parse_error("cannot parse braid letter '" + tok + "'");
    }
    if (pos > 0 && v <= 0) throw parse_error("letter form takes positive indices: '" + tok + "'");
    letters.push_back(sign * v);
  }
  try {
    return BraidWord(strands, std::move(letters));
  } catch (const precondition_error& e) {
    throw parse_error(e.what());
  }
}

BraidWord compose(const BraidWord& w1, const BraidWord& w2) {
  if (w1.strands() != w2.strands())
    throw precondition_error("strand-count mismatch in composition");
  std::vector<int> letters = w1.letters();
  letters.insert(letters.end(), w2.letters().begin(), w2.letters().end());
  return BraidWord(w1.strands(), std::move(letters));
}

BraidWord conjugate(const BraidWord& t, const BraidWord& w) {
  return compose(compose(t, w), t.inverse());
}

BraidWord commutator(const BraidWord& a, const BraidWord& b) {
  return compose(compose(a, b), compose(a.inverse(), b.inverse()));
}

BraidWord artin_generator(int i, int n, int sign) {
  if (i < 1 || i > n - 1) throw precondition_error("generator index out of range");
  return BraidWord(n, {sign >= 0 ? i : -i});
}

BraidWord pure_generator(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n)) throw precondition_error("pure generator needs 1 <= i < j <= n");
  std::vector<int> conj;
  for (int k = j - 1; k > i; --k) conj.push_back(k);
  BraidWord c(n, conj);
  return compose(compose(c, BraidWord(n, {i, i})), c.inverse());
}

BraidWord full_twist(int n) {
  std::vector<int> half;
  for (int i = 1; i < n; ++i) half.push_back(i);
  BraidWord w(n);
  BraidWord h(n, half);
  for (int k = 0; k < n; ++k) w = compose(w, h);
  return w;
}

int exponent_sum(const BraidWord& w) {
  int s = 0;
  for (int x : w.letters()) s += (x > 0) ? 1 : -1;
  return s;
}

bool is_trivial_b3(const BraidWord& w) {
  if (w.strands() != 3) throw precondition_error("word problem is only decided for 3 strands");
  return exponent_sum(w) == 0 && reduced_burau_neg1(w).is_identity();
}

bool equal_b3(const BraidWord& w1, const BraidWord& w2) {
  return is_trivial_b3(compose(w1, w2.inverse()));
}

std::vector<std::pair<BraidWord, BraidWord>> pure_braid_relations(int n) {
  std::vector<std::pair<BraidWord, BraidWord>> rels;
  auto A = [n](int i, int j) { return pure_generator(i, j, n); };
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s)
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          const BraidWord lhs = compose(compose(A(r, s).inverse(), A(i, j)), A(r, s));
          if ((r < s && s < i && i < j) || (i < r && r < s && s < j)) {
            rels.emplace_back(lhs, A(i, j));
          } else if (r < s && s == i && i < j) {
            rels.emplace_back(lhs, conjugate(A(r, j), A(i, j)));
          } else if (r == i && i < s && s < j) {
            rels.emplace_back(lhs, conjugate(compose(A(i, j), A(s, j)), A(i, j)));
          } else if (r < i && i < s && s < j) {
            const BraidWord c = commutator(A(r, j), A(s, j));
            rels.emplace_back(lhs, compose(commutator(c, A(i, j)), A(i, j)));
          }
        }
  return rels;
}

bool verify_pure_braid_relations(int n) {
  if (n != 3) throw precondition_error("relation verification by word problem needs n = 3");
  for (const auto& [lhs, rhs] : pure_braid_relations(n))
    if (!equal_b3(lhs, rhs)) return false;
  return true;
}

BraidWord full_twist_pure_product(int n) {
  BraidWord w(n);
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) w = compose(w, pure_generator(i, j, n));
  return w;
}

bool verify_full_twist_product(int n) {
  if (n != 3) throw precondition_error("relation verification by word problem needs n = 3");
  return equal_b3(full_twist(n), full_twist_pure_product(n));
}

}  // namespace b3cryst
