#include "b3cryst/burau.hpp"

#include "b3cryst/errors.hpp"
#include "b3cryst/snf.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <vector>

namespace b3cryst {

IntMatrix unreduced_burau_gen(int i, int n) {
  if (i < 1 || i > n - 1) throw precondition_error("generator index out of range");
  IntMatrix m = IntMatrix::identity(n);
  m.at(i - 1, i - 1) = 2;
  m.at(i - 1, i) = -1;
  m.at(i, i - 1) = 1;
  m.at(i, i) = 0;
  return m;
}

IntMatrix reduced_burau_gen(int i, int n) {
  if (i < 1 || i > n - 1) throw precondition_error("generator index out of range");
  const int d = n - 1;
  IntMatrix m = IntMatrix::identity(d);
  if (n == 2) return m;
  if (i == 1) {
    m.at(1, 0) = 1;
  } else if (i == n - 1) {
    m.at(d - 2, d - 1) = -1;
  } else {
    const int r = i - 2;  // 0-based top row of the 3x3 block
    m.at(r, r + 1) = -1;
    m.at(r + 2, r + 1) = 1;
  }
  return m;
}

namespace {

IntMatrix evaluate(const BraidWord& w, IntMatrix (*gen)(int, int), int dim) {
  const int n = w.strands();
  // Per-generator images and exact inverses, computed once per word.
  std::vector<IntMatrix> pos(n - 1), neg(n - 1);
  std::vector<bool> have(n - 1, false);
  IntMatrix acc = IntMatrix::identity(dim);
  for (int x : w.letters()) {
    const int i = std::abs(x) - 1;
    if (!have[i]) {
      pos[i] = gen(i + 1, n);
      neg[i] = pos[i].inverse_unimodular();
      have[i] = true;
    }
    acc = acc * (x > 0 ? pos[i] : neg[i]);
  }
  return acc;
}

}  // namespace

IntMatrix unreduced_burau(const BraidWord& w) {
  return evaluate(w, &unreduced_burau_gen, w.strands());
}

IntMatrix reduced_burau_neg1(const BraidWord& w) {
  return evaluate(w, &reduced_burau_gen, w.strands() - 1);
}

bool congruence_uses_extended_definition(int strands) { return strands % 2 == 0; }

ModMatrix rho_m(const BraidWord& w, std::uint64_t m) {
  if (m < 2) throw precondition_error("congruence level must be >= 2");
  const IntMatrix img =
      congruence_uses_extended_definition(w.strands()) ? unreduced_burau(w) : reduced_burau_neg1(w);
  return ModMatrix::reduce(img, m);
}

bool in_congruence(const BraidWord& w, std::uint64_t m) { return rho_m(w, m).is_identity(); }

InvariantFormReport discover_invariant_form(int n) {
  if (n < 3 || n % 2 == 0)
    throw precondition_error("invariant form discovery needs odd n >= 3");
  const int d = n - 1;
  // Unknowns: strictly upper entries of J (skew closes the rest).
  std::vector<std::pair<int, int>> unknowns;
  for (int k = 0; k < d; ++k)
    for (int l = k + 1; l < d; ++l) unknowns.emplace_back(k, l);
  const int nu = static_cast<int>(unknowns.size());

  // One block of d^2 equations per generator: (B^T J B - J)_{ab} = 0.
  IntMatrix sys((n - 1) * d * d, nu);
  int row = 0;
  for (int g = 1; g < n; ++g) {
    const IntMatrix b = reduced_burau_gen(g, n);
    for (int a = 0; a < d; ++a)
      for (int bb = 0; bb < d; ++bb) {
        for (int u = 0; u < nu; ++u) {
          const auto [k, l] = unknowns[u];
          Int coef = b.at(k, a) * b.at(l, bb) - b.at(l, a) * b.at(k, bb);
          if (k == a && l == bb) coef -= 1;
          if (k == bb && l == a) coef += 1;
          sys.at(row, u) = coef;
        }
        ++row;
      }
  }

  const IntMatrix kernel = integer_kernel(sys);
  InvariantFormReport report;
  report.solution_dim = kernel.cols();
  if (report.solution_dim == 0)
    throw precondition_error("no invariant skew form exists; symplectic claim falsified");

  std::vector<Int> v(nu);
  for (int i = 0; i < nu; ++i) v[i] = kernel.at(i, 0);
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  if (g > 1)
    for (Int& x : v) x /= g;
  // Sign convention: first nonzero entry positive.
  for (const Int& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (Int& y : v) y = -y;
    break;
  }
  report.form = IntMatrix(d, d);
  for (int u = 0; u < nu; ++u) {
    const auto [k, l] = unknowns[u];
    report.form.at(k, l) = v[u];
    report.form.at(l, k) = -v[u];
  }
  report.unimodular = abs(report.form.det()) == 1;
  return report;
}

FixedVectorReport common_fixed_vectors(int n) {
  if (n < 2) throw precondition_error("need n >= 2");
  IntMatrix sys((n - 1) * n, n);
  int row = 0;
  for (int g = 1; g < n; ++g) {
    const IntMatrix b = unreduced_burau_gen(g, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) sys.at(row, j) = b.at(i, j) - (i == j ? 1 : 0);
      ++row;
    }
  }
  return FixedVectorReport{integer_kernel(sys)};
}

}  // namespace b3cryst
