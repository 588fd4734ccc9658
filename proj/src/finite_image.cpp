#include "b3cryst/finite_image.hpp"

#include "b3cryst/burau.hpp"
#include "b3cryst/errors.hpp"

#include <algorithm>
#include <future>
#include <set>

namespace b3cryst {

int letter_index(int letter) {
  for (int i = 0; i < 4; ++i)
    if (kLetterOf[i] == letter) return i;
  throw precondition_error("letter outside the 3-strand alphabet");
}

ModMatrix FiniteMatrixGroup::canonicalize(const ModMatrix& m) const {
  if (!center_quotient_) return m;
  ModMatrix best = m;
  for (const ModMatrix& z : center_reps_) {
    ModMatrix c = z * m;
    if (c < best) best = std::move(c);
  }
  return best;
}

void FiniteMatrixGroup::index_elements() {
  by_encoding_.clear();
  for (size_t i = 0; i < elements_.size(); ++i)
    by_encoding_[elements_[i].encoding()] = static_cast<int>(i);
}

void FiniteMatrixGroup::enumerate_from(const std::array<ModMatrix, 4>& gens, const ModMatrix& id,
                                       std::uint64_t order_guard, int threads) {
  gen_images_ = gens;
  elements_.clear();
  cayley_.clear();
  transversal_.clear();

  elements_.push_back(canonicalize(id));
  transversal_.emplace_back(3);
  std::map<std::vector<std::uint64_t>, int> seen;
  seen[elements_[0].encoding()] = 0;

  // Level-synchronized BFS. Products within a frontier may be computed in
  // parallel; dedup and numbering happen sequentially in (frontier position,
  // letter) order, which fixes the element order and transversal ties.
  std::vector<int> frontier = {0};
  while (!frontier.empty()) {
    const size_t edge_count = frontier.size() * 4;
    std::vector<ModMatrix> products(edge_count);
    auto compute = [&](size_t from, size_t to) {
      for (size_t e = from; e < to; ++e)
        products[e] = canonicalize(elements_[frontier[e / 4]] * gens[e % 4]);
    };
    if (threads > 1 && edge_count > 64) {
      std::vector<std::future<void>> jobs;
      const size_t chunk = (edge_count + threads - 1) / threads;
      for (size_t start = 0; start < edge_count; start += chunk)
        jobs.push_back(std::async(std::launch::async, compute, start,
                                  std::min(edge_count, start + chunk)));
      for (auto& j : jobs) j.get();
    } else {
      compute(0, edge_count);
    }

    std::vector<int> next;
    for (size_t e = 0; e < edge_count; ++e) {
      const int src = frontier[e / 4];
      const int li = static_cast<int>(e % 4);
      auto [it, inserted] = seen.emplace(products[e].encoding(), static_cast<int>(elements_.size()));
      if (inserted) {
        if (elements_.size() >= order_guard)
          throw guard_error("image order guard exceeded during enumeration");
        elements_.push_back(products[e]);
        transversal_.push_back(
            compose(transversal_[src], BraidWord(3, {kLetterOf[li]})));
        next.push_back(it->second);
      }
      if (static_cast<size_t>(src) >= cayley_.size()) cayley_.resize(src + 1, {-1, -1, -1, -1});
      cayley_[src][li] = it->second;
    }
    frontier = std::move(next);
  }
  cayley_.resize(elements_.size(), {-1, -1, -1, -1});
  index_elements();
}

FiniteMatrixGroup FiniteMatrixGroup::enumerate_image(std::uint64_t m, std::uint64_t order_guard,
                                                     int threads) {
  FiniteMatrixGroup g;
  g.modulus_ = m;
  g.center_quotient_ = false;
  const BraidWord s1(3, {1}), s2(3, {2});
  std::array<ModMatrix, 4> gens = {rho_m(s1, m), rho_m(s1.inverse(), m), rho_m(s2, m),
                                   rho_m(s2.inverse(), m)};
  g.enumerate_from(gens, ModMatrix::identity(m, 2), order_guard, threads);
  return g;
}

int FiniteMatrixGroup::index_of(const ModMatrix& m) const {
  const auto it = by_encoding_.find(canonicalize(m).encoding());
  return it == by_encoding_.end() ? -1 : it->second;
}

int FiniteMatrixGroup::multiply(int a, int b) const {
  const int r = index_of(elements_[a] * elements_[b]);
  if (r < 0) throw precondition_error("group is not closed; enumeration is inconsistent");
  return r;
}

int FiniteMatrixGroup::inverse(int a) const {
  int x = a;
  while (true) {
    const int nxt = multiply(x, a);
    if (nxt == 0) return x;  // x runs through the cyclic group <a>, so this terminates
    x = nxt;
  }
}

int FiniteMatrixGroup::image_of_word(const BraidWord& w) const {
  if (w.strands() != 3) throw precondition_error("finite images are taken on 3 strands");
  int cur = 0;
  for (int x : w.letters()) cur = index_of(elements_[cur] * gen_images_[letter_index(x)]);
  return cur;
}

std::vector<int> FiniteMatrixGroup::center() const {
  std::vector<int> z;
  for (size_t i = 0; i < elements_.size(); ++i) {
    bool commutes = true;
    for (int li : {0, 2}) {  // positive generators generate the group
      const int a = cayley_[i][li];
      const int b = index_of(gen_images_[li] * elements_[i]);
      if (a != b) {
        commutes = false;
        break;
      }
    }
    if (commutes) z.push_back(static_cast<int>(i));
  }
  return z;
}

FiniteMatrixGroup FiniteMatrixGroup::quotient_by_center() const {
  FiniteMatrixGroup q;
  q.modulus_ = modulus_;
  q.center_quotient_ = true;
  for (int zi : center()) q.center_reps_.push_back(elements_[zi]);
  std::array<ModMatrix, 4> gens = {gen_images_[0], gen_images_[1], gen_images_[2], gen_images_[3]};
  q.enumerate_from(gens, elements_[0], order(), 1);
  return q;
}

int FiniteMatrixGroup::element_order(int i) const {
  int o = 1;
  int cur = i;
  while (cur != 0) {
    cur = multiply(cur, i);
    ++o;
  }
  return o;
}

std::vector<std::vector<int>> FiniteMatrixGroup::conjugacy_classes() const {
  std::vector<std::vector<int>> classes;
  std::vector<bool> seen(elements_.size(), false);
  std::array<int, 4> gen_idx{};
  std::array<int, 4> inv_idx{};
  for (int li = 0; li < 4; ++li) {
    gen_idx[li] = index_of(gen_images_[li]);
    inv_idx[li] = inverse(gen_idx[li]);
  }
  for (size_t i = 0; i < elements_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit = {static_cast<int>(i)};
    seen[i] = true;
    for (size_t k = 0; k < orbit.size(); ++k)
      for (int li = 0; li < 4; ++li) {
        const int c = multiply(multiply(gen_idx[li], orbit[k]), inv_idx[li]);
        if (!seen[c]) {
          seen[c] = true;
          orbit.push_back(c);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

GroupFingerprint FiniteMatrixGroup::fingerprint() const {
  GroupFingerprint f;
  f.order = order();
  for (size_t i = 0; i < elements_.size(); ++i) ++f.order_histogram[element_order(static_cast<int>(i))];
  f.center_order = center().size();
  return f;
}

GroupFingerprint FiniteMatrixGroup::subset_fingerprint(const std::vector<int>& subgroup) const {
  GroupFingerprint f;
  f.order = subgroup.size();
  for (int i : subgroup) ++f.order_histogram[element_order(i)];
  std::uint64_t zc = 0;
  for (int a : subgroup) {
    bool commutes = true;
    for (int b : subgroup)
      if (multiply(a, b) != multiply(b, a)) {
        commutes = false;
        break;
      }
    if (commutes) ++zc;
  }
  f.center_order = zc;
  return f;
}

std::vector<int> FiniteMatrixGroup::generated_subgroup(const std::vector<int>& gens) const {
  std::set<int> closure = {0};
  std::vector<int> work = {0};
  while (!work.empty()) {
    const int cur = work.back();
    work.pop_back();
    for (int g : gens)
      for (int nxt : {multiply(cur, g), multiply(cur, inverse(g))})
        if (closure.insert(nxt).second) work.push_back(nxt);
  }
  return {closure.begin(), closure.end()};
}

}  // namespace b3cryst
