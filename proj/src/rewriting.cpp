#include "b3cryst/rewriting.hpp"

#include "b3cryst/errors.hpp"

#include <algorithm>
#include <set>

namespace b3cryst {

const BraidWord& braid_relator_b3() {
  static const BraidWord r(3, {1, 2, 1, -2, -1, -2});
  return r;
}

CosetContext::CosetContext(FiniteMatrixGroup quotient, SubgroupMode mode,
                           std::vector<int> subgroup_elems, std::array<int, 4> letter_order)
    : quotient_(std::move(quotient)), mode_(mode) {
  // Resolve S: trivial for the kernel modes, closed subgroup otherwise.
  if (mode_ == SubgroupMode::SubgroupPreimage) {
    if (subgroup_elems.empty()) subgroup_elems = {0};
    subgroup_ = quotient_.generated_subgroup(subgroup_elems);
    for (int s : subgroup_elems)
      if (!std::binary_search(subgroup_.begin(), subgroup_.end(), s))
        throw precondition_error("subgroup closure failed");
  } else {
    if (!subgroup_elems.empty() && subgroup_elems != std::vector<int>{0})
      throw precondition_error("kernel modes take no subgroup");
    subgroup_ = {0};
  }

  // Right cosets S\Q. Canonical representative: the element of S*q with the
  // least encoding. Coset ids are assigned in BFS discovery order.
  auto coset_rep = [this](int q) {
    int best = -1;
    for (int s : subgroup_) {
      const int e = quotient_.multiply(s, q);
      if (best < 0 || quotient_.element(e) < quotient_.element(best)) best = e;
    }
    return best;
  };

  std::vector<int> rep_to_coset(quotient_.order(), -1);
  const int base_rep = coset_rep(0);
  rep_to_coset[base_rep] = 0;
  coset_elem_ = {base_rep};
  transversal_ = {BraidWord(3)};
  table_.push_back({-1, -1, -1, -1});

  std::array<int, 4> gen_elem{};
  for (int li = 0; li < 4; ++li) gen_elem[li] = quotient_.index_of(quotient_.generator_image(li));

  for (int c = 0; c < static_cast<int>(coset_elem_.size()); ++c) {
    for (int li : letter_order) {
      const int rep = coset_rep(quotient_.multiply(coset_elem_[c], gen_elem[li]));
      if (rep_to_coset[rep] < 0) {
        rep_to_coset[rep] = static_cast<int>(coset_elem_.size());
        coset_elem_.push_back(rep);
        transversal_.push_back(compose(transversal_[c], BraidWord(3, {kLetterOf[li]})));
        table_.push_back({-1, -1, -1, -1});
      }
      table_[c][li] = rep_to_coset[rep];
    }
  }

  const int n = num_cosets();
  if (static_cast<std::uint64_t>(n) * subgroup_.size() != quotient_.order())
    throw precondition_error("coset count does not match the subgroup index");

  // Schreier generators: one per (coset, positive generator) pair that is not
  // a spanning-tree edge. A tree edge labeled by an inverse letter consumes
  // the pair of its forward orientation.
  std::set<std::pair<int, int>> tree_pairs;
  for (int c = 1; c < n; ++c) {
    const BraidWord& t = transversal_[c];
    const int last = t.letters().back();
    const BraidWord parent_word(3, std::vector<int>(t.letters().begin(), t.letters().end() - 1));
    const int parent = coset_of(parent_word);
    if (last > 0)
      tree_pairs.insert({parent, last});
    else
      tree_pairs.insert({c, -last});
  }
  sgen_of_.assign(n, {-1, -1});
  for (int c = 0; c < n; ++c)
    for (int g : {1, 2}) {
      if (tree_pairs.count({c, g})) continue;
      sgen_of_[c][g - 1] = static_cast<int>(sgen_words_.size());
      const int target = table_[c][letter_index(g)];
      sgen_words_.push_back(
          compose(compose(transversal_[c], BraidWord(3, {g})), transversal_[target].inverse()));
    }
}

int CosetContext::coset_of(const BraidWord& w) const {
  if (w.strands() != 3) throw precondition_error("coset contexts live over B_3");
  int c = 0;
  for (int x : w.letters()) c = table_[c][letter_index(x)];
  return c;
}

std::vector<int> CosetContext::rewrite(const BraidWord& w) const {
  std::vector<int> out;
  int c = 0;
  for (int x : w.letters()) {
    if (x > 0) {
      const int id = sgen_of_[c][x - 1];
      if (id >= 0) out.push_back(id + 1);
      c = table_[c][letter_index(x)];
    } else {
      const int prev = table_[c][letter_index(x)];  // prev * sigma_{-x} = c
      const int id = sgen_of_[prev][-x - 1];
      if (id >= 0) out.push_back(-(id + 1));
      c = prev;
    }
  }
  if (c != 0) throw membership_error("word is not in the subgroup");
  return out;
}

std::vector<long long> CosetContext::rewrite_abelianized(const BraidWord& w) const {
  std::vector<long long> v(num_schreier_generators(), 0);
  for (int s : rewrite(w)) v[std::abs(s) - 1] += (s > 0) ? 1 : -1;
  return v;
}

AbelianizationContext::AbelianizationContext(CosetContext cosets) : cosets_(std::move(cosets)) {
  const int n = cosets_.num_cosets();
  const int g = cosets_.num_schreier_generators();

  // One relator conjugate per coset; together they present the subgroup.
  relations_ = IntMatrix(n, g);
  for (int c = 0; c < n; ++c) {
    const BraidWord conj = conjugate(cosets_.transversal(c), braid_relator_b3());
    const auto row = cosets_.rewrite_abelianized(conj);
    for (int j = 0; j < g; ++j) relations_.at(c, j) = row[j];
  }

  smith_ = smith_normal_form(relations_);
  torsion_ = smith_.torsion_factors();
  free_rank_ = g - smith_.rank;

  // Z^g / rowspace ~ (torsion) + Z^r with free coordinates read off from the
  // tail columns of V transposed.
  projection_ = IntMatrix(free_rank_, g);
  for (int i = 0; i < free_rank_; ++i)
    for (int j = 0; j < g; ++j) projection_.at(i, j) = smith_.v.at(j, smith_.rank + i);

  // Words realizing the standard basis of the free part: solve P x = e_i and
  // assemble the corresponding product of Schreier generator words.
  for (int i = 0; i < free_rank_; ++i) {
    std::vector<Int> e(free_rank_, 0);
    e[i] = 1;
    const auto x = solve_integer(projection_, e);
    if (!x) throw precondition_error("projection is not surjective; Smith data corrupt");
    BraidWord word(3);
    for (int k = 0; k < g; ++k) {
      if ((*x)[k] == 0) continue;
      const long long exp = (*x)[k].convert_to<long long>();
      word = compose(word, cosets_.schreier_word(k).power(static_cast<int>(exp)));
    }
    snf_basis_words_.push_back(std::move(word));
  }
}

std::vector<Int> AbelianizationContext::class_of(const BraidWord& w) const {
  const auto v = cosets_.rewrite_abelianized(w);
  std::vector<Int> out(free_rank_, 0);
  for (int i = 0; i < free_rank_; ++i) {
    Int acc = 0;
    for (size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) acc += projection_.at(i, static_cast<int>(j)) * v[j];
    out[i] = acc;
  }
  return out;
}

BasisSpec change_basis(const AbelianizationContext& ctx, const std::vector<BraidWord>& words) {
  const int r = ctx.free_rank();
  if (static_cast<int>(words.size()) != r)
    throw basis_error("need exactly " + std::to_string(r) + " basis words");
  BasisSpec spec;
  spec.words = words;
  spec.to_snf = IntMatrix(r, r);
  for (int j = 0; j < r; ++j) {
    const auto cls = ctx.class_of(words[j]);
    for (int i = 0; i < r; ++i) spec.to_snf.at(i, j) = cls[i];
  }
  const Int d = spec.to_snf.det();
  if (d != 1 && d != -1)
    throw basis_error("words do not form a basis: determinant " + d.str());
  spec.from_snf = spec.to_snf.inverse_unimodular();
  return spec;
}

BasisSpec snf_basis(const AbelianizationContext& ctx) {
  BasisSpec spec;
  spec.words = ctx.snf_basis_words();
  spec.to_snf = IntMatrix::identity(ctx.free_rank());
  spec.from_snf = spec.to_snf;
  return spec;
}

std::vector<Int> class_in_basis(const AbelianizationContext& ctx, const BasisSpec& basis,
                                const BraidWord& w) {
  const auto snf_coords = ctx.class_of(w);
  const int r = ctx.free_rank();
  std::vector<Int> out(r, 0);
  for (int i = 0; i < r; ++i) {
    Int acc = 0;
    for (int j = 0; j < r; ++j) acc += basis.from_snf.at(i, j) * snf_coords[j];
    out[i] = acc;
  }
  return out;
}

CosetContext build_coset_context(std::uint64_t m, SubgroupMode mode,
                                 const std::vector<BraidWord>& subgroup_words,
                                 std::array<int, 4> letter_order) {
  FiniteMatrixGroup q = FiniteMatrixGroup::enumerate_image(m);
  if (mode == SubgroupMode::CenterQuotientKernel) q = q.quotient_by_center();
  std::vector<int> elems;
  if (mode == SubgroupMode::SubgroupPreimage)
    for (const BraidWord& w : subgroup_words) elems.push_back(q.image_of_word(w));
  return CosetContext(std::move(q), mode, std::move(elems), letter_order);
}

AbelianizationContext abelianization(std::uint64_t m, SubgroupMode mode,
                                     const std::vector<BraidWord>& subgroup_words) {
  return AbelianizationContext(build_coset_context(m, mode, subgroup_words));
}

}  // namespace b3cryst
