#include "b3cryst/cryst.hpp"

#include "b3cryst/errors.hpp"
#include "b3cryst/snf.hpp"

#include <algorithm>
#include <numeric>

namespace b3cryst {

IntMatrix action_matrix(int coset, const AbelianizationContext& ctx, const BasisSpec& basis) {
  const int r = ctx.free_rank();
  IntMatrix theta(r, r);
  const BraidWord& t = ctx.cosets().transversal(coset);
  for (int j = 0; j < r; ++j) {
    const BraidWord conj = conjugate(t, basis.words[j]);
    if (!ctx.cosets().in_subgroup(conj))
      throw membership_error("conjugate left the subgroup; the subgroup is not normal");
    const auto cls = class_in_basis(ctx, basis, conj);
    for (int i = 0; i < r; ++i) theta.at(i, j) = cls[i];
  }
  return theta;
}

int CrystPresentation::position_of(int coset) const {
  const auto it = std::find(holonomy.begin(), holonomy.end(), coset);
  return it == holonomy.end() ? -1 : static_cast<int>(it - holonomy.begin());
}

CrystPresentation build_extension(std::shared_ptr<const AbelianizationContext> ab,
                                  const std::optional<std::vector<BraidWord>>& basis_words) {
  const CosetContext& cc = ab->cosets();
  if (cc.mode() == SubgroupMode::SubgroupPreimage)
    throw precondition_error("extensions are built over kernel modes; restrict with sub_extension");
  if (!ab->torsion().empty())
    throw precondition_error("lattice has torsion; the extension model needs a free lattice");

  CrystPresentation p;
  p.ab = ab;
  p.basis = basis_words ? change_basis(*ab, *basis_words) : snf_basis(*ab);
  p.rank = ab->free_rank();
  const int n = cc.num_cosets();
  for (int c = 0; c < n; ++c) {
    p.holonomy.push_back(c);
    p.theta.push_back(action_matrix(c, *ab, p.basis));
    p.orders.push_back(cc.quotient().element_order(cc.coset_element(c)));
    p.lifts.push_back(cc.transversal(c));
  }
  return p;
}

CrystPresentation build_extension(std::uint64_t m, SubgroupMode mode,
                                  const std::optional<std::vector<BraidWord>>& basis_words) {
  auto ab = std::make_shared<const AbelianizationContext>(build_coset_context(m, mode));
  return build_extension(std::move(ab), basis_words);
}

CrystPresentation sub_extension(const CrystPresentation& p, const std::vector<int>& subgroup) {
  const CosetContext& cc = p.ab->cosets();
  const FiniteMatrixGroup& q = cc.quotient();
  // Closure check on representative elements (kernel modes: coset = element).
  std::vector<int> elems;
  for (int c : subgroup) elems.push_back(cc.coset_element(c));
  std::sort(elems.begin(), elems.end());
  for (int a : elems)
    for (int b : elems)
      if (!std::binary_search(elems.begin(), elems.end(), q.multiply(a, b)))
        throw precondition_error("subset is not closed under multiplication");
  if (!std::binary_search(elems.begin(), elems.end(), 0))
    throw precondition_error("subset does not contain the identity");

  CrystPresentation s;
  s.ab = p.ab;
  s.basis = p.basis;
  s.rank = p.rank;
  std::vector<int> ordered = subgroup;
  std::sort(ordered.begin(), ordered.end());
  for (int c : ordered) {
    const int pos = p.position_of(c);
    if (pos < 0) throw precondition_error("subset contains unknown holonomy elements");
    s.holonomy.push_back(c);
    s.theta.push_back(p.theta[pos]);
    s.orders.push_back(p.orders[pos]);
    s.lifts.push_back(p.lifts[pos]);
  }
  return s;
}

namespace {

BraidWord lattice_translate_word(const CrystPresentation& p, const std::vector<Int>& x) {
  BraidWord w(3);
  for (size_t k = 0; k < x.size(); ++k) {
    if (x[k] == 0) continue;
    w = compose(w, p.basis.words[k].power(static_cast<int>(x[k].convert_to<long long>())));
  }
  return w;
}

int order_of_image(const CrystPresentation& p, const BraidWord& w) {
  const CosetContext& cc = p.ab->cosets();
  const FiniteMatrixGroup& q = cc.quotient();
  const int e = q.image_of_word(w);
  return q.element_order(e);
}

}  // namespace

TorsionReport torsion_test(const CrystPresentation& p) {
  const int r = p.rank;
  // Deterministic aggregation: candidates sorted by canonical element encoding.
  std::vector<int> positions(p.holonomy.size());
  std::iota(positions.begin(), positions.end(), 0);
  const CosetContext& cc = p.ab->cosets();
  std::sort(positions.begin(), positions.end(), [&](int a, int b) {
    return cc.quotient().element(cc.coset_element(p.holonomy[a])) <
           cc.quotient().element(cc.coset_element(p.holonomy[b]));
  });

  for (int pos : positions) {
    if (p.holonomy[pos] == 0) continue;
    const int o = p.orders[pos];
    const IntMatrix& th = p.theta[pos];

    IntMatrix norm(r, r);
    IntMatrix pw = IntMatrix::identity(r);
    for (int i = 0; i < o; ++i) {
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) norm.at(a, b) += pw.at(a, b);
      pw = pw * th;
    }

    const std::vector<Int> cocycle = class_in_basis(*p.ab, p.basis, p.lifts[pos].power(o));
    std::vector<Int> rhs(r);
    for (int i = 0; i < r; ++i) rhs[i] = -cocycle[i];

    const auto x = solve_integer(norm, rhs);
    if (!x) continue;

    TorsionWitness w;
    w.coset = p.holonomy[pos];
    w.order = o;
    w.translate = *x;
    w.word = compose(lattice_translate_word(p, *x), p.lifts[pos]);
    // Certify: the image has order o and the o-th power dies in the lattice.
    if (order_of_image(p, w.word) != o)
      throw precondition_error("torsion witness failed image-order certification");
    const auto power_class = p.ab->class_of(w.word.power(o));
    for (const Int& v : power_class)
      if (v != 0) throw precondition_error("torsion witness failed power-class certification");
    return TorsionReport{false, std::move(w)};
  }
  return TorsionReport{true, std::nullopt};
}

std::vector<int> holonomy_kernel(const CrystPresentation& p) {
  std::vector<int> kernel;
  for (size_t i = 0; i < p.holonomy.size(); ++i)
    if (p.theta[i].is_identity()) kernel.push_back(p.holonomy[i]);
  std::sort(kernel.begin(), kernel.end());
  return kernel;
}

Verdict crystallographic_verdict(const CrystPresentation& p) {
  Verdict v;
  v.kernel = holonomy_kernel(p);
  v.holonomy_faithful = v.kernel == std::vector<int>{0};
  const TorsionReport t = torsion_test(p);
  v.torsion_free = t.torsion_free;
  v.witness = t.witness;
  v.crystallographic = v.holonomy_faithful;
  v.bieberbach = v.crystallographic && v.torsion_free;
  v.dimension = p.rank;

  const CosetContext& cc = p.ab->cosets();
  std::vector<int> elems;
  for (int c : p.holonomy) elems.push_back(cc.coset_element(c));
  v.holonomy_fingerprint = cc.quotient().subset_fingerprint(elems);
  v.holonomy_name = match_catalog(v.holonomy_fingerprint).value_or("unknown");
  return v;
}

}  // namespace b3cryst
