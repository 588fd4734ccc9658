#include "b3cryst/report.hpp"

namespace b3cryst {

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const ModMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(std::to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const GroupFingerprint& f) {
  Json histogram = Json::object();
  for (const auto& [order, count] : f.order_histogram)
    histogram[std::to_string(order)] = count;
  return Json{{"order", f.order},
              {"order_histogram", std::move(histogram)},
              {"center_order", f.center_order}};
}

Json group_report(const FiniteMatrixGroup& g) {
  const GroupFingerprint f = g.fingerprint();
  Json transversal = Json::array();
  for (std::uint64_t i = 0; i < g.order(); ++i)
    transversal.push_back(g.transversal_word(static_cast<int>(i)).str());
  return Json{{"modulus", g.modulus()},
              {"center_quotient", g.is_center_quotient()},
              {"order", g.order()},
              {"fingerprint", to_json(f)},
              {"transversal", std::move(transversal)}};
}

Json context_report(const AbelianizationContext& ctx) {
  Json factors = Json::array();
  for (const Int& t : ctx.torsion()) factors.push_back(t.str());
  return Json{{"index", ctx.cosets().num_cosets()},
              {"schreier_generators", ctx.cosets().num_schreier_generators()},
              {"invariant_factors", std::move(factors)},
              {"free_rank", ctx.free_rank()}};
}

namespace {

Json witness_json(const CrystPresentation& p, const TorsionWitness& w) {
  Json translate = Json::array();
  for (const Int& x : w.translate) translate.push_back(x.str());
  const CosetContext& cc = p.ab->cosets();
  return Json{{"word", w.word.str()},
              {"order", w.order},
              {"translate", std::move(translate)},
              {"above", to_json(cc.quotient().element(cc.coset_element(w.coset)))}};
}

}  // namespace

Json torsion_report(const CrystPresentation& p, const TorsionReport& t) {
  Json out{{"torsion_free", t.torsion_free}};
  if (t.witness) out["witness"] = witness_json(p, *t.witness);
  return out;
}

Json verdict_report(const CrystPresentation& p, const Verdict& v) {
  const CosetContext& cc = p.ab->cosets();
  Json kernel = Json::array();
  for (int c : v.kernel) kernel.push_back(to_json(cc.quotient().element(cc.coset_element(c))));
  Json out{{"holonomy_faithful", v.holonomy_faithful},
           {"torsion_free", v.torsion_free},
           {"crystallographic", v.crystallographic},
           {"bieberbach", v.bieberbach},
           {"dimension", v.dimension},
           {"holonomy_name", v.holonomy_name},
           {"holonomy_fingerprint", to_json(v.holonomy_fingerprint)},
           {"action_kernel", std::move(kernel)}};
  if (v.witness) out["witness"] = witness_json(p, *v.witness);
  if (!v.holonomy_faithful)
    out["hint"] = "holonomy is not faithful; try the center-quotient mode";
  return out;
}

Json graph_report(const SubgroupGraph& g) {
  Json edges = Json::array();
  for (const auto& [src, lab, dst] : g.edges()) edges.push_back(Json::array({src, lab, dst}));
  Json out{{"alphabet", g.alphabet()},
           {"vertices", g.num_vertices()},
           {"rank", g.rank()},
           {"edges", std::move(edges)}};
  if (const auto idx = g.index())
    out["index"] = *idx;
  else
    out["index"] = "infinite";
  return out;
}

}  // namespace b3cryst
