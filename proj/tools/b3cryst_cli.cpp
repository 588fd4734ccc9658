// Command line surface over the braid/congruence toolkit. Every subcommand
// prints a report document as JSON (command echo, structured result, summary,
// status); --human prints just the prose summary.

#include "b3cryst/braid.hpp"
#include "b3cryst/burau.hpp"
#include "b3cryst/catalog.hpp"
#include "b3cryst/cryst.hpp"
#include "b3cryst/errors.hpp"
#include "b3cryst/finite_image.hpp"
#include "b3cryst/formulas.hpp"
#include "b3cryst/report.hpp"
#include "b3cryst/rewriting.hpp"
#include "b3cryst/stallings.hpp"
#include "b3cryst/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using b3cryst::Json;

constexpr int kExitCheckFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitGuard = 4;
constexpr int kExitMembership = 5;
constexpr int kExitBasis = 6;

struct Output {
  Json result;
  std::string summary;
  int status = 0;
};

b3cryst::SubgroupMode parse_mode(const std::string& mode) {
  if (mode == "full" || mode == "full-kernel") return b3cryst::SubgroupMode::FullKernel;
  if (mode == "center-quotient" || mode == "center-quotient-kernel")
    return b3cryst::SubgroupMode::CenterQuotientKernel;
  if (mode == "preimage" || mode == "subgroup-preimage")
    return b3cryst::SubgroupMode::SubgroupPreimage;
  throw b3cryst::precondition_error("unknown mode '" + mode +
                                    "' (full | center-quotient | preimage)");
}

std::vector<b3cryst::BraidWord> parse_word_list(const std::string& spec) {
  std::vector<b3cryst::BraidWord> words;
  std::string chunk;
  std::istringstream is(spec);
  while (std::getline(is, chunk, ';'))
    if (!chunk.empty()) words.push_back(b3cryst::BraidWord::parse(chunk, 3));
  return words;
}

std::vector<b3cryst::BraidWord> read_basis_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw b3cryst::parse_error("cannot open basis file " + path);
  std::vector<b3cryst::BraidWord> words;
  std::string line;
  while (std::getline(in, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos)
      words.push_back(b3cryst::BraidWord::parse(line, 3));
  return words;
}

std::vector<b3cryst::FreeWord> read_free_words(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw b3cryst::parse_error("cannot open generator file " + path);
  std::vector<b3cryst::FreeWord> words;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    b3cryst::FreeWord w;
    int x;
    while (ls >> x) w.push_back(x);
    if (!w.empty()) words.push_back(w);
  }
  return words;
}

b3cryst::CrystPresentation build_for_cli(std::uint64_t m, const std::string& mode_str,
                                         const std::optional<std::string>& basis_file) {
  const auto mode = parse_mode(mode_str);
  std::optional<std::vector<b3cryst::BraidWord>> basis;
  if (basis_file) basis = read_basis_file(*basis_file);
  return b3cryst::build_extension(m, mode, basis);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations on congruence subgroups of the 3-strand braid group"};
  app.require_subcommand(1);
  bool human = false;
  std::string out_path;
  app.add_flag("--human", human, "print a prose summary instead of JSON");
  app.add_option("--out", out_path, "also write the JSON report to this file");

  // burau
  auto* cmd_burau = app.add_subcommand("burau", "Burau image of a word at t = -1");
  std::string w_word;
  int w_n = 3;
  bool w_reduced = false;
  std::uint64_t w_mod = 0;
  cmd_burau->add_option("--word", w_word, "braid word")->required();
  cmd_burau->add_option("--n", w_n, "strand count")->required();
  cmd_burau->add_flag("--reduced", w_reduced, "use the reduced representation");
  cmd_burau->add_option("--mod", w_mod, "reduce entries modulo m");

  // member
  auto* cmd_member = app.add_subcommand("member", "congruence subgroup membership");
  std::string m_word;
  std::uint64_t m_mod = 0;
  int m_n = 3;
  cmd_member->add_option("--word", m_word)->required();
  cmd_member->add_option("--mod", m_mod, "congruence level")->required();
  cmd_member->add_option("--n", m_n, "strand count (default 3)");

  // image
  auto* cmd_image = app.add_subcommand("image", "enumerate the finite image rho_m(B_3)");
  std::uint64_t i_mod = 0;
  std::uint64_t i_guard = 1000000;
  bool i_quotient = false;
  cmd_image->add_option("--mod", i_mod)->required();
  cmd_image->add_flag("--quotient-center", i_quotient, "enumerate the central quotient");
  cmd_image->add_option("--guard", i_guard, "abort beyond this many elements");

  // abelianize
  auto* cmd_ab = app.add_subcommand("abelianize", "abelianization of the preimage subgroup");
  std::uint64_t a_mod = 0;
  std::string a_mode = "full";
  std::string a_subgroup;
  cmd_ab->add_option("--mod", a_mod)->required();
  cmd_ab->add_option("--mode", a_mode, "full | center-quotient | preimage");
  cmd_ab->add_option("--subgroup", a_subgroup, "';'-separated words generating S (preimage mode)");

  // class
  auto* cmd_class = app.add_subcommand("class", "coordinates of a subgroup word in H_1");
  std::string c_word, c_mode = "full", c_basis;
  std::uint64_t c_mod = 0;
  cmd_class->add_option("--word", c_word)->required();
  cmd_class->add_option("--mod", c_mod)->required();
  cmd_class->add_option("--mode", c_mode);
  cmd_class->add_option("--basis", c_basis, "basis file, one braid word per line");

  // action
  auto* cmd_action = app.add_subcommand("action", "holonomy action of the generators");
  std::uint64_t t_mod = 0;
  std::string t_mode = "full", t_basis;
  cmd_action->add_option("--mod", t_mod)->required();
  cmd_action->add_option("--mode", t_mode);
  cmd_action->add_option("--basis", t_basis, "basis file (defaults to the SNF basis)");

  // torsion
  auto* cmd_torsion = app.add_subcommand("torsion", "torsion test of the extension");
  std::uint64_t to_mod = 0;
  std::string to_mode = "full";
  cmd_torsion->add_option("--mod", to_mod)->required();
  cmd_torsion->add_option("--mode", to_mode);

  // verdict
  auto* cmd_verdict = app.add_subcommand("verdict", "crystallographic / Bieberbach verdict");
  std::uint64_t v_mod = 0;
  std::string v_mode = "full", v_subgroup;
  cmd_verdict->add_option("--mod", v_mod)->required();
  cmd_verdict->add_option("--mode", v_mode);
  cmd_verdict->add_option("--subgroup", v_subgroup,
                          "restrict the holonomy to the subgroup generated by these words");

  // formulas
  auto* cmd_witt = app.add_subcommand("witt", "Witt rank of a lower central quotient");
  long long witt_m = 0;
  int witt_k = 0;
  cmd_witt->add_option("--M", witt_m)->required();
  cmd_witt->add_option("--k", witt_k)->required();

  auto* cmd_hirsch = app.add_subcommand("hirsch", "Hirsch length of the class k-1 quotient");
  long long h_m = 0;
  int h_k = 0;
  cmd_hirsch->add_option("--M", h_m)->required();
  cmd_hirsch->add_option("--k", h_k)->required();

  auto* cmd_rankm = app.add_subcommand("rankM", "free factor rank M(p) for an odd prime");
  std::uint64_t r_p = 0;
  cmd_rankm->add_option("--p", r_p)->required();

  // fold
  auto* cmd_fold = app.add_subcommand("fold", "Stallings folding of a subgroup of F_k");
  int f_alphabet = 0;
  std::string f_gens;
  std::vector<std::string> f_contains;
  std::string f_kernel;
  cmd_fold->add_option("--alphabet", f_alphabet)->required();
  cmd_fold->add_option("--gens", f_gens, "file of generators, one word per line")->required();
  cmd_fold->add_option("--contains", f_contains, "membership query (repeatable)");
  cmd_fold->add_option("--kernel-check", f_kernel,
                       "space-separated moduli; certify the kernel of F_k -> prod Z/m_i");

  auto* cmd_verify = app.add_subcommand("verify-paper", "run the whole verification suite");

  CLI11_PARSE(app, argc, argv);

  std::ostringstream echo;
  for (int i = 1; i < argc; ++i) echo << (i > 1 ? " " : "") << argv[i];

  Output out;
  try {
    if (cmd_burau->parsed()) {
      const auto w = b3cryst::BraidWord::parse(w_word, w_n);
      const b3cryst::IntMatrix img =
          w_reduced ? b3cryst::reduced_burau_neg1(w) : b3cryst::unreduced_burau(w);
      out.result["word"] = w.str();
      out.result["strands"] = w_n;
      out.result["representation"] = w_reduced ? "reduced" : "unreduced";
      if (w_mod) {
        out.result["modulus"] = w_mod;
        out.result["matrix"] = to_json(b3cryst::ModMatrix::reduce(img, w_mod));
      } else {
        out.result["matrix"] = to_json(img);
      }
      out.summary = "burau image computed (" + std::to_string(img.rows()) + "x" +
                    std::to_string(img.cols()) + ")";
    } else if (cmd_member->parsed()) {
      const auto w = b3cryst::BraidWord::parse(m_word, m_n);
      const bool member = b3cryst::in_congruence(w, m_mod);
      out.result["word"] = w.str();
      out.result["modulus"] = m_mod;
      out.result["member"] = member;
      out.result["extended_definition"] = b3cryst::congruence_uses_extended_definition(m_n);
      out.result["image"] = to_json(b3cryst::rho_m(w, m_mod));
      out.summary = std::string(member ? "word IS" : "word is NOT") + " in B_" +
                    std::to_string(m_n) + "[" + std::to_string(m_mod) + "]";
    } else if (cmd_image->parsed()) {
      auto g = b3cryst::FiniteMatrixGroup::enumerate_image(i_mod, i_guard);
      if (i_quotient) g = g.quotient_by_center();
      out.result = b3cryst::group_report(g);
      const auto match = b3cryst::match_catalog(g.fingerprint());
      out.result["catalog_match"] = match.value_or("unknown");
      out.result["conjugacy_classes"] = g.conjugacy_classes().size();
      out.summary = "group of order " + std::to_string(g.order()) + ", catalog: " +
                    match.value_or("unknown");
    } else if (cmd_ab->parsed()) {
      const auto ctx =
          b3cryst::abelianization(a_mod, parse_mode(a_mode), parse_word_list(a_subgroup));
      out.result = b3cryst::context_report(ctx);
      out.summary = "H_1 = Z^" + std::to_string(ctx.free_rank()) +
                    (ctx.torsion().empty() ? "" : " plus torsion");
    } else if (cmd_class->parsed()) {
      const auto ctx = b3cryst::abelianization(c_mod, parse_mode(c_mode));
      const auto w = b3cryst::BraidWord::parse(c_word, 3);
      const auto basis =
          c_basis.empty() ? b3cryst::snf_basis(ctx) : change_basis(ctx, read_basis_file(c_basis));
      const auto coords = class_in_basis(ctx, basis, w);
      Json arr = Json::array();
      for (const auto& x : coords) arr.push_back(x.str());
      out.result["word"] = w.str();
      out.result["coordinates"] = arr;
      std::ostringstream sum;
      sum << "class = (";
      for (size_t i = 0; i < coords.size(); ++i) sum << (i ? "," : "") << coords[i];
      sum << ")";
      out.summary = sum.str();
    } else if (cmd_action->parsed()) {
      const auto mode = parse_mode(t_mode);
      auto ab = std::make_shared<const b3cryst::AbelianizationContext>(
          b3cryst::build_coset_context(t_mod, mode));
      const auto basis = t_basis.empty() ? b3cryst::snf_basis(*ab)
                                         : change_basis(*ab, read_basis_file(t_basis));
      for (const char* gen : {"1", "2"}) {
        const auto w = b3cryst::BraidWord::parse(gen, 3);
        const int coset = ab->cosets().coset_of(w);
        out.result[std::string("theta_sigma") + gen] =
            to_json(b3cryst::action_matrix(coset, *ab, basis));
      }
      out.summary = "holonomy action of sigma_1, sigma_2 on Z^" +
                    std::to_string(ab->free_rank());
    } else if (cmd_torsion->parsed()) {
      const auto p = build_for_cli(to_mod, to_mode, std::nullopt);
      const auto t = b3cryst::torsion_test(p);
      out.result = b3cryst::torsion_report(p, t);
      out.summary = t.torsion_free
                        ? "extension is torsion free"
                        : ("torsion witness of order " + std::to_string(t.witness->order));
    } else if (cmd_verdict->parsed()) {
      auto p = build_for_cli(v_mod, v_mode, std::nullopt);
      if (!v_subgroup.empty()) {
        const auto& q = p.ab->cosets().quotient();
        std::vector<int> gens;
        for (const auto& w : parse_word_list(v_subgroup)) gens.push_back(q.image_of_word(w));
        p = b3cryst::sub_extension(p, q.generated_subgroup(gens));
      }
      const auto v = b3cryst::crystallographic_verdict(p);
      out.result = b3cryst::verdict_report(p, v);
      std::ostringstream sum;
      if (v.bieberbach)
        sum << "Bieberbach";
      else if (v.crystallographic)
        sum << "crystallographic";
      else
        sum << "holonomy not faithful";
      sum << ", dimension " << v.dimension << ", holonomy " << v.holonomy_name;
      out.summary = sum.str();
    } else if (cmd_witt->parsed()) {
      const auto value = b3cryst::witt_rank(b3cryst::Int(witt_m), witt_k);
      out.result = Json{{"M", witt_m}, {"k", witt_k}, {"witt_rank", value.str()}};
      out.summary = "witt_rank = " + value.str();
    } else if (cmd_hirsch->parsed()) {
      const auto value = b3cryst::hirsch_length(b3cryst::Int(h_m), h_k);
      out.result = Json{{"M", h_m}, {"k", h_k}, {"hirsch_length", value.str()}};
      out.summary = "hirsch_length = " + value.str();
    } else if (cmd_rankm->parsed()) {
      const auto value = b3cryst::rank_m(r_p);
      out.result = Json{{"p", r_p}, {"M", value.str()}};
      out.summary = "M(" + std::to_string(r_p) + ") = " + value.str();
    } else if (cmd_fold->parsed()) {
      const auto gens = read_free_words(f_gens);
      const auto graph = b3cryst::build_and_fold(f_alphabet, gens);
      out.result = b3cryst::graph_report(graph);
      Json queries = Json::object();
      for (const std::string& q : f_contains) {
        std::istringstream ls(q);
        b3cryst::FreeWord w;
        int x;
        while (ls >> x) w.push_back(x);
        queries[q] = graph.contains(w);
      }
      if (!f_contains.empty()) out.result["contains"] = queries;
      if (!f_kernel.empty()) {
        std::istringstream ls(f_kernel);
        std::vector<std::uint64_t> moduli;
        std::uint64_t m;
        while (ls >> m) moduli.push_back(m);
        const auto kc = b3cryst::kernel_check(f_alphabet, gens, moduli);
        out.result["kernel_check"] =
            Json{{"generators_in_kernel", kc.generators_in_kernel},
                 {"target_order", kc.target_order},
                 {"certified", kc.certified}};
      }
      out.summary = "rank " + std::to_string(graph.rank()) + ", index " +
                    (graph.index() ? std::to_string(*graph.index()) : std::string("infinite"));
    } else if (cmd_verify->parsed()) {
      const auto results = b3cryst::run_paper_verification();
      Json arr = Json::array();
      for (const auto& r : results)
        arr.push_back(Json{{"criterion", r.id},
                           {"name", r.name},
                           {"passed", r.passed},
                           {"seconds", r.seconds},
                           {"detail", r.detail}});
      const bool ok = b3cryst::all_passed(results);
      out.result = Json{{"criteria", arr}, {"all_passed", ok}};
      out.summary = b3cryst::format_table(results);
      out.status = ok ? 0 : kExitCheckFailed;
    }
  } catch (const b3cryst::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const b3cryst::guard_error& e) {
    std::cerr << "guard violation: " << e.what() << "\n";
    return kExitGuard;
  } catch (const b3cryst::membership_error& e) {
    std::cerr << "membership error: " << e.what() << "\n";
    return kExitMembership;
  } catch (const b3cryst::basis_error& e) {
    std::cerr << "basis error: " << e.what() << "\n";
    return kExitBasis;
  } catch (const b3cryst::precondition_error& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  }

  Json doc{{"command", echo.str()},
           {"result", out.result},
           {"summary", out.summary},
           {"status", out.status}};
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    f << doc.dump(2) << "\n";
  }
  if (human)
    std::cout << out.summary << "\n";
  else
    std::cout << doc.dump(2) << "\n";
  return out.status;
}
