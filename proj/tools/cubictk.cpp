// command line front end. every subcommand reads exact data (JSON files or
// integer flags), runs one pipeline from the library, and prints a JSON
// report on stdout. exit code 0 = computed, 1 = a mathematical check failed
// or a budget ran out, 2 = bad input.

#include "CLI11.hpp"

#include "cubictk/acceptance.hpp"
#include "cubictk/cubic.hpp"
#include "cubictk/json_io.hpp"
#include "cubictk/modular.hpp"
#include "cubictk/stickelberger.hpp"

#include <chrono>
#include <iostream>

using namespace ctk;

namespace {

Json shape_json(const std::vector<Int>& shape) {
  Json a = Json::array();
  for (const auto& d : shape) a.push_back(int_to_json(d));
  return a;
}

GChar chi_of(const AbGroup& g, const std::vector<long>& e) {
  if (e.size() != g.ngens())
    throw input_error("chi-exponent needs one value per group generator");
  std::vector<long> red(e.size());
  for (size_t i = 0; i < e.size(); i++) red[i] = lmod(e[i], g.factors()[i]);
  return GChar{g.factors(), red};
}

std::vector<Rat> rats_from_file(const std::string& path) {
  Json j = load_json_file(path);
  const Json* arr = &j;
  if (j.is_object() && j.contains("coeffs")) arr = &j["coeffs"];
  if (!arr->is_array()) throw input_error("expected a list of rationals in " + path);
  std::vector<Rat> out;
  for (const auto& x : *arr) {
    if (x.is_number_integer()) out.emplace_back(x.get<long>());
    else if (x.is_string()) out.push_back(parse_rat(x.get<std::string>()));
    else throw input_error("expected integers or \"num/den\" strings in " + path);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tools for cubic structures, tame covers, Stickelberger actions "
               "and modular lattice classes"};
  app.require_subcommand(1);

  std::string group_path, elem_path, table_path, branch_path, sha_path, mw_path, apply_to;
  long n = 2, u = 1, r = 0, p = 0, k = 3, kk = 12, modp = 0, q = 0, fb_bound = 0, budget = 60;
  std::vector<long> chi_exp;
  bool vandiver = false, inv2 = false, want_class = false, squared = false;
  int criterion = 0;

  auto* c_cubic = app.add_subcommand("check-cubic",
      "verify the alternating pullback of a group ring unit is n-cubic");
  c_cubic->add_option("--group", group_path, "group JSON file")->required();
  c_cubic->add_option("--n", n, "power of the group the table lives on")->check(CLI::Range(2L, 6L));
  c_cubic->add_option("--elem", elem_path, "group ring element, coefficients by element index");
  c_cubic->add_option("--table", table_path, "full character table on G^n to check as-is");

  auto* c_kb = app.add_subcommand("kernel-bound", "annihilator bound for the theta kernel");
  c_kb->add_option("--group", group_path, "group JSON file")->required();
  c_kb->add_option("--n", n, "cubic degree")->required()->check(CLI::Range(2L, 64L));
  c_kb->add_flag("--assume-vandiver", vandiver, "take e(odd k) = 1");

  auto* c_cg = app.add_subcommand("classgroup", "certified class group of Q(zeta_r)");
  c_cg->add_option("--r", r, "prime level")->required();
  c_cg->add_flag("--invert-two", inv2, "also report the quotient with 2 inverted");
  c_cg->add_option("--fb-bound", fb_bound, "override the factor base norm bound");

  auto* c_pchi = app.add_subcommand("pchi", "the prime above p cut out by a character of order r");
  c_pchi->add_option("--r", r, "character order")->required();
  c_pchi->add_option("--p", p, "rational prime, p = 1 mod r")->required();
  c_pchi->add_option("--chi-exponent", u, "u with chi(g) = zeta_r^u")->required();
  c_pchi->add_flag("--class", want_class, "also locate its ideal class");

  auto* c_th2 = app.add_subcommand("theta2", "modified quadratic Stickelberger element");
  c_th2->add_option("--r", r, "level")->required();
  c_th2->add_option("--p", p, "modular prime, p = 1 mod 24")->required();
  c_th2->add_option("--k", k, "r-adic precision for the coefficient table")->check(CLI::Range(1L, 12L));
  c_th2->add_option("--apply-to", apply_to, "\"pchi\" applies the element to [P_chi]");
  c_th2->add_option("--chi-exponent", u, "character exponent for --apply-to");

  auto* c_herb = app.add_subcommand("herbrand", "irregular Bernoulli indices at r");
  c_herb->add_option("--r", r, "prime")->required();

  auto* c_hm = app.add_subcommand("hminus", "odd part of the class number of Q(zeta_r)");
  c_hm->add_option("--r", r, "prime")->required();

  auto* c_gauss = app.add_subcommand("gauss", "exact Gauss sum certificate");
  c_gauss->add_option("--p", p, "prime, p = 1 mod r")->required();
  c_gauss->add_option("--r", r, "character order")->required();
  c_gauss->add_option("--degree-budget", budget, "max (p-1)(r-1) accepted");

  auto* c_bern = app.add_subcommand("bernoulli", "exact Bernoulli number");
  c_bern->add_option("--k", kk, "index")->required()->check(CLI::Range(0L, 4000L));
  c_bern->add_option("--mod", modp, "reduce mod this odd prime");

  auto* c_tpi = app.add_subcommand("tpi", "localized character function of surface branch data");
  c_tpi->add_option("--branch", branch_path, "branch data JSON file")->required();
  c_tpi->add_option("--chi-exponent", chi_exp, "character exponents")->required();

  auto* c_idele = app.add_subcommand("mainthm-idele",
      "the idele whose class the theta pullback of the cover realizes");
  c_idele->add_option("--branch", branch_path, "branch data JSON file")->required();
  c_idele->add_flag("--squared", squared, "use the squared form (no parity gate)");

  auto* c_tel = app.add_subcommand("telescope", "alternating power sum residual");
  c_tel->add_option("--n", n, "number of variables")->required()->check(CLI::Range(1L, 14L));
  c_tel->add_option("--q", q, "power")->required()->check(CLI::Range(0L, 16L));

  auto* c_mod = app.add_subcommand("modular-class",
      "Steinitz class of the weight two eigenlattice at (p, r)");
  c_mod->add_option("--p", p, "modular prime")->required();
  c_mod->add_option("--r", r, "eigencharacter order")->required();
  c_mod->add_option("--chi-exponent", u, "u with chi(g) = zeta_r^u");

  auto* c_bsd = app.add_subcommand("bsd-check",
      "class relation between theta, sha and mw in Cl(Z[zeta_r, 1/2])");
  c_bsd->add_option("--p", p, "modular prime")->required();
  c_bsd->add_option("--r", r, "level")->required();
  c_bsd->add_option("--sha", sha_path, "sha class, quotient coordinates JSON")->required();
  c_bsd->add_option("--mw", mw_path, "mw class, quotient coordinates JSON")->required();

  auto* c_acc = app.add_subcommand("acceptance", "run the release criteria");
  c_acc->add_option("--criterion", criterion, "run a single criterion (1-12)")
      ->check(CLI::Range(1, 12));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_acc->parsed()) return run_acceptance(criterion) == 0 ? 0 : 1;

    auto t0 = std::chrono::steady_clock::now();
    Json rep;

    if (c_cubic->parsed()) {
      AbGroup g = group_from_json(load_json_file(group_path));
      if (elem_path.empty() == table_path.empty())
        throw input_error("check-cubic needs exactly one of --elem and --table");
      CharTable t = elem_path.empty()
          ? table_from_json(g, n, load_json_file(table_path))
          : theta_table(CharTable::from_group_ring(g, g.exponent(), rats_from_file(elem_path)), n);
      CubicVerdict v = check_cubic(t, g, n);
      rep = Json{{"group", group_to_json(g)}, {"n", n},      {"rigid", v.rigid},
                 {"symmetric", v.symmetric},  {"cocycle", v.cocycle},
                 {"ok", v.ok()},              {"witness", v.witness}};
    } else if (c_kb->parsed()) {
      AbGroup g = group_from_json(load_json_file(group_path));
      rep = Json{{"group", group_to_json(g)},
                 {"n", n},
                 {"assume_vandiver", vandiver},
                 {"bound", int_to_json(kernel_annihilator_bound(n, g, vandiver))}};
    } else if (c_cg->parsed()) {
      ClassGroup cg = compute_class_group(r, fb_bound);
      rep = Json{{"r", r},
                 {"h", int_to_json(cg.h)},
                 {"h_minus", int_to_json(cg.hminus)},
                 {"hplus_assumed", cg.hplus_assumed},
                 {"shape", shape_json(cg.shape())},
                 {"factor_base_size", cg.fb.size()}};
      if (inv2) {
        ClassQuotient quo = invert_two(cg);
        rep["inverted_two"] =
            Json{{"shape", shape_json(quo.shape())}, {"order", int_to_json(quo.order())}};
      }
    } else if (c_pchi->parsed()) {
      CycIdeal P = p_chi(r, p, u);
      rep = Json{{"r", r}, {"p", p}, {"chi_exponent", u}, {"ideal", ideal_to_json(P)}};
      if (want_class) {
        const ClassGroup& cg = class_group_cached(r);
        ClsVec c = class_of_ideal(cg, P);
        rep["class"] = intvec_to_json(c);
        rep["is_principal"] = cg.is_zero(c);
      }
    } else if (c_th2->parsed()) {
      StickelbergerElt th = theta2_build(r, p);
      Json coeffs = Json::object();
      for (long a = 1; a < r; a++)
        coeffs[std::to_string(a)] = int_to_json(th.coeff(a, Int(r), k));
      rep = Json{{"r", r},
                 {"p", p},
                 {"weak_hypothesis", th.weak_hypothesis},
                 {"coefficient_modulus", "r^" + std::to_string(k)},
                 {"coeffs_of_sigma_inverse", coeffs}};
      if (!apply_to.empty()) {
        if (apply_to != "pchi") throw input_error("--apply-to only understands pchi");
        const ClassGroup& cg = class_group_cached(r);
        ClsVec base = class_of_ideal(cg, p_chi(r, p, u));
        ClsVec img = apply_stickelberger(th, base, cg);
        rep["applied"] = Json{{"base_class", intvec_to_json(base)},
                              {"image_class", intvec_to_json(img)},
                              {"annihilated", cg.is_zero(img)}};
      }
    } else if (c_herb->parsed()) {
      Json ks = Json::array();
      for (long k2 = 2; k2 <= r - 3; k2 += 2)
        if (herbrand_test(r, k2)) ks.push_back(k2);
      rep = Json{{"r", r}, {"irregular_k", ks}, {"regular", ks.empty()}};
    } else if (c_hm->parsed()) {
      rep = Json{{"r", r}, {"h_minus", int_to_json(h_minus(r))}};
    } else if (c_gauss->parsed()) {
      GaussReport g = gauss_sum_check(p, r, budget);
      rep = Json{{"p", g.p},
                 {"r", g.r},
                 {"product_identity", g.product_identity},
                 {"support_above_p", g.support_above_p},
                 {"tau_power", g.tau_power.str()},
                 {"norm", int_to_json(g.norm)},
                 {"roots", g.roots},
                 {"valuations", g.valuations},
                 {"exponent_pattern", g.exponent_pattern},
                 {"pattern_base", g.pattern_base},
                 {"ok", g.ok}};
    } else if (c_bern->parsed()) {
      rep = Json{{"k", kk}, {"value", rat_str(bernoulli(kk))}};
      if (modp > 0) {
        rep["mod"] = modp;
        rep["residue"] = int_to_json(bernoulli_mod(kk, modp));
      }
    } else if (c_tpi->parsed()) {
      BranchData bd = branch_from_json(load_json_file(branch_path));
      if (bd.d != 1) throw input_error("tpi expects surface branch data (d = 1)");
      GChar chi = chi_of(bd.group, chi_exp);
      DegreeTable table = structure_sheaf_table(bd);
      rep = Json{{"chi_exponent", chi.e},
                 {"t_surface", rat_str(t_pi_surface(bd, chi))},
                 {"t_general", rat_str(t_pi_general(bd, table, chi))},
                 {"f_divisor", intvec_to_json(f_divisor(bd, chi))}};
    } else if (c_idele->parsed()) {
      BranchData bd = branch_from_json(load_json_file(branch_path));
      if (bd.d != 1) throw input_error("mainthm-idele expects surface branch data (d = 1)");
      ThetaIdele idl = main_theorem_idele(bd, structure_sheaf_table(bd), squared);
      Json exps = Json::array();
      Int total = char_count(idl.big_group);
      for (Int i = 0; i < total; i++) {
        GChar psi = char_at(idl.big_group, i);
        exps.push_back(Json{{"character", psi.e}, {"value", rat_str(idl.exponents.value(psi))}});
      }
      rep = Json{{"residue_prime", idl.residue_prime},
                 {"c", idl.c},
                 {"n", bd.d + 2},
                 {"group", group_to_json(bd.group)},
                 {"exponents", exps}};
    } else if (c_tel->parsed()) {
      MPoly res = telescope_residual(n, q);
      rep = Json{{"n", n}, {"q", q}, {"vanishes", res.empty()}, {"residual", mpoly_str(res)}};
    } else if (c_mod->parsed()) {
      LatticeClassResult res = lattice_steinitz_class(p, r, u);
      rep = Json{{"p", res.p},
                 {"r", res.r},
                 {"n_chi", int_to_json(res.n_chi)},
                 {"class", intvec_to_json(res.ideal_class)},
                 {"is_free", res.is_free},
                 {"class_group_shape", shape_json(res.class_group_shape)},
                 {"hplus_assumed", res.hplus_assumed},
                 {"weak_hypothesis", res.weak_hypothesis}};
    } else if (c_bsd->parsed()) {
      const ClassGroup& cg = class_group_cached(r);
      ClassQuotient quo = invert_two(cg);
      std::vector<Int> sha = intvec_from_json(load_json_file(sha_path));
      std::vector<Int> mw = intvec_from_json(load_json_file(mw_path));
      rep = Json{{"p", p},
                 {"r", r},
                 {"localized_shape", shape_json(quo.shape())},
                 {"holds", bsd_relation(cg, quo, p, r, sha, mw)}};
    }

    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0).count();
    emit_report(rep, (long)ms);
    return 0;
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << std::endl;
    return 2;
  } catch (const math_error& e) {
    std::cerr << "math error: " << e.what() << std::endl;
    return 1;
  }
}
