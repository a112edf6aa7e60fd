#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fano/catalog.hpp"
#include "fano/errors.hpp"
#include "fano/hilbert.hpp"
#include "fano/ladder.hpp"
#include "fano/surface.hpp"

namespace {

using fano::Rational;

Rational rat_flag(const std::string& text, const char* flag) {
  try {
    return Rational::from_string(text);
  } catch (const fano::ParseError&) {
    throw fano::ParseError(std::string(flag) + ": expected an integer or 'p/q' rational, got '" +
                           text + "' (decimals are not accepted)");
  }
}

std::string join_coeffs(const fano::Poly& p) {
  if (p.coeffs().empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) os << ",";
    os << p.coeffs()[i].str();
  }
  return os.str();
}

/* flags shared by `h0` and `ladder` */
struct InvariantFlags {
  int n = 1;
  std::string d;
  std::string delta = "0";
  std::string r;
  std::string index;
  std::optional<long> p_n2;
  std::optional<long> p_n3;
  std::string format = "table";
};

void add_invariant_flags(CLI::App* cmd, InvariantFlags& f) {
  cmd->add_option("--n", f.n, "dimension of X (n >= 1)")->required();
  cmd->add_option("--d", f.d, "degree d = H^n, an integer or 'p/q'")->required();
  cmd->add_option("--delta", f.delta, "boundary degree delta = B.H^{n-1} (default 0)");
  auto* r_opt = cmd->add_option("--r", f.r, "coindex r = n + 1 - index");
  auto* i_opt = cmd->add_option("--index", f.index, "index t with -(K+B) == tH");
  r_opt->excludes(i_opt);
  i_opt->excludes(r_opt);
  cmd->add_option("--p-n2", f.p_n2, "h^0(K + (n-2)H), required when floor(r) >= 3");
  cmd->add_option("--p-n3", f.p_n3, "h^0(K + (n-3)H), required when floor(r) = 4");
  cmd->add_option("--format", f.format, "output format")
      ->check(CLI::IsMember({"table", "records"}));
}

fano::HilbertModel make_model(const InvariantFlags& f) {
  if (f.r.empty() && f.index.empty())
    throw fano::ParseError("exactly one of --r or --index is required");
  const Rational d = rat_flag(f.d, "--d");
  const Rational delta = rat_flag(f.delta, "--delta");
  const fano::FanoInvariants inv =
      f.r.empty()
          ? fano::FanoInvariants::from_index(f.n, d, delta, rat_flag(f.index, "--index"))
          : fano::FanoInvariants::from_coindex(f.n, d, delta, rat_flag(f.r, "--r"));
  return fano::HilbertModel{inv, f.p_n2, f.p_n3};
}

void run_h0(const InvariantFlags& f) {
  const fano::HilbertModel m = make_model(f);
  const fano::HilbertResult res = fano::build(m);
  if (f.format == "records") {
    std::cout << "op=h0 case=" << to_string(res.case_tag) << " n=" << m.inv.n
              << " d=" << m.inv.d.str() << " delta=" << m.inv.delta.str()
              << " r=" << m.inv.r.str() << " index=" << m.inv.index().str()
              << " h0=" << res.h0.str() << " coeffs=" << join_coeffs(res.p) << "\n";
    return;
  }
  std::cout << "case:   " << to_string(res.case_tag) << "\n";
  std::cout << "p(t):   " << res.p.str() << "\n";
  std::cout << "h0:     " << res.h0.str() << "\n";
}

void run_ladder(const InvariantFlags& f) {
  const fano::HilbertModel m = make_model(f);
  const fano::LadderReport rep = fano::build_ladder(m);
  if (f.format == "records") {
    std::cout << "op=ladder n=" << m.inv.n << " d=" << m.inv.d.str()
              << " delta=" << m.inv.delta.str() << " r=" << m.inv.r.str() << " c=" << rep.c
              << " c_theorem=" << rep.c_theorem << " bsl_dim_bound=" << rep.bsl_dim_bound;
    if (rep.mult)
      std::cout << " m_max=" << rep.mult->m_max << " double_point="
                << (rep.mult->canonical_double_point_possible ? "true" : "false");
    std::cout << "\n";
    for (const fano::LadderRung& rung : rep.rungs) {
      std::cout << "op=ladder-rung j=" << rung.j << " index_j=" << rung.index_j.str()
                << " class=" << to_string(rung.cls)
                << " h0=" << (rung.h0 ? rung.h0->str() : "-")
                << " dim_bound=" << rung.dim_bound.str() << "\n";
    }
    return;
  }
  std::cout << std::left << std::setw(4) << "j" << std::setw(9) << "index_j" << std::setw(23)
            << "class" << std::setw(7) << "h0" << "dim|H| >=" << "\n";
  for (const fano::LadderRung& rung : rep.rungs) {
    std::cout << std::left << std::setw(4) << rung.j << std::setw(9) << rung.index_j.str()
              << std::setw(23) << to_string(rung.cls) << std::setw(7)
              << (rung.h0 ? rung.h0->str() : "-") << rung.dim_bound.str() << "\n";
  }
  std::cout << "lowest rung: c = " << rep.c << " (theorem value floor(r) - 1 = "
            << rep.c_theorem << ")\n";
  std::cout << "dim Bsl|H| <= " << rep.bsl_dim_bound << "\n";
  if (rep.mult) {
    std::cout << "multiplicity of a general member <= " << rep.mult->m_max;
    if (rep.mult->canonical_double_point_possible)
      std::cout << " (canonical double points possible at n = 3)";
    std::cout << "\n";
  }
}

void print_certificate(const fano::NVCertificate& cert) {
  std::cout << "case:     " << to_string(cert.case_tag) << "\n";
  std::cout << "verdict:  " << to_string(cert.verdict) << "\n";
  if (cert.bound)
    std::cout << "h0 >=     " << cert.bound->str() << "\n";
  else
    std::cout << "bound:    none\n";
}

struct VerifyCounters {
  long checked = 0;
  long failed = 0;
};

int run_verify_identities(int n_max, int samples) {
  fano::IdentityOptions opt;
  opt.n_max = n_max;
  opt.samples = samples;
  const fano::IdentityReport rep = fano::verify_identities(opt);
  if (rep.all_passed()) {
    std::cout << "all identities verified (" << rep.checked << " checks, n = " << opt.n_min
              << ".." << opt.n_max << ")\n";
    return 0;
  }
  for (const fano::IdentityFailure& f : rep.failures)
    std::cout << "FAIL n=" << f.n << " case=" << to_string(f.case_tag) << " check=" << f.check
              << " at " << f.sample << "\n";
  std::cout << rep.failures.size() << " identity failures out of " << rep.checked
            << " checks\n";
  return 1;
}

int run_verify_duality(int n_max) {
  VerifyCounters cnt;
  auto check = [&cnt](const fano::HilbertModel& m) {
    const fano::HilbertResult res = fano::build(m);
    ++cnt.checked;
    if (!fano::duality_check(res, m.inv)) {
      ++cnt.failed;
      std::cout << "FAIL duality at n=" << m.inv.n << " d=" << m.inv.d.str()
                << " r=" << m.inv.r.str() << "\n";
    }
  };
  const std::vector<long> ds = {1, 2, 3, 5, 8, 24};
  for (int n = 3; n <= n_max; ++n) {
    check({fano::FanoInvariants::from_coindex(n, 1, 0, 0), {}, {}});
    check({fano::FanoInvariants::from_coindex(n, 2, 0, 1), {}, {}});
    for (long d : ds) check({fano::FanoInvariants::from_coindex(n, d, 0, 2), {}, {}});
    for (long d : ds) check({fano::FanoInvariants::from_coindex(n, d, 0, 3), 1, {}});
    if (n >= 4)
      for (long d : ds)
        for (long p2 : {0L, 1L, 4L})
          check({fano::FanoInvariants::from_coindex(n, d, 0, 4), p2, 1});
  }
  if (cnt.failed == 0) {
    std::cout << "duality p(t) = (-1)^n p(-t-index) verified on " << cnt.checked
              << " models\n";
    return 0;
  }
  std::cout << cnt.failed << " duality failures out of " << cnt.checked << " models\n";
  return 1;
}

int run_verify_pk() {
  VerifyCounters cnt;
  for (long d : {1L, 24L, 120L}) {
    for (long k = -1; k <= 50; ++k) {
      const fano::Poly p = fano::pk_poly(d, k);
      ++cnt.checked;
      if (p(Rational(1)) != Rational(k + 1)) {
        ++cnt.failed;
        std::cout << "FAIL p_k(1) != k+1 at d=" << d << " k=" << k << "\n";
      }
      ++cnt.checked;
      if (p != fano::compose_affine(p, Rational(-1), Rational(-1))) {
        ++cnt.failed;
        std::cout << "FAIL p_k(t) != p_k(-t-1) at d=" << d << " k=" << k << "\n";
      }
    }
  }
  if (cnt.failed == 0) {
    std::cout << "p_k family verified: p_k(1) = k+1 and p_k(t) = p_k(-t-1) (" << cnt.checked
              << " checks)\n";
    return 0;
  }
  std::cout << cnt.failed << " p_k failures out of " << cnt.checked << " checks\n";
  return 1;
}

int run_catalog_check(const std::string& path) {
  const std::vector<fano::CatalogEntry> entries = fano::load_catalog_file(path);
  const fano::CrosscheckReport rep = fano::crosscheck(entries);
  std::cout << std::left << std::setw(16) << "name" << std::setw(10) << "h0" << std::setw(10)
            << "expected" << std::setw(8) << "poly" << "status" << "\n";
  for (const fano::CrosscheckRow& row : rep.rows) {
    std::cout << std::left << std::setw(16) << row.name << std::setw(10)
              << (row.computed_h0 ? row.computed_h0->str() : "-") << std::setw(10)
              << (row.expected_h0 ? row.expected_h0->str() : "-") << std::setw(8)
              << (row.poly_checked ? (row.poly_match ? "match" : "DIFFER") : "-")
              << (row.pass ? "ok" : "FAIL") << "\n";
    if (!row.pass && !row.note.empty()) std::cout << "    " << row.note << "\n";
  }
  std::cout << rep.rows.size() << " entries, " << rep.failures << " failures\n";
  return rep.all_passed() ? 0 : 1;
}

void run_coindex4_pk(const std::string& d_text, long k) {
  const Rational d = rat_flag(d_text, "--d");
  const fano::Poly p = fano::pk_poly(d, k);
  std::cout << "p_k(t):  " << p.str() << "\n";
  std::cout << "coeffs (ascending):  " << join_coeffs(p) << "\n";
  std::cout << "p_k(1):  " << p(Rational(1)).str() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact Hilbert polynomials, anticanonical ladders and surface nonvanishing "
      "certificates for polarized weak log Fano pairs"};
  app.require_subcommand(1);
  int exit_code = 0;

  InvariantFlags h0_flags;
  CLI::App* h0_cmd = app.add_subcommand("h0", "Hilbert polynomial and h^0(H) closed form");
  add_invariant_flags(h0_cmd, h0_flags);
  h0_cmd->callback([&] { run_h0(h0_flags); });

  InvariantFlags ladder_flags;
  CLI::App* ladder_cmd =
      app.add_subcommand("ladder", "rung-by-rung ladder report with bounds");
  add_invariant_flags(ladder_cmd, ladder_flags);
  ladder_cmd->callback([&] { run_ladder(ladder_flags); });

  CLI::App* surface_cmd =
      app.add_subcommand("surface", "nonvanishing certificates and ruled-surface numerics");
  surface_cmd->require_subcommand(1);

  std::string s_dh, s_db = "0", s_chi, s_h2, s_a, s_d2, s_c, s_hk;
  CLI::App* case1_cmd = surface_cmd->add_subcommand(
      "case1", "h^0(D) from (D.H + D.B)/2 + chi when D.H = 0 or via the exact value");
  case1_cmd->add_option("--dh", s_dh, "D.H")->required();
  case1_cmd->add_option("--db", s_db, "D.B (default 0)");
  case1_cmd->add_option("--chi", s_chi, "chi(O_X)")->required();
  case1_cmd->callback([&] {
    print_certificate(fano::prop41_case1(rat_flag(s_dh, "--dh"), rat_flag(s_db, "--db"),
                                         rat_flag(s_chi, "--chi")));
  });

  CLI::App* case2a_cmd =
      surface_cmd->add_subcommand("case2a", "bound h^0(D) >= (a-1)/(2a^2) H^2 when H.F = a > 1");
  case2a_cmd->add_option("--h2", s_h2, "H^2")->required();
  case2a_cmd->add_option("--a", s_a, "fibre degree a = H.F")->required();
  case2a_cmd->callback([&] {
    print_certificate(fano::prop41_case2a(rat_flag(s_h2, "--h2"), rat_flag(s_a, "--a")));
  });

  CLI::App* case2b_cmd = surface_cmd->add_subcommand(
      "case2b", "bound h^0(D) >= (a+1)/(2a) ((c - 1/a) D^2 + D.B) when H == cD, c > 1/2");
  case2b_cmd->add_option("--d2", s_d2, "D^2")->required();
  case2b_cmd->add_option("--db", s_db, "D.B (default 0)");
  case2b_cmd->add_option("--a", s_a, "fibre degree a = D.F, a positive integer")->required();
  case2b_cmd->add_option("--c", s_c, "proportionality H == cD, c > 1/2")->required();
  case2b_cmd->callback([&] {
    print_certificate(fano::prop41_case2b(rat_flag(s_d2, "--d2"), rat_flag(s_db, "--db"),
                                          rat_flag(s_a, "--a"), rat_flag(s_c, "--c")));
  });

  CLI::App* lemma42_cmd = surface_cmd->add_subcommand(
      "lemma42", "slack of the bound chi(O_S) >= -H(H + K_S)/2 on a ruled surface");
  lemma42_cmd->add_option("--h2", s_h2, "H^2")->required();
  lemma42_cmd->add_option("--hk", s_hk, "H.K_S")->required();
  lemma42_cmd->add_option("--chi", s_chi, "chi(O_S)")->required();
  lemma42_cmd->callback([&] {
    const Rational defect = fano::lemma42_defect(rat_flag(s_h2, "--h2"),
                                                 rat_flag(s_hk, "--hk"),
                                                 rat_flag(s_chi, "--chi"));
    std::cout << "defect:  " << defect.str() << "\n";
    std::cout << "bound chi >= -H(H+K)/2: " << (defect.sign() >= 0 ? "holds" : "violated")
              << "\n";
    if (defect.sign() < 0) exit_code = 1;
  });

  long rs_g = 0, rs_e = 0;
  std::string rs_x, rs_y, rs_b;
  CLI::App* ruled_cmd = surface_cmd->add_subcommand(
      "ruled", "Neron-Severi numerics on a P^1-bundle over a genus-g curve");
  ruled_cmd->add_option("--g", rs_g, "genus of the base curve")->required();
  ruled_cmd->add_option("--e", rs_e, "invariant e = -C0^2")->required();
  auto* x_opt = ruled_cmd->add_option("--x", rs_x, "class D = x C0 + y F");
  auto* y_opt = ruled_cmd->add_option("--y", rs_y, "class D = x C0 + y F");
  x_opt->needs(y_opt);
  y_opt->needs(x_opt);
  ruled_cmd->add_option("--b", rs_b, "section class D = C0 + b F for the vanishing numerology");
  ruled_cmd->callback([&] {
    const fano::RuledNS s{rs_g, rs_e};
    const fano::NSClass k = fano::canonical_class(s);
    std::cout << "K = " << k.x.str() << " C0 + " << k.y.str() << " F\n";
    if (!rs_x.empty()) {
      const fano::NSClass d{rat_flag(rs_x, "--x"), rat_flag(rs_y, "--y")};
      std::cout << "D^2 = " << fano::ns_intersect(s, d, d).str()
                << ", D.K = " << fano::ns_intersect(s, d, k).str() << "\n";
      if (rs_e == -2)
        std::cout << "in the e = -2 effective cone (x + y >= 0): "
                  << (fano::ne_cone_member_e_minus2(d) ? "yes" : "no") << "\n";
    }
    if (!rs_b.empty()) {
      const fano::Step2Numerology st = fano::step2_numerology(rs_g, rs_e, rat_flag(rs_b, "--b"));
      std::cout << "D = C0 + " << rs_b << " F: D.K = " << st.dk.str()
                << ", chi(D) = " << st.chi_d.str()
                << ", vanishing-consistent: " << (st.consistent ? "yes" : "no") << "\n";
    }
  });

  std::string suite;
  int v_n_max = 8, v_samples = 5;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run an exact verification suite");
  verify_cmd->add_option("--suite", suite, "identities, duality or pk")
      ->required()
      ->check(CLI::IsMember({"identities", "duality", "pk"}));
  verify_cmd->add_option("--n-max", v_n_max, "largest dimension exercised (default 8)");
  verify_cmd->add_option("--samples", v_samples, "grid points per variable (default 5)");
  verify_cmd->callback([&] {
    if (suite == "identities")
      exit_code = run_verify_identities(v_n_max, v_samples);
    else if (suite == "duality")
      exit_code = run_verify_duality(v_n_max);
    else
      exit_code = run_verify_pk();
  });

  std::string catalog_path = "data/catalog.tsv";
  CLI::App* catalog_cmd = app.add_subcommand("catalog", "catalog operations");
  catalog_cmd->require_subcommand(1);
  CLI::App* check_cmd =
      catalog_cmd->add_subcommand("check", "cross-check a catalog file against the closed forms");
  check_cmd->add_option("--file", catalog_path, "catalog path (default data/catalog.tsv)");
  check_cmd->callback([&] { exit_code = run_catalog_check(catalog_path); });

  std::string pk_d;
  long pk_k = 0;
  CLI::App* coindex4_cmd = app.add_subcommand("coindex4", "the self-dual coindex-4 4-fold family");
  coindex4_cmd->require_subcommand(1);
  CLI::App* pk_cmd = coindex4_cmd->add_subcommand("pk", "p_k(t) = d/4! t(t+1)(t-1)(t+2) + (k/2)t(t+1) + 1");
  pk_cmd->add_option("--d", pk_d, "degree d >= 1")->required();
  pk_cmd->add_option("--k", pk_k, "family parameter k >= -1; p_k(1) = k + 1")->required();
  pk_cmd->callback([&] { run_coindex4_pk(pk_d, pk_k); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const fano::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fano::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
