#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gamma0/errors.hpp"
#include "gamma0/funddomain.hpp"
#include "gamma0/hauptmodul.hpp"
#include "gamma0/qseries.hpp"
#include "gamma0/serialize.hpp"

namespace {

using namespace gamma0;

long parse_long(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw CLI::ValidationError(std::string(what) + ": expected an integer, got '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) out.push_back(part);
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
  if (!f.flush()) throw std::runtime_error("short write to " + path);
}

void require_prec(long prec) {
  if (prec < 53) throw CLI::ValidationError("--prec must be at least 53 bits");
}

void emit(bool json, const Json& doc, const std::string& text) {
  if (json)
    std::cout << dump_document(doc);
  else
    std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact arithmetic for genus-zero Gamma_0(N): hauptmodul expansions, "
      "reduced forms, class numbers, traces of singular moduli, cusps, "
      "modular polynomials, and identity verification"};
  app.require_subcommand(1);

  int exit_code = 0;

  // hauptmodul
  long hm_level = 2, hm_terms = 10;
  bool hm_json = false;
  {
    auto* sc = app.add_subcommand("hauptmodul",
                                  "q-expansion coefficients c_{-1}..c_M");
    sc->add_option("--level", hm_level, "level N in {2,3,4,5,7,13}")->required();
    sc->add_option("--terms", hm_terms, "last exponent M")->required();
    sc->add_flag("--json", hm_json, "emit JSON");
    sc->callback([&] {
      if (hm_terms < 1) throw CLI::ValidationError("--terms must be >= 1");
      if (hm_json) {
        std::cout << dump_document(hauptmodul_document(hm_level, hm_terms));
        return;
      }
      HauptmodulSeries h = hauptmodul_series(hm_level, hm_terms);
      std::cout << "c[-1] = 1\nc[0] = 0\n";
      for (long m = 1; m <= hm_terms; ++m)
        std::cout << "c[" << m << "] = " << h.coeff(m).get_str() << "\n";
    });
  }

  // reduced-forms
  long rf_level = 2, rf_disc = -4;
  std::string rf_method = "direct";
  bool rf_json = false;
  {
    auto* sc = app.add_subcommand("reduced-forms",
                                  "all reduced forms of a discriminant");
    sc->add_option("--level", rf_level, "level N")->required();
    sc->add_option("--disc", rf_disc, "discriminant D < 0, D = 0,1 mod 4")
        ->required();
    sc->add_option("--method", rf_method, "direct|cosets")
        ->check(CLI::IsMember({"direct", "cosets"}));
    sc->add_flag("--json", rf_json, "emit JSON");
    sc->callback([&] {
      Int D(rf_disc);
      std::vector<QuadForm> forms = rf_method == "cosets"
                                        ? enumerate_reduced_via_cosets(D, rf_level)
                                        : enumerate_reduced(D, rf_level);
      std::ostringstream text;
      for (const QuadForm& Q : forms)
        text << Q.a.get_str() << ' ' << Q.b.get_str() << ' ' << Q.c.get_str()
             << '\n';
      emit(rf_json, reduced_forms_document(rf_level, D, rf_method, forms),
           text.str());
    });
  }

  // class-number
  long cn_level = 2, cn_disc = -4;
  bool cn_json = false;
  {
    auto* sc = app.add_subcommand("class-number",
                                  "class number H(D, N), a rational");
    sc->add_option("--level", cn_level, "level N")->required();
    sc->add_option("--disc", cn_disc, "discriminant D < 0")->required();
    sc->add_flag("--json", cn_json, "emit JSON");
    sc->callback([&] {
      Int D(cn_disc);
      Rat h = class_number_H(D, cn_level);
      emit(cn_json, class_number_document(cn_level, D, h), h.get_str() + "\n");
    });
  }

  // trace
  long tr_level = 2, tr_disc = -4, tr_prec = 128;
  bool tr_json = false;
  {
    auto* sc = app.add_subcommand(
        "trace", "trace t(D, N) of singular moduli, certified and rounded");
    sc->add_option("--level", tr_level, "level N")->required();
    sc->add_option("--disc", tr_disc, "discriminant D < 0")->required();
    sc->add_option("--prec", tr_prec, "starting precision in bits")
        ->envname("GAMMA0_PREC");
    sc->add_flag("--json", tr_json, "emit JSON");
    sc->callback([&] {
      require_prec(tr_prec);
      Int D(tr_disc);
      auto [t, err] = trace_t(D, tr_level, tr_prec);
      emit(tr_json, trace_document(tr_level, D, t, err), t.get_str() + "\n");
    });
  }

  // j-value
  long jv_level = 2, jv_prec = 128;
  std::string jv_form, jv_cusp;
  bool jv_json = false;
  {
    auto* sc = app.add_subcommand(
        "j-value", "hauptmodul value at a CM point or at a cusp class");
    sc->add_option("--level", jv_level, "level N")->required();
    sc->add_option("--form", jv_form, "a,b,c of a positive definite form");
    sc->add_option("--cusp", jv_cusp, "cusp u/v (exact rational value)");
    sc->add_option("--prec", jv_prec, "precision in bits")
        ->envname("GAMMA0_PREC");
    sc->add_flag("--json", jv_json, "emit JSON");
    sc->callback([&] {
      require_prec(jv_prec);
      if (jv_form.empty() == jv_cusp.empty())
        throw CLI::ValidationError("give exactly one of --form or --cusp");
      if (!jv_form.empty()) {
        auto parts = split(jv_form, ',');
        if (parts.size() != 3)
          throw CLI::ValidationError("--form wants a,b,c");
        QuadForm Q{Int(parse_long(parts[0], "--form")),
                   Int(parse_long(parts[1], "--form")),
                   Int(parse_long(parts[2], "--form"))};
        FormInvariants inv = form_invariants(Q);
        CComplex z = j_eval_cm(inv.tau, jv_level, jv_prec);
        std::ostringstream text;
        text << "re = " << z.re.str(30) << "\nim = " << z.im.str(30)
             << "\nerr <= " << z.err << "\n";
        emit(jv_json, j_value_form_document(jv_level, Q, z), text.str());
      } else {
        auto parts = split(jv_cusp, '/');
        if (parts.size() != 2)
          throw CLI::ValidationError("--cusp wants u/v");
        CuspRep s{parse_long(parts[0], "--cusp"),
                  parse_long(parts[1], "--cusp")};
        Rat v = j_at_cusp(s, jv_level);  // pole at infinity raises an error
        CuspRep rep = cusp_normalize(s, jv_level);
        emit(jv_json, j_value_cusp_document(jv_level, rep, v),
             v.get_str() + "\n");
      }
    });
  }

  // cusps
  long cu_level = 2, cu_n = 0;
  bool cu_json = false;
  {
    auto* sc = app.add_subcommand(
        "cusps", "cusp representatives, widths, and multiplicities nu");
    sc->add_option("--level", cu_level, "level N")->required();
    sc->add_option("--n", cu_n, "also print nu_{s,n,N} (needs gcd(n,N)=1)");
    sc->add_flag("--json", cu_json, "emit JSON");
    sc->callback([&] {
      std::optional<long> n;
      if (cu_n != 0) n = cu_n;
      std::ostringstream text;
      for (const CuspRep& s : cusp_set(cu_level)) {
        text << s.u << '/' << s.v << "  width " << cusp_width(s, cu_level);
        if (n) text << "  nu " << nu(s, *n, cu_level);
        if (s.v == cu_level) text << "  (class of infinity)";
        text << '\n';
      }
      emit(cu_json, cusps_document(cu_level, n), text.str());
    });
  }

  // modpoly
  long mp_level = 2, mp_n = 1, mp_guard = 10;
  bool mp_diag = false, mp_json = false;
  {
    auto* sc = app.add_subcommand(
        "modpoly", "modular polynomial Phi_n for Gamma_0(N), gcd(n,N)=1");
    sc->add_option("--level", mp_level, "level N")->required();
    sc->add_option("--n", mp_n, "degree parameter n >= 1")->required();
    sc->add_option("--guard", mp_guard, "extra vanishing orders checked");
    sc->add_flag("--diagonal", mp_diag,
                 "print Phi_n(X,X), or the quotient by X-Y when n is square");
    sc->add_flag("--json", mp_json, "emit JSON");
    sc->callback([&] {
      if (mp_guard < 1) throw CLI::ValidationError("--guard must be >= 1");
      ModularPolynomial P = build_modular_polynomial(mp_n, mp_level, mp_guard);
      if (mp_diag) {
        bool quotient = square_root_if_perfect(mp_n).has_value();
        std::vector<Int> d = quotient ? diagonal_quotient(P) : diagonal(P);
        std::ostringstream text;
        for (size_t k = 0; k < d.size(); ++k)
          text << "X^" << k << ' ' << d[k].get_str() << '\n';
        emit(mp_json,
             modpoly_diagonal_document(mp_level, mp_n, d, quotient),
             text.str());
        return;
      }
      std::ostringstream text;
      for (long i = 0; i <= P.x_degree(); ++i) {
        text << "X^" << i << ':';
        for (long k = 0; k <= P.y_degree(); ++k)
          text << ' ' << P.at(i, k).get_str();
        text << '\n';
      }
      emit(mp_json, modpoly_document(P), text.str());
    });
  }

  // fundamental-domain
  long fd_level = 5;
  std::string fd_svg, fd_json;
  {
    auto* sc = app.add_subcommand(
        "fundamental-domain",
        "fundamental region of Gamma_0(p): SVG drawing and JSON tables");
    sc->add_option("--level", fd_level, "prime level p >= 5")->required();
    sc->add_option("--svg", fd_svg, "output SVG path")->required();
    sc->add_option("--json", fd_json, "output JSON path")->required();
    sc->callback([&] {
      write_file(fd_svg, export_domain_svg(fd_level));
      write_file(fd_json, export_domain_json(fd_level));
      std::cout << "wrote " << fd_svg << "\nwrote " << fd_json << "\n";
    });
  }

  // verify
  std::string vf_levels = "2", vf_range = "1..10", vf_theorems, vf_out;
  long vf_prec = 128;
  {
    auto* sc = app.add_subcommand(
        "verify", "check the class-number, trace, and factorization identities");
    sc->add_option("--level", vf_levels, "levels, comma separated")->required();
    sc->add_option("--n-range", vf_range, "inclusive range A..B")->required();
    sc->add_option("--theorems", vf_theorems,
                   "subset of cor24,thm11,thm22,thm25 (default: all)");
    sc->add_option("--prec", vf_prec, "starting precision in bits")
        ->envname("GAMMA0_PREC");
    sc->add_option("--out", vf_out, "write the JSON report here");
    sc->callback([&] {
      require_prec(vf_prec);
      SuiteOptions opt;
      opt.prec = vf_prec;
      for (const std::string& part : split(vf_levels, ','))
        opt.levels.push_back(parse_long(part, "--level"));
      if (opt.levels.empty())
        throw CLI::ValidationError("--level: empty list");
      size_t dots = vf_range.find("..");
      if (dots == std::string::npos)
        throw CLI::ValidationError("--n-range wants A..B");
      opt.n_lo = parse_long(vf_range.substr(0, dots), "--n-range");
      opt.n_hi = parse_long(vf_range.substr(dots + 2), "--n-range");
      if (opt.n_lo < 1 || opt.n_hi < opt.n_lo)
        throw CLI::ValidationError("--n-range: need 1 <= A <= B");
      if (!vf_theorems.empty()) {
        opt.cor24 = opt.thm11 = opt.thm22 = opt.thm25 = false;
        for (const std::string& name : split(vf_theorems, ',')) {
          if (name == "cor24")
            opt.cor24 = true;
          else if (name == "thm11")
            opt.thm11 = true;
          else if (name == "thm22")
            opt.thm22 = true;
          else if (name == "thm25")
            opt.thm25 = true;
          else
            throw CLI::ValidationError("--theorems: unknown name '" + name +
                                       "'");
        }
      }
      std::vector<VerificationReport> reports = run_suite(opt);
      long failed = 0, skipped = 0;
      for (const VerificationReport& r : reports) {
        if (!r.pass) ++failed;
        if (r.theorem_id == "skipped") {
          ++skipped;
          continue;
        }
        std::cout << (r.pass ? "pass" : "FAIL") << "  N=" << r.level
                  << " n=" << r.n << ' ' << r.theorem_id << "  lhs=" << r.lhs
                  << " rhs=" << r.rhs;
        if (!r.note.empty()) std::cout << "  [" << r.note << "]";
        char ms[32];
        std::snprintf(ms, sizeof ms, "  (%.1f ms)", r.runtime_ms);
        std::cout << ms << '\n';
      }
      std::cout << reports.size() << " reports, " << skipped << " skipped, "
                << failed << " failed\n";
      if (!vf_out.empty())
        write_file(vf_out, dump_document(verify_report_document(reports)));
      if (failed > 0) exit_code = 1;
    });
  }

  // json-echo: canonical re-serialization, used by the round-trip tests
  std::string je_path;
  {
    auto* sc = app.add_subcommand(
        "json-echo", "parse a JSON file and re-emit it canonically");
    sc->add_option("file", je_path, "input path")->required();
    sc->callback([&] {
      std::ifstream f(je_path, std::ios::binary);
      if (!f) throw std::runtime_error("cannot read " + je_path);
      std::ostringstream buf;
      buf << f.rdbuf();
      std::cout << canonical_roundtrip(buf.str());
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
