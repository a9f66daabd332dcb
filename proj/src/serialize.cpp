#include "gamma0/serialize.hpp"

#include <cstdio>

#include "gamma0/qseries.hpp"

namespace gamma0 {

namespace {

std::string double_str(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Json json_int(const Int& v) {
  if (v.fits_slong_p()) return Json(static_cast<long long>(v.get_si()));
  return Json(v.get_str());
}

Json json_rat(const Rat& v) {
  Rat c = v;
  c.canonicalize();
  return Json::array({json_int(c.get_num()), json_int(c.get_den())});
}

Json json_complex(const CComplex& z, size_t digits) {
  Json j;
  j["re"] = z.re.str(digits);
  j["im"] = z.im.str(digits);
  j["err"] = double_str(z.err);
  return j;
}

std::string dump_document(const Json& doc) { return doc.dump(2) + "\n"; }

std::string canonical_roundtrip(const std::string& text) {
  return dump_document(Json::parse(text));
}

Json hauptmodul_document(long N, long terms) {
  HauptmodulSeries h = hauptmodul_series(N, std::max(terms, 1L));
  Json c = Json::array();
  c.push_back(json_int(Int(1)));  // m = -1
  c.push_back(json_int(Int(0)));  // m = 0
  for (long m = 1; m <= terms; ++m) c.push_back(json_int(h.coeff(m)));
  Json j;
  j["level"] = N;
  j["m_min"] = -1;
  j["m_max"] = terms;
  j["c"] = std::move(c);
  return j;
}

Json reduced_forms_document(long N, const Int& D, const std::string& method,
                            const std::vector<QuadForm>& forms) {
  Json list = Json::array();
  for (const QuadForm& Q : forms)
    list.push_back(Json::array({json_int(Q.a), json_int(Q.b), json_int(Q.c)}));
  Json j;
  j["level"] = N;
  j["disc"] = json_int(D);
  j["method"] = method;
  j["count"] = forms.size();
  j["forms"] = std::move(list);
  return j;
}

Json class_number_document(long N, const Int& D, const Rat& h) {
  Json j;
  j["level"] = N;
  j["disc"] = json_int(D);
  j["h"] = json_rat(h);
  return j;
}

Json trace_document(long N, const Int& D, const Rat& t, double err) {
  Json j;
  j["level"] = N;
  j["disc"] = json_int(D);
  j["t"] = json_rat(t);
  j["err"] = double_str(err);
  return j;
}

Json j_value_form_document(long N, const QuadForm& Q, const CComplex& z) {
  Json j;
  j["level"] = N;
  j["form"] = Json::array({json_int(Q.a), json_int(Q.b), json_int(Q.c)});
  j["value"] = json_complex(z);
  return j;
}

Json j_value_cusp_document(long N, const CuspRep& s, const Rat& value) {
  Json j;
  j["level"] = N;
  j["cusp"] = Json::array({s.u, s.v});
  j["value"] = json_rat(value);
  return j;
}

Json cusps_document(long N, std::optional<long> n) {
  Json list = Json::array();
  for (const CuspRep& s : cusp_set(N)) {
    Json e;
    e["u"] = s.u;
    e["v"] = s.v;
    e["width"] = cusp_width(s, N);
    e["infinity_class"] = (s.v == N);
    if (n) e["nu"] = nu(s, *n, N);
    list.push_back(std::move(e));
  }
  Json j;
  j["level"] = N;
  if (n) j["n"] = *n;
  j["cusps"] = std::move(list);
  return j;
}

Json modpoly_document(const ModularPolynomial& P) {
  Json rows = Json::array();
  for (long i = 0; i <= P.x_degree(); ++i) {
    Json row = Json::array();
    for (long k = 0; k <= P.y_degree(); ++k) row.push_back(json_int(P.at(i, k)));
    rows.push_back(std::move(row));
  }
  Json j;
  j["level"] = P.level;
  j["n"] = P.n;
  j["deg_x"] = P.x_degree();
  j["deg_y"] = P.y_degree();
  j["coeffs"] = std::move(rows);  // row-major, X-degree major
  return j;
}

Json modpoly_diagonal_document(long N, long n, const std::vector<Int>& diag,
                               bool quotient) {
  Json c = Json::array();
  for (const Int& v : diag) c.push_back(json_int(v));
  Json j;
  j["level"] = N;
  j["n"] = n;
  j["kind"] = quotient ? "diagonal_quotient" : "diagonal";
  j["coeffs"] = std::move(c);
  return j;
}

Json verify_report_document(const std::vector<VerificationReport>& reports) {
  Json arr = Json::array();
  for (const VerificationReport& r : reports) {
    Json e;
    e["level"] = r.level;
    e["n"] = r.n;
    e["theorem"] = r.theorem_id;
    e["lhs"] = r.lhs;
    e["rhs"] = r.rhs;
    e["abs_error"] = r.abs_error;
    e["pass"] = r.pass;
    e["runtime_ms"] = r.runtime_ms;
    arr.push_back(std::move(e));
  }
  return arr;
}

}  // namespace gamma0
