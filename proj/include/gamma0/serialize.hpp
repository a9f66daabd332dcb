#pragma once
#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "gamma0/bigfloat.hpp"
#include "gamma0/cusps.hpp"
#include "gamma0/forms.hpp"
#include "gamma0/modpoly.hpp"
#include "gamma0/verify.hpp"

namespace gamma0 {

// Canonical JSON conventions shared by the command-line tool and the
// round-trip tests: insertion-ordered keys, two-space indentation, exact
// rationals as [num, den] pairs, complex values as {re, im, err} decimal
// strings. Integers are JSON numbers when they fit in 64 bits and decimal
// strings beyond that, so a standard parser loses nothing.
using Json = nlohmann::ordered_json;

Json json_int(const Int& v);
Json json_rat(const Rat& v);
Json json_complex(const CComplex& z, size_t digits = 30);

// Parse text and re-serialize with the canonical settings.
std::string dump_document(const Json& doc);
std::string canonical_roundtrip(const std::string& text);

Json hauptmodul_document(long N, long terms);
Json reduced_forms_document(long N, const Int& D, const std::string& method,
                            const std::vector<QuadForm>& forms);
Json class_number_document(long N, const Int& D, const Rat& h);
Json trace_document(long N, const Int& D, const Rat& t, double err);
Json j_value_form_document(long N, const QuadForm& Q, const CComplex& z);
Json j_value_cusp_document(long N, const CuspRep& s, const Rat& value);
Json cusps_document(long N, std::optional<long> n);
Json modpoly_document(const ModularPolynomial& P);
Json modpoly_diagonal_document(long N, long n, const std::vector<Int>& diag,
                               bool quotient);
Json verify_report_document(const std::vector<VerificationReport>& reports);

}  // namespace gamma0
