#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "catalan/cli/term_expression.hpp"
#include "catalan/summation/gosper.hpp"
#include "catalan/summation/zeilberger.hpp"

namespace catalan {

/// Serializable proof artifact. `verified` is always recomputed from the
/// term and certificate; `claimed_verdict` is only what a file said.
struct CertificateRecord {
  std::string identity;
  std::string kind;  // "gosper" or "zeilberger"
  std::string term;
  std::string variable;
  std::string recurrence_variable;  // zeilberger only
  std::vector<std::string> parameters;
  std::string certificate;
  std::vector<std::string> recurrence;  // a_0 .. a_J
  std::string inhomogeneous;            // empty when unknown
  std::string claimed_verdict;
  bool verified = false;
  std::string detail;
};

/// "(num)/(den)" with integer coefficients, graded descending monomials.
std::string canonical_fraction(const RationalFunction& r, const std::vector<std::string>& names);
RationalFunction parse_fraction(std::string_view text, const std::vector<std::string>& names,
                                const std::string& variable);

CertificateRecord make_gosper_record(const std::string& identity, const TermExpression& term,
                                     const GosperCertificate& cert);
/// `term` has the recurrence variable as its last parameter.
CertificateRecord make_zeilberger_record(const std::string& identity, const TermExpression& term,
                                         const TelescopedRecurrence& rec);

/// Rebuilds term and certificate from the text fields and sets `verified`.
void reverify(CertificateRecord& record);

std::string to_text(const CertificateRecord& record);
std::string to_json(const CertificateRecord& record);
/// Both loaders recompute the verdict. UsageError on malformed input.
CertificateRecord parse_certificate_text(std::string_view text);
CertificateRecord parse_certificate_json(std::string_view text);
/// Picks the format by the first non-blank character.
CertificateRecord load_certificate(std::string_view text);

}  // namespace catalan
