#pragma once

// Parsing and rendering behind the wtits command line: element expressions,
// index lists, DOT/JSON emitters and the report documents.

#include <string>
#include <vector>

#include <json.hpp>

#include "wtits/oracle.hpp"
#include "wtits/utits.hpp"
#include "wtits/xorder.hpp"

namespace wtits::cli {

using nlohmann::json;

/// Products of `1`, `s<i>`, `s<i>^<k>`, `c<j>`, `c<j>^<k>`, with optional
/// whitespace or `*` between factors ("s2 s1^2" and "s2s1^2" are equal).
/// Exponents may be negative. ParseError positions are 0-based offsets.
Expr parse_expr(const std::string& text);

/// Parses and evaluates against the group; unknown generator indices are
/// reported as ParseError at the offending factor.
ExactMatrix evaluate_expr(const TitsGroup& group, const std::string& text);

/// Comma-separated expressions; empty entries are skipped.
std::vector<ExactMatrix> evaluate_expr_list(const TitsGroup& group, const std::vector<std::string>& items);

/// "1,2" or "1 2"; empty text is the empty set. Indices must be 1..rank.
IndexSet parse_index_set(const std::string& text, std::size_t rank);

/// "2,-1,-1".
std::vector<double> parse_real_list(const std::string& text);

/// Sum of terms `[coef*]e<i><j>` (single digits) or `[coef*]e<i>_<j>`,
/// separated by `+`; "0" or empty is the zero matrix.
oracle::Matrix parse_elementary_sum(const std::string& text, std::size_t n);

json matrix_json(const ExactMatrix& m);

json group_json(const TitsGroup& group);
std::string group_text(const TitsGroup& group);

/// {elements: [{id, word, matrix}], covers: [[hi, lo], ...]}.
json hasse_json(const ExtendedBruhatOrder& order);
/// Edges point from the upper element to the lower one.
std::string hasse_dot(const ExtendedBruhatOrder& order);

/// Coset display name, e.g. "U_H s2s1" or "U_H" for the identity coset.
std::string coset_name(const std::string& prefix, const TitsGroup& group, std::size_t representative);

json quotient_json(const ExtendedBruhatOrder& order, const QuotientPoset& q, const std::string& prefix);
std::string quotient_dot(const ExtendedBruhatOrder& order, const QuotientPoset& q, const std::string& prefix);

std::string morse_text(const ExtendedBruhatOrder& order, const QuotientPoset& q);

struct ControlData {
  FiniteGroupTable u_s;
  QuotientIsomorphismReport iso;
  QuotientPoset quotient;
  std::vector<ControlEdge> edges;
  std::vector<PairReport> pairs;
};

ControlData control_data(const ExtendedBruhatOrder& order, const std::vector<ExactMatrix>& gens);
json control_json(const ExtendedBruhatOrder& order, const ControlData& data);
std::string control_text(const ExtendedBruhatOrder& order, const ControlData& data);

/// Report for a hypothesized pair given as two elements: the classes of
/// `lhs` and `rhs`, both converse directions, and the pair status.
json control_pair_json(const ExtendedBruhatOrder& order, const ControlData& data, const ExactMatrix& lhs,
                       const ExactMatrix& rhs);
std::string control_pair_text(const ExtendedBruhatOrder& order, const ControlData& data, const ExactMatrix& lhs,
                              const ExactMatrix& rhs);

json schubert_json(const TitsGroup& group, const oracle::SchubertReport& report);
json morse_flow_json(const TitsGroup& group, const oracle::FlowSpec& spec, const oracle::MorseOptions& options,
                     const oracle::MorseReport& report, const oracle::QuotientMatch* match);
json contraction_json(const oracle::ContractionReport& report);

}  // namespace wtits::cli
