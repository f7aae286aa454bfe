#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "springer/inversions.hpp"
#include "springer/partition.hpp"
#include "springer/poincare.hpp"
#include "springer/polynomial.hpp"
#include "springer/tableau.hpp"
#include "springer/toric.hpp"
#include "springer/verify.hpp"

namespace springer {

// Text forms.  Partitions are comma separated parts, with the exponent
// shorthand "4^2,2^2" accepted on input; tableaux separate rows by "/" and
// entries by ",".  Parse errors name the offending token.

Partition parse_partition(const std::string& text);
std::string to_text(const Partition& lambda);

RowStrictTableau parse_tableau(const std::string& text);
std::string to_text(const RowStrictTableau& sigma);

// JSON forms.  Every emitter has a parser and round-trips exactly.

nlohmann::json partition_to_json(const Partition& lambda);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json tableau_to_json(const RowStrictTableau& sigma);
RowStrictTableau tableau_from_json(const nlohmann::json& j);

nlohmann::json pairset_to_json(const PairSet& ps);
PairSet pairset_from_json(const nlohmann::json& j);

nlohmann::json frame_to_json(const ToricFrame& frame);
ToricFrame frame_from_json(const nlohmann::json& j);

/// c-tuples serialize together with the J they are aligned to.
nlohmann::json ctuple_to_json(const std::vector<int>& J, const std::vector<int>& c);
std::pair<std::vector<int>, std::vector<int>> ctuple_from_json(const nlohmann::json& j);

nlohmann::json exponents_to_json(const ExponentVector& b);
ExponentVector exponents_from_json(const nlohmann::json& j);

nlohmann::json polynomial_to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json equivariant_to_json(const EquivariantPolynomial& p);
EquivariantPolynomial equivariant_from_json(const nlohmann::json& j);

nlohmann::json shifted_to_json(const ShiftedPolynomial& p);
ShiftedPolynomial shifted_from_json(const nlohmann::json& j);

nlohmann::json blocks_to_json(const std::vector<Block>& blocks);
nlohmann::json cells_to_json(const std::vector<ExtendedCell>& cells);
nlohmann::json decomposition_to_json(const InvariantDecomposition& d);

nlohmann::json report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);

/// "1 + 2t + t^{3}" style rendering; the zero polynomial renders as "0".
std::string to_latex(const IntPolynomial& p);

/// Betti table: header "degree,coefficient" then one row per degree.
std::string to_csv(const IntPolynomial& p);

}  // namespace springer
