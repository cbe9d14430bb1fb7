#pragma once

// JSON forms of instances, tensors, verdicts and character tables.
// Rationals always travel as strings; indices are 1-based.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "symtensor/characters.hpp"
#include "symtensor/decision.hpp"
#include "symtensor/exact_linalg.hpp"
#include "symtensor/tensor.hpp"

namespace symtensor {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent input document.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProblemInstance {
  int dim = 0;
  Partition lambda;
  VectorFamily v;
  std::optional<VectorFamily> u;
};

/// Validates dim, lambda, v and the optional u; throws InputError.
ProblemInstance parse_instance(const Json& doc);
ProblemInstance parse_instance_text(std::string_view text);

Json to_json(const Rational& x);
Json to_json(const Partition& lambda);
Json to_json(const ColumnSystem& system);
/// Rows of the tableau.
Json to_json(const Tableau& t);
Json to_json(const SparseTensor& x);
Json to_json(const EqualityVerdict& verdict);
Json to_json(const CharacterTable& table);
Json gamas_report(const GamasResult& gamas, const StandardGamasResult& standard);

SparseTensor tensor_from_json(const Json& doc);

/// Two-space indentation, trailing newline.
std::string render(const Json& doc);

}  // namespace symtensor
