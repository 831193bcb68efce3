#pragma once

#include "monores/chain_complex.hpp"
#include "monores/homotopy.hpp"
#include "monores/monomial_ideal.hpp"
#include "monores/morse.hpp"
#include "monores/polynomial.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace monores {

/// Parses sums of terms such as "3/2*x^2*y - z + (x+y)^2" over the given
/// variables. `line` and `column` locate the text for error messages.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables,
                            std::size_t line = 1, std::size_t column = 1);

/// Ideal file:
///
///     # comment
///     vars: w x y z
///     gens: w*x, x*y, y*z
///
/// Several gens lines are concatenated. Throws parse_error, or
/// std::invalid_argument when the generators are not minimal.
MonomialIdeal parse_ideal(std::string_view text);

/// Complete intersection file: one "a: <polynomial>" line per element, each
/// optionally followed by "coeffs: c_1, ..., c_q". An optional "vars:" line
/// must repeat the ideal's variables.
CIData parse_ci(std::string_view text, const MonomialIdeal& ideal);

/// {"edges": [{"upper": [1,2], "lower": [1]}, ...]}
MorseMatching parse_matching(std::string_view text);

/// Comma separated 1-based indices, e.g. "1,3".
std::vector<std::size_t> parse_index_list(std::string_view text);

std::string read_file(const std::filesystem::path& path);

nlohmann::ordered_json complex_to_json(const BasedComplex& c);
BasedComplex complex_from_json(const nlohmann::json& j);

/// Degree by degree listing of the bases and differential matrices, columns
/// indexed by the source basis.
std::string complex_to_text(const BasedComplex& c, const std::vector<std::string>& variables);

nlohmann::ordered_json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j, std::size_t nvars);

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

} // namespace monores
