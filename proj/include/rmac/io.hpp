#ifndef RMAC_IO_HPP
#define RMAC_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rmac/complex.hpp"
#include "rmac/experiments.hpp"
#include "rmac/hochster.hpp"
#include "rmac/polynomial.hpp"

namespace rmac::io {

// Complex file: {"n": <int>, "facets": [[<int>...]...]}

/// Facets are the maximal simplices, in lexicographic order.
nlohmann::json complex_to_json(const SimplicialComplex& complex);
/// Throws std::invalid_argument naming the offending field, e.g. "facets[2][0]: ...".
SimplicialComplex complex_from_json(const nlohmann::json& doc);
SimplicialComplex load_complex(const std::string& path);

// Table: {"n":..., "field":..., "entries":[{"i":..,"j":..,"beta":..}...]}, sorted by (j, i).
nlohmann::json table_to_json(const BigradedTable& table);
BigradedTable table_from_json(const nlohmann::json& doc);

enum class PolyKind { F, G, Variance, Covariance };
std::string to_string(PolyKind kind);
/// "f", "g", "var" or "cov"; throws std::invalid_argument otherwise.
PolyKind parse_poly_kind(const std::string& text);

/// {"d":..,"j":..,"kind":..,"m":..|null,"field":..,"coeffs":[...]}. Coefficients
/// that do not fit in 64 bits are written as decimal strings.
nlohmann::json poly_to_json(const IntPolynomial& poly, int d, int j, PolyKind kind, std::optional<int> m,
                            const FieldSpec& field);

/// printf("%.17g")
std::string format_double(double value);

// Experiment tables. Doubles are written with 17 significant digits.
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);
std::string convergence_json(const std::vector<ConvergenceRow>& rows);
std::string variance_csv(const VarianceScaling& scaling);
std::string variance_json(const VarianceScaling& scaling);
std::string covariance_csv(const CovarianceCheck& check);
std::string covariance_json(const CovarianceCheck& check);

} // namespace rmac::io

#endif
