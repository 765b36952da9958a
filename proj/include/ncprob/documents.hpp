#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ncprob/cumulants.hpp"
#include "ncprob/fock.hpp"
#include "ncprob/matrix.hpp"
#include "ncprob/meixner.hpp"
#include "ncprob/polynomial.hpp"
#include "ncprob/series.hpp"

/// JSON documents with rationals written as "p/q" text. Readers are strict:
/// rationals must be in lowest terms, and every failure is a ParseError naming
/// the offending key.
namespace ncprob::documents {

using Json = nlohmann::json;

/// Two-space indentation, sorted keys, trailing newline.
std::string dump(const Json& doc);
Json parse(const std::string& text);

/// {"d", "degree", "coeffs": {"1,2": "p/q", ...}}; zero coefficients omitted.
Json series_to_json(const NCSeries& f);
NCSeries series_from_json(const Json& doc);

/// Moments document: a series document whose constant term is 1. The key ""
/// may be omitted; any other value is rejected.
Json functional_to_json(const Functional& phi);
Functional functional_from_json(const Json& doc);

/// Polynomial in the series layout, with degree the polynomial degree (0 for zero).
Json polynomial_to_json(const NCPolynomial& p);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& doc, const std::string& key);

/// {"d", "depth", "C": [level arrays], "T": [[matrix per level] per variable]}.
Json fock_to_json(const FockData& data);
FockData fock_from_json(const Json& doc);

/// {"d", "T": [d matrices], "C": d x d matrix}.
Json params_to_json(const MeixnerParams& p);
MeixnerParams params_from_json(const Json& doc);

/// {"omega": index, "X": [square symmetric matrices]}.
std::pair<std::vector<Matrix>, std::size_t> matrix_model_from_json(const Json& doc);

Json decomposition_to_json(const BooleanFockDecomposition& dec);

}  // namespace ncprob::documents
