#include "ncprob/documents.hpp"

#include "ncprob/error.hpp"

namespace ncprob::documents {
namespace {

const Json& member(const Json& doc, const std::string& key) {
    if (!doc.is_object()) throw ParseError("document must be a JSON object");
    const auto it = doc.find(key);
    if (it == doc.end()) throw ParseError("missing key \"" + key + "\"");
    return *it;
}

int integer(const Json& doc, const std::string& key, int min) {
    const Json& v = member(doc, key);
    if (!v.is_number_integer()) throw ParseError("key \"" + key + "\" must be an integer");
    const auto value = v.get<long long>();
    if (value < min || value > 1000000) {
        throw ParseError("key \"" + key + "\" out of range: " + std::to_string(value));
    }
    return static_cast<int>(value);
}

Rational rational(const Json& v, const std::string& key) {
    if (!v.is_string()) throw ParseError("key \"" + key + "\" must hold a rational string");
    try {
        return parse_rational(v.get<std::string>(), true);
    } catch (const ParseError& e) {
        throw ParseError("key \"" + key + "\": " + e.what());
    }
}

std::vector<Rational> rational_array(const Json& v, const std::string& key, std::size_t size) {
    if (!v.is_array()) throw ParseError("key \"" + key + "\" must be an array");
    if (v.size() != size) {
        throw ParseError("key \"" + key + "\" must have " + std::to_string(size) + " entries, got " +
                         std::to_string(v.size()));
    }
    std::vector<Rational> out;
    for (std::size_t k = 0; k < size; ++k) out.push_back(rational(v[k], key + "[" + std::to_string(k) + "]"));
    return out;
}

Matrix square_matrix(const Json& v, const std::string& key, std::size_t size) {
    Matrix m = matrix_from_json(v, key);
    if (m.rows() != size || m.cols() != size) {
        throw ParseError("key \"" + key + "\" must be " + std::to_string(size) + "x" + std::to_string(size));
    }
    return m;
}

std::string indexed(const std::string& key, std::size_t a) { return key + "[" + std::to_string(a) + "]"; }

}  // namespace

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Json series_to_json(const NCSeries& f) {
    Json coeffs = Json::object();
    for (std::size_t k = 0; k < f.term_count(); ++k) {
        if (!f.coeff(k).is_zero()) coeffs[f.word(k).to_string()] = to_string(f.coeff(k));
    }
    return {{"coeffs", coeffs}, {"d", f.alphabet()}, {"degree", f.degree_cap()}};
}

NCSeries series_from_json(const Json& doc) {
    const int d = integer(doc, "d", 1);
    const int degree = integer(doc, "degree", 0);
    const Json& coeffs = member(doc, "coeffs");
    if (!coeffs.is_object()) throw ParseError("key \"coeffs\" must be an object");
    NCSeries f(d, degree);
    for (const auto& [key, value] : coeffs.items()) {
        MultiIndex word;
        try {
            word = MultiIndex::parse(d, key);
        } catch (const ParseError& e) {
            throw ParseError("key \"coeffs." + key + "\": " + e.what());
        }
        if (static_cast<int>(word.size()) > degree) {
            throw ParseError("key \"coeffs." + key + "\": word longer than degree " + std::to_string(degree));
        }
        f.set(word, rational(value, "coeffs." + key));
    }
    return f;
}

Json functional_to_json(const Functional& phi) { return series_to_json(phi.moment_table()); }

Functional functional_from_json(const Json& doc) {
    NCSeries f = series_from_json(doc);
    if (!member(doc, "coeffs").contains("")) {
        f.set(MultiIndex(f.alphabet()), 1);
    } else if (f.constant_term() != 1) {
        throw ParseError("key \"coeffs.\": the constant moment must be 1");
    }
    return Functional(std::move(f));
}

Json polynomial_to_json(const NCPolynomial& p) {
    Json coeffs = Json::object();
    for (const auto& [word, value] : p.terms()) coeffs[word.to_string()] = to_string(value);
    return {{"coeffs", coeffs}, {"d", p.alphabet()}, {"degree", std::max(p.degree(), 0)}};
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

Matrix matrix_from_json(const Json& doc, const std::string& key) {
    if (!doc.is_array()) throw ParseError("key \"" + key + "\" must be an array of rows");
    if (doc.empty()) return Matrix(0, 0);
    if (!doc[0].is_array()) throw ParseError("key \"" + indexed(key, 0) + "\" must be an array");
    const std::size_t cols = doc[0].size();
    std::vector<std::vector<Rational>> rows;
    for (std::size_t r = 0; r < doc.size(); ++r) rows.push_back(rational_array(doc[r], indexed(key, r), cols));
    return Matrix::from_rows(rows);
}

Json fock_to_json(const FockData& data) {
    Json c = Json::array();
    for (const auto& level : data.C) {
        Json row = Json::array();
        for (const Rational& v : level) row.push_back(to_string(v));
        c.push_back(row);
    }
    Json t = Json::array();
    for (const auto& per_level : data.T) {
        Json row = Json::array();
        for (const Matrix& m : per_level) row.push_back(matrix_to_json(m));
        t.push_back(row);
    }
    return {{"C", c}, {"T", t}, {"d", data.d}, {"depth", data.depth}};
}

FockData fock_from_json(const Json& doc) {
    FockData data;
    data.d = integer(doc, "d", 1);
    data.depth = integer(doc, "depth", 0);
    const Json& c = member(doc, "C");
    const Json& t = member(doc, "T");
    if (!c.is_array() || c.size() != static_cast<std::size_t>(data.depth)) {
        throw ParseError("key \"C\" must list " + std::to_string(data.depth) + " levels");
    }
    if (!t.is_array() || t.size() != static_cast<std::size_t>(data.d)) {
        throw ParseError("key \"T\" must list " + std::to_string(data.d) + " variables");
    }
    for (int k = 1; k <= data.depth; ++k) {
        const auto ku = static_cast<std::size_t>(k - 1);
        data.C.push_back(rational_array(c[ku], indexed("C", ku), data.level_size(k)));
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
        const std::string key = indexed("T", i);
        if (!t[i].is_array() || t[i].size() != static_cast<std::size_t>(data.depth) + 1) {
            throw ParseError("key \"" + key + "\" must list " + std::to_string(data.depth + 1) + " levels");
        }
        std::vector<Matrix> levels;
        for (int k = 0; k <= data.depth; ++k) {
            const auto ku = static_cast<std::size_t>(k);
            levels.push_back(square_matrix(t[i][ku], indexed(key, ku), data.level_size(k)));
        }
        data.T.push_back(std::move(levels));
    }
    return data;
}

Json params_to_json(const MeixnerParams& p) {
    Json t = Json::array();
    for (const Matrix& m : p.T) t.push_back(matrix_to_json(m));
    return {{"C", matrix_to_json(p.C)}, {"T", t}, {"d", p.d}};
}

MeixnerParams params_from_json(const Json& doc) {
    MeixnerParams p;
    p.d = integer(doc, "d", 1);
    const auto d = static_cast<std::size_t>(p.d);
    const Json& t = member(doc, "T");
    if (!t.is_array() || t.size() != d) throw ParseError("key \"T\" must list " + std::to_string(d) + " matrices");
    for (std::size_t i = 0; i < d; ++i) p.T.push_back(square_matrix(t[i], indexed("T", i), d));
    p.C = square_matrix(member(doc, "C"), "C", d);
    return p;
}

std::pair<std::vector<Matrix>, std::size_t> matrix_model_from_json(const Json& doc) {
    const Json& omega = member(doc, "omega");
    if (!omega.is_number_unsigned()) throw ParseError("key \"omega\" must be a nonnegative integer");
    const Json& x = member(doc, "X");
    if (!x.is_array() || x.empty()) throw ParseError("key \"X\" must be a nonempty array of matrices");
    std::vector<Matrix> out;
    std::size_t size = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const std::string key = indexed("X", i);
        if (i == 0) size = matrix_from_json(x[0], key).rows();
        out.push_back(square_matrix(x[i], key, size));
    }
    const auto index = omega.get<std::size_t>();
    if (index >= size) throw ParseError("key \"omega\" out of range for " + std::to_string(size) + "x" + std::to_string(size) + " matrices");
    return {out, index};
}

Json decomposition_to_json(const BooleanFockDecomposition& dec) {
    Json lambda = Json::array();
    for (const Rational& v : dec.lambda) lambda.push_back(to_string(v));
    Json xi = Json::array();
    for (const auto& vec : dec.xi) {
        Json row = Json::array();
        for (const Rational& v : vec) row.push_back(to_string(v));
        xi.push_back(row);
    }
    Json t = Json::array();
    for (const Matrix& m : dec.T) t.push_back(matrix_to_json(m));
    return {{"T", t}, {"lambda", lambda}, {"omega", dec.omega}, {"xi", xi}};
}

}  // namespace ncprob::documents
