#include "starprod/json_io.hpp"

#include "starprod/errors.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace starprod {

namespace {

double double_field(const nlohmann::json& j, const char* key, const char* context) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number()) {
        throw InputError(std::string(context) + ": expected an object with numeric '" + key +
                         "'");
    }
    return j.at(key).get<double>();
}

int int_field(const nlohmann::json& j, const char* key, const char* context) {
    if (!j.contains(key) || !j.at(key).is_number_integer()) {
        throw InputError(std::string(context) + ": expected integer field '" + key + "'");
    }
    return j.at(key).get<int>();
}

Polynomial::MultiIndex parse_multi_index(const std::string& key, int m) {
    Polynomial::MultiIndex index;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(part, &used);
            if (used != part.size()) {
                throw std::invalid_argument(part);
            }
            index.push_back(v);
        } catch (const std::exception&) {
            throw InputError("beta key '" + key + "' is not a comma-joined integer list");
        }
    }
    if (static_cast<int>(index.size()) != m) {
        throw InputError("beta key '" + key + "' has " + std::to_string(index.size()) +
                         " exponents, expected " + std::to_string(m));
    }
    for (int v : index) {
        if (v < 0) {
            throw InputError("beta key '" + key + "' has a negative exponent");
        }
    }
    return index;
}

std::string format_multi_index(const Polynomial::MultiIndex& index) {
    std::string out;
    for (std::size_t i = 0; i < index.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(index[i]);
    }
    return out;
}

Polynomial beta_from_json(const nlohmann::json& j, int m, const char* context) {
    if (!j.is_object()) {
        throw InputError(std::string(context) + ": beta must be an object");
    }
    Polynomial beta(m);
    for (const auto& [key, value] : j.items()) {
        beta.add_term(parse_multi_index(key, m), complex_from_json(value));
    }
    return beta;
}

nlohmann::json beta_to_json(const Polynomial& beta) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [index, coeff] : beta.terms()) {
        j[format_multi_index(index)] = complex_to_json(coeff);
    }
    return j;
}

}  // namespace

nlohmann::json complex_to_json(const Complex& z) {
    return nlohmann::json{{"re", z.real()}, {"im", z.imag()}};
}

Complex complex_from_json(const nlohmann::json& j) {
    return Complex{double_field(j, "re", "complex scalar"),
                   double_field(j, "im", "complex scalar")};
}

nlohmann::json matrix_to_json(const CMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.size(); ++j) {
            row.push_back(complex_to_json(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

CMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) {
        throw InputError("matrix must be a non-empty array of rows");
    }
    const int n = static_cast<int>(j.size());
    CMatrix m(n);
    for (int i = 0; i < n; ++i) {
        const auto& row = j.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != n) {
            throw InputError("matrix row " + std::to_string(i) + " is not length " +
                             std::to_string(n));
        }
        for (int k = 0; k < n; ++k) {
            m(i, k) = complex_from_json(row.at(static_cast<std::size_t>(k)));
        }
    }
    return m;
}

nlohmann::json cocycle_to_json(const StarCocycle& cocycle) {
    return nlohmann::json{{"m", cocycle.dimension()},
                          {"theta", matrix_to_json(cocycle.theta())},
                          {"beta", beta_to_json(cocycle.beta())}};
}

StarCocycle cocycle_from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw InputError("cocycle document must be a JSON object");
    }
    const int m = int_field(j, "m", "cocycle");
    if (m < 1) {
        throw InputError("cocycle dimension must be >= 1, got " + std::to_string(m));
    }
    if (!j.contains("theta")) {
        throw InputError("cocycle document is missing 'theta'");
    }
    const CMatrix theta = matrix_from_json(j.at("theta"));
    if (theta.size() != m) {
        throw InputError("theta is " + std::to_string(theta.size()) + "x" +
                         std::to_string(theta.size()) + " but m = " + std::to_string(m));
    }
    Polynomial beta(m);
    if (j.contains("beta")) {
        beta = beta_from_json(j.at("beta"), m, "cocycle");
    }
    // Antisymmetry, constant term, and the degree cap are semantic rules:
    // StarCocycle's constructor reports them as ValidationError.
    return StarCocycle(theta, beta);
}

nlohmann::json modefield_to_json(const ModeField& field) {
    nlohmann::json modes = nlohmann::json::array();
    for (const auto& [freq, coeff] : field.modes()) {
        nlohmann::json freq_json = nlohmann::json::array();
        for (int i = 0; i < freq.dimension(); ++i) {
            freq_json.push_back(format_rational(freq[i]));
        }
        modes.push_back(nlohmann::json{{"freq", std::move(freq_json)},
                                       {"coeff", complex_to_json(coeff)}});
    }
    return nlohmann::json{{"m", field.dimension()}, {"modes", std::move(modes)}};
}

ModeField modefield_from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw InputError("mode field document must be a JSON object");
    }
    const int m = int_field(j, "m", "mode field");
    if (m < 1) {
        throw InputError("mode field dimension must be >= 1, got " + std::to_string(m));
    }
    if (!j.contains("modes") || !j.at("modes").is_array()) {
        throw InputError("mode field document needs a 'modes' array");
    }
    ModeField field(m);
    for (const auto& mode : j.at("modes")) {
        if (!mode.is_object() || !mode.contains("freq") || !mode.at("freq").is_array()) {
            throw InputError("each mode needs a 'freq' array");
        }
        const auto& freq_json = mode.at("freq");
        if (static_cast<int>(freq_json.size()) != m) {
            throw InputError("mode frequency has " + std::to_string(freq_json.size()) +
                             " components, expected " + std::to_string(m));
        }
        std::vector<Rational> coords;
        coords.reserve(freq_json.size());
        for (const auto& comp : freq_json) {
            if (!comp.is_string()) {
                throw InputError("frequency components must be rational strings like \"3/2\"");
            }
            coords.push_back(parse_rational(comp.get<std::string>()));
        }
        if (!mode.contains("coeff")) {
            throw InputError("each mode needs a 'coeff'");
        }
        field.add_mode(MomentumVector(std::move(coords)),
                       complex_from_json(mode.at("coeff")));
    }
    return field;
}

nlohmann::json gauge_to_json(const GaugeCochain& gauge) {
    return nlohmann::json{{"m", gauge.dimension()}, {"beta", beta_to_json(gauge.beta())}};
}

GaugeCochain gauge_from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw InputError("gauge document must be a JSON object");
    }
    const int m = int_field(j, "m", "gauge");
    if (m < 1) {
        throw InputError("gauge dimension must be >= 1, got " + std::to_string(m));
    }
    Polynomial beta(m);
    if (j.contains("beta")) {
        beta = beta_from_json(j.at("beta"), m, "gauge");
    }
    return GaugeCochain(m, beta);
}

nlohmann::json report_to_json(const Report& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        nlohmann::json entry{{"name", c.name},
                             {"max_residual", c.max_residual},
                             {"tol", c.tol},
                             {"pass", c.pass}};
        if (!c.detail.empty()) {
            entry["detail"] = c.detail;
        }
        checks.push_back(std::move(entry));
    }
    nlohmann::json out{{"checks", std::move(checks)}, {"pass", report.pass()}};
    if (report.precondition_failed) {
        out["precondition_failed"] = true;
    }
    return out;
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path + "' for reading");
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("cannot parse '" + path + "': " + e.what());
    }
}

StarCocycle load_cocycle(const std::string& path) {
    return cocycle_from_json(load_json_file(path));
}

ModeField load_modefield(const std::string& path) {
    return modefield_from_json(load_json_file(path));
}

GaugeCochain load_gauge(const std::string& path) {
    return gauge_from_json(load_json_file(path));
}

void save_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot open '" + path + "' for writing");
    }
    out << j.dump(2) << "\n";
}

}  // namespace starprod
