#include <slporbit/json_io.hpp>

#include <slporbit/slp.hpp>

#include <nlohmann/json.hpp>

namespace slporbit {

Matrix<Rational> matrix_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(ParseErrorKind::Syntax, std::string("bad matrix JSON: ") + e.what());
    }
    if (!j.is_array() || j.empty())
        throw ParseError(ParseErrorKind::Syntax, "matrix JSON must be a non-empty array of rows");
    std::size_t rows = j.size(), cols = j[0].size();
    Matrix<Rational> m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw ParseError(ParseErrorKind::Syntax, "matrix JSON rows have unequal lengths");
        for (std::size_t c = 0; c < cols; ++c) {
            const auto& cell = j[r][c];
            try {
                if (cell.is_number_integer())
                    m.at(r, c) = make_rational(cell.get<long>());
                else if (cell.is_string())
                    m.at(r, c) = rational_from_string(cell.get<std::string>());
                else
                    throw std::invalid_argument("matrix entries must be integers or strings");
            } catch (const std::invalid_argument& e) {
                throw ParseError(ParseErrorKind::Syntax, e.what());
            }
        }
    }
    return m;
}

std::string matrix_to_json(const Matrix<Rational>& m) {
    nlohmann::json j = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(r, c)));
        j.push_back(row);
    }
    return j.dump();
}

std::string matrix_to_json(const Matrix<Quad>& m) {
    nlohmann::json j = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        j.push_back(row);
    }
    return j.dump();
}

}  // namespace slporbit
