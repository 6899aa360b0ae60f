#pragma once

#include <slporbit/matrix.hpp>
#include <slporbit/quad.hpp>
#include <slporbit/rational.hpp>

#include <string>

namespace slporbit {

// Dense array-of-arrays with entries as exact fraction strings ("3", "-1/2");
// plain JSON integers are accepted on input.
Matrix<Rational> matrix_from_json(const std::string& text);
std::string matrix_to_json(const Matrix<Rational>& m);
std::string matrix_to_json(const Matrix<Quad>& m);

}  // namespace slporbit
