#ifndef GALHULL_GALHULL_HPP
#define GALHULL_GALHULL_HPP

// Umbrella header. JSON support lives in json_io.hpp and needs nlohmann/json on the include path.

#include "arith.hpp"
#include "constructions.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "grs.hpp"
#include "linear_code.hpp"
#include "matrix.hpp"
#include "number_theory.hpp"
#include "poly.hpp"

#endif  // GALHULL_GALHULL_HPP
