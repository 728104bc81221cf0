#pragma once

// Text formats for rings, modules, and polynomials.
//
// Ring:   field 13 / var x 2 / var y 1 / rel x^2+y^4
// Module: gens 0 1 / row 0 col 0 : x*y   (indices are 0-based)

#include <string>
#include <vector>

#include "gchar/module.hpp"
#include "gchar/polynomial.hpp"
#include "gchar/ring.hpp"

namespace gchar {

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names, PrimeField field);

GradedRing parse_ring(const std::string& text);
GradedModule parse_module(const std::string& text, const GradedRing& ring);

GradedRing load_ring(const std::string& path);
GradedModule load_module(const std::string& path, const GradedRing& ring);

std::string ring_to_text(const GradedRing& ring);
std::string module_to_text(const GradedModule& m);

}  // namespace gchar
