#pragma once

#include "scenario.hpp"

namespace cwb::wb {

json matrix_json(const Matrix& m);
/// Canonical presentation (elementary-divisor form where available) plus
/// a readable description and the length.
json module_json(const PresentedModule& m);
json morphism_json(const ModuleMorphism& f);
json complex_json(const Complex& x);
json chain_map_json(const ChainMap& f);
json object_json(const Object& x);
json arrow_json(const Arrow& f);
json length_json(std::optional<std::size_t> n);
json opt_json(const std::optional<std::size_t>& n);

}  // namespace cwb::wb
