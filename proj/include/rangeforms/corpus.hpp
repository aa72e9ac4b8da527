#pragma once

#include <string>
#include <vector>

#include "rangeforms/interval.hpp"
#include "rangeforms/poly.hpp"

namespace rangeforms {

// Built-in test functions: clover-4, clover-5, clover-8, grass, cardioid,
// lemniscate, octic-flower. Throws std::invalid_argument on unknown names.
Poly2 corpus(const std::string& name);

const std::vector<std::string>& corpus_names();

// Default benchmark domain for a corpus function.
Box2 corpus_domain(const std::string& name);

}  // namespace rangeforms
