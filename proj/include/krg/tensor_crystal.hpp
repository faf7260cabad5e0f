// Tensor products of (affine) crystals and string statistics.
#pragma once

#include "krg/crystal.hpp"

#include <map>
#include <utility>
#include <vector>

namespace krg {

// e acts on the left factor iff eps(left) > phi(right); f acts on the left
// factor iff eps(left) >= phi(right). Affine iff both inputs are.
Crystal tensor(const Crystal& a, const Crystal& b);
Crystal tensor_many(const std::vector<Crystal>& factors);

// (string length, canonical source weight) -> count, for the pair e_[j], f_[j]
using StringStats = std::map<std::pair<int, std::vector<int>>, int>;
StringStats string_statistics(const Crystal& c, int j);

}  // namespace krg
