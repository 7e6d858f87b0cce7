#pragma once

#include <optional>
#include <vector>

#include "xladder/alpha.hpp"

namespace xladder {

// Exact solution of M x = b over Q(alpha).
struct LinearSolution {
    std::optional<std::vector<AlphaRat>> particular;  // absent when inconsistent
    std::vector<std::vector<AlphaRat>> nullspace;     // basis of the kernel of M
};

LinearSolution solve_linear(std::vector<std::vector<AlphaRat>> m, std::vector<AlphaRat> b);

} // namespace xladder
