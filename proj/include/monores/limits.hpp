#pragma once

#include <cstddef>

namespace monores {

/// Resource caps shared by the constructors. Every Taylor-derived
/// construction enumerates all 2^q cells, so q is capped.
struct Limits {
    std::size_t max_generators = 20;
    std::size_t max_gradient_paths = 1'000'000;

    /// Defaults overridden by MONORES_MAX_GENERATORS / MONORES_MAX_PATHS.
    static Limits from_environment();
};

} // namespace monores
