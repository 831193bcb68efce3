#include "monores/limits.hpp"

#include <cstdlib>
#include <string>

namespace monores {

namespace {

void override_from(const char* name, std::size_t& field) {
    if (const char* raw = std::getenv(name); raw != nullptr && *raw != '\0') {
        field = static_cast<std::size_t>(std::stoull(raw));
    }
}

} // namespace

Limits Limits::from_environment() {
    Limits limits;
    override_from("MONORES_MAX_GENERATORS", limits.max_generators);
    override_from("MONORES_MAX_PATHS", limits.max_gradient_paths);
    return limits;
}

} // namespace monores
