#pragma once

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace monores {

inline constexpr const char* tool_version = "0.1.0";

struct CertificateCheck {
    std::string identity;
    bool pass = true;
    nlohmann::ordered_json witness;  // null when there is nothing to show
};

struct Certificate {
    std::string command;
    std::string inputs_digest;
    std::vector<CertificateCheck> checks;
    std::string tool_version = monores::tool_version;

    bool pass() const;
    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

/// Runs one command line (without the program name). Exit status: 0 on
/// success, 1 on a mathematical negative, 2 on usage, parse or resource
/// errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace monores
