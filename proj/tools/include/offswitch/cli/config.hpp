#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "offswitch/designer.hpp"

namespace offswitch::cli {

// A config that does not match the schema. field() is the dotted key at fault.
class ConfigError : public std::invalid_argument {
public:
    ConfigError(std::string field, const std::string& what)
        : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Designer scenario from JSON. Keys are the DesignerScenario field names;
/// all are required except `human`, e.g. {"family": "boltzmann", "beta": 0.5}.
/// Unknown keys are rejected.
DesignerScenario parse_designer_config(std::string_view json_text);
DesignerScenario load_designer_config(const std::filesystem::path& path);

/// Axis values from "start:stop:count", "start:stop:count:log" (geometric
/// spacing between start and stop) or a comma list "a,b,c".
std::vector<double> parse_axis(std::string_view spec);

}  // namespace offswitch::cli
