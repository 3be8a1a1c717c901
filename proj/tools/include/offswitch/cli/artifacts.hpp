#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "offswitch/designer.hpp"
#include "offswitch/sweeps.hpp"

namespace offswitch::cli {

// Raised when an artifact cannot be written.
class OutputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// 17 significant digits, so every double round-trips.
std::string format_double(double x);

std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string designer_csv(const DesignerResult& result);

// Checked before any computation: the parent directory must exist.
void check_output_path(const std::filesystem::path& path);

// Writes to a sibling temp file, then renames over `path`.
void write_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace offswitch::cli
