#include "offswitch/cli/artifacts.hpp"

#include <cstdio>
#include <fstream>
#include <system_error>
#include <unistd.h>

namespace offswitch::cli {

namespace {

void append_optional(std::string& out, const std::optional<double>& x) {
    out += ',';
    if (x) out += format_double(*x);
}

}  // namespace

std::string format_double(double x) {
    char buf[32];
    const int n = std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf, static_cast<std::size_t>(n));
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "mu,sigma,beta,delta,info_term,correction_term,optimal\n";
    for (const SweepRow& row : rows) {
        out += format_double(row.mu);
        out += ',';
        out += format_double(row.sigma);
        append_optional(out, row.beta);
        out += ',';
        out += format_double(row.delta);
        append_optional(out, row.info_term);
        append_optional(out, row.correction_term);
        out += ',';
        out += to_string(row.optimal);
        out += '\n';
    }
    return out;
}

std::string designer_csv(const DesignerResult& result) {
    std::string out = "assumed_noise_std,posterior_std,v_mean,v_stderr,delta_mean,delta_stderr\n";
    for (const DesignerRow& row : result.rows) {
        for (double x : {row.assumed_noise_std, row.posterior_std, row.v_mean, row.v_stderr,
                         row.delta_mean}) {
            out += format_double(x);
            out += ',';
        }
        out += format_double(row.delta_stderr);
        out += '\n';
    }
    return out;
}

void check_output_path(const std::filesystem::path& path) {
    if (path.empty()) throw OutputError("output path is empty");
    const std::filesystem::path parent =
        path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
    std::error_code ec;
    if (!std::filesystem::is_directory(parent, ec)) {
        throw OutputError("cannot write " + path.string() + ": " + parent.string() +
                          " is not a directory");
    }
    if (std::filesystem::is_directory(path, ec)) {
        throw OutputError("cannot write " + path.string() + ": it is a directory");
    }
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
    check_output_path(path);
    std::filesystem::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
        if (!file) throw OutputError("cannot open " + tmp.string() + " for writing");
        file.write(content.data(), static_cast<std::streamsize>(content.size()));
        file.flush();
        if (!file) {
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw OutputError("write to " + tmp.string() + " failed");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        std::filesystem::remove(tmp, ignored);
        throw OutputError("cannot rename " + tmp.string() + " to " + path.string() + ": " +
                          ec.message());
    }
}

}  // namespace offswitch::cli
