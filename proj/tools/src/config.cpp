#include "offswitch/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "offswitch/errors.hpp"
#include "offswitch/sweeps.hpp"

namespace offswitch::cli {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::string& prefix,
                    std::initializer_list<std::string_view> known) {
    for (const auto& [key, value] : obj.items()) {
        bool found = false;
        for (std::string_view k : known) found = found || key == k;
        if (!found) throw ConfigError(prefix + key, "unknown field");
    }
}

const json& require(const json& obj, const std::string& prefix, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) throw ConfigError(prefix + key, "missing required field");
    return *it;
}

double number(const json& value, const std::string& field) {
    if (!value.is_number()) throw ConfigError(field, "expected a number");
    return value.get<double>();
}

std::uint64_t unsigned_integer(const json& value, const std::string& field) {
    if (!value.is_number_unsigned()) throw ConfigError(field, "expected a non-negative integer");
    return value.get<std::uint64_t>();
}

std::vector<double> number_list(const json& value, const std::string& field) {
    if (!value.is_array()) throw ConfigError(field, "expected an array of numbers");
    std::vector<double> out;
    out.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i) {
        out.push_back(number(value[i], field + "[" + std::to_string(i) + "]"));
    }
    return out;
}

HumanPolicy parse_human(const json& obj) {
    if (!obj.is_object()) throw ConfigError("human", "expected an object");
    const json& family_value = require(obj, "human.", "family");
    if (!family_value.is_string()) throw ConfigError("human.family", "expected a string");
    const std::string family = family_value.get<std::string>();
    try {
        if (family == "rational") {
            reject_unknown(obj, "human.", {"family"});
            return HumanPolicy::rational();
        }
        if (family == "boltzmann") {
            reject_unknown(obj, "human.", {"family", "beta"});
            return HumanPolicy::boltzmann(number(require(obj, "human.", "beta"), "human.beta"));
        }
        if (family == "constant") {
            reject_unknown(obj, "human.", {"family", "p"});
            return HumanPolicy::constant(number(require(obj, "human.", "p"), "human.p"));
        }
        if (family == "tabular") {
            reject_unknown(obj, "human.", {"family", "breakpoints", "values"});
            return HumanPolicy::tabular(
                number_list(require(obj, "human.", "breakpoints"), "human.breakpoints"),
                number_list(require(obj, "human.", "values"), "human.values"));
        }
    } catch (const ArgumentError& e) {
        throw ConfigError("human", e.what());
    }
    throw ConfigError("human.family", "expected rational, boltzmann, constant or tabular");
}

double parse_number(std::string_view text, std::string_view spec) {
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw ArgumentError("bad number '" + std::string(text) + "' in axis spec '" +
                            std::string(spec) + "'");
    }
    return x;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t begin = 0;
    while (true) {
        const std::size_t end = text.find(sep, begin);
        parts.push_back(text.substr(begin, end - begin));
        if (end == std::string_view::npos) break;
        begin = end + 1;
    }
    return parts;
}

}  // namespace

DesignerScenario parse_designer_config(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError("<document>", e.what());
    }
    if (!doc.is_object()) throw ConfigError("<document>", "expected a JSON object");
    reject_unknown(doc, "", {"prior_mean", "prior_std", "true_noise_std", "assumed_noise_grid",
                             "n_actions", "n_trials", "seed", "human"});

    DesignerScenario s;
    s.prior_mean = number(require(doc, "", "prior_mean"), "prior_mean");
    s.prior_std = number(require(doc, "", "prior_std"), "prior_std");
    s.true_noise_std = number(require(doc, "", "true_noise_std"), "true_noise_std");
    s.assumed_noise_grid = number_list(require(doc, "", "assumed_noise_grid"), "assumed_noise_grid");
    s.n_actions = unsigned_integer(require(doc, "", "n_actions"), "n_actions");
    s.n_trials = unsigned_integer(require(doc, "", "n_trials"), "n_trials");
    s.seed = unsigned_integer(require(doc, "", "seed"), "seed");
    if (const auto it = doc.find("human"); it != doc.end()) s.human = parse_human(*it);
    return s;
}

DesignerScenario load_designer_config(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ConfigError("<document>", "cannot read " + path.string());
    std::ostringstream text;
    text << file.rdbuf();
    return parse_designer_config(text.str());
}

std::vector<double> parse_axis(std::string_view spec) {
    if (spec.find(':') == std::string_view::npos) {
        std::vector<double> values;
        for (std::string_view part : split(spec, ',')) values.push_back(parse_number(part, spec));
        return values;
    }
    const auto parts = split(spec, ':');
    if (parts.size() != 3 && parts.size() != 4) {
        throw ArgumentError("axis spec '" + std::string(spec) + "' is not start:stop:count[:lin|log]");
    }
    const double start = parse_number(parts[0], spec);
    const double stop = parse_number(parts[1], spec);
    std::size_t count = 0;
    const auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), count);
    if (ec != std::errc() || ptr != parts[2].data() + parts[2].size() || count == 0) {
        throw ArgumentError("axis spec '" + std::string(spec) + "' needs a positive integer count");
    }
    const std::string_view scale = parts.size() == 4 ? parts[3] : "lin";
    if (scale == "lin") return linspace(start, stop, count);
    if (scale == "log") {
        if (!(start > 0.0 && stop > 0.0)) {
            throw ArgumentError("log axis spec '" + std::string(spec) + "' needs positive bounds");
        }
        return logspace(std::log10(start), std::log10(stop), count);
    }
    throw ArgumentError("axis spec '" + std::string(spec) + "': scale must be lin or log");
}

}  // namespace offswitch::cli
