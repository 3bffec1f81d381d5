#include "iqmodel/reports.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "iqmodel/errors.hpp"

namespace iqm {

namespace {

using nlohmann::json;

double require_number(const json& node, const std::string& where) {
    if (!node.is_number()) {
        throw ConfigError("config error at " + where + ": expected a number");
    }
    return node.get<double>();
}

int require_int(const json& node, const std::string& where) {
    if (!node.is_number_integer()) {
        throw ConfigError("config error at " + where + ": expected an integer");
    }
    return node.get<int>();
}

const json& require_field(const json& node, const char* key, const std::string& where) {
    auto it = node.find(key);
    if (it == node.end()) {
        throw ConfigError("config error at " + where + ": missing field '" + key + "'");
    }
    return *it;
}

std::shared_ptr<const ArrivalDist> parse_arrival(const json& node, const std::string& where) {
    if (!node.is_object()) {
        throw ConfigError("config error at " + where + ": expected an object");
    }
    const json& kind_node = require_field(node, "kind", where);
    if (!kind_node.is_string()) {
        throw ConfigError("config error at " + where + ".kind: expected a string");
    }
    const std::string kind = kind_node.get<std::string>();
    if (kind == "poisson") {
        return std::make_shared<PoissonArrival>(
            require_number(require_field(node, "mean", where), where + ".mean"));
    }
    if (kind == "table") {
        const json& pmf = require_field(node, "pmf", where);
        if (!pmf.is_array() || pmf.empty()) {
            throw ConfigError("config error at " + where + ".pmf: expected a non-empty array");
        }
        std::vector<double> masses;
        masses.reserve(pmf.size());
        for (std::size_t k = 0; k < pmf.size(); ++k) {
            masses.push_back(require_number(pmf[k], where + ".pmf[" + std::to_string(k) + "]"));
        }
        return std::make_shared<TableArrival>(std::move(masses));
    }
    throw ConfigError("config error at " + where + ".kind: unknown arrival kind '" + kind +
                      "' (expected 'poisson' or 'table')");
}

}  // namespace

ModelConfig parse_model_config(const std::string& json_text, const std::string& source_name) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError("config error in " + source_name + ": " + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("config error in " + source_name + ": top level must be an object");
    }

    ModelConfig config;
    config.capacity = require_int(require_field(doc, "N", source_name), "N");

    const json& types = require_field(doc, "types", source_name);
    if (!types.is_array() || types.empty()) {
        throw ConfigError("config error at types: expected a non-empty array");
    }
    for (std::size_t t = 0; t < types.size(); ++t) {
        const std::string where = "types[" + std::to_string(t) + "]";
        const json& node = types[t];
        if (!node.is_object()) {
            throw ConfigError("config error at " + where + ": expected an object");
        }
        InstructionType type;
        if (auto it = node.find("name"); it != node.end() && it->is_string()) {
            type.name = it->get<std::string>();
        } else {
            type.name = "I" + std::to_string(t + 1);
        }
        type.arrival = parse_arrival(require_field(node, "arrival", where), where + ".arrival");
        type.rho = require_number(require_field(node, "rho", where), where + ".rho");
        type.fu_count = require_int(require_field(node, "fu", where), where + ".fu");
        if (auto it = node.find("unit_cost"); it != node.end()) {
            type.unit_cost = require_number(*it, where + ".unit_cost");
        }
        config.types.push_back(std::move(type));
    }
    config.validate();
    return config;
}

ModelConfig load_model_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("config error: cannot open '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_model_config(buffer.str(), path.filename().string());
}

std::string format_fixed(double value, int places) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", places, value);
    return buf;
}

namespace {

std::string format_sci(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6e", value);
    return buf;
}

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out + "\"";
}

// NaN has no JSON representation; emit null (flow ratios of starved types).
std::string json_number(double value) {
    return std::isfinite(value) ? format_fixed(value) : std::string("null");
}

void write_number_array(std::ostream& out, const std::vector<double>& values) {
    out << "[";
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k > 0) out << ", ";
        out << json_number(values[k]);
    }
    out << "]";
}

void write_config_block(std::ostream& out, const ModelConfig& config, const char* indent) {
    out << indent << "\"config\": {\n";
    out << indent << "  \"N\": " << config.capacity << ",\n";
    out << indent << "  \"types\": [";
    for (std::size_t t = 0; t < config.types.size(); ++t) {
        const auto& type = config.types[t];
        if (t > 0) out << ",";
        out << "\n"
            << indent << "    {\"name\": " << json_string(type.name) << ", \"arrival\": "
            << json_string(type.arrival->describe()) << ", \"rho\": " << format_fixed(type.rho)
            << ", \"fu\": " << type.fu_count << ", \"unit_cost\": " << format_fixed(type.unit_cost)
            << "}";
    }
    out << "\n" << indent << "  ]\n" << indent << "}";
}

void write_warning_array(std::ostream& out, const std::vector<std::string>& warnings) {
    out << "[";
    for (std::size_t k = 0; k < warnings.size(); ++k) {
        if (k > 0) out << ", ";
        out << json_string(warnings[k]);
    }
    out << "]";
}

}  // namespace

void write_solve_report(std::ostream& out, const SteadyStateReport& report,
                        const ModelConfig& config) {
    out << "{\n";
    out << "  \"command\": \"solve\",\n";
    write_config_block(out, config, "  ");
    out << ",\n";
    out << "  \"pi\": ";
    write_number_array(out, report.pi);
    out << ",\n";
    out << "  \"L_per_type\": ";
    write_number_array(out, report.queue_length);
    out << ",\n";
    out << "  \"L_total\": " << json_number(report.total_queue_length) << ",\n";
    out << "  \"flow_ratio\": ";
    write_number_array(out, report.flow_ratio);
    out << ",\n";
    out << "  \"p_full\": " << json_number(report.p_full) << ",\n";
    out << "  \"diagnostics\": {\n";
    out << "    \"iterations\": " << report.iterations << ",\n";
    out << "    \"residual\": \"" << format_sci(report.residual) << "\",\n";
    out << "    \"warnings\": ";
    write_warning_array(out, report.warnings);
    out << "\n  }\n";
    out << "}\n";
}

void write_pi_csv(std::ostream& out, const std::vector<double>& pi, const StateSpace& space,
                  const ModelConfig& config) {
    for (int t = 0; t < config.type_count(); ++t) {
        out << "n_" << (t + 1) << ",";
    }
    out << "pi\n";
    for (std::size_t k = 0; k < space.size(); ++k) {
        for (int value : space[k]) {
            out << value << ",";
        }
        out << format_fixed(pi[k]) << "\n";
    }
}

void write_sim_report(std::ostream& out, const SimReport& report, const ModelConfig& config) {
    out << "{\n";
    out << "  \"command\": \"simulate\",\n";
    write_config_block(out, config, "  ");
    out << ",\n";
    out << "  \"generator\": " << json_string(report.generator) << ",\n";
    out << "  \"seed\": " << report.seed << ",\n";
    out << "  \"cycles\": " << report.cycles << ",\n";
    out << "  \"warmup\": " << report.warmup << ",\n";
    out << "  \"empirical_pi\": ";
    write_number_array(out, report.empirical_pi);
    out << ",\n";
    out << "  \"empirical_L_per_type\": ";
    write_number_array(out, report.empirical_queue_length);
    out << ",\n";
    out << "  \"empirical_L_total\": " << json_number(report.empirical_total_queue_length);
    if (report.tv_distance) {
        out << ",\n  \"tv_distance\": " << json_number(*report.tv_distance);
    }
    out << "\n}\n";
}

void write_sim_pi_csv(std::ostream& out, const SimReport& report, const StateSpace& space,
                      const ModelConfig& config) {
    write_pi_csv(out, report.empirical_pi, space, config);
}

void write_optimize_report(std::ostream& out, const OptimizationResult& result,
                           const ModelConfig& config, const std::string& algorithm,
                           const std::optional<std::string>& convexity_diagnostic) {
    out << "{\n";
    out << "  \"command\": \"optimize\",\n";
    write_config_block(out, config, "  ");
    out << ",\n";
    out << "  \"algorithm\": " << json_string(algorithm) << ",\n";
    out << "  \"best_fu\": [";
    for (std::size_t t = 0; t < result.best_fu.size(); ++t) {
        if (t > 0) out << ", ";
        out << result.best_fu[t];
    }
    out << "],\n";
    out << "  \"best_cost\": " << json_number(result.best_cost) << ",\n";
    out << "  \"evaluations\": " << result.evaluations << ",\n";
    out << "  \"convexity_violation\": "
        << (convexity_diagnostic ? json_string(*convexity_diagnostic) : std::string("null"))
        << "\n";
    out << "}\n";
}

void write_surface_csv(std::ostream& out, const OptimizationResult& result, int type_count) {
    for (int t = 0; t < type_count; ++t) {
        out << "fu_" << (t + 1) << ",";
    }
    for (int t = 0; t < type_count; ++t) {
        out << "L_" << (t + 1) << ",";
    }
    out << "cost\n";
    for (const SurfacePoint& point : result.surface) {
        for (int fu : point.fu) {
            out << fu << ",";
        }
        for (double l : point.queue_length) {
            out << format_fixed(l) << ",";
        }
        out << format_fixed(point.cost) << "\n";
    }
}

void write_validate_report(std::ostream& out, const SteadyStateReport& analytic,
                           const SimReport& empirical, const ModelConfig& config,
                           double tv, double threshold, bool passed) {
    out << "{\n";
    out << "  \"command\": \"validate\",\n";
    write_config_block(out, config, "  ");
    out << ",\n";
    out << "  \"tv_distance\": " << json_number(tv) << ",\n";
    out << "  \"threshold\": " << json_number(threshold) << ",\n";
    out << "  \"passed\": " << (passed ? "true" : "false") << ",\n";
    out << "  \"analytic_L_per_type\": ";
    write_number_array(out, analytic.queue_length);
    out << ",\n";
    out << "  \"empirical_L_per_type\": ";
    write_number_array(out, empirical.empirical_queue_length);
    out << ",\n";
    out << "  \"analytic_pi\": ";
    write_number_array(out, analytic.pi);
    out << ",\n";
    out << "  \"empirical_pi\": ";
    write_number_array(out, empirical.empirical_pi);
    out << "\n}\n";
}

void print_solve_summary(std::ostream& out, const SteadyStateReport& report,
                         const ModelConfig& config) {
    const int T = config.type_count();
    out << "model: N=" << config.capacity << ", " << T << (T == 1 ? " type" : " types") << ", "
        << report.pi.size() << " states\n";
    out << "solved in " << report.iterations << " iterations (residual "
        << format_sci(report.residual) << ")\n";
    out << "type            arrival                    rho     fu   L          R\n";
    for (int t = 0; t < T; ++t) {
        const auto& type = config.types[static_cast<std::size_t>(t)];
        char line[160];
        std::snprintf(line, sizeof(line), "%-15s %-26s %-7.3f %-4d %-10.6f %s\n",
                      type.name.c_str(), type.arrival->describe().c_str(), type.rho,
                      type.fu_count,
                      report.queue_length[static_cast<std::size_t>(t)],
                      std::isfinite(report.flow_ratio[static_cast<std::size_t>(t)])
                          ? format_fixed(report.flow_ratio[static_cast<std::size_t>(t)]).c_str()
                          : "undefined");
        out << line;
    }
    out << "L_total " << format_fixed(report.total_queue_length) << "   p_full "
        << format_fixed(report.p_full) << "\n";
    for (const std::string& warning : report.warnings) {
        out << "warning: " << warning << "\n";
    }

    // Uneven flow ratios mean one type's FU pool is working harder than the
    // rest; report the equalizing scale factor as a suggestion only.
    if (T >= 2) {
        int slowest = -1;
        int fastest = -1;
        for (int t = 0; t < T; ++t) {
            const double r = report.flow_ratio[static_cast<std::size_t>(t)];
            if (!std::isfinite(r)) continue;
            if (slowest < 0 || r < report.flow_ratio[static_cast<std::size_t>(slowest)]) slowest = t;
            if (fastest < 0 || r > report.flow_ratio[static_cast<std::size_t>(fastest)]) fastest = t;
        }
        if (slowest >= 0 && fastest >= 0 && slowest != fastest) {
            const double factor = report.flow_ratio[static_cast<std::size_t>(fastest)] /
                                  report.flow_ratio[static_cast<std::size_t>(slowest)];
            if (factor > 1.0) {
                out << "suggestion: flow ratios are uneven; scaling the FU count of type '"
                    << config.types[static_cast<std::size_t>(slowest)].name << "' by "
                    << format_fixed(factor, 3)
                    << " would match the best-flowing type (theoretical heuristic, no"
                       " optimality claim)\n";
            }
        }
    }
}

}  // namespace iqm
