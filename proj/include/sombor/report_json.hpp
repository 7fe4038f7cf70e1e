#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "sombor/oracle.hpp"
#include "sombor/structure.hpp"

namespace sombor {

inline std::string format_fixed(double value, int decimals = 9) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*f", decimals, value);
    return buffer;
}

inline nlohmann::json to_json(const ClassSignature& sig) {
    nlohmann::json j{{"connected", sig.connected},
                     {"bridges", sig.bridge_count},
                     {"kappa", sig.vertex_connectivity},
                     {"lambda", sig.edge_connectivity},
                     {"unicyclic", sig.is_unicyclic}};
    if (sig.unique_cycle_length)
        j["cycle_len"] = *sig.unique_cycle_length;
    else
        j["cycle_len"] = nullptr;
    return j;
}

namespace oracle {

inline nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json j{{"n", report.n},
                     {"class_kind", class_kind_name(report.class_kind)},
                     {"k", report.k},
                     {"direction", direction_name(report.direction)},
                     {"witness_graphs", report.witness_graphs},
                     {"family_match", report.family_match},
                     {"class_size", report.class_size},
                     {"status", report.status}};
    if (report.bound_value) j["bound_value"] = *report.bound_value;
    if (report.achieved_value) j["achieved_value"] = *report.achieved_value;
    return j;
}

inline nlohmann::json to_json(const std::vector<VerificationReport>& reports) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& report : reports) j.push_back(to_json(report));
    return j;
}

inline std::string csv_header() {
    return "n,class_kind,k,direction,bound_value,achieved_value,class_size,witness_count,"
           "family_match,status";
}

inline std::string to_csv_row(const VerificationReport& report) {
    std::string row = std::to_string(report.n);
    row += ',';
    row += class_kind_name(report.class_kind);
    row += ',' + std::to_string(report.k);
    row += ',';
    row += direction_name(report.direction);
    row += ',';
    if (report.bound_value) row += format_fixed(*report.bound_value);
    row += ',';
    if (report.achieved_value) row += format_fixed(*report.achieved_value);
    row += ',' + std::to_string(report.class_size);
    row += ',' + std::to_string(report.witness_graphs.size());
    row += ',';
    row += report.family_match ? "true" : "false";
    row += ',' + report.status;
    return row;
}

inline std::string to_csv(const std::vector<VerificationReport>& reports) {
    std::string out = csv_header();
    out += '\n';
    for (const auto& report : reports) {
        out += to_csv_row(report);
        out += '\n';
    }
    return out;
}

}  // namespace oracle
}  // namespace sombor
