#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace coulscat {

inline constexpr const char* kToolVersion = "0.1.0";

/// FNV-1a 64-bit hash; payload checksums only.
std::uint64_t fnv1a64(std::string_view bytes);

/// Column-oriented numeric result set.  Footnotes are emitted as trailing
/// '# ...' comment lines in CSV and as a string array in JSON.
struct DataTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> footnotes;
};

/// Provenance record: resolved configuration plus version, timestamp and a
/// checksum of the CSV payload.  The data payload itself stays timestamp
/// free so identical runs are byte identical.
struct RunManifest {
    std::string command;
    std::map<std::string, std::string> config;
    std::string version = kToolVersion;
    std::string timestamp;
    std::string checksum;
};

/// 12 significant digits, scientific, C locale.
std::string format_value(double v);

std::string to_csv(const DataTable& table);
std::string manifest_to_json(const RunManifest& manifest);
std::string to_json(const DataTable& table, const RunManifest& manifest);

std::string iso8601_utc_now();

RunManifest make_manifest(std::string command, std::map<std::string, std::string> config,
                          const std::string& csv_payload);

/// Writes CSV payload to `path` and its manifest alongside as
/// `path + ".manifest.json"`.
void write_csv_with_manifest(const std::string& path, const DataTable& table,
                             const RunManifest& manifest);

void write_text_file(const std::string& path, const std::string& contents);

}  // namespace coulscat
