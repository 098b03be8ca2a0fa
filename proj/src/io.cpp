#include "coulscat/io.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace coulscat {

std::uint64_t fnv1a64(std::string_view bytes)
{
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (const char ch : bytes) {
        hash ^= static_cast<unsigned char>(ch);
        hash *= 0x100000001b3ull;
    }
    return hash;
}

std::string format_value(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.11e", v);
    return buf;
}

std::string to_csv(const DataTable& table)
{
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += table.columns[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size())
            throw std::invalid_argument("to_csv: row width does not match header");
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_value(row[i]);
        }
        out += '\n';
    }
    for (const auto& note : table.footnotes) {
        out += "# ";
        out += note;
        out += '\n';
    }
    return out;
}

namespace {

nlohmann::json manifest_json_obj(const RunManifest& m)
{
    nlohmann::json j;
    j["command"] = m.command;
    j["config"] = m.config;  // std::map keeps keys sorted
    j["version"] = m.version;
    j["timestamp"] = m.timestamp;
    j["checksum_fnv1a64"] = m.checksum;
    return j;
}

}  // namespace

std::string manifest_to_json(const RunManifest& manifest)
{
    return manifest_json_obj(manifest).dump(2) + "\n";
}

std::string to_json(const DataTable& table, const RunManifest& manifest)
{
    nlohmann::json j;
    j["manifest"] = manifest_json_obj(manifest);
    j["columns"] = table.columns;
    j["rows"] = table.rows;
    if (!table.footnotes.empty()) j["notes"] = table.footnotes;
    return j.dump(2) + "\n";
}

std::string iso8601_utc_now()
{
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

RunManifest make_manifest(std::string command, std::map<std::string, std::string> config,
                          const std::string& csv_payload)
{
    RunManifest m;
    m.command = std::move(command);
    m.config = std::move(config);
    m.timestamp = iso8601_utc_now();
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(csv_payload)));
    m.checksum = buf;
    return m;
}

void write_text_file(const std::string& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    out << contents;
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

void write_csv_with_manifest(const std::string& path, const DataTable& table,
                             const RunManifest& manifest)
{
    write_text_file(path, to_csv(table));
    write_text_file(path + ".manifest.json", manifest_to_json(manifest));
}

}  // namespace coulscat
