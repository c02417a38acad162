#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "curator/manifest.hpp"
#include "curator/record.hpp"

namespace curator {

struct IngestReport {
    std::uint64_t records = 0;
    std::uint64_t skipped = 0;  // malformed lines
};

/// Streams one QaRecord per well-formed line of a UTF-8 JSONL file.
/// Malformed lines are counted and skipped; an unreadable file throws IoError.
IngestReport ingest(const std::string& path, const std::string& source_name,
                    const std::function<void(QaRecord)>& sink);

/// Convenience wrapper collecting the whole stream.
std::vector<QaRecord> ingest_all(const std::string& path,
                                 const std::string& source_name,
                                 IngestReport* report = nullptr);

/// Writes records sorted ascending by id, one JSON object per line, and the
/// manifest alongside (path + ".manifest.json"). Throws IoError on failure.
void emit(std::vector<QaRecord> records, const std::string& path,
          const DatasetManifest& manifest);

/// Data file only, still id-sorted; used for secondary artifacts.
void write_records(std::vector<QaRecord> records, const std::string& path);

std::vector<QaRecord> read_records(const std::string& path);

}  // namespace curator
