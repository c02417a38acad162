#include "curator/corpus_io.hpp"

#include <algorithm>
#include <fstream>

#include "curator/errors.hpp"

namespace curator {

IngestReport ingest(const std::string& path, const std::string& source_name,
                    const std::function<void(QaRecord)>& sink) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open corpus file: " + path);

    IngestReport report;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            const auto j = nlohmann::json::parse(line);
            sink(record_from_json(j, source_name));
            ++report.records;
        } catch (const nlohmann::json::exception&) {
            ++report.skipped;
        } catch (const ParseError&) {
            ++report.skipped;
        }
    }
    return report;
}

std::vector<QaRecord> ingest_all(const std::string& path,
                                 const std::string& source_name,
                                 IngestReport* report) {
    std::vector<QaRecord> out;
    const auto r = ingest(path, source_name,
                          [&out](QaRecord rec) { out.push_back(std::move(rec)); });
    if (report) *report = r;
    return out;
}

void write_records(std::vector<QaRecord> records, const std::string& path) {
    std::sort(records.begin(), records.end(),
              [](const QaRecord& a, const QaRecord& b) { return a.id < b.id; });
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write corpus file: " + path);
    for (const auto& r : records) {
        out << record_to_json(r).dump() << '\n';
    }
    if (!out) throw IoError("corpus write failed: " + path);
}

void emit(std::vector<QaRecord> records, const std::string& path,
          const DatasetManifest& manifest) {
    write_records(std::move(records), path);
    manifest.save(path + ".manifest.json");
}

std::vector<QaRecord> read_records(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open corpus file: " + path);
    std::vector<QaRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            out.push_back(record_from_json(nlohmann::json::parse(line), ""));
        } catch (const std::exception& e) {
            throw ParseError(path + ":" + std::to_string(lineno) +
                             ": bad record: " + e.what());
        }
    }
    return out;
}

}  // namespace curator
