#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "arena/persistence/event.hpp"

namespace arena::persistence {

struct ScanResult {
    std::vector<ArenaEvent> events;
    std::size_t good_bytes = 0;  // length of the valid record prefix
    bool partial_tail = false;   // bytes after the last newline were dropped
};

/// Validates framing, checksums and sequencing of raw log bytes. An
/// unterminated final record is reported as a partial tail; any other defect
/// throws IntegrityError carrying the first sequence number that could not
/// be read.
ScanResult scan_log(std::string_view bytes);

/// Reads and scans a log file. Throws Error naming the path if it is missing.
ScanResult read_log_file(const std::string& path);

/// Append-only event log for one run.
///
/// Sequence numbers start at 1 and increase by one. Dates never go backwards,
/// and within a date the staged kinds keep their order (see stage_of). When
/// file-backed, every record is written and, if `fsync` is set, synced before
/// append() returns. Readers get prefix-consistent copies.
class EventLog {
public:
    struct Options {
        bool fsync = true;
    };

    /// In-memory log.
    EventLog() = default;
    /// Opens or creates `path`. An existing log is scanned; a partial tail
    /// left by a crash is truncated away.
    explicit EventLog(std::string path, Options options);
    explicit EventLog(std::string path) : EventLog(std::move(path), Options{}) {}
    ~EventLog();

    EventLog(const EventLog&) = delete;
    EventLog& operator=(const EventLog&) = delete;

    /// Throws IntegrityError on a sequence gap or regression, a run id
    /// mismatch, a date regression or an out-of-order stage.
    void append(const ArenaEvent& event);

    std::uint64_t last_seq() const;
    std::size_t size() const;
    std::vector<ArenaEvent> events() const;
    /// Bytes of the encoded log, identical to the file contents when backed.
    std::string bytes() const;
    const std::string& path() const { return path_; }
    bool recovered_partial_tail() const { return recovered_tail_; }

private:
    void check(const ArenaEvent& e) const;

    std::string path_;
    Options options_{};
    int fd_ = -1;
    bool recovered_tail_ = false;

    mutable std::shared_mutex mutex_;
    std::vector<ArenaEvent> events_;
    std::string bytes_;
    int max_stage_for_date_ = -1;
};

} // namespace arena::persistence
