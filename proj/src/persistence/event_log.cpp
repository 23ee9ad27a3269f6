#include "arena/persistence/event_log.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <filesystem>
#include <mutex>

#include "arena/core/errors.hpp"
#include "arena/core/text.hpp"

namespace arena::persistence {

namespace {

void check_order(const ArenaEvent* prev, int prev_max_stage, const ArenaEvent& e, const std::string& run_id,
                 std::uint64_t last_seq) {
    if (e.seq != last_seq + 1)
        throw IntegrityError(e.seq, "expected seq " + std::to_string(last_seq + 1) + ", got " + std::to_string(e.seq));
    if (!prev) return;
    if (e.run_id != run_id) throw IntegrityError(e.seq, "run id '" + e.run_id + "' differs from '" + run_id + "'");
    if (e.date < prev->date)
        throw IntegrityError(e.seq, "date " + e.date.to_string() + " precedes " + prev->date.to_string());
    if (e.date == prev->date) {
        if (auto stage = stage_of(e.kind); stage && *stage < prev_max_stage)
            throw IntegrityError(e.seq, std::string(to_string(e.kind)) + " out of order within " + e.date.to_string());
    }
}

int next_max_stage(const ArenaEvent* prev, int prev_max_stage, const ArenaEvent& e) {
    const int base = (prev && prev->date == e.date) ? prev_max_stage : -1;
    const auto stage = stage_of(e.kind);
    return stage ? std::max(base, *stage) : base;
}

} // namespace

ScanResult scan_log(std::string_view bytes) {
    ScanResult out;
    int max_stage = -1;
    std::size_t pos = 0;
    while (pos < bytes.size()) {
        const auto nl = bytes.find('\n', pos);
        const std::uint64_t expected = out.events.empty() ? 1 : out.events.back().seq + 1;
        if (nl == std::string_view::npos) {
            out.partial_tail = true;
            break;
        }
        ArenaEvent e;
        try {
            e = decode_line(bytes.substr(pos, nl - pos));
        } catch (const ParseError& ex) {
            throw IntegrityError(expected, ex.what());
        }
        const ArenaEvent* prev = out.events.empty() ? nullptr : &out.events.back();
        check_order(prev, max_stage, e, prev ? prev->run_id : e.run_id, expected - 1);
        max_stage = next_max_stage(prev, max_stage, e);
        out.events.push_back(std::move(e));
        pos = nl + 1;
        out.good_bytes = pos;
    }
    return out;
}

ScanResult read_log_file(const std::string& path) {
    if (!std::filesystem::exists(path)) throw Error("event log not found: " + path);
    return scan_log(text::read_file(path));
}

EventLog::EventLog(std::string path, Options options) : path_(std::move(path)), options_(options) {
    const auto parent = std::filesystem::path(path_).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    if (std::filesystem::exists(path_)) {
        const std::string existing = text::read_file(path_);
        ScanResult scan = scan_log(existing);
        if (scan.partial_tail) {
            std::filesystem::resize_file(path_, scan.good_bytes);
            recovered_tail_ = true;
        }
        bytes_ = existing.substr(0, scan.good_bytes);
        for (const auto& e : scan.events) {
            max_stage_for_date_ = next_max_stage(events_.empty() ? nullptr : &events_.back(), max_stage_for_date_, e);
            events_.push_back(e);
        }
    }
    fd_ = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
    if (fd_ < 0) throw Error("cannot open event log '" + path_ + "': " + std::strerror(errno));
}

EventLog::~EventLog() {
    if (fd_ >= 0) ::close(fd_);
}

void EventLog::check(const ArenaEvent& e) const {
    const ArenaEvent* prev = events_.empty() ? nullptr : &events_.back();
    check_order(prev, max_stage_for_date_, e, prev ? prev->run_id : e.run_id, prev ? prev->seq : 0);
}

void EventLog::append(const ArenaEvent& event) {
    std::unique_lock lock(mutex_);
    check(event);
    const std::string line = encode_line(event);
    if (fd_ >= 0) {
        std::size_t written = 0;
        while (written < line.size()) {
            const auto n = ::write(fd_, line.data() + written, line.size() - written);
            if (n < 0) {
                if (errno == EINTR) continue;
                throw Error("write to '" + path_ + "' failed: " + std::strerror(errno));
            }
            written += static_cast<std::size_t>(n);
        }
        if (options_.fsync && ::fsync(fd_) != 0)
            throw Error("fsync of '" + path_ + "' failed: " + std::strerror(errno));
    }
    max_stage_for_date_ = next_max_stage(events_.empty() ? nullptr : &events_.back(), max_stage_for_date_, event);
    events_.push_back(event);
    bytes_ += line;
}

std::uint64_t EventLog::last_seq() const {
    std::shared_lock lock(mutex_);
    return events_.empty() ? 0 : events_.back().seq;
}

std::size_t EventLog::size() const {
    std::shared_lock lock(mutex_);
    return events_.size();
}

std::vector<ArenaEvent> EventLog::events() const {
    std::shared_lock lock(mutex_);
    return events_;
}

std::string EventLog::bytes() const {
    std::shared_lock lock(mutex_);
    return bytes_;
}

} // namespace arena::persistence
