#include "facilcal/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "facilcal/csv.hpp"
#include "facilcal/time.hpp"

namespace facilcal {

std::string to_string(const ParseError& e) {
    std::ostringstream out;
    out << e.file << ":" << e.line;
    if (!e.column.empty()) out << " [" << e.column << "]";
    out << ": " << e.message;
    return out.str();
}

namespace {

std::string summarize(const std::filesystem::path& file, const std::vector<ParseError>& errors) {
    std::ostringstream out;
    out << file.string() << ": " << errors.size() << " parse error"
        << (errors.size() == 1 ? "" : "s");
    return out.str();
}

} // namespace

ParseFailure::ParseFailure(const std::filesystem::path& file, std::vector<ParseError> errors)
    : std::runtime_error(summarize(file, errors)), errors_(std::move(errors)) {}

namespace {

// Resolves required header columns to field indices; order-free, no
// duplicates, no extras.
class HeaderMap {
public:
    HeaderMap(const csv::Table& table, const std::filesystem::path& file,
              const std::vector<std::string>& required, std::vector<ParseError>& errors) {
        indices_.resize(required.size(), -1);
        for (std::size_t col = 0; col < table.header.size(); ++col) {
            const std::string& name = table.header[col];
            const auto it = std::find(required.begin(), required.end(), name);
            if (it == required.end()) {
                errors.push_back({file.string(), 1, name, "unexpected column"});
                continue;
            }
            const std::size_t slot = static_cast<std::size_t>(it - required.begin());
            if (indices_[slot] != -1) {
                errors.push_back({file.string(), 1, name, "duplicate column"});
                continue;
            }
            indices_[slot] = static_cast<int>(col);
        }
        for (std::size_t slot = 0; slot < required.size(); ++slot) {
            if (indices_[slot] == -1)
                errors.push_back({file.string(), 1, required[slot], "missing column"});
        }
        ok_ = errors.empty();
        width_ = table.header.size();
    }

    bool ok() const { return ok_; }
    std::size_t width() const { return width_; }
    const std::string& field(const std::vector<std::string>& row, std::size_t slot) const {
        return row[static_cast<std::size_t>(indices_[slot])];
    }

private:
    std::vector<int> indices_;
    std::size_t width_ = 0;
    bool ok_ = false;
};

struct RowContext {
    const std::filesystem::path& file;
    int line;
    std::vector<ParseError>& errors;

    void fail(const std::string& column, const std::string& message) const {
        errors.push_back({file.string(), line, column, message});
    }
};

bool parse_count(const RowContext& ctx, const std::string& column, const std::string& text,
                 std::int64_t& out) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last) {
        ctx.fail(column, "non-integer " + column);
        return false;
    }
    if (value < 0) {
        ctx.fail(column, column + " must be non-negative");
        return false;
    }
    out = value;
    return true;
}

bool parse_real(const RowContext& ctx, const std::string& column, const std::string& text,
                double& out) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last) {
        ctx.fail(column, "non-numeric " + column);
        return false;
    }
    out = value;
    return true;
}

bool parse_instant(const RowContext& ctx, const std::string& column, const std::string& text,
                   TimePoint& out) {
    const auto parsed = parse_iso8601(text);
    if (!parsed) {
        ctx.fail(column, "unparseable timestamp '" + text + "'");
        return false;
    }
    out = *parsed;
    return true;
}

bool nonempty(const RowContext& ctx, const std::string& column, const std::string& text) {
    if (text.empty()) {
        ctx.fail(column, column + " must be non-empty");
        return false;
    }
    return true;
}

// Shared scan loop: hands each well-shaped row to `consume`.
template <typename Consume>
void scan(const std::filesystem::path& path, const std::vector<std::string>& required,
          std::vector<ParseError>& errors, Consume&& consume) {
    const csv::Table table = csv::read_file(path);
    const HeaderMap header(table, path, required, errors);
    if (!header.ok()) return;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& row = table.rows[i];
        RowContext ctx{path, table.row_lines[i], errors};
        if (row.size() != header.width()) {
            ctx.fail("", "wrong field count: expected " + std::to_string(header.width()) +
                             ", got " + std::to_string(row.size()));
            continue;
        }
        consume(ctx, header, row);
    }
}

} // namespace

std::vector<SurveyCell> parse_survey(const std::filesystem::path& path) {
    std::vector<ParseError> errors;
    std::vector<SurveyCell> cells;
    scan(path, {"facility", "neighborhood", "visits", "problems"}, errors,
         [&](const RowContext& ctx, const HeaderMap& h, const std::vector<std::string>& row) {
             SurveyCell cell;
             cell.facility = h.field(row, 0);
             cell.neighborhood = h.field(row, 1);
             bool ok = nonempty(ctx, "facility", cell.facility);
             ok &= nonempty(ctx, "neighborhood", cell.neighborhood);
             ok &= parse_count(ctx, "visits", h.field(row, 2), cell.visits);
             ok &= parse_count(ctx, "problems", h.field(row, 3), cell.problems);
             if (ok && cell.problems > cell.visits) {
                 ctx.fail("problems", "problems exceed visits");
                 ok = false;
             }
             if (ok) cells.push_back(std::move(cell));
         });
    if (!errors.empty()) throw ParseFailure(path, std::move(errors));
    return cells;
}

std::vector<OccupancySample> parse_occupancy(const std::filesystem::path& path) {
    std::vector<ParseError> errors;
    std::vector<OccupancySample> samples;
    std::set<std::pair<FacilityId, TimePoint>> seen;
    scan(path, {"facility", "timestamp", "occupied"}, errors,
         [&](const RowContext& ctx, const HeaderMap& h, const std::vector<std::string>& row) {
             OccupancySample sample;
             sample.facility = h.field(row, 0);
             bool ok = nonempty(ctx, "facility", sample.facility);
             ok &= parse_instant(ctx, "timestamp", h.field(row, 1), sample.timestamp);
             ok &= parse_count(ctx, "occupied", h.field(row, 2), sample.occupied);
             if (ok && !seen.insert({sample.facility, sample.timestamp}).second) {
                 ctx.fail("timestamp", "duplicate timestamp for facility " + sample.facility);
                 ok = false;
             }
             if (ok) samples.push_back(std::move(sample));
         });
    if (!errors.empty()) throw ParseFailure(path, std::move(errors));
    std::sort(samples.begin(), samples.end(), [](const auto& a, const auto& b) {
        return std::tie(a.facility, a.timestamp) < std::tie(b.facility, b.timestamp);
    });
    return samples;
}

std::vector<CapacityEntry> parse_capacity(const std::filesystem::path& path) {
    std::vector<ParseError> errors;
    std::vector<CapacityEntry> entries;
    std::set<FacilityId> seen;
    scan(path, {"facility", "capacity"}, errors,
         [&](const RowContext& ctx, const HeaderMap& h, const std::vector<std::string>& row) {
             CapacityEntry entry;
             entry.facility = h.field(row, 0);
             bool ok = nonempty(ctx, "facility", entry.facility);
             ok &= parse_count(ctx, "capacity", h.field(row, 1), entry.capacity);
             if (ok && entry.capacity <= 0) {
                 ctx.fail("capacity", "capacity must be positive");
                 ok = false;
             }
             if (ok && !seen.insert(entry.facility).second) {
                 ctx.fail("facility", "duplicate facility " + entry.facility);
                 ok = false;
             }
             if (ok) entries.push_back(std::move(entry));
         });
    if (!errors.empty()) throw ParseFailure(path, std::move(errors));
    return entries;
}

std::vector<BookingRecord> parse_bookings(const std::filesystem::path& path) {
    std::vector<ParseError> errors;
    std::vector<BookingRecord> records;
    scan(path, {"facility", "room", "start", "end"}, errors,
         [&](const RowContext& ctx, const HeaderMap& h, const std::vector<std::string>& row) {
             BookingRecord record;
             record.facility = h.field(row, 0);
             record.room = h.field(row, 1);
             bool ok = nonempty(ctx, "facility", record.facility);
             ok &= nonempty(ctx, "room", record.room);
             ok &= parse_instant(ctx, "start", h.field(row, 2), record.start);
             ok &= parse_instant(ctx, "end", h.field(row, 3), record.end);
             if (ok && record.end == record.start) {
                 ctx.fail("end", "empty booking");
                 ok = false;
             }
             if (ok && record.end < record.start) {
                 ctx.fail("end", "negative duration");
                 ok = false;
             }
             if (ok) records.push_back(std::move(record));
         });
    if (!errors.empty()) throw ParseFailure(path, std::move(errors));
    return records;
}

namespace {

bool parse_latitude(const RowContext& ctx, const std::string& text, double& out) {
    if (!parse_real(ctx, "lat", text, out)) return false;
    if (out < -90.0 || out > 90.0) {
        ctx.fail("lat", "latitude out of range");
        return false;
    }
    return true;
}

bool parse_longitude(const RowContext& ctx, const std::string& text, double& out) {
    if (!parse_real(ctx, "lon", text, out)) return false;
    if (out < -180.0 || out > 180.0) {
        ctx.fail("lon", "longitude out of range");
        return false;
    }
    return true;
}

bool parse_flag(const RowContext& ctx, const std::string& column, const std::string& text,
                bool& out) {
    if (text == "true" || text == "1") {
        out = true;
        return true;
    }
    if (text == "false" || text == "0") {
        out = false;
        return true;
    }
    ctx.fail(column, "unparseable boolean '" + text + "'");
    return false;
}

} // namespace

GeoData parse_geo(const std::filesystem::path& addresses_path,
                  const std::filesystem::path& facilities_path) {
    GeoData data;
    {
        std::vector<ParseError> errors;
        scan(addresses_path, {"neighborhood", "lat", "lon", "developed"}, errors,
             [&](const RowContext& ctx, const HeaderMap& h, const std::vector<std::string>& row) {
                 AddressRecord record;
                 record.neighborhood = h.field(row, 0);
                 bool ok = nonempty(ctx, "neighborhood", record.neighborhood);
                 ok &= parse_latitude(ctx, h.field(row, 1), record.location.lat);
                 ok &= parse_longitude(ctx, h.field(row, 2), record.location.lon);
                 ok &= parse_flag(ctx, "developed", h.field(row, 3), record.developed);
                 if (ok) data.addresses.push_back(std::move(record));
             });
        if (!errors.empty()) throw ParseFailure(addresses_path, std::move(errors));
    }
    {
        std::vector<ParseError> errors;
        scan(facilities_path, {"facility", "lat", "lon"}, errors,
             [&](const RowContext& ctx, const HeaderMap& h, const std::vector<std::string>& row) {
                 const FacilityId facility = h.field(row, 0);
                 GeoPoint point;
                 bool ok = nonempty(ctx, "facility", facility);
                 ok &= parse_latitude(ctx, h.field(row, 1), point.lat);
                 ok &= parse_longitude(ctx, h.field(row, 2), point.lon);
                 if (ok && data.facilities.count(facility)) {
                     ctx.fail("facility", "duplicate facility " + facility);
                     ok = false;
                 }
                 if (ok) data.facilities.emplace(facility, point);
             });
        if (!errors.empty()) throw ParseFailure(facilities_path, std::move(errors));
    }
    return data;
}

std::string serialize_survey(std::span<const SurveyCell> cells) {
    std::string out = "facility,neighborhood,visits,problems\n";
    for (const auto& c : cells) {
        out += c.facility + "," + c.neighborhood + "," + std::to_string(c.visits) + "," +
               std::to_string(c.problems) + "\n";
    }
    return out;
}

std::string serialize_occupancy(std::span<const OccupancySample> samples) {
    std::string out = "facility,timestamp,occupied\n";
    for (const auto& s : samples) {
        out += s.facility + "," + format_iso8601(s.timestamp) + "," + std::to_string(s.occupied) +
               "\n";
    }
    return out;
}

std::string serialize_capacity(std::span<const CapacityEntry> entries) {
    std::string out = "facility,capacity\n";
    for (const auto& e : entries) {
        out += e.facility + "," + std::to_string(e.capacity) + "\n";
    }
    return out;
}

std::string serialize_bookings(std::span<const BookingRecord> records) {
    std::string out = "facility,room,start,end\n";
    for (const auto& b : records) {
        out += b.facility + "," + b.room + "," + format_iso8601(b.start) + "," +
               format_iso8601(b.end) + "\n";
    }
    return out;
}

std::string serialize_addresses(std::span<const AddressRecord> records) {
    std::string out = "neighborhood,lat,lon,developed\n";
    for (const auto& a : records) {
        out += a.neighborhood + "," + csv::format_double(a.location.lat) + "," +
               csv::format_double(a.location.lon) + "," + csv::format_bool(a.developed) + "\n";
    }
    return out;
}

} // namespace facilcal
