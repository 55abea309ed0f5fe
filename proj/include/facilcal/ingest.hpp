#ifndef FACILCAL_INGEST_HPP
#define FACILCAL_INGEST_HPP

#include <filesystem>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "facilcal/types.hpp"

namespace facilcal {

struct ParseError {
    std::string file;
    int line = 1; // 1-based, header is line 1
    std::string column;
    std::string message;
};

std::string to_string(const ParseError& e);

/// Raised after a whole file has been scanned; carries every error found.
class ParseFailure : public std::runtime_error {
public:
    ParseFailure(const std::filesystem::path& file, std::vector<ParseError> errors);
    const std::vector<ParseError>& errors() const { return errors_; }

private:
    std::vector<ParseError> errors_;
};

// Each parser reads a comma-delimited UTF-8 file with a mandatory header
// row (columns matched by name, order-free, no extras). All row errors in a
// file are collected before ParseFailure is thrown.

/// Header: facility,neighborhood,visits,problems
std::vector<SurveyCell> parse_survey(const std::filesystem::path& path);

/// Header: facility,timestamp,occupied — timestamps ISO-8601 with offset or Z.
/// Result is sorted by (facility, timestamp); duplicates are errors.
std::vector<OccupancySample> parse_occupancy(const std::filesystem::path& path);

/// Header: facility,capacity
std::vector<CapacityEntry> parse_capacity(const std::filesystem::path& path);

/// Header: facility,room,start,end
std::vector<BookingRecord> parse_bookings(const std::filesystem::path& path);

struct GeoData {
    std::vector<AddressRecord> addresses;
    std::map<FacilityId, GeoPoint> facilities;
};

/// Address header: neighborhood,lat,lon,developed (developed in {true,false,1,0}).
/// Facility header: facility,lat,lon. Coordinates are pre-geocoded.
GeoData parse_geo(const std::filesystem::path& addresses_path,
                  const std::filesystem::path& facilities_path);

// Canonical serializers for the same formats (used by the simulator and by
// round-trip checks).
std::string serialize_survey(std::span<const SurveyCell> cells);
std::string serialize_occupancy(std::span<const OccupancySample> samples);
std::string serialize_capacity(std::span<const CapacityEntry> entries);
std::string serialize_bookings(std::span<const BookingRecord> records);
std::string serialize_addresses(std::span<const AddressRecord> records);

} // namespace facilcal

#endif
