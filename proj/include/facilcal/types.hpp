#ifndef FACILCAL_TYPES_HPP
#define FACILCAL_TYPES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace facilcal {

// Identifiers are opaque strings compared case-sensitively.
using FacilityId = std::string;
using NeighborhoodId = std::string;

// Seconds since 1970-01-01T00:00:00Z.
using TimePoint = std::int64_t;

/// Visit and problem counts for one facility-neighborhood pair.
struct SurveyCell {
    FacilityId facility;
    NeighborhoodId neighborhood;
    std::int64_t visits = 0;   // >= 0
    std::int64_t problems = 0; // >= 0, <= visits
    bool operator==(const SurveyCell&) const = default;
};

/// One timestamped occupancy reading (vehicles, occupied slots, ...).
struct OccupancySample {
    FacilityId facility;
    TimePoint timestamp = 0;
    std::int64_t occupied = 0; // >= 0
    bool operator==(const OccupancySample&) const = default;
};

struct CapacityEntry {
    FacilityId facility;
    std::int64_t capacity = 0; // > 0
    bool operator==(const CapacityEntry&) const = default;
};

/// A reservation of one room within a facility, [start, end).
struct BookingRecord {
    FacilityId facility;
    std::string room;
    TimePoint start = 0;
    TimePoint end = 0; // > start
    bool operator==(const BookingRecord&) const = default;
};

/// Bookable rooms and the daily operating window of a facility.
/// Open/close are seconds after local midnight.
struct ScheduleWindow {
    FacilityId facility;
    int rooms = 1; // >= 1
    std::int32_t daily_open = 0;
    std::int32_t daily_close = 0; // > daily_open
};

struct GeoPoint {
    double lat = 0.0; // [-90, 90] degrees
    double lon = 0.0; // [-180, 180] degrees
    bool operator==(const GeoPoint&) const = default;
};

struct AddressRecord {
    NeighborhoodId neighborhood;
    GeoPoint location;
    bool developed = false;
    bool operator==(const AddressRecord&) const = default;
};

/// One violated dataset invariant.
struct ValidationIssue {
    std::string kind;    // e.g. "problems exceed visits"
    std::string subject; // facility or facility/neighborhood involved
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool passed() const { return issues.empty(); }
};

ValidationReport validate_dataset(const std::vector<SurveyCell>& survey,
                                  const std::vector<CapacityEntry>& capacities,
                                  const std::vector<OccupancySample>& occupancy);

} // namespace facilcal

#endif
