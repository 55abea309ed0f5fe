#ifndef FACILCAL_UTILIZATION_HPP
#define FACILCAL_UTILIZATION_HPP

#include <span>
#include <string>
#include <vector>

#include "facilcal/time.hpp"
#include "facilcal/types.hpp"

namespace facilcal {

/// One constant-utilization interval [start, end).
struct TraceSegment {
    TimePoint start = 0;
    TimePoint end = 0; // > start
    double u = 0.0;    // >= 0; values above 1 are real (overflow demand)
    bool operator==(const TraceSegment&) const = default;
};

/// Piecewise-constant utilization over time. Segments are ordered and
/// non-overlapping; gaps are permitted (e.g. hours outside a booking window)
/// and carry no observation weight.
struct UtilizationTrace {
    FacilityId facility;
    std::vector<TraceSegment> segments;

    std::int64_t total_duration() const;
    TimePoint span_start() const;
    TimePoint span_end() const;

    /// Value at an instant inside some segment; throws std::out_of_range
    /// when t is not covered.
    double value_at(TimePoint t) const;

    /// Duration-weighted mean utilization.
    double time_average() const;
};

/// Time-weighted exceedance probabilities at the observed utilization
/// levels: exceedance[i] = P(U >= levels[i]), computed exactly from segment
/// durations (no binning).
struct SurvivalCurve {
    std::vector<double> levels;     // strictly increasing
    std::vector<double> exceedance; // non-increasing, starts at 1
    std::int64_t total_duration = 0;

    /// Validating constructor for synthetic curves.
    static SurvivalCurve from_points(std::vector<double> levels, std::vector<double> exceedance,
                                     std::int64_t total_duration);
};

/// Step (last-observation-carried-forward) trace from occupancy counts.
/// The final sample terminates the trace. Requires >= 2 samples sorted by
/// time; utilization above 1 is retained.
UtilizationTrace utilization_trace(std::span<const OccupancySample> samples,
                                   const CapacityEntry& capacity);

struct BookingTrace {
    UtilizationTrace trace;
    std::vector<std::string> warnings;
};

/// Room-count utilization over the daily schedulable windows of
/// [period_start, period_end] (inclusive local dates): u(t) = rooms booked
/// at t / total rooms. Time outside the windows is excluded entirely.
/// Overlapping bookings in the same room merge with a warning; bookings
/// outside the windows are clipped with a warning.
BookingTrace booking_utilization(std::span<const BookingRecord> bookings,
                                 const ScheduleWindow& window, CivilDate period_start,
                                 CivilDate period_end, UtcOffset tz = {});

SurvivalCurve survival_function(const UtilizationTrace& trace);

/// P(U >= u): exceedance of the smallest observed level >= u; 1 at or below
/// the minimum level, 0 above the maximum.
double survival_eval(const SurvivalCurve& curve, double u);

} // namespace facilcal

#endif
