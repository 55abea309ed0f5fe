#include "facilcal/utilization.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace facilcal {

std::int64_t UtilizationTrace::total_duration() const {
    std::int64_t total = 0;
    for (const auto& seg : segments) total += seg.end - seg.start;
    return total;
}

TimePoint UtilizationTrace::span_start() const {
    if (segments.empty()) throw std::out_of_range("empty trace");
    return segments.front().start;
}

TimePoint UtilizationTrace::span_end() const {
    if (segments.empty()) throw std::out_of_range("empty trace");
    return segments.back().end;
}

double UtilizationTrace::value_at(TimePoint t) const {
    // First segment starting after t, then step back.
    auto it = std::upper_bound(segments.begin(), segments.end(), t,
                               [](TimePoint v, const TraceSegment& s) { return v < s.start; });
    if (it == segments.begin()) throw std::out_of_range("instant before trace start");
    --it;
    if (t >= it->end) throw std::out_of_range("instant not covered by trace");
    return it->u;
}

double UtilizationTrace::time_average() const {
    const std::int64_t total = total_duration();
    if (total == 0) throw std::invalid_argument("no observations");
    double weighted = 0.0;
    for (const auto& seg : segments) weighted += seg.u * static_cast<double>(seg.end - seg.start);
    return weighted / static_cast<double>(total);
}

SurvivalCurve SurvivalCurve::from_points(std::vector<double> levels,
                                         std::vector<double> exceedance,
                                         std::int64_t total_duration) {
    if (levels.empty() || levels.size() != exceedance.size())
        throw std::invalid_argument("levels and exceedance must be non-empty and equal-length");
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (i > 0 && levels[i] <= levels[i - 1])
            throw std::invalid_argument("levels must be strictly increasing");
        if (exceedance[i] < 0.0 || exceedance[i] > 1.0)
            throw std::invalid_argument("exceedance must be within [0, 1]");
        if (i > 0 && exceedance[i] > exceedance[i - 1])
            throw std::invalid_argument("exceedance must be non-increasing");
    }
    if (exceedance.front() != 1.0)
        throw std::invalid_argument("exceedance at the minimum level must be 1");
    SurvivalCurve curve;
    curve.levels = std::move(levels);
    curve.exceedance = std::move(exceedance);
    curve.total_duration = total_duration;
    return curve;
}

UtilizationTrace utilization_trace(std::span<const OccupancySample> samples,
                                   const CapacityEntry& capacity) {
    if (samples.size() < 2) throw std::invalid_argument("insufficient samples");
    if (capacity.capacity <= 0) throw std::invalid_argument("capacity must be positive");

    UtilizationTrace trace;
    trace.facility = capacity.facility;
    trace.segments.reserve(samples.size() - 1);
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
        const auto& current = samples[i];
        const auto& next = samples[i + 1];
        if (current.facility != capacity.facility || next.facility != capacity.facility)
            throw std::invalid_argument("sample references a different facility");
        if (next.timestamp <= current.timestamp)
            throw std::invalid_argument("samples must be strictly increasing in time");
        const double u =
            static_cast<double>(current.occupied) / static_cast<double>(capacity.capacity);
        trace.segments.push_back({current.timestamp, next.timestamp, u});
    }
    return trace;
}

namespace {

struct Interval {
    TimePoint start;
    TimePoint end;
};

// Union of possibly-overlapping intervals; reports whether any overlap or
// touching pair was merged.
std::vector<Interval> merge_intervals(std::vector<Interval> intervals, bool& merged_overlap) {
    merged_overlap = false;
    if (intervals.empty()) return intervals;
    std::sort(intervals.begin(), intervals.end(),
              [](const Interval& a, const Interval& b) { return a.start < b.start; });
    std::vector<Interval> out;
    out.push_back(intervals.front());
    for (std::size_t i = 1; i < intervals.size(); ++i) {
        Interval& last = out.back();
        if (intervals[i].start < last.end) {
            merged_overlap = true;
            last.end = std::max(last.end, intervals[i].end);
        } else if (intervals[i].start == last.end) {
            last.end = std::max(last.end, intervals[i].end);
        } else {
            out.push_back(intervals[i]);
        }
    }
    return out;
}

} // namespace

BookingTrace booking_utilization(std::span<const BookingRecord> bookings,
                                 const ScheduleWindow& window, CivilDate period_start,
                                 CivilDate period_end, UtcOffset tz) {
    if (window.rooms < 1) throw std::invalid_argument("zero rooms");
    if (window.daily_open >= window.daily_close)
        throw std::invalid_argument("daily window must be non-empty");
    if (days_from_civil(period_end) < days_from_civil(period_start))
        throw std::invalid_argument("empty period");

    BookingTrace result;
    result.trace.facility = window.facility;

    // Daily schedulable windows in UTC.
    std::vector<Interval> windows;
    for (std::int64_t day = days_from_civil(period_start); day <= days_from_civil(period_end);
         ++day) {
        const CivilDate date = civil_from_days(day);
        windows.push_back({utc_from_local(date, window.daily_open, tz),
                           utc_from_local(date, window.daily_close, tz)});
    }

    // Same-room double entries are a data artifact: merge per room.
    std::map<std::string, std::vector<Interval>> by_room;
    for (const auto& booking : bookings) {
        if (booking.facility != window.facility) continue;
        if (booking.end <= booking.start) throw std::invalid_argument("booking must have start < end");
        by_room[booking.room].push_back({booking.start, booking.end});
    }

    std::vector<Interval> booked; // clipped, all rooms pooled
    for (auto& [room, intervals] : by_room) {
        bool merged = false;
        std::vector<Interval> merged_intervals = merge_intervals(std::move(intervals), merged);
        if (merged)
            result.warnings.push_back("overlapping bookings merged in room " + room);
        for (const auto& interval : merged_intervals) {
            std::int64_t covered = 0;
            for (const auto& win : windows) {
                const TimePoint lo = std::max(interval.start, win.start);
                const TimePoint hi = std::min(interval.end, win.end);
                if (lo < hi) {
                    booked.push_back({lo, hi});
                    covered += hi - lo;
                }
            }
            if (covered < interval.end - interval.start)
                result.warnings.push_back("booking outside schedulable window clipped in room " +
                                          room);
        }
    }

    // Sweep each window: +1 at clipped starts, -1 at ends.
    std::map<TimePoint, int> delta;
    for (const auto& interval : booked) {
        delta[interval.start] += 1;
        delta[interval.end] -= 1;
    }
    const double rooms = static_cast<double>(window.rooms);
    for (const auto& win : windows) {
        std::vector<TimePoint> cuts;
        cuts.push_back(win.start);
        for (const auto& [t, _] : delta)
            if (t > win.start && t < win.end) cuts.push_back(t);
        cuts.push_back(win.end);

        int active = 0;
        for (const auto& [t, d] : delta)
            if (t <= win.start) active += d;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            if (i > 0) {
                const auto it = delta.find(cuts[i]);
                if (it != delta.end()) active += it->second;
            }
            result.trace.segments.push_back(
                {cuts[i], cuts[i + 1], static_cast<double>(active) / rooms});
        }
    }
    return result;
}

SurvivalCurve survival_function(const UtilizationTrace& trace) {
    std::map<double, std::int64_t> duration_by_level;
    for (const auto& seg : trace.segments) {
        if (seg.end <= seg.start) throw std::invalid_argument("segment must have start < end");
        duration_by_level[seg.u] += seg.end - seg.start;
    }
    if (duration_by_level.empty()) throw std::invalid_argument("no observations");

    SurvivalCurve curve;
    curve.levels.reserve(duration_by_level.size());
    for (const auto& [level, _] : duration_by_level) curve.levels.push_back(level);

    // Suffix sums in integer seconds keep the distribution exact; the
    // minimum level's suffix is the full total, so its exceedance is 1.
    std::vector<std::int64_t> suffix(curve.levels.size(), 0);
    std::int64_t running = 0;
    std::size_t idx = curve.levels.size();
    for (auto it = duration_by_level.rbegin(); it != duration_by_level.rend(); ++it) {
        running += it->second;
        suffix[--idx] = running;
    }
    curve.total_duration = running;
    curve.exceedance.reserve(curve.levels.size());
    for (const std::int64_t d : suffix)
        curve.exceedance.push_back(static_cast<double>(d) / static_cast<double>(running));
    return curve;
}

double survival_eval(const SurvivalCurve& curve, double u) {
    if (curve.levels.empty()) throw std::invalid_argument("no observations");
    const auto it = std::lower_bound(curve.levels.begin(), curve.levels.end(), u);
    if (it == curve.levels.end()) return 0.0;
    return curve.exceedance[static_cast<std::size_t>(it - curve.levels.begin())];
}

} // namespace facilcal
