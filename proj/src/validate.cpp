#include "facilcal/types.hpp"

#include <map>
#include <set>

namespace facilcal {

ValidationReport validate_dataset(const std::vector<SurveyCell>& survey,
                                  const std::vector<CapacityEntry>& capacities,
                                  const std::vector<OccupancySample>& occupancy) {
    ValidationReport report;
    auto add = [&report](std::string kind, std::string subject, std::string message) {
        report.issues.push_back({std::move(kind), std::move(subject), std::move(message)});
    };

    for (const SurveyCell& cell : survey) {
        if (cell.problems > cell.visits)
            add("problems exceed visits", cell.facility + "/" + cell.neighborhood,
                "problems=" + std::to_string(cell.problems) +
                    " visits=" + std::to_string(cell.visits));
        if (cell.visits < 0 || cell.problems < 0)
            add("negative count", cell.facility + "/" + cell.neighborhood, "counts must be >= 0");
    }

    std::set<FacilityId> with_capacity;
    std::set<FacilityId> duplicate_capacity;
    for (const CapacityEntry& entry : capacities) {
        if (entry.capacity <= 0)
            add("invalid capacity", entry.facility,
                "capacity=" + std::to_string(entry.capacity) + " must be positive");
        if (!with_capacity.insert(entry.facility).second &&
            duplicate_capacity.insert(entry.facility).second)
            add("duplicate capacity", entry.facility, "facility listed more than once");
    }

    std::set<FacilityId> missing_reported;
    std::map<FacilityId, TimePoint> last_seen;
    std::set<FacilityId> monotone_reported;
    for (const OccupancySample& sample : occupancy) {
        if (!with_capacity.count(sample.facility) && missing_reported.insert(sample.facility).second)
            add("missing capacity", sample.facility, "occupancy present but no capacity entry");
        const auto it = last_seen.find(sample.facility);
        if (it != last_seen.end() && sample.timestamp <= it->second &&
            monotone_reported.insert(sample.facility).second)
            add("non-monotone timestamps", sample.facility,
                "timestamps must be strictly increasing per facility");
        last_seen[sample.facility] = sample.timestamp;
    }

    return report;
}

} // namespace facilcal
