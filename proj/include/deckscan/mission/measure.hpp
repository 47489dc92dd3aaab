#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deckscan/mission/plan.hpp"
#include "deckscan/nde/slab.hpp"

namespace deckscan::mission {

/// Sensor payloads captured at one station. Stop-move surveys carry the
/// contact measurements; non-stop surveys are imagery only.
struct StationRecord {
    Station station;
    std::string image_tile;
    std::optional<nde::TimeSignal> ie;
    std::optional<nde::ReceiverPair> usw;
    std::optional<nde::ERReading> er;
};

/// Binds synthetic sensor payloads from the ground-truth slab to each
/// station, stamped with the station's estimated pose. Per-station
/// seeds derive from the base seed and station index, so record content
/// is independent of processing order.
std::vector<StationRecord> station_measurements(const std::vector<Station>& stations,
                                                const nde::SlabModel& slab,
                                                const nde::NdePhysics& physics, MissionMode mode,
                                                std::uint64_t seed);

}  // namespace deckscan::mission
