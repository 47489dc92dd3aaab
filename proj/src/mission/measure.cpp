#include "deckscan/mission/measure.hpp"

#include <cstdio>

#include "deckscan/rng.hpp"

namespace deckscan::mission {

std::vector<StationRecord> station_measurements(const std::vector<Station>& stations,
                                                const nde::SlabModel& slab,
                                                const nde::NdePhysics& physics, MissionMode mode,
                                                std::uint64_t seed) {
    slab.validate();
    std::vector<StationRecord> records;
    records.reserve(stations.size());
    for (const Station& st : stations) {
        StationRecord rec;
        rec.station = st;
        char name[32];
        std::snprintf(name, sizeof(name), "tile_%06d.pgm", st.index);
        rec.image_tile = name;
        if (mode == MissionMode::stop_move) {
            const auto signals = nde::synth_station_signals(
                slab, st.pose.position(), physics,
                Rng::derive_seed(seed, static_cast<std::uint64_t>(st.index)));
            rec.ie = signals.ie;
            rec.usw = signals.usw;
            rec.er = signals.er;
        }
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace deckscan::mission
