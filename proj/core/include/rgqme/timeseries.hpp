// timeseries.hpp — ordered (t, state) trajectories, the common solver output

#pragma once

#include <map>
#include <string>
#include <vector>

#include "rgqme/types.hpp"

namespace rgqme {

enum class Picture { interaction, schroedinger };

inline const char* to_string(Picture p) {
    return p == Picture::interaction ? "interaction" : "schroedinger";
}

struct TimeSeries {
    std::vector<double> times;           // strictly increasing
    std::vector<ComplexMatrix> states;   // same length as times
    Picture picture = Picture::interaction;
    std::map<std::string, std::string> metadata;

    std::size_t size() const { return times.size(); }
};

} // namespace rgqme
