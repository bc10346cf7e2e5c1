#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "wqed/sweep.hpp"

// Test utility: full width at half maximum of the central transparency peak
// of a 1D detuning sweep. Walks outward from the grid point closest to
// delta = 0 and linearly interpolates the first transmit = 1/2 crossing on
// each side.

namespace wqed_test {

inline double central_fwhm(const std::vector<wqed::SweepRecord>& records)
{
    if (records.size() < 3)
        throw std::runtime_error("central_fwhm: too few records");

    std::size_t center = 0;
    double best = std::abs(records[0].axis1);
    for (std::size_t i = 1; i < records.size(); ++i) {
        if (std::abs(records[i].axis1) < best) {
            best = std::abs(records[i].axis1);
            center = i;
        }
    }

    auto crossing = [&](int dir) {
        std::size_t i = center;
        while (true) {
            const std::size_t next = i + dir;
            if (next >= records.size())
                throw std::runtime_error("central_fwhm: no half-maximum crossing");
            const double t1 = records[i].transmit;
            const double t2 = records[next].transmit;
            if (t1 >= 0.5 && t2 < 0.5) {
                const double f = (0.5 - t1) / (t2 - t1);
                return records[i].axis1 + f * (records[next].axis1 - records[i].axis1);
            }
            i = next;
        }
    };

    return crossing(+1) - crossing(-1);
}

} // namespace wqed_test
