#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "signcert/signomial.hpp"

namespace signcert {

/// Axis-aligned box in log coordinates with a per-axis cell count. Cell
/// centers are the sample points; the sign regions of interest are linear
/// images of half-spaces in these coordinates, which is why the grid is
/// uniform here rather than in the original variables.
struct LogBox {
    std::vector<std::pair<double, double>> range;  // [lo, hi] per axis
    std::vector<std::size_t> resolution;           // cells per axis, >= 2

    std::size_t dimensions() const { return range.size(); }
    std::size_t cell_count() const;
    LogBox with_resolution(std::size_t r) const;
};

enum class CellSign : std::int8_t {
    negative = -1,
    band = 0,  // |f| below the dead band; excluded from both signs
    positive = 1,
    invalid = 2,  // evaluation overflowed
};

/// Sign raster with connected components of each sign labeled by union-find
/// over 2n-neighborhoods.
struct GridLabeling {
    LogBox box;
    std::vector<CellSign> sign;               // row-major over the grid
    std::vector<std::int32_t> component;      // id per cell; -1 for band/invalid
    std::vector<std::int8_t> component_sign;  // per component id
    std::vector<std::uint8_t> component_touches_boundary;

    std::size_t component_count() const { return component_sign.size(); }
};

struct OracleOptions {
    double band_rel = 1e-12;        // dead band relative to the largest term
    std::size_t max_dimension = 3;  // cell counts explode beyond this
    unsigned threads = 0;           // 0 = hardware, capped by SIGNCERT_THREADS
};

GridLabeling grid_labeling(const Signomial& f, const LogBox& box, const OracleOptions& opts = {});

struct ComponentCount {
    std::size_t count = 0;
    std::size_t touching_boundary = 0;  // possible undercount/merge beyond the box
};

ComponentCount count_components(const GridLabeling& g, int sign);

struct StabilityReport {
    bool stable = false;
    std::size_t count = 0;
    std::vector<std::size_t> counts;   // one per resolution
    std::vector<std::size_t> touches;  // boundary-touching components per resolution
};

/// Repeats the count at increasing resolutions; the count is accepted when
/// the last two runs agree and no component newly touches the boundary.
StabilityReport stability_check(const Signomial& f, const LogBox& box, int sign,
                                const std::vector<std::size_t>& resolutions,
                                const OracleOptions& opts = {});

// Raster dumps for eyeballing against plots. PPM is 2-D only:
// negative = blue, positive = red, dead band = white, invalid = gray.
void write_ppm(const GridLabeling& g, const std::string& path);
void write_csv(const GridLabeling& g, const std::string& path);

}  // namespace signcert
