#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace drpslte {

enum class Contiguity { contiguous, non_contiguous, unspecified };

// Frequency ranges are treated as half-open [low, high) MHz intervals for
// overlap queries.
struct FrequencyRange {
    double low_mhz = 0.0;
    double high_mhz = 0.0;
};

// One public-safety allocation row: a country or area with up to two
// frequency ranges (paired ranges model uplink/downlink splits). Note-only
// rows (no dedicated band) carry no ranges and zero bandwidth.
struct SpectrumAllocation {
    int itu_region = 0;  // 1 Europe/Africa, 2 Americas, 3 Asia-Pacific
    std::string area;
    std::string band_label;
    std::vector<FrequencyRange> ranges;
    double bandwidth_mhz = 0.0;
    std::optional<std::array<double, 2>> split_mhz;  // stated "x + y" decomposition
    Contiguity contiguity = Contiguity::unspecified;
    std::string note;
};

// The embedded allocation dataset, ordered by region, then area, then
// ascending low edge. Immutable after first load.
const std::vector<SpectrumAllocation>& load_registry();

// Selector is either a country/area name (case-insensitive exact match) or a
// region ("region 2", "Region2" or plain "2"). Unknown selectors raise
// NotFoundError rather than returning an empty list.
std::vector<SpectrumAllocation> allocations_for(const std::string& selector);

// Sum of stated bandwidth over a country's dedicated-range entries; rows that
// merely borrow commercial bands contribute zero.
double total_bandwidth(const std::string& country);

// Entries with any range intersecting the half-open window [low, high) MHz,
// in registry order.
std::vector<SpectrumAllocation> bands_overlapping(double low_mhz, double high_mhz);

std::string to_csv(const std::vector<SpectrumAllocation>& allocations);
std::string to_json(const std::vector<SpectrumAllocation>& allocations);
const char* to_string(Contiguity contiguity);

}  // namespace drpslte
