#include "drpslte/spectrum.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "drpslte/errors.hpp"
#include "drpslte/format.hpp"

namespace drpslte {

namespace {

using Ranges = std::vector<FrequencyRange>;
using Split = std::optional<std::array<double, 2>>;

constexpr auto kContiguous = Contiguity::contiguous;
constexpr auto kNonContiguous = Contiguity::non_contiguous;
constexpr auto kUnspecified = Contiguity::unspecified;

std::string lower(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t");
    auto end = s.find_last_not_of(" \t");
    if (begin == std::string::npos) return "";
    return s.substr(begin, end - begin + 1);
}

// CSV field quoting, needed only if a note ever grows a comma or quote.
std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

const std::vector<SpectrumAllocation>& load_registry() {
    // Region 2's multi-block rows are stored as the printed envelope range
    // with the printed bandwidth; the non-contiguous marker explains why the
    // envelope is wider than the allocation.
    static const std::vector<SpectrumAllocation> registry = {
        // Region 1
        {1, "Europe", "400 MHz", Ranges{{410.0, 430.0}, {450.0, 470.0}}, 40.0,
         Split{{20.0, 20.0}}, kUnspecified, ""},
        {1, "Europe", "700 MHz", Ranges{{733.0, 788.0}}, 60.0, Split{{30.0, 30.0}}, kUnspecified,
         "printed edges 733/758-788 do not span the stated 60 MHz; stored as the envelope"},
        {1, "UK", "", Ranges{}, 0.0, Split{}, kUnspecified,
         "No dedicated band (uses commercial LTE bands)"},
        // Region 2
        {2, "Americas", "VHF Lower Band", Ranges{{25.0, 50.0}}, 6.3, Split{}, kUnspecified, ""},
        {2, "Americas", "VHF Upper Band", Ranges{{150.0, 174.0}}, 3.6, Split{}, kNonContiguous,
         ""},
        {2, "Americas", "220 MHz", Ranges{{220.0, 222.0}}, 0.1, Split{}, kUnspecified, ""},
        {2, "Americas", "UHF Band", Ranges{{450.0, 470.0}}, 3.7, Split{}, kNonContiguous, ""},
        {2, "Americas", "T-Band", Ranges{{470.0, 512.0}}, 6.0, Split{}, kContiguous,
         "6 to 12 MHz blocks (contiguous in specified markets); lower bound kept for sums"},
        {2, "Americas", "700 MHz", Ranges{{758.0, 769.0}, {788.0, 799.0}}, 22.0,
         Split{{11.0, 11.0}}, kContiguous, ""},
        {2, "Americas", "700 MHz", Ranges{{768.0, 775.0}, {798.0, 805.0}}, 14.0,
         Split{{7.0, 7.0}}, kContiguous, ""},
        {2, "Americas", "800 MHz", Ranges{{806.0, 809.0}, {851.0, 854.0}}, 6.0,
         Split{{3.0, 3.0}}, kContiguous, ""},
        {2, "Americas", "800 MHz", Ranges{{809.0, 815.0}, {854.0, 860.0}}, 3.5,
         Split{{1.75, 1.75}}, kNonContiguous, ""},
        {2, "Americas", "4.9 GHz", Ranges{{4940.0, 4990.0}}, 50.0, Split{}, kContiguous, ""},
        {2, "Americas", "5.9 GHz", Ranges{{5850.0, 5925.0}}, 75.0, Split{}, kContiguous, ""},
        // Region 3
        {3, "Australia", "4.9 GHz", Ranges{{4940.0, 4990.0}}, 50.0, Split{}, kContiguous, ""},
        {3, "Japan", "4.9 GHz", Ranges{{4940.0, 4990.0}}, 50.0, Split{}, kContiguous, ""},
        {3, "South Korea", "700 MHz", Ranges{{718.0, 728.0}, {773.0, 783.0}}, 20.0,
         Split{{10.0, 10.0}}, kUnspecified, ""},
    };
    return registry;
}

std::vector<SpectrumAllocation> allocations_for(const std::string& selector) {
    const std::string wanted = trim(selector);
    if (wanted.empty()) throw ValidationError("selector must not be empty");

    // "region N", "regionN" or a bare digit select a whole ITU region.
    std::string key = lower(wanted);
    int region = 0;
    if (key.rfind("region", 0) == 0) {
        const std::string rest = trim(key.substr(6));
        if (rest.size() == 1 && rest[0] >= '1' && rest[0] <= '9') region = rest[0] - '0';
        if (region == 0) throw NotFoundError("unknown region selector '" + wanted + "'");
    } else if (key.size() == 1 && key[0] >= '0' && key[0] <= '9') {
        region = key[0] - '0';
    }

    std::vector<SpectrumAllocation> out;
    for (const auto& entry : load_registry()) {
        if (region != 0 ? entry.itu_region == region : lower(entry.area) == key)
            out.push_back(entry);
    }
    if (out.empty()) throw NotFoundError("unknown country or region '" + wanted + "'");
    return out;
}

double total_bandwidth(const std::string& country) {
    const std::string key = lower(trim(country));
    double sum = 0.0;
    bool seen = false;
    for (const auto& entry : load_registry()) {
        if (lower(entry.area) != key) continue;
        seen = true;
        if (!entry.ranges.empty()) sum += entry.bandwidth_mhz;
    }
    if (!seen) throw NotFoundError("unknown country '" + country + "'");
    return sum;
}

std::vector<SpectrumAllocation> bands_overlapping(double low_mhz, double high_mhz) {
    if (!(std::isfinite(low_mhz) && std::isfinite(high_mhz)))
        throw ValidationError("overlap window edges must be finite");
    if (!(low_mhz < high_mhz))
        throw ValidationError("degenerate overlap window: low must be < high");

    std::vector<SpectrumAllocation> out;
    for (const auto& entry : load_registry()) {
        const bool hit = std::any_of(entry.ranges.begin(), entry.ranges.end(),
                                     [&](const FrequencyRange& r) {
                                         return r.low_mhz < high_mhz && low_mhz < r.high_mhz;
                                     });
        if (hit) out.push_back(entry);
    }
    return out;
}

std::string to_csv(const std::vector<SpectrumAllocation>& allocations) {
    std::ostringstream os;
    os << "itu_region,area,band_label,range1_low_mhz,range1_high_mhz,"
          "range2_low_mhz,range2_high_mhz,bandwidth_mhz,split_mhz,contiguity,note\n";
    for (const auto& a : allocations) {
        os << a.itu_region << ',' << csv_escape(a.area) << ',' << csv_escape(a.band_label) << ',';
        for (std::size_t i = 0; i < 2; ++i) {
            if (i < a.ranges.size())
                os << format_double(a.ranges[i].low_mhz) << ','
                   << format_double(a.ranges[i].high_mhz) << ',';
            else
                os << ",,";
        }
        os << format_double(a.bandwidth_mhz) << ',';
        if (a.split_mhz)
            os << format_double((*a.split_mhz)[0]) << '+' << format_double((*a.split_mhz)[1]);
        os << ',' << to_string(a.contiguity) << ',' << csv_escape(a.note) << '\n';
    }
    return os.str();
}

std::string to_json(const std::vector<SpectrumAllocation>& allocations) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& a : allocations) {
        nlohmann::ordered_json entry;
        entry["itu_region"] = a.itu_region;
        entry["area"] = a.area;
        entry["band_label"] = a.band_label;
        auto ranges = nlohmann::ordered_json::array();
        for (const auto& r : a.ranges)
            ranges.push_back({{"low_mhz", r.low_mhz}, {"high_mhz", r.high_mhz}});
        entry["ranges"] = std::move(ranges);
        entry["bandwidth_mhz"] = a.bandwidth_mhz;
        if (a.split_mhz)
            entry["split_mhz"] = {(*a.split_mhz)[0], (*a.split_mhz)[1]};
        else
            entry["split_mhz"] = nullptr;
        entry["contiguity"] = to_string(a.contiguity);
        entry["note"] = a.note;
        arr.push_back(std::move(entry));
    }
    return arr.dump(2) + "\n";
}

const char* to_string(Contiguity contiguity) {
    switch (contiguity) {
        case Contiguity::contiguous: return "contiguous";
        case Contiguity::non_contiguous: return "non-contiguous";
        case Contiguity::unspecified: return "unspecified";
    }
    return "unknown";
}

}  // namespace drpslte
