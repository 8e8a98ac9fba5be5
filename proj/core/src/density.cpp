#include "burstcore/density.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

namespace burstcore {

namespace {

std::int64_t parse_int(std::string_view text, const std::string& context) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ArgumentError("invalid rational '" + context + "'");
    }
    return value;
}

}  // namespace

Density parse_density(const std::string& text) {
    if (text.empty()) throw ArgumentError("invalid rational ''");

    std::string_view view(text);
    Density result;

    if (auto slash = view.find('/'); slash != std::string_view::npos) {
        result.sum = parse_int(view.substr(0, slash), text);
        result.len = parse_int(view.substr(slash + 1), text);
        if (result.len <= 0) throw ArgumentError("invalid rational '" + text + "'");
    } else if (auto dot = view.find('.'); dot != std::string_view::npos) {
        // Exact decimal: digits after the point scale the denominator.
        std::string_view whole = view.substr(0, dot);
        std::string_view frac = view.substr(dot + 1);
        if (frac.empty() || frac.size() > 15) {
            throw ArgumentError("invalid rational '" + text + "'");
        }
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        std::int64_t whole_part = whole.empty() ? 0 : parse_int(whole, text);
        std::int64_t frac_part = parse_int(frac, text);
        if (frac_part < 0) throw ArgumentError("invalid rational '" + text + "'");
        if (whole_part < 0) throw ArgumentError("delta must be positive: '" + text + "'");
        result.sum = whole_part * scale + frac_part;
        result.len = scale;
    } else {
        result.sum = parse_int(view, text);
        result.len = 1;
    }

    if (result.sum <= 0) throw ArgumentError("delta must be positive: '" + text + "'");
    return result.reduced();
}

}  // namespace burstcore
