#pragma once

#include <array>
#include <string>
#include <string_view>

#include "mem/scene.hpp"

/// Named three-cylinder configurations with radii (2, 1, 0.5). The centres are
/// chosen, not published data: each preset fixes the gap between the two
/// largest cylinders and keeps the smallest one clear of that pair, and all
/// use a point source about 50 units below the group.
namespace mem {

enum class Preset { close, moderate, far };

inline constexpr std::array<Preset, 3> kAllPresets{Preset::close, Preset::moderate, Preset::far};
inline constexpr std::array<double, 3> kPresetWavenumbers{0.6, 3.0, 15.0};

/// close: d_12 = 4 (gap 1); moderate: d_12 = 7 (gap 4); far: d_12 = 10 (gap 7).
Scene preset_scene(Preset preset, double wavenumber = 0.6);

std::string_view preset_name(Preset preset);
/// Throws FormatError for unknown names.
Preset parse_preset(std::string_view name);

}  // namespace mem
