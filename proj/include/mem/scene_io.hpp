#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "mem/scene.hpp"

/// Scene documents are JSON:
///
///   {
///     "name": "far",                                   (optional)
///     "cylinders": [{"center": [x, y], "radius": r}, ...],
///     "wavenumber": k,
///     "incident": {"type": "plane", "angle": b}
///              |  {"type": "point", "location": [x, y]}
///   }
///
/// Unknown keys are rejected. Numbers are emitted with round-trip precision,
/// so parse(emit(s)) == s.
namespace mem {

Scene parse_scene(std::string_view text);
std::string emit_scene(const Scene& scene);

Scene load_scene(const std::filesystem::path& path);
void save_scene(const Scene& scene, const std::filesystem::path& path);

}  // namespace mem
