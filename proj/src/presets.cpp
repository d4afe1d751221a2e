#include "mem/presets.hpp"

#include <string>

#include "mem/errors.hpp"

namespace mem {

Scene preset_scene(Preset preset, double wavenumber) {
  Scene s;
  s.wavenumber = wavenumber;
  switch (preset) {
    case Preset::close:
      s.cylinders = {{Point2(0.0, 0.0), 2.0}, {Point2(4.0, 0.0), 1.0}, {Point2(-1.0, 9.0), 0.5}};
      s.incident = PointSource{Point2(2.0, -50.0)};
      break;
    case Preset::moderate:
      s.cylinders = {{Point2(0.0, 0.0), 2.0}, {Point2(7.0, 0.0), 1.0}, {Point2(3.5, 12.0), 0.5}};
      s.incident = PointSource{Point2(3.5, -50.0)};
      break;
    case Preset::far:
      s.cylinders = {{Point2(0.0, 0.0), 2.0}, {Point2(10.0, 0.0), 1.0}, {Point2(5.0, 14.0), 0.5}};
      s.incident = PointSource{Point2(5.0, -50.0)};
      break;
  }
  s.name = std::string(preset_name(preset));
  return s;
}

std::string_view preset_name(Preset preset) {
  switch (preset) {
    case Preset::close:
      return "close";
    case Preset::moderate:
      return "moderate";
    case Preset::far:
      return "far";
  }
  return "";
}

Preset parse_preset(std::string_view name) {
  for (Preset p : kAllPresets)
    if (preset_name(p) == name) return p;
  throw FormatError("unknown preset '" + std::string(name) + "' (expected close, moderate or far)");
}

}  // namespace mem
