#include "mem/scene_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mem/errors.hpp"

namespace mem {
namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const char* where) {
  for (const auto& item : obj.items())
    if (!allowed.count(item.key()))
      throw FormatError(std::string("unknown key '") + item.key() + "' in " + where);
}

const json& field(const json& obj, const char* key, const char* where) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(std::string("missing '") + key + "' in " + where);
  return *it;
}

double number(const json& v, const char* what) {
  if (!v.is_number()) throw FormatError(std::string(what) + " must be a number");
  return v.get<double>();
}

Point2 point(const json& v, const char* what) {
  if (!v.is_array() || v.size() != 2)
    throw FormatError(std::string(what) + " must be a two-element array");
  return {number(v[0], what), number(v[1], what)};
}

json point_json(const Point2& p) { return json::array({p.x(), p.y()}); }

}  // namespace

Scene parse_scene(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("scene is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("scene document must be an object");
  reject_unknown(doc, {"name", "cylinders", "wavenumber", "incident"}, "scene");

  Scene scene;
  if (const auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw FormatError("name must be a string");
    scene.name = it->get<std::string>();
  }

  const auto& cyls = field(doc, "cylinders", "scene");
  if (!cyls.is_array()) throw FormatError("cylinders must be an array");
  for (const auto& c : cyls) {
    if (!c.is_object()) throw FormatError("cylinder entries must be objects");
    reject_unknown(c, {"center", "radius"}, "cylinder");
    scene.cylinders.push_back(
        {point(field(c, "center", "cylinder"), "center"), number(field(c, "radius", "cylinder"), "radius")});
  }

  scene.wavenumber = number(field(doc, "wavenumber", "scene"), "wavenumber");

  const auto& inc = field(doc, "incident", "scene");
  if (!inc.is_object()) throw FormatError("incident must be an object");
  const auto& type = field(inc, "type", "incident");
  if (!type.is_string()) throw FormatError("incident type must be a string");
  const auto kind = type.get<std::string>();
  if (kind == "plane") {
    reject_unknown(inc, {"type", "angle"}, "plane incident");
    scene.incident = PlaneWave{number(field(inc, "angle", "incident"), "angle")};
  } else if (kind == "point") {
    reject_unknown(inc, {"type", "location"}, "point incident");
    scene.incident = PointSource{point(field(inc, "location", "incident"), "location")};
  } else {
    throw FormatError("incident type must be \"plane\" or \"point\", got \"" + kind + "\"");
  }
  return scene;
}

std::string emit_scene(const Scene& scene) {
  json doc = json::object();
  if (!scene.name.empty()) doc["name"] = scene.name;
  json cyls = json::array();
  for (const auto& c : scene.cylinders) cyls.push_back({{"center", point_json(c.center)}, {"radius", c.radius}});
  doc["cylinders"] = std::move(cyls);
  doc["wavenumber"] = scene.wavenumber;
  if (const auto* pw = std::get_if<PlaneWave>(&scene.incident))
    doc["incident"] = {{"type", "plane"}, {"angle", pw->angle}};
  else
    doc["incident"] = {{"type", "point"}, {"location", point_json(std::get<PointSource>(scene.incident).location)}};
  return doc.dump(2) + "\n";
}

Scene load_scene(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open scene file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  auto scene = parse_scene(buf.str());
  if (scene.name.empty()) scene.name = path.stem().string();
  return scene;
}

void save_scene(const Scene& scene, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot write scene file " + path.string());
  out << emit_scene(scene);
}

}  // namespace mem
