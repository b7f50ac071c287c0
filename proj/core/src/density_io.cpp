// Copyright 2026 The ekernel Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ekernel/density_io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"

namespace ekernel {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) {
  throw Error(ErrorCode::kConfigViolation, "density config: " + msg);
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  if (!obj.is_object()) fail(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) fail("unknown key '" + key + "' in " + where);
  }
}

const json& field(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail("missing key '" + std::string(key) + "' in " + where);
  return *it;
}

double number(const json& v, const std::string& what) {
  if (!v.is_number()) fail(what + " must be a number");
  return v.get<double>();
}

Complex point(const json& v, const std::string& what) {
  if (!v.is_array() || v.size() != 2) fail(what + " must be [x, y]");
  return {number(v[0], what), number(v[1], what)};
}

Region parse_shape(const json& shape, const std::string& where) {
  if (!shape.is_object()) fail(where + " must be an object");
  const json& kind = field(shape, "kind", where);
  if (!kind.is_string()) fail(where + ".kind must be a string");
  const auto k = kind.get<std::string>();
  if (k == "disk") {
    reject_unknown_keys(shape, {"kind", "center", "radius"}, where);
    return Disk{point(field(shape, "center", where), where + ".center"),
                number(field(shape, "radius", where), where + ".radius")};
  }
  if (k == "annulus") {
    reject_unknown_keys(shape, {"kind", "center", "r_inner", "r_outer"}, where);
    return Annulus{point(field(shape, "center", where), where + ".center"),
                   number(field(shape, "r_inner", where), where + ".r_inner"),
                   number(field(shape, "r_outer", where), where + ".r_outer")};
  }
  if (k == "rectangle") {
    reject_unknown_keys(shape, {"kind", "corner_min", "corner_max"}, where);
    return Rectangle{point(field(shape, "corner_min", where), where + ".corner_min"),
                     point(field(shape, "corner_max", where), where + ".corner_max")};
  }
  fail("unknown shape kind '" + k + "' in " + where);
}

DensityGrid parse_grid(const json& grid) {
  reject_unknown_keys(grid, {"origin", "spacing", "values"}, "grid");
  DensityGrid out;
  out.origin = point(field(grid, "origin", "grid"), "grid.origin");
  out.spacing = number(field(grid, "spacing", "grid"), "grid.spacing");
  const json& rows = field(grid, "values", "grid");
  if (!rows.is_array() || rows.empty()) fail("grid.values must be a non-empty array");
  out.ny = rows.size();
  for (const auto& row : rows) {
    if (!row.is_array() || row.empty()) fail("grid.values rows must be non-empty arrays");
    if (out.nx == 0) out.nx = row.size();
    if (row.size() != out.nx) fail("grid.values rows must have equal length");
    for (const auto& v : row) out.values.push_back(number(v, "grid value"));
  }
  return out;
}

json point_json(Complex z) { return json::array({z.real(), z.imag()}); }

}  // namespace

DensitySpec parse_density_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  reject_unknown_keys(doc, {"support_center", "support_radius", "terms", "grid"}, "root");
  DensitySpec g;
  g.support_center = point(field(doc, "support_center", "root"), "support_center");
  g.support_radius = number(field(doc, "support_radius", "root"), "support_radius");
  const json& terms = field(doc, "terms", "root");
  if (!terms.is_array()) fail("terms must be an array");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string where = "terms[" + std::to_string(i) + "]";
    reject_unknown_keys(terms[i], {"shape", "coeff"}, where);
    g.terms.push_back({parse_shape(field(terms[i], "shape", where), where + ".shape"),
                       number(field(terms[i], "coeff", where), where + ".coeff")});
  }
  if (const auto it = doc.find("grid"); it != doc.end()) g.grid = parse_grid(*it);
  return g;
}

DensitySpec load_density_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  DensitySpec g = parse_density_json(buffer.str());
  require_valid(g);
  return g;
}

std::string to_json(const DensitySpec& g) {
  json doc;
  doc["support_center"] = point_json(g.support_center);
  doc["support_radius"] = g.support_radius;
  doc["terms"] = json::array();
  for (const auto& term : g.terms) {
    json shape;
    if (const auto* d = std::get_if<Disk>(&term.region)) {
      shape = {{"kind", "disk"}, {"center", point_json(d->center)}, {"radius", d->radius}};
    } else if (const auto* a = std::get_if<Annulus>(&term.region)) {
      shape = {{"kind", "annulus"},
               {"center", point_json(a->center)},
               {"r_inner", a->r_inner},
               {"r_outer", a->r_outer}};
    } else {
      const auto& r = std::get<Rectangle>(term.region);
      shape = {{"kind", "rectangle"},
               {"corner_min", point_json(r.corner_min)},
               {"corner_max", point_json(r.corner_max)}};
    }
    doc["terms"].push_back({{"shape", shape}, {"coeff", term.coeff}});
  }
  if (g.grid) {
    json rows = json::array();
    for (std::size_t j = 0; j < g.grid->ny; ++j) {
      json row = json::array();
      for (std::size_t i = 0; i < g.grid->nx; ++i) row.push_back(g.grid->at(i, j));
      rows.push_back(std::move(row));
    }
    doc["grid"] = {{"origin", point_json(g.grid->origin)},
                   {"spacing", g.grid->spacing},
                   {"values", std::move(rows)}};
  }
  return doc.dump(2);
}

}  // namespace ekernel
