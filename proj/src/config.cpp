// Copyright 2026 The mirrorgate Authors
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

#include "mirrorgate/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace mirrorgate::cli {

namespace {

using nlohmann::json;

const std::set<std::string> kCommands = {"solve",    "gate",     "fidelity-sweep",
                                         "wavepacket", "duration", "working-condition",
                                         "equivalence"};

[[noreturn]] void fail(const std::string& message) { throw ConfigError(message); }

void allow_keys(const json& obj, const std::string& where,
                std::initializer_list<const char*> keys) {
  if (!obj.is_object()) fail(where + " must be a JSON object");
  for (const auto& [key, value] : obj.items()) {
    const bool known = std::any_of(keys.begin(), keys.end(),
                                   [&](const char* k) { return key == k; });
    if (!known) fail("unknown key '" + key + "' in " + where);
  }
}

double number(const json& obj, const char* key, const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_number()) fail(where + "." + key + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(where + "." + key + " must be finite");
  return x;
}

double number_or(const json& obj, const char* key, const std::string& where,
                 double fallback) {
  return obj.contains(key) ? number(obj, key, where) : fallback;
}

int integer(const json& obj, const char* key, const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_number_integer()) fail(where + "." + key + " must be an integer");
  return v.get<int>();
}

std::string text(const json& obj, const char* key, const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_string()) fail(where + "." + key + " must be a string");
  return v.get<std::string>();
}

Units parse_units(const json& doc) {
  if (!doc.contains("units")) {
    fail("missing unit tag: set \"units\" to \"k0_units\" or \"SI\"");
  }
  const std::string u = text(doc, "units", "config");
  if (u == "k0_units") return Units::kK0;
  if (u == "SI") return Units::kSI;
  fail("units must be \"k0_units\" or \"SI\", got \"" + u + "\"");
}

void parse_model(const json& m, RunConfig& cfg) {
  const std::string where = "model";
  allow_keys(m, where, {"type", "mass", "gamma", "barrier", "velocity", "omega0", "coupling"});
  const std::string type = m.contains("type") ? text(m, "type", where) : "massive";
  const double k0 = cfg.regime.k0;
  if (type == "massive") {
    for (const char* k : {"velocity", "omega0", "coupling"}) {
      if (m.contains(k)) fail(std::string("model.") + k + " applies to the photonic model only");
    }
    const double mass = number_or(m, "mass", where, 1.0);
    if (!(mass > 0.0)) fail("model.mass must be > 0");
    if (m.contains("gamma") && m.contains("barrier")) {
      fail("model: give either gamma or barrier, not both");
    }
    if (m.contains("barrier")) {
      const double barrier = number(m, "barrier", where);
      if (barrier < 0.0) fail("model.barrier (Gamma) must be >= 0");
      cfg.model = CouplingModel(Massive{mass, barrier});
      cfg.gamma = mass * barrier / k0;
    } else {
      const double gamma = number_or(m, "gamma", where, 1000.0);
      if (gamma < 0.0) fail("model.gamma must be >= 0 for the massive model");
      cfg.model = CouplingModel::massive_with_gamma(gamma, k0, mass);
      if (m.contains("gamma")) cfg.gamma = gamma;
    }
    return;
  }
  if (type == "photonic") {
    for (const char* k : {"mass", "barrier"}) {
      if (m.contains(k)) fail(std::string("model.") + k + " applies to the massive model only");
    }
    const double v = number_or(m, "velocity", where, 1.0);
    const double j = number_or(m, "coupling", where, 1.0);
    if (!(v > 0.0)) fail("model.velocity must be > 0");
    if (j < 0.0) fail("model.coupling (J) must be >= 0");
    if (m.contains("gamma") && m.contains("omega0")) {
      fail("model: give either gamma or omega0, not both");
    }
    double omega0 = 0.0;
    if (m.contains("omega0")) {
      omega0 = number(m, "omega0", where);
    } else {
      const double gamma = number_or(m, "gamma", where, 1000.0);
      if (gamma == 0.0) fail("model.gamma must be nonzero for the photonic model");
      const photonic::LambdaAtomParams probe(v, 0.0, j);
      omega0 = v * k0 - photonic::detuning_for_gamma(probe, gamma);
      cfg.gamma = gamma;
    }
    if (omega0 < 0.0) fail("model.omega0 must be >= 0");
    cfg.atoms = photonic::LambdaAtomParams(v, omega0, j);
    cfg.model = cfg.atoms.model();
    return;
  }
  fail("model.type must be \"massive\" or \"photonic\", got \"" + type + "\"");
}

void parse_packet(const json& doc, RunConfig& cfg) {
  json p = doc.contains("packet") ? doc.at("packet") : json::object();
  allow_keys(p, "packet", {"dk", "x0", "x0_widths", "k0"});
  const double k0 = number_or(p, "k0", "packet", cfg.regime.k0);
  const double dk = number_or(p, "dk", "packet", 0.05 * k0);
  if (!(dk > 0.0)) fail("packet.dk must be > 0");
  if (p.contains("x0") && p.contains("x0_widths")) {
    fail("packet: give either x0 or x0_widths, not both");
  }
  const double dx = 0.5 / dk;
  const double x0 = p.contains("x0") ? number(p, "x0", "packet")
                                     : number_or(p, "x0_widths", "packet", -8.0) * dx;
  cfg.packet = wavepacket::GaussianPacket(x0, k0, dk);
}

void parse_materials(const json& doc, RunConfig& cfg) {
  cfg.materials.clear();
  auto preset = [&](const std::string& name) {
    const wavepacket::MaterialPreset p = wavepacket::material_preset(name);
    cfg.materials.push_back({p.name, p.refractive_index, p.group_velocity(), p.wavelength});
  };
  if (!doc.contains("material")) {
    preset("gaas");
    preset("diamond");
    return;
  }
  const json& m = doc.at("material");
  if (m.is_string()) {
    preset(m.get<std::string>());
    return;
  }
  allow_keys(m, "material", {"velocity", "wavelength", "refractive_index"});
  if (cfg.units != Units::kSI) {
    fail("material velocity/wavelength are SI quantities: set \"units\": \"SI\"");
  }
  if (m.contains("velocity") == m.contains("refractive_index")) {
    fail("material: give exactly one of velocity or refractive_index");
  }
  WorkingConditionInput in{"custom", 0.0, 0.0, number(m, "wavelength", "material")};
  if (m.contains("velocity")) {
    in.velocity = number(m, "velocity", "material");
  } else {
    in.refractive_index = number(m, "refractive_index", "material");
    if (!(in.refractive_index > 0.0)) fail("material.refractive_index must be > 0");
    in.velocity = wavepacket::kSpeedOfLight / in.refractive_index;
  }
  if (!(in.velocity > 0.0)) fail("material.velocity must be > 0");
  if (!(in.wavelength > 0.0)) fail("material.wavelength must be > 0");
  cfg.materials.push_back(in);
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) {
    out[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  }
  return out;
}

void parse_equivalence(const json& doc, RunConfig& cfg) {
  json e = doc.contains("equivalence") ? doc.at("equivalence") : json::object();
  allow_keys(e, "equivalence", {"k_lo", "k_hi", "points", "k_grid"});
  if (e.contains("k_grid")) {
    if (e.contains("k_lo") || e.contains("k_hi") || e.contains("points")) {
      fail("equivalence: k_grid excludes k_lo/k_hi/points");
    }
    const json& g = e.at("k_grid");
    if (!g.is_array() || g.empty()) fail("equivalence.k_grid must be a non-empty array");
    for (const auto& v : g) {
      if (!v.is_number() || !std::isfinite(v.get<double>())) {
        fail("equivalence.k_grid entries must be finite numbers");
      }
      cfg.k_grid.push_back(v.get<double>());
    }
  } else {
    const double k0 = cfg.regime.k0;
    const double lo = number_or(e, "k_lo", "equivalence", 0.6 * k0);
    const double hi = number_or(e, "k_hi", "equivalence", 1.4 * k0);
    const int n = e.contains("points") ? integer(e, "points", "equivalence") : 101;
    if (n < 1) fail("equivalence.points must be >= 1");
    if (!(hi >= lo)) fail("equivalence: need k_lo <= k_hi");
    cfg.k_grid = linspace(lo, hi, n);
  }
  const auto& a = cfg.atoms;
  for (const double k : cfg.k_grid) {
    if (!(k > 0.0)) fail("equivalence: every k must be > 0");
    if (a.effective_coupling() == 0.0) continue;
    if (std::abs(a.velocity * k - a.omega0) <= 1e-9 * std::max(1.0, std::abs(a.omega0))) {
      fail("equivalence: k = " + std::to_string(k) +
           " sits on the pole v k = omega0 of gamma(k); move the grid off resonance");
    }
  }
}

}  // namespace

std::pair<int, int> parse_regime_flag(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) fail("--regime expects n,n' (e.g. 1,0), got '" + s + "'");
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a = s.substr(0, comma);
    const std::string b = s.substr(comma + 1);
    const int n = std::stoi(a, &used_a);
    const int np = std::stoi(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument("trailing");
    return {n, np};
  } catch (const std::logic_error&) {
    fail("--regime expects two integers n,n', got '" + s + "'");
  }
}

json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    fail("config file '" + path + "' is not valid JSON: " + e.what());
  }
}

void apply_overrides(json& doc, const std::string& command, const Overrides& o) {
  if (doc.is_null()) doc = json::object();
  if (!doc.is_object()) fail("config must be a JSON object");
  // Flags are dimensionless (k0 units); they tag an otherwise empty document.
  const bool any = o.regime || o.gamma || o.samples;
  if (any && !doc.contains("units") && command != "working-condition") {
    doc["units"] = "k0_units";
  }
  if (o.regime) {
    if (!doc.contains("regime")) doc["regime"] = json::object();
    doc["regime"]["n"] = o.regime->first;
    doc["regime"]["n_prime"] = o.regime->second;
  }
  if (o.gamma) {
    if (command == "working-condition") fail("--gamma does not apply to working-condition");
    if (!doc.contains("model")) doc["model"] = json::object();
    json& m = doc["model"];
    if (!m.is_object()) fail("model must be a JSON object");
    m.erase("barrier");
    m.erase("omega0");
    m["gamma"] = *o.gamma;
  }
  if (o.samples) {
    if (command == "fidelity-sweep") {
      if (!doc.contains("sweep")) doc["sweep"] = json::object();
      doc["sweep"]["samples"] = *o.samples;
    } else if (command == "wavepacket") {
      doc.erase("times");
      doc["snapshots"] = *o.samples;
    } else if (command == "equivalence") {
      if (!doc.contains("equivalence")) doc["equivalence"] = json::object();
      doc["equivalence"].erase("k_grid");
      doc["equivalence"]["points"] = *o.samples;
    } else {
      fail("--samples does not apply to " + command);
    }
  }
}

RunConfig parse_config(const json& doc_in, const std::string& command) {
  if (!kCommands.count(command)) fail("unknown command '" + command + "'");
  const json doc = doc_in.is_null() ? json::object() : doc_in;
  allow_keys(doc, "config",
             {"units", "regime", "geometry", "model", "k", "sweep", "packet", "snapshots",
              "times", "quadrature", "material", "equivalence", "timestamp"});

  RunConfig cfg;
  cfg.command = command;
  // A document without any physical quantity may omit the tag.
  const bool bare = doc.empty() || (doc.size() == 1 && doc.contains("timestamp"));
  if (!bare) cfg.units = parse_units(doc);
  const Units expected = command == "working-condition" ? Units::kSI : Units::kK0;
  if (!bare && cfg.units != expected && !(command == "working-condition" &&
                                          doc.contains("material") &&
                                          doc.at("material").is_string())) {
    fail(command + " expects \"units\": \"" +
         std::string(expected == Units::kSI ? "SI" : "k0_units") + "\"");
  }

  if (doc.contains("timestamp")) cfg.timestamp = text(doc, "timestamp", "config");

  if (doc.contains("regime")) {
    const json& r = doc.at("regime");
    allow_keys(r, "regime", {"n", "n_prime", "k0"});
    const int n = r.contains("n") ? integer(r, "n", "regime") : 1;
    const int np = r.contains("n_prime") ? integer(r, "n_prime", "regime") : 0;
    const double k0 = number_or(r, "k0", "regime", 1.0);
    cfg.regime = gate::cz_regime(n, np, k0);
  }
  if (doc.contains("geometry")) {
    const json& g = doc.at("geometry");
    allow_keys(g, "geometry", {"x2", "x3"});
    cfg.geometry_override = Geometry(number(g, "x2", "geometry"), number(g, "x3", "geometry"));
  }

  cfg.model = CouplingModel::massive_with_gamma(1000.0, cfg.regime.k0);
  if (doc.contains("model")) {
    parse_model(doc.at("model"), cfg);
    cfg.model_given = true;
  }
  if (cfg.geometry_override &&
      (command == "fidelity-sweep" || command == "wavepacket")) {
    fail(command + " is defined by the CZ regime; drop the geometry override");
  }

  if (doc.contains("k")) {
    const double k = number(doc, "k", "config");
    if (!(k > 0.0)) fail("k must be > 0");
    cfg.k = k;
  }

  if (doc.contains("sweep")) {
    const json& s = doc.at("sweep");
    allow_keys(s, "sweep", {"lo", "hi", "samples"});
    cfg.sweep_lo = number_or(s, "lo", "sweep", cfg.sweep_lo);
    cfg.sweep_hi = number_or(s, "hi", "sweep", cfg.sweep_hi);
    if (s.contains("samples")) cfg.sweep_samples = integer(s, "samples", "sweep");
  }
  if (!(cfg.sweep_lo > 0.0)) fail("sweep.lo must be > 0");
  if (!(cfg.sweep_hi >= cfg.sweep_lo)) fail("sweep: need lo <= hi");
  if (cfg.sweep_samples < 1) fail("sweep.samples must be >= 1");
  if ((cfg.sweep_samples == 1) != (cfg.sweep_hi == cfg.sweep_lo)) {
    fail("sweep: use exactly one sample for a collapsed range (lo == hi) and >= 2 otherwise");
  }

  parse_packet(doc, cfg);

  if (doc.contains("snapshots") && doc.contains("times")) {
    fail("give either snapshots or times, not both");
  }
  if (doc.contains("snapshots")) cfg.snapshots = integer(doc, "snapshots", "config");
  if (cfg.snapshots < 2) fail("snapshots must be >= 2");
  if (doc.contains("times")) {
    const json& t = doc.at("times");
    if (!t.is_array() || t.empty()) fail("times must be a non-empty array");
    for (const auto& v : t) {
      if (!v.is_number() || !std::isfinite(v.get<double>())) {
        fail("times entries must be finite numbers");
      }
      cfg.times.push_back(v.get<double>());
    }
  }

  if (doc.contains("quadrature")) {
    const json& q = doc.at("quadrature");
    allow_keys(q, "quadrature", {"nodes", "half_width", "refine_resonances"});
    if (q.contains("nodes")) cfg.quadrature.nodes = integer(q, "nodes", "quadrature");
    cfg.quadrature.half_width =
        number_or(q, "half_width", "quadrature", cfg.quadrature.half_width);
    if (q.contains("refine_resonances")) {
      if (!q.at("refine_resonances").is_boolean()) {
        fail("quadrature.refine_resonances must be true or false");
      }
      cfg.quadrature.refine_resonances = q.at("refine_resonances").get<bool>();
    }
    if (cfg.quadrature.nodes < 2) fail("quadrature.nodes must be >= 2");
    if (!(cfg.quadrature.half_width > 0.0)) fail("quadrature.half_width must be > 0");
  }

  if (command == "working-condition") parse_materials(doc, cfg);
  if (command == "equivalence") {
    if (doc.contains("model") && !cfg.model.is_photonic()) {
      fail("equivalence needs a photonic model (model.type = \"photonic\")");
    }
    parse_equivalence(doc, cfg);
  }
  return cfg;
}

}  // namespace mirrorgate::cli
