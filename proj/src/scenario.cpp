#include "frameforge/scenario.hpp"

#include <complex>
#include <fstream>

namespace frameforge {

namespace {

GeneratorSpec step_generator(std::vector<std::pair<std::pair<double, double>, double>> steps) {
  GeneratorSpec g;
  g.dimension = 1;
  for (const auto& [interval, value] : steps) {
    Piece piece;
    piece.box.lo = {interval.first};
    piece.box.hi = {interval.second};
    piece.value = TrigPoly::constant(value, 1);
    g.pieces.push_back(std::move(piece));
  }
  return g;
}

Scenario make_example1() {
  std::vector<GeneratorSpec> generators;
  generators.push_back(step_generator({{{-0.5, 0.5}, -8.0}, {{0.5, 1.5}, 4.0}}));
  generators.push_back(step_generator({{{-0.5, 0.5}, 1.0}, {{1.5, 2.5}, 4.0}}));
  generators.push_back(step_generator({{{0.5, 1.5}, 1.0}, {{1.5, 2.5}, 8.0}}));
  return {"example1",
          "three step generators on the line with a constant rank-2 Gramian; the kernel "
          "direction (1, 8, -4)/9 is shared by every frequency",
          GramianField::from_generators(std::move(generators))};
}

Scenario make_example2() {
  const std::complex<double> half(0.5, 0.0);
  const std::complex<double> half_i(0.0, 0.5);

  Piece plane;
  plane.box.lo = {-0.5, -0.5};
  plane.box.hi = {0.5, 0.5};

  GeneratorSpec g1;
  g1.dimension = 2;
  g1.pieces.push_back(plane);
  g1.pieces.back().value.terms = {{{1, 0}, half_i}, {{-1, 0}, -half_i}};

  GeneratorSpec g2;
  g2.dimension = 2;
  g2.pieces.push_back(plane);
  g2.pieces.back().value.terms = {{{1, 1}, half}, {{-1, 1}, half}};

  return {"example2",
          "two generators on the plane whose Gramian is a rank-one projector at every "
          "frequency, so no pair of coefficients can keep a frame after merging them "
          "into one generator",
          GramianField::from_generators({std::move(g1), std::move(g2)})};
}

Scenario make_paley() {
  std::vector<GeneratorSpec> generators;
  generators.push_back(step_generator({{{0.0, 0.5}, 1.0}}));
  generators.push_back(step_generator({{{0.5, 1.0}, 1.0}}));
  return {"paley",
          "two half-line indicators splitting the cell; the Gramian flips between the "
          "two coordinate projectors",
          GramianField::from_generators(std::move(generators))};
}

Scenario make_bessel_not_frame() {
  Piece piece;
  piece.box.lo = {-0.5};
  piece.box.hi = {0.5};
  piece.value.terms = {{{0}, {2.0, 0.0}}, {{1}, {-1.0, 0.0}}, {{-1}, {-1.0, 0.0}}};
  std::vector<std::vector<EntryPieces>> entries(1);
  entries[0].push_back({piece});
  return {"bessel-not-frame",
          "a single generator whose spectral function 2 - 2 cos(2 pi w) pinches to zero, "
          "bounded above but with no positive lower bound",
          GramianField::from_entries(1, std::move(entries))};
}

double require_number(const nlohmann::json& j, const std::string& what) {
  if (!j.is_number()) throw ParseError(what + " must be a number");
  return j.get<double>();
}

TrigPoly parse_poly(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("poly must be an array of terms");
  TrigPoly poly;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("freq") || !term.contains("coeff")) {
      throw ParseError("each poly term needs freq and coeff");
    }
    TrigPoly::Term parsed;
    for (const auto& f : term.at("freq")) {
      if (!f.is_number_integer()) throw ParseError("freq entries must be integers");
      parsed.freq.push_back(f.get<int>());
    }
    const auto& coeff = term.at("coeff");
    if (!coeff.is_array() || coeff.size() != 2) {
      throw ParseError("coeff must be [re, im]");
    }
    parsed.coeff = {require_number(coeff[0], "coeff"), require_number(coeff[1], "coeff")};
    poly.terms.push_back(std::move(parsed));
  }
  return poly;
}

Piece parse_piece(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("box") || !j.contains("poly")) {
    throw ParseError("each piece needs box and poly");
  }
  Piece piece;
  for (const auto& bounds : j.at("box")) {
    if (!bounds.is_array() || bounds.size() != 2) {
      throw ParseError("box must be an array of [lo, hi] pairs");
    }
    piece.box.lo.push_back(require_number(bounds[0], "box bound"));
    piece.box.hi.push_back(require_number(bounds[1], "box bound"));
  }
  piece.value = parse_poly(j.at("poly"));
  return piece;
}

nlohmann::json poly_to_json(const TrigPoly& poly) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& term : poly.terms) {
    nlohmann::json t;
    t["freq"] = term.freq;
    t["coeff"] = {term.coeff.real(), term.coeff.imag()};
    out.push_back(std::move(t));
  }
  return out;
}

nlohmann::json piece_to_json(const Piece& piece) {
  nlohmann::json out;
  auto box = nlohmann::json::array();
  for (std::size_t i = 0; i < piece.box.lo.size(); ++i) {
    box.push_back({piece.box.lo[i], piece.box.hi[i]});
  }
  out["box"] = std::move(box);
  out["poly"] = poly_to_json(piece.value);
  return out;
}

}  // namespace

const std::vector<std::string>& builtin_scenario_names() {
  static const std::vector<std::string> names = {"example1", "example2", "paley",
                                                 "bessel-not-frame"};
  return names;
}

Scenario builtin_scenario(const std::string& name) {
  if (name == "example1") return make_example1();
  if (name == "example2") return make_example2();
  if (name == "paley") return make_paley();
  if (name == "bessel-not-frame") return make_bessel_not_frame();
  throw UnknownScenarioError("unknown scenario '" + name + "'");
}

Scenario resolve_scenario(const std::string& name_or_path) {
  for (const auto& name : builtin_scenario_names()) {
    if (name == name_or_path) return builtin_scenario(name);
  }
  return load_scenario(name_or_path);
}

Scenario scenario_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("scenario must be a JSON object");
  if (!j.contains("dimension") || !j.at("dimension").is_number_integer()) {
    throw ParseError("scenario needs an integer dimension");
  }
  const int dimension = j.at("dimension").get<int>();
  const std::string name = j.value("name", std::string{});
  const std::string notes = j.value("notes", std::string{});

  const bool has_generators = j.contains("generators");
  const bool has_entries = j.contains("gramian_entries");
  if (has_generators == has_entries) {
    throw ParseError("scenario needs exactly one of generators or gramian_entries");
  }

  try {
    if (has_generators) {
      std::vector<GeneratorSpec> generators;
      for (const auto& gen : j.at("generators")) {
        GeneratorSpec g;
        g.dimension = dimension;
        for (const auto& piece : gen) g.pieces.push_back(parse_piece(piece));
        generators.push_back(std::move(g));
      }
      return {name, notes, GramianField::from_generators(std::move(generators))};
    }
    const auto& rows = j.at("gramian_entries");
    std::vector<std::vector<EntryPieces>> entries;
    for (const auto& row : rows) {
      std::vector<EntryPieces> parsed_row;
      for (const auto& cell : row) {
        EntryPieces pieces;
        if (!cell.is_null()) {
          for (const auto& piece : cell) pieces.push_back(parse_piece(piece));
        }
        parsed_row.push_back(std::move(pieces));
      }
      entries.push_back(std::move(parsed_row));
    }
    return {name, notes, GramianField::from_entries(dimension, std::move(entries))};
  } catch (const Error&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed scenario: ") + e.what());
  }
}

nlohmann::json scenario_to_json(const Scenario& scenario) {
  if (scenario.field.conjugation_sourced()) {
    throw BadShapeError("conjugated fields cannot be written as scenarios");
  }
  nlohmann::json out;
  if (!scenario.name.empty()) out["name"] = scenario.name;
  if (!scenario.notes.empty()) out["notes"] = scenario.notes;
  out["dimension"] = scenario.field.dimension();
  if (scenario.field.generator_sourced()) {
    auto generators = nlohmann::json::array();
    for (const auto& g : scenario.field.generators()) {
      auto pieces = nlohmann::json::array();
      for (const auto& piece : g.pieces) pieces.push_back(piece_to_json(piece));
      generators.push_back(std::move(pieces));
    }
    out["generators"] = std::move(generators);
  } else {
    auto rows = nlohmann::json::array();
    for (const auto& row : scenario.field.entries()) {
      auto cells = nlohmann::json::array();
      for (const auto& cell : row) {
        if (cell.empty()) {
          cells.push_back(nullptr);
        } else {
          auto pieces = nlohmann::json::array();
          for (const auto& piece : cell) pieces.push_back(piece_to_json(piece));
          cells.push_back(std::move(pieces));
        }
      }
      rows.push_back(std::move(cells));
    }
    out["gramian_entries"] = std::move(rows);
  }
  return out;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
  Scenario scenario = scenario_from_json(j);
  if (scenario.name.empty()) scenario.name = path;
  return scenario;
}

void save_scenario(const Scenario& scenario, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write scenario file '" + path + "'");
  out << scenario_to_json(scenario).dump(2) << '\n';
}

}  // namespace frameforge
