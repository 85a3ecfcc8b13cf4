#include "cli/formats.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "nilhodge/error.hpp"
#include "nilhodge/exterior.hpp"

namespace nilhodge::io {
namespace {

const Json& require(const Json& doc, const char* key, const char* what) {
  if (!doc.is_object()) throw InvalidInput(std::string(what) + ": expected a JSON object");
  const auto it = doc.find(key);
  if (it == doc.end()) throw InvalidInput(std::string(what) + ": missing key \"" + key + "\"");
  return *it;
}

std::size_t as_count(const Json& value, const char* what) {
  if (!value.is_number_integer() || value.get<long long>() < 0)
    throw InvalidInput(std::string(what) + " must be a non-negative integer");
  return value.get<std::size_t>();
}

void reject_unknown_keys(const Json& doc, std::initializer_list<const char*> known, const char* what) {
  const std::set<std::string> allowed(known.begin(), known.end());
  for (const auto& [key, _] : doc.items()) {
    if (allowed.count(key) == 0) throw InvalidInput(std::string(what) + ": unknown key \"" + key + "\"");
  }
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(path.string() + ": invalid JSON: " + e.what());
  }
}

Rational parse_rational(const Json& value) {
  if (value.is_string()) return Rational::parse(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long>());
  throw InvalidInput("rational must be a string \"p/q\" or an integer, got " + value.dump());
}

StructureConstants parse_structure_constants(const Json& doc) {
  const char* what = "lie algebra";
  reject_unknown_keys(doc, {"dim", "labels", "brackets"}, what);
  const std::size_t dim = as_count(require(doc, "dim", what), "dim");
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    for (const auto& l : doc.at("labels")) {
      if (!l.is_string()) throw InvalidInput("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  std::vector<BracketEntry> brackets;
  if (doc.contains("brackets")) {
    for (const auto& b : doc.at("brackets")) {
      reject_unknown_keys(b, {"i", "j", "v"}, "bracket");
      BracketEntry entry{as_count(require(b, "i", "bracket"), "i"),
                         as_count(require(b, "j", "bracket"), "j"), Vector(dim)};
      const Json& v = require(b, "v", "bracket");
      if (!v.is_object()) throw InvalidInput("bracket value must be an object {\"k\": \"p/q\"}");
      for (const auto& [key, coeff] : v.items()) {
        std::size_t k = 0;
        try {
          std::size_t used = 0;
          k = std::stoul(key, &used);
          if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
          throw InvalidInput("bracket value key \"" + key + "\" is not an index");
        }
        if (k >= dim) throw InvalidInput("bracket value index " + key + " out of range");
        entry.value[k] = parse_rational(coeff);
      }
      brackets.push_back(std::move(entry));
    }
  }
  return StructureConstants(dim, std::move(labels), std::move(brackets));
}

LieAlgebra parse_lie(const Json& doc) { return LieAlgebra(parse_structure_constants(doc)); }

CupData parse_cup(const Json& doc) {
  const char* what = "cup data";
  reject_unknown_keys(doc, {"b1", "b2", "cup", "hodge_split"}, what);
  const std::size_t b1 = as_count(require(doc, "b1", what), "b1");
  const std::size_t b2 = as_count(require(doc, "b2", what), "b2");
  const std::size_t cols = binomial(b1, 2);
  Matrix cup(b2, cols);
  const Json& rows = require(doc, "cup", what);
  if (!rows.is_array() || rows.size() != b2)
    throw InvalidInput("cup must be a list of " + std::to_string(b2) + " rows");
  for (std::size_t r = 0; r < b2; ++r) {
    if (!rows[r].is_array() || rows[r].size() != cols)
      throw InvalidInput("cup row " + std::to_string(r) + " needs " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) cup(r, c) = parse_rational(rows[r][c]);
  }
  std::optional<std::pair<std::size_t, std::size_t>> split;
  if (doc.contains("hodge_split") && !doc.at("hodge_split").is_null()) {
    const Json& s = doc.at("hodge_split");
    if (!s.is_array() || s.size() != 2) throw InvalidInput("hodge_split must be [p, q]");
    split = std::make_pair(as_count(s[0], "hodge_split"), as_count(s[1], "hodge_split"));
  }
  return CupData(b1, b2, std::move(cup), split);
}

ExtensionDatum parse_extension(const Json& doc) {
  const char* what = "extension";
  reject_unknown_keys(doc, {"rank", "hodge_typed", "cl"}, what);
  const std::size_t rank = as_count(require(doc, "rank", what), "rank");
  bool typed = false;
  if (doc.contains("hodge_typed")) {
    if (!doc.at("hodge_typed").is_boolean()) throw InvalidInput("hodge_typed must be a boolean");
    typed = doc.at("hodge_typed").get<bool>();
  }
  Vector cl(binomial(rank, 2));
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& term : require(doc, "cl", what)) {
    reject_unknown_keys(term, {"i", "j", "v"}, "cl term");
    const std::size_t i = as_count(require(term, "i", "cl term"), "i");
    const std::size_t j = as_count(require(term, "j", "cl term"), "j");
    if (i >= j) throw InvalidInput("cl term (" + std::to_string(i) + "," + std::to_string(j) + ") must have i < j");
    if (j >= rank) throw InvalidInput("cl term index out of range");
    if (!seen.insert({i, j}).second)
      throw InvalidInput("duplicate cl term (" + std::to_string(i) + "," + std::to_string(j) + ")");
    cl[wedge_rank(MultiIndex{i, j}, rank)] = parse_rational(require(term, "v", "cl term"));
  }
  return ExtensionDatum(rank, typed, std::move(cl));
}

std::vector<Matrix> parse_group_elements(const Json& elements, std::size_t n) {
  if (!elements.is_array()) throw InvalidInput("elements must be a list of matrices");
  std::vector<Matrix> out;
  for (std::size_t e = 0; e < elements.size(); ++e) {
    const Json& flat = elements[e];
    if (!flat.is_array() || flat.size() != n * n)
      throw InvalidInput("element " + std::to_string(e) + " needs " + std::to_string(n * n) + " entries");
    std::vector<Rational> entries;
    for (const auto& x : flat) entries.push_back(parse_rational(x));
    out.emplace_back(n, n, std::move(entries));
  }
  return out;
}

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(std::span<const Rational> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json to_json(const StructureConstants& sc) {
  Json brackets = Json::array();
  for (const auto& b : sc.entries()) {
    Json v = Json::object();
    for (std::size_t k = 0; k < b.value.size(); ++k)
      if (!b.value[k].is_zero()) v[std::to_string(k)] = b.value[k].to_string();
    brackets.push_back(Json{{"i", b.i}, {"j", b.j}, {"v", v}});
  }
  return Json{{"dim", sc.dim()}, {"labels", sc.labels()}, {"brackets", brackets}};
}

Json to_json(const HirschTower& tower) {
  Json stages = Json::array();
  for (std::size_t s = 0; s < tower.stage_count(); ++s) {
    const TowerStage& stage = tower.stages()[s];
    Json diffs = Json::array();
    for (const auto& d : stage.differentials) diffs.push_back(to_json(d));
    stages.push_back(Json{{"stage", s + 1},
                          {"weight", stage.weight},
                          {"first_generator", stage.first_generator},
                          {"generators", stage.size()},
                          {"differentials", diffs}});
  }
  return stages;
}

Json to_json(const WeightGradedHodge& mhs) {
  Json pieces = Json::array();
  for (const auto& piece : mhs.pieces) {
    Json hodge = Json::array();
    for (int p = piece.weight; p >= 0; --p)
      hodge.push_back(Json{{"p", p}, {"q", piece.weight - p}, {"h", piece.hodge_numbers.at({p, piece.weight - p})}});
    pieces.push_back(Json{{"weight", piece.weight}, {"dim", piece.dim}, {"hodge_numbers", hodge}});
  }
  return Json{{"degree", mhs.degree}, {"pieces", pieces}};
}

}  // namespace nilhodge::io
