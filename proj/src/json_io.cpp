#include "lexforge/json_io.hpp"

#include <set>

namespace lexforge {

namespace {

Json rat_json(const Rat& r) { return r.to_string(); }

Rat rat_from_json(const Json& j) {
  if (!j.is_string()) throw Error("parse", "rational must be a \"p/q\" string");
  auto r = Rat::from_canonical_string(j.get<std::string>());
  if (!r)
    throw Error("parse", "not a reduced rational with positive denominator: " +
                             j.get<std::string>());
  return *r;
}

Json embedding_json(const Embedding& e) {
  Json arr = Json::array();
  for (const auto& [src, dst] : e.map) arr.push_back(Json::array({src, dst}));
  return arr;
}

}  // namespace

Json to_json(const LexStructure& s) {
  Json points = Json::array();
  for (const auto& p : s.points())
    points.push_back({{"id", p.id}, {"color", to_int(p.color)}});

  Json pairs = Json::array();
  const int n = s.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (const Rat* v = s.f_if_present(s.id_at(i), s.id_at(j)))
        pairs.push_back(Json::array({s.id_at(i), s.id_at(j), rat_json(*v)}));

  return Json{{"points", std::move(points)}, {"f", std::move(pairs)}};
}

LexStructure structure_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("points") || !j.contains("f"))
    throw Error("parse", "structure needs \"points\" and \"f\"");
  if (!j["points"].is_array() || !j["f"].is_array())
    throw Error("parse", "\"points\" and \"f\" must be arrays");

  std::vector<Point> points;
  for (const auto& jp : j["points"]) {
    if (!jp.is_object() || !jp.contains("id") || !jp.contains("color") ||
        !jp["id"].is_number_integer() || !jp["color"].is_number_integer())
      throw Error("parse", "point entries need integer \"id\" and \"color\"");
    points.push_back(
        {jp["id"].get<PointId>(), color_from_int(jp["color"].get<int>())});
  }

  std::set<PointId> known;
  for (const auto& p : points) known.insert(p.id);

  std::map<PairKey, Rat> fvals;
  for (const auto& entry : j["f"]) {
    if (!entry.is_array() || entry.size() != 3 ||
        !entry[0].is_number_integer() || !entry[1].is_number_integer())
      throw Error("parse", "pair entries must be [i, j, \"p/q\"]");
    const PointId a = entry[0].get<PointId>();
    const PointId b = entry[1].get<PointId>();
    if (a == b) throw Error("parse", "pair value on a single point");
    if (!known.count(a) || !known.count(b))
      throw Error("parse", "pair entry references an unknown point id");
    if (!fvals.emplace(PairKey::of(a, b), rat_from_json(entry[2])).second)
      throw Error("parse", "duplicate pair entry");
  }
  return LexStructure(std::move(points), std::move(fvals));
}

Json to_json(const ValidationReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    Json item{{"kind", to_string(v.kind)}, {"points", v.points}};
    if (v.expected) item["expected"] = rat_json(*v.expected);
    if (v.found) item["found"] = rat_json(*v.found);
    violations.push_back(std::move(item));
  }
  return Json{{"ok", report.ok}, {"violations", std::move(violations)}};
}

Json to_json(const Amalgam& amalgam) {
  return Json{{"result", to_json(amalgam.result)},
              {"emb_b", embedding_json(amalgam.emb_b)},
              {"emb_c", embedding_json(amalgam.emb_c)}};
}

Json to_json(const Demand& demand) {
  Json j{{"kind", demand.kind == DemandKind::one_star ? "1*" : "2*"},
         {"anchor", demand.anchor}};
  if (demand.anchor2) j["anchor2"] = *demand.anchor2;
  j["side"] = demand.side == Side::left ? "left" : "right";
  j["value"] = rat_json(demand.value);
  j["color"] = to_int(demand.color);
  return j;
}

Json to_json(const SaturationResult& result) {
  Json births = Json::array();
  for (const auto& [id, round] : result.log.births)
    births.push_back(Json::array({id, round}));
  Json satisfied = Json::array();
  for (const auto& d : result.log.satisfied) satisfied.push_back(to_json(d));
  return Json{{"structure", to_json(result.structure)},
              {"log",
               {{"rounds", result.log.rounds},
                {"births", std::move(births)},
                {"added", result.log.added},
                {"satisfied", std::move(satisfied)}}}};
}

Json to_json(const AxiomReport& report) {
  Json failures = Json::array();
  for (const auto& d : report.failures) failures.push_back(to_json(d));
  return Json{{"holds", report.holds}, {"failures", std::move(failures)}};
}

Json to_json(const std::vector<Cut>& cuts) {
  Json arr = Json::array();
  for (const auto& cut : cuts)
    arr.push_back({{"lower", cut.lower}, {"upper", cut.upper}});
  return Json{{"cuts", std::move(arr)}};
}

Json to_json(const TreeOrder& order) {
  Json branches = Json::array();
  for (const auto& b : order.branches)
    branches.push_back({{"path", b.path}, {"cut", b.cut_index}});
  return Json{{"structure", to_json(order.structure)},
              {"branches", std::move(branches)}};
}

SaturationResult saturation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("structure") || !j.contains("log"))
    throw Error("parse", "saturation bundle needs \"structure\" and \"log\"");
  SaturationResult out;
  out.structure = structure_from_json(j["structure"]);
  const Json& log = j["log"];
  out.log.rounds = log.at("rounds").get<int>();
  out.log.added = log.at("added").get<int>();
  for (const auto& entry : log.at("births"))
    out.log.births.emplace(entry[0].get<PointId>(), entry[1].get<int>());
  return out;  // the satisfied set is informational output, not read back
}

LexStructure structure_or_bundle_from_json(const Json& j) {
  if (j.is_object() && j.contains("structure"))
    return structure_from_json(j["structure"]);
  return structure_from_json(j);
}

namespace {

TreeNode tree_node_from_json(const Json& j) {
  if (!j.is_array()) throw Error("parse", "tree nodes are arrays of children");
  TreeNode node;
  for (const auto& child : j) node.children.push_back(tree_node_from_json(child));
  return node;
}

Json tree_node_json(const TreeNode& node) {
  Json arr = Json::array();
  for (const auto& child : node.children) arr.push_back(tree_node_json(child));
  return arr;
}

}  // namespace

FiniteTree tree_from_json(const Json& j) {
  return make_tree(tree_node_from_json(j));
}

Json to_json(const FiniteTree& tree) { return tree_node_json(tree.root); }

Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw Error("parse", "malformed JSON");
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace lexforge
