#include "tlbd/json_io.hpp"

#include "tlbd/errors.hpp"

namespace tlbd {

Json to_json(const Diagram& d) {
  Json arcs = Json::array();
  Json dots = Json::array();
  for (size_t a = 0; a < d.arcs.size(); ++a) {
    arcs.push_back(Json::array({d.arcs[a].first, d.arcs[a].second}));
    dots.push_back(d.dots[a]);
  }
  Json j;
  j["arcs"] = std::move(arcs);
  j["dots"] = std::move(dots);
  return j;
}

Diagram diagram_from_json(const Json& j, int source, int target) {
  Diagram d{source, target, {}, {}};
  const auto& arcs = j.at("arcs");
  const auto& dots = j.at("dots");
  if (arcs.size() != dots.size()) throw parse_error("diagram json: arcs/dots length mismatch");
  for (size_t a = 0; a < arcs.size(); ++a) {
    d.arcs.emplace_back(arcs[a].at(0).get<int>(), arcs[a].at(1).get<int>());
    d.dots.push_back(dots[a].get<int>());
  }
  normalize(d);
  validate(d);
  return d;
}

Json to_json(const TLMorphism& f) {
  Json j;
  j["source"] = f.source;
  j["target"] = f.target;
  j["eps"] = f.eps;
  Json terms = Json::array();
  for (const auto& [d, c] : f.terms) {
    Json t = to_json(d);
    Json entry;
    entry["coeff"] = c.str();
    entry["arcs"] = t["arcs"];
    entry["dots"] = t["dots"];
    terms.push_back(std::move(entry));
  }
  j["terms"] = std::move(terms);
  return j;
}

TLMorphism morphism_from_json(const Json& j) {
  TLMorphism f = zero_morphism(j.at("source").get<int>(), j.at("target").get<int>(),
                               j.at("eps").get<int>());
  if (f.eps != 1 && f.eps != -1) throw parse_error("morphism json: eps must be +-1");
  for (const auto& t : j.at("terms"))
    f.add_term(diagram_from_json(t, f.source, f.target),
               RatFunc::parse(t.at("coeff").get<std::string>()));
  return f;
}

Json to_json(const LinOp& m) {
  Json j;
  j["dims"] = Json::array({m.rows, m.cols});
  Json entries = Json::array();
  for (long r = 0; r < m.rows; ++r)
    for (const auto& [c, v] : m.row[static_cast<size_t>(r)])
      entries.push_back(Json::array({r, c, v.str()}));
  j["entries"] = std::move(entries);
  return j;
}

LinOp linop_from_json(const Json& j) {
  const auto& dims = j.at("dims");
  LinOp m(dims.at(0).get<long>(), dims.at(1).get<long>());
  for (const auto& e : j.at("entries"))
    m.add(e.at(0).get<long>(), e.at(1).get<long>(), RatFunc::parse(e.at(2).get<std::string>()));
  return m;
}

Json to_json(const Vec& v) {
  Json j;
  j["dims"] = Json::array({v.dim});
  Json entries = Json::array();
  for (const auto& [i, x] : v.e) entries.push_back(Json::array({i, x.str()}));
  j["entries"] = std::move(entries);
  return j;
}

Vec vec_from_json(const Json& j) {
  Vec v;
  v.dim = j.at("dims").at(0).get<long>();
  for (const auto& e : j.at("entries"))
    v.add(e.at(0).get<long>(), RatFunc::parse(e.at(1).get<std::string>()));
  return v;
}

Json to_json(const FusionVector& f) {
  Json mult = Json::object();
  // descending labels, matching the human-readable table order
  for (auto it = f.mult.rbegin(); it != f.mult.rend(); ++it)
    mult[std::to_string(it->first)] = it->second;
  Json j;
  j["mult"] = std::move(mult);
  return j;
}

FusionVector fusion_from_json(const Json& j) {
  FusionVector f;
  for (const auto& [key, val] : j.at("mult").items()) f.add(std::stol(key), val.get<long>());
  return f;
}

}  // namespace tlbd
