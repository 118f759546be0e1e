#include "cli_internal.hpp"

namespace pn::cli {

Json to_json(const BigInt& v) {
  if (fits_int64(v)) return static_cast<std::int64_t>(v);
  return pn::to_string(v);
}

Json to_json(const AbelianGroup& g) {
  Json torsion = Json::array();
  for (const auto& d : g.torsion()) torsion.push_back(to_json(d));
  return Json{{"group", g.to_string()}, {"free_rank", g.free_rank()}, {"torsion", torsion}};
}

Json to_json(const HomologyVerdict& v, std::optional<std::uint64_t> n) {
  Json j;
  if (n) j["n"] = *n;
  j["p"] = v.p;
  j["k"] = v.k;
  j["dimension"] = v.dimension;
  j["status"] = to_string(v.status);
  j["mod_p_dimension"] = v.mod_p_dimension;
  j["bockstein_image_rank"] = v.bockstein_image_rank;
  Json w = Json::array();
  for (const auto& word : v.witnesses) w.push_back(word.to_string());
  j["witnesses"] = w;
  return j;
}

Json to_json(const GenusVerdict& v) {
  Json j{{"n", v.n}, {"status", to_string(v.status)}, {"source", to_string(v.source)}};
  if (v.conjecture_note) j["conjecture_note"] = *v.conjecture_note;
  if (v.evidence) j["evidence"] = to_json(*v.evidence, v.n);
  return j;
}

Json to_json(const ComparisonReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"degree", row.degree},
                        {"left", row.left},
                        {"right", row.right},
                        {"equal", row.equal},
                        {"paper_ref", row.relation}});
  }
  return Json{{"check", r.name}, {"rows", rows}, {"all_equal", r.all_equal()}};
}

Json to_json(const std::vector<CharacterValue>& chi) {
  Json out = Json::array();
  for (const auto& c : chi) {
    out.push_back(Json{{"cycle_type", cycle_type_string(c.cycle_type)}, {"class_size", c.class_size}, {"value", c.value}});
  }
  return out;
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace pn::cli
