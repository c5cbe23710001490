#include "f1rep/json_io.hpp"

namespace f1rep {

void to_json(nlohmann::json& j, const F1Map& f) {
  j = nlohmann::json{{"src", f.src_dim}, {"tgt", f.tgt_dim}, {"image", f.image}};
}

void from_json(const nlohmann::json& j, F1Map& f) {
  f = F1Map(j.at("src").get<int>(), j.at("tgt").get<int>(),
            j.at("image").get<std::vector<int>>());
}

void to_json(nlohmann::json& j, const Quiver& q) {
  auto arrows = nlohmann::json::array();
  for (auto [s, t] : q.arrows) arrows.push_back({s, t});
  j = nlohmann::json{{"vertices", q.num_vertices}, {"arrows", arrows}};
}

void from_json(const nlohmann::json& j, Quiver& q) {
  std::vector<std::pair<int, int>> arrows;
  for (const auto& a : j.at("arrows")) {
    arrows.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
  }
  q = Quiver(j.at("vertices").get<int>(), std::move(arrows));
}

void to_json(nlohmann::json& j, const Representation& r) {
  nlohmann::json maps = nlohmann::json::object();
  for (size_t a = 0; a < r.maps.size(); ++a) maps[std::to_string(a)] = r.maps[a];
  j = nlohmann::json{{"quiver", r.quiver}, {"dims", r.dims}, {"maps", maps}};
}

void from_json(const nlohmann::json& j, Representation& r) {
  Quiver q = j.at("quiver").get<Quiver>();
  DimVector dims = j.at("dims").get<DimVector>();
  std::vector<F1Map> maps;
  for (int a = 0; a < q.num_arrows(); ++a) {
    maps.push_back(j.at("maps").at(std::to_string(a)).get<F1Map>());
  }
  r = Representation(std::move(q), std::move(dims), std::move(maps));
}

void to_json(nlohmann::json& j, const SkewShape& s) {
  j = nlohmann::json{{"n", s.n}, {"cells", s.cells}};
}

void from_json(const nlohmann::json& j, SkewShape& s) {
  s.n = j.at("n").get<int>();
  s.cells = j.at("cells").get<std::vector<std::vector<int>>>();
  s = normalize_shape(std::move(s));
}

}  // namespace f1rep
