#pragma once

#include "json.hpp"

#include "f1rep/corr.hpp"
#include "f1rep/rep.hpp"

namespace f1rep {

void to_json(nlohmann::json& j, const F1Map& f);
void from_json(const nlohmann::json& j, F1Map& f);

void to_json(nlohmann::json& j, const Quiver& q);
void from_json(const nlohmann::json& j, Quiver& q);

void to_json(nlohmann::json& j, const Representation& r);
void from_json(const nlohmann::json& j, Representation& r);

void to_json(nlohmann::json& j, const SkewShape& s);
void from_json(const nlohmann::json& j, SkewShape& s);

}  // namespace f1rep
