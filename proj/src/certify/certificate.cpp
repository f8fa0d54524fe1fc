#include "minuscule/certificate.hpp"

namespace minuscule {

nlohmann::json to_json(const Certificate& c) {
  return {{"property", c.property}, {"subject", c.subject}, {"verdict", c.pass ? "pass" : "fail"},
          {"witness", c.witness}, {"params", c.params}};
}

Certificate certificate_from_json(const nlohmann::json& j) {
  Certificate c;
  c.property = j.at("property").get<std::string>();
  c.subject = j.value("subject", std::string{});
  c.pass = j.at("verdict").get<std::string>() == "pass";
  c.witness = j.value("witness", nlohmann::json::object());
  c.params = j.value("params", nlohmann::json::object());
  return c;
}

}  // namespace minuscule
