#pragma once

#include <string>

#include <json.hpp>

namespace minuscule {

/// Verdict emitted by every certifier. A failing certificate carries a witness
/// that can be re-checked by hand (offending index, interval, minor, ...).
struct Certificate {
  std::string property;
  std::string subject;
  bool pass = false;
  nlohmann::json witness = nlohmann::json::object();
  nlohmann::json params = nlohmann::json::object();

  explicit operator bool() const { return pass; }
};

nlohmann::json to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace minuscule
