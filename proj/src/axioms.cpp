#include "cdm/axioms.hpp"

#include <algorithm>

namespace cdm {

nlohmann::ordered_json to_json(const AxiomReport& r, bool timing) {
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"seed", f.seed},
                        {"trial", f.trial},
                        {"inputs", f.inputs},
                        {"lhs", f.lhs},
                        {"rhs", f.rhs}});
  }
  nlohmann::ordered_json j;
  j["axiom"] = r.axiom;
  j["trials"] = r.trials;
  j["passed"] = r.passed();
  j["failed_trials"] = r.failed_trials;
  j["failures"] = std::move(failures);
  j["millis"] = timing ? nlohmann::ordered_json(r.millis) : nullptr;
  return j;
}

const std::vector<std::string>& cdc_axioms() {
  static const std::vector<std::string> ids = {"CD.1", "CD.2", "CD.3", "CD.4",
                                               "CD.5", "CD.6", "CD.7"};
  return ids;
}

const std::vector<std::string>& dc_axioms() {
  static const std::vector<std::string> ids = {"dc.1", "dc.2", "dc.3",
                                               "dc.4", "dc.5", "dc.6"};
  return ids;
}

const std::vector<std::string>& monad_axioms() {
  static const std::vector<std::string> ids = {
      "monad.assoc", "monad.left_unit", "monad.right_unit", "du.1", "du.2"};
  return ids;
}

const std::vector<std::string>& all_axioms() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> all = cdc_axioms();
    all.insert(all.end(), dc_axioms().begin(), dc_axioms().end());
    all.insert(all.end(), monad_axioms().begin(), monad_axioms().end());
    return all;
  }();
  return ids;
}

bool is_axiom(std::string_view id) {
  const auto& all = all_axioms();
  return std::find(all.begin(), all.end(), id) != all.end();
}

}  // namespace cdm
