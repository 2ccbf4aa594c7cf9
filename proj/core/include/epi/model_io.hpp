#ifndef EPI_MODEL_IO_HPP
#define EPI_MODEL_IO_HPP

#include <string>
#include <vector>

#include "epi/dynamics.hpp"
#include "epi/formula.hpp"

namespace epi {

struct ModelFile {
  Model model;
  std::vector<std::string> assertions;
};

/// A staged-learning scenario: the space, the stage-0 operator, the ordered
/// facts producing stage 1, and assertion strings with K0/K1 stage tags.
struct ScenarioFile {
  SpacePtr space;
  KnowledgeOperator k0;
  std::vector<LearningFact> facts;
  std::vector<std::string> assertions;
};

ModelFile load_model(const std::string& path);
ModelFile parse_model(const std::string& json_text,
                      const std::string& origin = "<string>");

ScenarioFile load_scenario(const std::string& path);
ScenarioFile parse_scenario(const std::string& json_text,
                            const std::string& origin = "<string>");

}  // namespace epi

#endif  // EPI_MODEL_IO_HPP
