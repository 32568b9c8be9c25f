#ifndef POWERFAM_JSON_IO_HPP
#define POWERFAM_JSON_IO_HPP

#include <json.hpp>

#include "powerfam/estimators.hpp"
#include "powerfam/mc_study.hpp"
#include "powerfam/model_lab.hpp"
#include "powerfam/power_family.hpp"

namespace powerfam {

// JSON views of the core value types. Numbers are emitted by the JSON
// library's shortest round-trip rendering, so full double precision
// survives serialization. Non-finite values (the NaN caic below n=p+2,
// -infinity log-likelihoods) serialize as null per JSON rules.
nlohmann::json to_json(const PowerFamily& f);
nlohmann::json to_json(const FitResult& r);
nlohmann::json to_json(const StudyCell& c);
nlohmann::json to_json(const std::vector<StudyCell>& cells);
nlohmann::json to_json(const ModelReport& r);
nlohmann::json to_json(const std::vector<ModelReport>& reports);

// StudyConfig from a JSON document with keys replications, sample_sizes,
// param_pairs ([[beta, gamma], ...]), methods (["mlm", ...]), master_seed.
// Missing keys keep their defaults; unknown keys are rejected.
StudyConfig study_config_from_json(const nlohmann::json& j);

} // namespace powerfam

#endif
