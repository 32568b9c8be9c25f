#include "powerfam/json_io.hpp"

#include <stdexcept>

namespace powerfam {

using nlohmann::json;

json to_json(const PowerFamily& f)
{
    json j{{"origin", origin_name(f.origin())},
           {"beta", f.beta()},
           {"gamma", f.gamma()},
           {"k", f.k()}};
    if (f.has_theta())
        j["theta"] = f.theta();
    else
        j["theta"] = nullptr;
    return j;
}

json to_json(const FitResult& r)
{
    return json{{"method", method_name(r.method)},
                {"beta_hat", r.beta_hat},
                {"gamma_hat", r.gamma_hat},
                {"k_hat", r.k_hat},
                {"n", r.n},
                {"log_likelihood", r.log_likelihood},
                {"notes", r.notes}};
}

json to_json(const StudyCell& c)
{
    return json{{"method", method_name(c.method)},
                {"n", c.n},
                {"beta", c.beta_true},
                {"gamma", c.gamma_true},
                {"mean_beta_hat", c.mean_beta_hat},
                {"se_mean_beta", c.se_mean_beta},
                {"mean_gamma_hat", c.mean_gamma_hat},
                {"se_mean_gamma", c.se_mean_gamma},
                {"mse_beta", c.mse_beta},
                {"se_mse_beta", c.se_mse_beta},
                {"mse_gamma", c.mse_gamma},
                {"se_mse_gamma", c.se_mse_gamma},
                {"failures", c.failures}};
}

json to_json(const std::vector<StudyCell>& cells)
{
    json arr = json::array();
    for (const StudyCell& c : cells)
        arr.push_back(to_json(c));
    return arr;
}

json to_json(const ModelReport& r)
{
    json j{{"model", model_kind_name(r.model)},
           {"beta_hat", r.beta_hat},
           {"k_hat", r.k_hat},
           {"gamma_hat", r.gamma_hat},
           {"log_likelihood", r.log_likelihood},
           {"num_params", r.num_params},
           {"aic", r.ic.aic},
           {"caic", r.ic.caic},
           {"bic", r.ic.bic},
           {"hqic", r.ic.hqic},
           {"failed", r.failed},
           {"note", r.note}};
    if (r.has_theta)
        j["theta_hat"] = r.theta_hat;
    else
        j["theta_hat"] = nullptr;
    return j;
}

json to_json(const std::vector<ModelReport>& reports)
{
    json arr = json::array();
    for (const ModelReport& r : reports)
        arr.push_back(to_json(r));
    return arr;
}

StudyConfig study_config_from_json(const json& j)
{
    if (!j.is_object())
        throw std::domain_error("study config must be a JSON object");
    StudyConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "replications") {
            cfg.replications = value.get<int>();
        } else if (key == "sample_sizes") {
            cfg.sample_sizes = value.get<std::vector<int>>();
        } else if (key == "param_pairs") {
            cfg.param_pairs.clear();
            for (const auto& pair : value) {
                if (!pair.is_array() || pair.size() != 2)
                    throw std::domain_error(
                        "param_pairs entries must be [beta, gamma] arrays");
                cfg.param_pairs.emplace_back(pair[0].get<double>(),
                                             pair[1].get<double>());
            }
        } else if (key == "methods") {
            cfg.methods.clear();
            for (const auto& name : value)
                cfg.methods.push_back(method_from_name(name.get<std::string>()));
        } else if (key == "master_seed") {
            cfg.master_seed = value.get<std::uint64_t>();
        } else {
            throw std::domain_error("unknown study config key '" + key + "'");
        }
    }
    return cfg;
}

} // namespace powerfam
