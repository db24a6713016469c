#include "proteus/io/model_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "proteus/io/csv.hpp"

namespace proteus::io {

using nlohmann::json;

ModelFile model_file_from_report(const econometrics::FitReport& report) {
    ModelFile file;
    file.model = report.model;
    file.fit = FitSummary{report.log_likelihood, report.k, report.aic};
    return file;
}

void save_model(const std::filesystem::path& path, const ModelFile& file) {
    econometrics::require_valid(file.model);
    json doc;
    doc["state_id"] = file.model.state_id;
    doc["mu"] = file.model.arma.mu;
    doc["phi"] = file.model.arma.phi;
    doc["theta"] = file.model.arma.theta;
    doc["omega"] = file.model.garch.omega;
    doc["alpha"] = file.model.garch.alpha;
    doc["beta"] = file.model.garch.beta;
    doc["innovation"] = econometrics::to_string(file.model.innovation);
    if (file.fit) {
        doc["fit"] = {{"log_likelihood", file.fit->log_likelihood},
                      {"k", file.fit->k},
                      {"aic", file.fit->aic}};
    }
    write_text_file(path, doc.dump(2) + "\n");
}

ModelFile load_model(const std::filesystem::path& path) {
    json doc;
    try {
        doc = json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }

    try {
        ModelFile file;
        file.model.state_id = doc.at("state_id").get<int>();
        file.model.arma.mu = doc.at("mu").get<double>();
        file.model.arma.phi = doc.at("phi").get<std::vector<double>>();
        file.model.arma.theta = doc.at("theta").get<std::vector<double>>();
        file.model.garch.omega = doc.at("omega").get<double>();
        file.model.garch.alpha = doc.at("alpha").get<std::vector<double>>();
        file.model.garch.beta = doc.at("beta").get<std::vector<double>>();
        file.model.innovation =
            econometrics::innovation_from_string(doc.at("innovation").get<std::string>());
        if (doc.contains("fit")) {
            FitSummary fit;
            fit.log_likelihood = doc["fit"].at("log_likelihood").get<double>();
            fit.k = doc["fit"].at("k").get<int>();
            fit.aic = doc["fit"].at("aic").get<double>();
            file.fit = fit;
        }
        econometrics::require_valid(file.model);
        return file;
    } catch (const json::exception& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

std::vector<ModelFile> load_model_dir(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir))
        throw std::runtime_error("model directory not found: " + dir.string());

    std::vector<std::filesystem::path> paths;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            paths.push_back(entry.path());
    std::sort(paths.begin(), paths.end());
    if (paths.empty()) throw std::runtime_error("no model files (*.json) in " + dir.string());

    std::vector<ModelFile> models;
    std::set<int> seen;
    for (const auto& path : paths) {
        ModelFile file = load_model(path);
        if (!seen.insert(file.model.state_id).second)
            throw std::runtime_error(path.string() + ": duplicate state_id " +
                                     std::to_string(file.model.state_id));
        models.push_back(std::move(file));
    }
    return models;
}

}  // namespace proteus::io
