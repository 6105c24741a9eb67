#include <map>
#include <string>

#include "arelab/errors.hpp"
#include "arelab/models.hpp"

namespace arelab {

namespace {

const std::map<std::string, std::shared_ptr<const DependenceModel>, std::less<>>& registry() {
    static const auto reg = [] {
        std::map<std::string, std::shared_ptr<const DependenceModel>, std::less<>> m;
        for (auto& model :
             {make_fgm(), make_bvn(), make_plackett(), make_frank(),
              make_micd(MicdVariant::AS), make_micd(MicdVariant::AL),
              make_micd(MicdVariant::OS), make_micd(MicdVariant::OL)})
            m.emplace(model->name(), model);
        return m;
    }();
    return reg;
}

}  // namespace

std::shared_ptr<const DependenceModel> find_model_ptr(std::string_view name) {
    const auto& reg = registry();
    auto it = reg.find(name);
    if (it == reg.end()) {
        std::string known;
        for (const auto& [k, v] : reg) known += (known.empty() ? "" : ", ") + k;
        throw ConfigError("unknown model '" + std::string(name) + "' (known: " + known + ")");
    }
    return it->second;
}

const DependenceModel& find_model(std::string_view name) { return *find_model_ptr(name); }

std::vector<std::string> model_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : registry()) names.push_back(k);
    return names;
}

}  // namespace arelab
