#include "arena/protocol/agent_spec.hpp"

#include "arena/core/errors.hpp"

namespace arena::protocol {

using nlohmann::json;

std::string_view to_string(Framework f) {
    switch (f) {
    case Framework::BuyAndHold: return "BuyAndHold";
    case Framework::AlwaysHold: return "AlwaysHold";
    case Framework::Scripted: return "Scripted";
    case Framework::GenericLLM: return "GenericLLM";
    case Framework::VoteEnsemble: return "VoteEnsemble";
    }
    return "?";
}

Framework framework_from_string(std::string_view s) {
    for (auto f : {Framework::BuyAndHold, Framework::AlwaysHold, Framework::Scripted, Framework::GenericLLM,
                   Framework::VoteEnsemble})
        if (to_string(f) == s) return f;
    throw ConfigError("unknown agent framework '" + std::string(s) + "'");
}

void AgentSpec::validate() const {
    if (name.empty()) throw ConfigError("agent without a name");
    if (framework == Framework::GenericLLM && (!backbone || backbone->empty()))
        throw ConfigError("GenericLLM agent '" + name + "' needs a backbone");
    if (framework == Framework::VoteEnsemble && members.empty())
        throw ConfigError("VoteEnsemble agent '" + name + "' needs at least one member");
    if (framework == Framework::Scripted && !params.count("script"))
        throw ConfigError("Scripted agent '" + name + "' needs a 'script' param");
}

persistence::AgentRef AgentSpec::ref() const {
    return persistence::AgentRef{name, label.empty() ? name : label, std::string(to_string(framework)),
                                 backbone.value_or(""), strategy};
}

json agent_spec_to_json(const AgentSpec& a) {
    json j{{"name", a.name},
           {"label", a.label.empty() ? a.name : a.label},
           {"framework", std::string(to_string(a.framework))},
           {"strategy", a.strategy},
           {"params", a.params}};
    if (a.backbone) j["backbone"] = *a.backbone;
    if (!a.members.empty()) j["members"] = a.members;
    return j;
}

AgentSpec agent_spec_from_json(const json& j) {
    try {
        AgentSpec a;
        a.name = j.at("name").get<std::string>();
        a.label = j.value("label", a.name);
        a.framework = framework_from_string(j.at("framework").get<std::string>());
        if (j.contains("backbone") && !j.at("backbone").is_null()) a.backbone = j.at("backbone").get<std::string>();
        a.strategy = j.value("strategy", std::string("Baseline"));
        if (j.contains("params")) {
            for (const auto& [k, v] : j.at("params").items()) a.params[k] = v.is_string() ? v.get<std::string>() : v.dump();
        }
        a.members = j.value("members", std::vector<std::string>{});
        a.validate();
        return a;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad agent entry: ") + e.what());
    }
}

} // namespace arena::protocol
