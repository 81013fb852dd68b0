#include "threm/effects.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace threm {

namespace {

EffectDef gwsr_effect(std::string name, NodeType src, NodeType tgt, double kappa, double lambda) {
    EffectDef def;
    def.name = std::move(name);
    def.kind = EffectKind::Gwsr;
    def.gwsr = GwsrConfig{kappa, lambda, src, tgt};
    return def;
}

EffectDef closure_effect(std::string name, NodeType left, NodeType inner, NodeType right) {
    EffectDef def;
    def.name = std::move(name);
    def.kind = EffectKind::Closure;
    def.closure = ClosureSpec{left, inner, right, false};
    return def;
}

}  // namespace

bool EffectDef::depends_on(NodeType type) const {
    if (kind == EffectKind::Closure)
        return closure.outer_left == type || closure.inner == type || closure.outer_right == type;
    return (gwsr.source_active() && gwsr.source_role == type) ||
           (gwsr.target_active() && gwsr.target_role == type);
}

std::size_t EffectCatalog::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < effects.size(); ++i)
        if (effects[i].name == name) return i;
    throw ConfigError("unknown effect name: " + name);
}

bool EffectCatalog::contains(const std::string& name) const {
    return std::any_of(effects.begin(), effects.end(),
                       [&](const EffectDef& e) { return e.name == name; });
}

std::vector<std::string> EffectCatalog::names() const {
    std::vector<std::string> out;
    out.reserve(effects.size());
    for (const auto& e : effects) out.push_back(e.name);
    return out;
}

EffectCatalog EffectCatalog::standard(double kappa, double lambda) {
    using NT = NodeType;
    constexpr auto A = NT::Author;
    constexpr auto R = NT::Reference;
    constexpr auto K = NT::Keyword;
    EffectCatalog cat;
    auto& e = cat.effects;
    // GWSR family: collapsed forms carry the negative trigger on the dropped side.
    e.push_back(gwsr_effect("sub.rep.aut", A, R, kappa, -1.0));
    e.push_back(gwsr_effect("sub.rep.ref", A, R, -1.0, lambda));
    e.push_back(gwsr_effect("sub.rep.key", A, K, -1.0, lambda));
    e.push_back(gwsr_effect("sub.rep.aut.ref", A, R, kappa, lambda));
    e.push_back(gwsr_effect("sub.rep.aut.key", A, K, kappa, lambda));
    e.push_back(gwsr_effect("sub.rep.key.ref", K, R, kappa, lambda));
    // Closure family, in design-matrix column order.
    e.push_back(closure_effect("closure.ref.aut.ref", R, A, R));
    e.push_back(closure_effect("closure.ref.ref.ref", R, R, R));
    e.push_back(closure_effect("closure.ref.key.ref", R, K, R));
    e.push_back(closure_effect("closure.aut.aut.key", A, A, K));
    e.push_back(closure_effect("closure.aut.key.key", A, K, K));
    e.push_back(closure_effect("closure.aut.ref.key", A, R, K));
    e.push_back(closure_effect("closure.key.key.key", K, K, K));
    e.push_back(closure_effect("closure.key.aut.key", K, A, K));
    e.push_back(closure_effect("closure.key.aut.ref", K, A, R));
    e.push_back(closure_effect("closure.key.ref.ref", K, R, R));
    e.push_back(closure_effect("closure.key.key.ref", K, K, R));
    e.push_back(closure_effect("closure.key.ref.key", K, R, K));
    e.push_back(closure_effect("closure.aut.aut.ref", A, A, R));
    e.push_back(closure_effect("closure.aut.ref.ref", A, R, R));
    e.push_back(closure_effect("closure.aut.key.ref", A, K, R));
    e.push_back(closure_effect("closure.aut.aut.aut", A, A, A));
    e.push_back(closure_effect("closure.aut.ref.aut", A, R, A));
    e.push_back(closure_effect("closure.aut.key.aut", A, K, A));
    return cat;
}

EffectCatalog EffectCatalog::subset(const std::vector<std::string>& keep) const {
    EffectCatalog out;
    for (const auto& e : effects)
        if (std::find(keep.begin(), keep.end(), e.name) != keep.end()) out.effects.push_back(e);
    for (const auto& name : keep)
        if (!contains(name)) throw ConfigError("unknown effect name: " + name);
    return out;
}

EffectCatalog EffectCatalog::from_config(std::istream& in, double kappa, double lambda) {
    EffectCatalog base = standard(kappa, lambda);
    EffectCatalog out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto strip = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        line = strip(line);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string name, kap, lam;
        std::getline(fields, name, ',');
        std::getline(fields, kap, ',');
        std::getline(fields, lam, ',');
        name = strip(name);
        EffectDef def = base.effects[base.index_of(name)];
        if (!strip(kap).empty() || !strip(lam).empty()) {
            if (def.kind != EffectKind::Gwsr)
                throw ConfigError("catalog line " + std::to_string(lineno) + ": effect " + name +
                                  " does not take kappa/lambda");
            if (strip(kap).empty() || strip(lam).empty())
                throw ConfigError("catalog line " + std::to_string(lineno) +
                                  ": expected name,kappa,lambda");
            try {
                def.gwsr.kappa = std::stod(strip(kap));
                def.gwsr.lambda = std::stod(strip(lam));
            } catch (const std::exception&) {
                throw ConfigError("catalog line " + std::to_string(lineno) +
                                  ": bad kappa/lambda value");
            }
            def.gwsr.validate();
        }
        if (out.contains(name))
            throw ConfigError("catalog line " + std::to_string(lineno) + ": duplicate effect " +
                              name);
        out.effects.push_back(std::move(def));
    }
    if (out.effects.empty()) throw ConfigError("catalog config selects no effects");
    return out;
}

}  // namespace threm
