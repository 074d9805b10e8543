#include "dq/json.hpp"

namespace dq {
namespace {

Json indices(const MultiIndex& alpha, JetDomain domain) {
    Json out = Json::array();
    for (size_t v = 0; v < alpha.size(); ++v)
        if (in_domain(domain, static_cast<int>(v))) out.push_back(alpha[v]);
    return out;
}

Json monomial_json(const ChartShape& s, const Monomial& mono) {
    Json out = Json::object();
    for (int v = 0; v < s.variable_count(); ++v)
        if (mono.powers[v] != 0) out[s.name(v)] = mono.powers[v];
    if (mono.theta_power != 0) out["theta"] = mono.theta_power;
    return out;
}

template <class Fill>
void emit_terms(Json& terms, const Monomial& mono, const Coefficient& c, Fill fill) {
    for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
        Json t;
        t["re"] = to_string(it->second.re());
        t["im"] = to_string(it->second.im());
        t["hbar"] = it->first;
        fill(t, mono);
        terms.push_back(std::move(t));
    }
}

}  // namespace

Json to_json(const Function& f) {
    const auto& s = f.shape();
    Json doc;
    doc["chart"] = s.kind_name();
    doc["terms"] = Json::array();
    for (const auto& [mono, c] : f.terms()) {
        emit_terms(doc["terms"], mono, c, [&](Json& t, const Monomial& m) {
            t["monomial"] = monomial_json(s, m);
            Json jet = Json::object();
            if (m.jets.size() == 1) {
                const auto& [alpha, e] = *m.jets.begin();
                jet["psi"] = Json::array({indices(alpha, f.jet_domain()), e});
            } else if (!m.jets.empty()) {
                Json list = Json::array();
                for (const auto& [alpha, e] : m.jets) list.push_back(Json::array({indices(alpha, f.jet_domain()), e}));
                jet["psi"] = std::move(list);
            }
            t["jet"] = std::move(jet);
            t["theta_weight"] = m.theta_weight;
            t["weight_factor"] = f.weight() ? Json(f.weight()->id()) : Json(nullptr);
        });
    }
    return doc;
}

Json to_json(const DiffOperator& d) {
    const auto& s = d.shape();
    const JetDomain domain = configuration_domain(d.representation(), s);
    Json doc;
    doc["chart"] = s.kind_name();
    doc["rep"] = to_string(d.representation());
    doc["terms"] = Json::array();
    for (const auto& [alpha, c] : d.terms()) {
        for (const auto& [mono, coef] : c.terms()) {
            emit_terms(doc["terms"], mono, coef, [&](Json& t, const Monomial& m) {
                t["monomial"] = monomial_json(s, m);
                t["derivative"] = indices(alpha, domain);
            });
        }
    }
    return doc;
}

}  // namespace dq
