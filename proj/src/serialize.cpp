#include "hallwc/serialize.hpp"

#include "hallwc/errors.hpp"

namespace hallwc {

Json to_json(const BigRational& r) { return r.str(); }

namespace {

// JSON number when it fits in 64 bits, decimal string otherwise.
Json big_int(const BigInt& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

}  // namespace

Json to_json(const LaurentPoly& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, big_int(c.num()), big_int(c.den())}));
    return out;
}

Json to_json(const RatFunc& f) {
    Json out;
    out["text"] = f.str();
    out["num"] = to_json(f.num());
    out["den"] = to_json(f.den());
    return out;
}

Json to_json(const MultiLaurent& p) {
    Json out = Json::array();
    const auto n = static_cast<std::size_t>(p.nvars());
    for (const auto& [m, c] : p.sorted_terms()) {
        Json e = Json::array();
        for (std::size_t i = 0; i < n; ++i) e.push_back(m.exps[i]);
        out.push_back(Json::array({e, c.str()}));
    }
    return out;
}

Json to_json(const DimVector& d) { return Json(d.coords); }

Json to_json(const Word& w) {
    Json out = Json::array();
    for (const auto& l : w) out.push_back(to_json(l));
    return out;
}

Json to_json(const SeriesWindow& s) {
    Json out;
    out["point"] = point_name(s.point);
    out["valuation"] = s.valuation;
    out["order"] = s.order;
    Json c = Json::array();
    for (const auto& v : s.coeffs) c.push_back(v.str());
    out["coeffs"] = c;
    return out;
}

Json to_json(const SlopeFunction& mu) {
    Json out;
    out["theta"] = mu.tiers.at(0).theta;
    out["kappa"] = mu.tiers.at(0).kappa;
    if (mu.tiers.size() > 1) {
        Json tiers = Json::array();
        for (std::size_t i = 1; i < mu.tiers.size(); ++i)
            tiers.push_back(Json{{"theta", mu.tiers[i].theta}, {"kappa", mu.tiers[i].kappa}});
        out["tiers"] = tiers;
    }
    return out;
}

Json to_json(const CoeffTable& t, std::size_t min_length) {
    Json out = Json::array();
    for (const auto& [w, c] : t) {
        if (w.size() < min_length) continue;
        Json e;
        e["tuple"] = to_json(w);
        e["value"] = c.str();
        out.push_back(e);
    }
    return out;
}

namespace {

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

std::vector<int> int_list(const Json& j, const char* what) {
    if (!j.is_array()) throw InvalidInput(std::string(what) + " must be a list of integers");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw InvalidInput(std::string(what) + " must be a list of integers");
        out.push_back(v.get<int>());
    }
    return out;
}

SlopeFunction::Tier tier_from_json(const Json& j, std::size_t nvertices) {
    SlopeFunction::Tier t;
    t.theta = int_list(member(j, "theta"), "theta");
    t.kappa = j.contains("kappa") ? int_list(j.at("kappa"), "kappa") : std::vector<int>(nvertices, 1);
    if (t.theta.size() != nvertices || t.kappa.size() != nvertices)
        throw DimMismatch("stability needs " + std::to_string(nvertices) + " entries");
    return t;
}

}  // namespace

Quiver quiver_from_json(const Json& j) {
    std::vector<std::string> vertices;
    for (const auto& v : member(j, "vertices")) {
        if (v.is_string()) vertices.push_back(v.get<std::string>());
        else if (v.is_number_integer()) vertices.push_back(std::to_string(v.get<long>()));
        else throw InvalidInput("vertex labels must be strings or integers");
    }
    auto endpoint = [&](const Json& e) -> int {
        if (e.is_string()) {
            for (std::size_t i = 0; i < vertices.size(); ++i)
                if (vertices[i] == e.get<std::string>()) return static_cast<int>(i);
            throw InvalidInput("unknown vertex \"" + e.get<std::string>() + "\"");
        }
        if (e.is_number_integer()) return e.get<int>();
        throw InvalidInput("arrow endpoints must be labels or indices");
    };
    std::vector<std::pair<int, int>> arrows;
    if (j.contains("arrows"))
        for (const auto& a : j.at("arrows")) {
            if (!a.is_array() || a.size() != 2) throw InvalidInput("arrows are [source, target] pairs");
            arrows.emplace_back(endpoint(a[0]), endpoint(a[1]));
        }
    return Quiver(std::move(vertices), std::move(arrows));
}

Json to_json(const Quiver& q) {
    Json arrows = Json::array();
    for (const auto& [s, t] : q.arrows) arrows.push_back(Json::array({q.vertices[static_cast<std::size_t>(s)],
                                                                       q.vertices[static_cast<std::size_t>(t)]}));
    Json out;
    out["vertices"] = q.vertices;
    out["arrows"] = arrows;
    return out;
}

SlopeFunction stability_from_json(const Json& j, std::size_t nvertices) {
    SlopeFunction::Tier first = tier_from_json(j, nvertices);
    std::vector<SlopeFunction::Tier> extra;
    if (j.contains("tiers"))
        for (const auto& t : j.at("tiers")) extra.push_back(tier_from_json(t, nvertices));
    return SlopeFunction(std::move(first.theta), std::move(first.kappa), std::move(extra));
}

PathSpec path_from_json(const Json& j) {
    PathSpec path;
    path.bound = DimVector(int_list(member(j, "bound"), "bound"));
    if (std::any_of(path.bound.coords.begin(), path.bound.coords.end(), [](int x) { return x < 0; }))
        throw InvalidInput("bound must be nonnegative");
    for (const auto& h : member(j, "hops")) {
        HopSpec hop{stability_from_json(member(h, "wall"), path.bound.size()),
                    stability_from_json(member(h, "side"), path.bound.size())};
        if (h.contains("direction")) {
            const auto d = h.at("direction").get<std::string>();
            if (d == "to_wall") hop.direction = HopDirection::to_wall;
            else if (d == "from_wall") hop.direction = HopDirection::from_wall;
            else throw InvalidInput("direction must be \"to_wall\" or \"from_wall\"");
        }
        path.hops.push_back(std::move(hop));
    }
    return path;
}

}  // namespace hallwc
