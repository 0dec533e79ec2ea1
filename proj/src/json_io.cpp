#include "rhsinv/json_io.hpp"

#include <fstream>

namespace rhsinv::io {

using jones::GridKey;
using jones::JonesGrid;
using jones::MilnorData;

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw std::invalid_argument("expected a rational as \"num/den\" string or integer, got " + j.dump());
}

std::string rational_str(const Rational& r) { return r.str_fraction(); }

JonesGrid grid_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("grid: expected a JSON object");
    JonesGrid g;
    g.N = j.at("N").get<int>();
    if (g.N < 0) throw std::invalid_argument("grid: negative N");
    g.cls = jones::slope_class_from_name(j.at("class").get<std::string>());
    g.order = j.at("order").get<int>();
    for (const auto& e : j.at("entries")) {
        GridKey key;
        key.n = e.at("n").get<int>();
        key.multi = e.at("multi").get<std::vector<int>>();
        if (e.contains("m") && e.at("m").get<int>() != key.m())
            throw std::invalid_argument("grid entry: m field does not match sum of multi");
        g.set(key, rational_from_json(e.at("value")));
    }
    jones::require_valid(g);
    return g;
}

json grid_to_json(const JonesGrid& g) {
    json entries = json::array();
    for (const auto& [key, value] : g.entries) {
        json e;
        e["m"] = key.m();
        e["n"] = key.n;
        e["multi"] = key.multi;
        e["value"] = rational_str(value);
        entries.push_back(e);
    }
    json out;
    out["N"] = g.N;
    out["class"] = jones::slope_class_name(g.cls);
    out["order"] = g.order;
    out["entries"] = entries;
    return out;
}

namespace {

MilnorData milnor_from_json(const json& j, int n, const json* phi1) {
    MilnorData m;
    m.N = n;
    if (j.contains("triples"))
        for (const auto& t : j.at("triples")) {
            if (!t.is_array() || t.size() != 4)
                throw std::invalid_argument("milnor.triples: expected [i,j,k,value]");
            m.triples[{t[0].get<int>(), t[1].get<int>(), t[2].get<int>()}] = t[3].get<long long>();
        }
    if (j.contains("quartic_pairs"))
        for (const auto& t : j.at("quartic_pairs")) {
            if (!t.is_array() || t.size() != 3)
                throw std::invalid_argument("milnor.quartic_pairs: expected [i,j,value]");
            m.quartic_pairs[{t[0].get<int>(), t[1].get<int>()}] = t[2].get<long long>();
        }
    if (phi1) {
        if (phi1->contains("singles")) {
            const auto& singles = phi1->at("singles");
            if (static_cast<int>(singles.size()) > n)
                throw std::invalid_argument("phi1.singles: more entries than components");
            for (std::size_t i = 0; i < singles.size(); ++i)
                m.phi1_singles[static_cast<int>(i)] = rational_from_json(singles[i]);
        }
        if (phi1->contains("pairs"))
            for (const auto& t : phi1->at("pairs")) {
                if (!t.is_array() || t.size() != 3)
                    throw std::invalid_argument("phi1.pairs: expected [i,j,value]");
                m.phi1_pairs[{t[0].get<int>(), t[1].get<int>()}] = rational_from_json(t[2]);
            }
        if (phi1->contains("triples"))
            for (const auto& t : phi1->at("triples")) {
                if (!t.is_array() || t.size() != 4)
                    throw std::invalid_argument("phi1.triples: expected [i,j,k,value]");
                m.phi1_triples[{t[0].get<int>(), t[1].get<int>(), t[2].get<int>()}] =
                    rational_from_json(t[3]);
            }
    }
    m.validate();
    return m;
}

}  // namespace

PresentationFile presentation_from_json(const json& j, const std::string& base_dir) {
    PresentationFile pf;
    auto& sp = pf.presentation;
    sp.cls = jones::slope_class_from_name(j.at("class").get<std::string>());
    for (const auto& c : j.at("components")) {
        long long p = c.at("p").get<long long>();
        long long q = c.at("q").get<long long>();
        long long framing = c.contains("framing") ? c.at("framing").get<long long>() : 0;
        sp.components.push_back({numtheory::SurgeryCoeff(p, q), framing});
    }
    if (j.contains("linking")) sp.linking = j.at("linking").get<std::vector<std::vector<long long>>>();
    pf.n_max = j.contains("n_max") ? j.at("n_max").get<int>() : 1;
    if (pf.n_max < 1) throw std::invalid_argument("n_max must be >= 1");

    const json* phi1 = j.contains("phi1") ? &j.at("phi1") : nullptr;
    if (j.contains("milnor") || phi1) {
        json milnor = j.contains("milnor") ? j.at("milnor") : json::object();
        sp.milnor = milnor_from_json(milnor, sp.size(), phi1);
    }

    if (j.contains("jones_fixture")) {
        const auto& f = j.at("jones_fixture");
        if (f.is_string()) {
            std::string path = f.get<std::string>();
            if (!path.empty() && path[0] != '/' && !base_dir.empty()) path = base_dir + "/" + path;
            sp.grid = grid_from_json(load_json_file(path));
        } else {
            sp.grid = grid_from_json(f);
        }
    } else {
        jones::MilnorData m = sp.milnor ? *sp.milnor : jones::MilnorData{};
        if (!sp.milnor) m.N = sp.size();
        sp.grid = jones::asl_low_order_grid(m, std::max(1, pf.n_max), sp.cls);
    }
    sp.validate();
    return pf;
}

PresentationFile load_presentation(const std::string& path) {
    std::string dir;
    if (auto pos = path.find_last_of('/'); pos != std::string::npos) dir = path.substr(0, pos);
    return presentation_from_json(load_json_file(path), dir);
}

json invariants_to_json(const surgery::RhsInvariants& inv) {
    json out;
    json s = json::array();
    for (int n = 0; n <= inv.order(); ++n) s.push_back(rational_str(inv.s(n)));
    out["S"] = s;
    if (inv.ord_h1.fits_slong_p())
        out["ord_h1"] = static_cast<long long>(inv.ord_h1.get_si());
    else
        out["ord_h1"] = inv.ord_h1.get_str();
    out["lambda_cw"] = rational_str(inv.lambda_cw());
    json sint = json::array();
    for (int n = 1; n <= inv.order(); ++n)
        sint.push_back(surgery::integerize(inv, n).value.str());
    out["S_int"] = sint;
    return out;
}

json surgery_output_json(const surgery::RhsInvariants& inv, const Rational& delta_fr,
                         const std::vector<Rational>& delta) {
    json out = invariants_to_json(inv);
    out["delta_fr"] = rational_str(delta_fr);
    json d = json::array();
    for (std::size_t n = 1; n < delta.size(); ++n) d.push_back(rational_str(delta[n]));
    out["delta"] = d;
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace rhsinv::io
