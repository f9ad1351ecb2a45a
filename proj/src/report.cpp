#include "fourdist/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fourdist/witness.hpp"

namespace fourdist {

namespace {

constexpr std::string_view kCsvHeader = "z,x,y,verdict,filter_id,detail\n";

template <typename T>
T require(const std::optional<T>& v, std::string_view what) {
    if (!v) throw std::invalid_argument("unrecognized " + std::string(what));
    return *v;
}

std::optional<Corner> parse_corner(std::string_view s) {
    for (Corner k : kCorners) {
        if (corner_name(k) == s) return k;
    }
    return std::nullopt;
}

ValueList make_list(Int z, const std::set<Int>& direct) {
    ValueList out;
    out.direct.assign(direct.begin(), direct.end());
    std::set<Int> combined = direct;
    for (Int v : direct) combined.insert(z - v);
    out.combined.assign(combined.begin(), combined.end());
    return out;
}

std::string join(const std::vector<Int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    return v.empty() ? "(none)" : os.str();
}

Json candidate_xy(const Candidate& c) { return Json{{"x", c.x}, {"y", c.y}}; }

Json outcome_json(const FilterOutcome& o) {
    Json j{{"filter", filter_name(o.filter)},
           {"verdict", o.verdict ? "eliminated" : "undecided"}};
    if (o.verdict) j["witness"] = to_json(o.verdict->witness);
    return j;
}

void write_csv_scan_row(std::ostream& os, const Candidate& c, const DistanceProfile& p) {
    os << c.z << ',' << c.x << ',' << c.y << ',' << p.integer_count << ",," << roots_cell(p) << '\n';
}

void write_text_sieve(std::ostream& os, const SieveResult& r) {
    os << "z = " << r.z << " (attribution: " << mode_name(r.mode) << ")\n";
    os << "candidates examined: " << r.totals.candidates << "\n";
    os << "eliminated by:\n";
    for (const auto& [id, n] : r.totals.eliminated) {
        std::string name(filter_name(id));
        name.resize(std::max<std::size_t>(name.size(), 15), ' ');
        os << "  " << name << " " << n << "  [" << filter_label(id) << "]\n";
    }
    os << "survivors: " << r.totals.survivors << "\n";
    if (r.survivors.empty()) {
        os << "no available pair (x, y) remains for z = " << r.z << "\n";
        return;
    }
    for (const Survivor& s : r.survivors) {
        os << "  (" << s.candidate.x << ", " << s.candidate.y << "):";
        bool any = false;
        for (const auto& o : s.attribution.outcomes) {
            if (!o.verdict) continue;
            os << (any ? "; " : " ") << filter_name(o.filter) << " [" << describe_witness(o.verdict->witness)
               << "]";
            any = true;
        }
        if (!any) os << " undecided by every filter";
        os << "\n";
    }
    os << "max integer distances among survivors: " << r.oracle.max_count << "\n";
}

}  // namespace

Format parse_format(std::string_view s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "text") return Format::Text;
    throw std::invalid_argument("unsupported format '" + std::string(s) + "'");
}

UnavailableLists unavailable_lists(Int z, const FilterConfig& cfg) {
    if (z < 2 || z % 2 != 0) throw std::invalid_argument("unavailable_lists: z must be even");
    std::set<Int> t3, t4, t5;
    for (Int x = 1; x < z; x += 2) {
        const UInt ux = static_cast<UInt>(x);
        if (x > 2 && is_prime(ux)) t3.insert(x);
        if (x > 1) {
            const auto pp = prime_power_root(ux);
            const auto primes = cfg.theorem4_primes();
            if (pp && std::binary_search(primes.begin(), primes.end(), pp->prime)) t4.insert(x);
        }
    }
    for (Int y = 4; y < z; y += 4) {
        if (shape_split(static_cast<UInt>(y) / 2)) t5.insert(y);
    }
    UnavailableLists out;
    out.z = z;
    out.theorem3_x = make_list(z, t3);
    out.theorem4_x = make_list(z, t4);
    out.theorem5_y = make_list(z, t5);

    const auto& shaped = out.theorem5_y.combined;
    std::set<Int> l3;
    for (Int y = 2; y < z; y += 2) {
        if (std::binary_search(shaped.begin(), shaped.end(), y)) continue;
        if (z % y == 0 && cfg.is_lemma3_multiplier(static_cast<UInt>(z / y))) l3.insert(y);
    }
    out.lemma3_y = make_list(z, l3);
    return out;
}

Json to_json(const Witness& witness) {
    return std::visit(
        [](const auto& w) -> Json {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, BoundaryWitness>) {
                return {{"kind", "boundary"},
                        {"tag", boundary_kind_name(boundary_kind(w.line))},
                        {"line", boundary_line_name(w.line)}};
            } else if constexpr (std::is_same_v<T, Lemma3Witness>) {
                return {{"kind", "lemma3"}, {"side", side_name(w.side)}, {"d", w.d}, {"n", w.n}};
            } else if constexpr (std::is_same_v<T, ParityWitness>) {
                Json j{{"kind", "parity"}, {"clause", parity_clause_name(w.clause)}};
                if (w.corner) j["corner"] = corner_name(*w.corner);
                return j;
            } else if constexpr (std::is_same_v<T, InequalityWitness>) {
                return {{"kind", "inequality"}, {"corner", corner_name(w.corner)},
                        {"squared_leg", w.squared_leg}, {"other_leg", w.other_leg},
                        {"lhs", w.lhs}, {"rhs", w.rhs}};
            } else if constexpr (std::is_same_v<T, CongruenceWitness>) {
                return {{"kind", "congruence"}, {"p", w.p}, {"corner", corner_name(w.corner)},
                        {"leg_a", w.leg_a}, {"leg_b", w.leg_b}};
            } else if constexpr (std::is_same_v<T, PrimeWitness>) {
                return {{"kind", "prime"}, {"side", side_name(w.side)}, {"value", w.value}};
            } else if constexpr (std::is_same_v<T, PrimePowerWitness>) {
                return {{"kind", "prime_power"}, {"side", side_name(w.side)}, {"value", w.value},
                        {"p", w.p}, {"e", w.e}};
            } else if constexpr (std::is_same_v<T, ShapeWitness>) {
                Json factors = Json::array();
                for (const auto& pf : w.m_factors.factors) factors.push_back({pf.prime, pf.exponent});
                return {{"kind", "shape5"}, {"side", side_name(w.side)}, {"target", w.target},
                        {"h", w.h}, {"m", w.m}, {"factorization", factors}};
            } else if constexpr (std::is_same_v<T, Cor52Witness>) {
                return {{"kind", "cor52"}, {"side", side_name(w.side)}, {"target", w.target},
                        {"q1", w.q1}, {"q2", w.q2}, {"h", w.h}, {"m", w.m}};
            } else {
                return {{"kind", "theorem6"}, {"p1", w.p1}, {"p2", w.p2}, {"q1", w.q1}, {"q2", w.q2}};
            }
        },
        witness);
}

Witness witness_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    auto side = [&] { return require(parse_side(j.at("side").get<std::string>()), "side"); };
    auto corner = [&] { return require(parse_corner(j.at("corner").get<std::string>()), "corner"); };
    if (kind == "boundary")
        return BoundaryWitness{require(parse_boundary_line(j.at("line").get<std::string>()), "line")};
    if (kind == "lemma3") return Lemma3Witness{side(), j.at("d").get<Int>(), j.at("n").get<UInt>()};
    if (kind == "parity") {
        ParityWitness w{require(parse_parity_clause(j.at("clause").get<std::string>()), "clause"), {}};
        if (j.contains("corner")) w.corner = corner();
        return w;
    }
    if (kind == "inequality")
        return InequalityWitness{corner(), j.at("squared_leg").get<Int>(), j.at("other_leg").get<Int>(),
                                 j.at("lhs").get<UInt>(), j.at("rhs").get<UInt>()};
    if (kind == "congruence")
        return CongruenceWitness{j.at("p").get<UInt>(), corner(), j.at("leg_a").get<Int>(),
                                 j.at("leg_b").get<Int>()};
    if (kind == "prime") return PrimeWitness{side(), j.at("value").get<Int>()};
    if (kind == "prime_power")
        return PrimePowerWitness{side(), j.at("value").get<Int>(), j.at("p").get<UInt>(),
                                 j.at("e").get<unsigned>()};
    if (kind == "shape5") {
        ShapeWitness w{side(), j.at("target").get<Int>(), j.at("h").get<unsigned>(),
                       j.at("m").get<UInt>(), {}};
        for (const auto& pf : j.at("factorization"))
            w.m_factors.factors.push_back({pf.at(0).get<UInt>(), pf.at(1).get<unsigned>()});
        return w;
    }
    if (kind == "cor52")
        return Cor52Witness{side(), j.at("target").get<Int>(), j.at("q1").get<UInt>(),
                            j.at("q2").get<UInt>(), j.at("h").get<unsigned>(), j.at("m").get<UInt>()};
    if (kind == "theorem6")
        return Theorem6Witness{j.at("p1").get<UInt>(), j.at("p2").get<UInt>(), j.at("q1").get<UInt>(),
                               j.at("q2").get<UInt>()};
    throw std::invalid_argument("unrecognized witness kind '" + kind + "'");
}

Json to_json(const SieveResult& r) {
    Json eliminated = Json::object();
    for (const auto& [id, n] : r.totals.eliminated) eliminated[std::string(filter_name(id))] = n;
    Json survivors = Json::array();
    for (const Survivor& s : r.survivors) {
        Json attribution = Json::array();
        for (const auto& o : s.attribution.outcomes) attribution.push_back(outcome_json(o));
        Json entry = candidate_xy(s.candidate);
        entry["attribution"] = std::move(attribution);
        survivors.push_back(std::move(entry));
    }
    Json witnesses = Json::array();
    for (const Candidate& c : r.oracle.witnesses) witnesses.push_back(candidate_xy(c));
    return Json{
        {"z", r.z},
        {"mode", mode_name(r.mode)},
        {"totals",
         {{"candidates", r.totals.candidates},
          {"eliminated", std::move(eliminated)},
          {"survivors", r.totals.survivors}}},
        {"survivors", std::move(survivors)},
        {"oracle", {{"max_count", r.oracle.max_count}, {"witnesses", std::move(witnesses)}}},
    };
}

SieveResult sieve_result_from_json(const Json& j) {
    SieveResult r;
    r.z = j.at("z").get<Int>();
    r.mode = require(parse_mode(j.at("mode").get<std::string>()), "mode");
    const Json& totals = j.at("totals");
    r.totals.candidates = totals.at("candidates").get<UInt>();
    r.totals.survivors = totals.at("survivors").get<UInt>();
    for (const auto& [name, n] : totals.at("eliminated").items())
        r.totals.eliminated[require(parse_filter_id(name), "filter")] = n.get<UInt>();
    for (const Json& s : j.at("survivors")) {
        Survivor sv{{s.at("x").get<Int>(), s.at("y").get<Int>(), r.z}, {}};
        for (const Json& o : s.at("attribution")) {
            FilterOutcome out{require(parse_filter_id(o.at("filter").get<std::string>()), "filter"), {}};
            if (o.at("verdict").get<std::string>() == "eliminated")
                out.verdict = Elimination{out.filter, witness_from_json(o.at("witness"))};
            sv.attribution.outcomes.push_back(std::move(out));
        }
        r.survivors.push_back(std::move(sv));
    }
    const Json& oracle = j.at("oracle");
    r.oracle.max_count = oracle.at("max_count").get<int>();
    for (const Json& w : oracle.at("witnesses"))
        r.oracle.witnesses.push_back({w.at("x").get<Int>(), w.at("y").get<Int>(), r.z});
    return r;
}

Json to_json(const Candidate& c, const DistanceProfile& p) {
    Json distances = Json::array();
    for (Corner k : kCorners) {
        const CornerDistance& d = p[k];
        distances.push_back({{"corner", corner_name(k)},
                             {"squared", d.squared},
                             {"root", d.root ? Json(*d.root) : Json(nullptr)}});
    }
    return Json{{"x", c.x}, {"y", c.y}, {"z", c.z}, {"count", p.integer_count},
                {"distances", std::move(distances)}};
}

Json to_json(const ScanReport& r) {
    const ScanRequest& q = r.request;
    Json entries = Json::array();
    for (const ScanEntry& e : r.entries) {
        Json j = to_json(e.candidate, e.profile);
        j["orbit_size"] = e.orbit_size;
        entries.push_back(std::move(j));
    }
    return Json{
        {"request",
         {{"z_min", q.z_min},
          {"z_max", q.z_max},
          {"min_count", q.min_count},
          {"include_boundary", q.include_boundary},
          {"primitive_only", q.primitive_only},
          {"mod12_only", q.mod12_only},
          {"dedup", q.dedup}}},
        {"entries", std::move(entries)},
    };
}

Json to_json(const UnavailableLists& l) {
    auto list = [](const ValueList& v) { return Json{{"direct", v.direct}, {"combined", v.combined}}; };
    return Json{{"z", l.z},
                {"theorem3_x", list(l.theorem3_x)},
                {"theorem4_x", list(l.theorem4_x)},
                {"theorem5_y", list(l.theorem5_y)},
                {"lemma3_y", list(l.lemma3_y)}};
}

std::string roots_cell(const DistanceProfile& p) {
    std::ostringstream os;
    for (Corner k : kCorners) {
        if (k != Corner::A) os << ';';
        os << corner_name(k) << '=';
        if (p[k].root)
            os << *p[k].root;
        else
            os << '-';
    }
    return os.str();
}

std::string serialize(const SieveResult& r, Format f) {
    if (f == Format::Json) return to_json(r).dump(2) + "\n";
    return serialize(std::vector<SieveResult>{r}, f);
}

std::string serialize(const std::vector<SieveResult>& rs, Format f) {
    std::ostringstream os;
    switch (f) {
        case Format::Json: {
            Json arr = Json::array();
            for (const auto& r : rs) arr.push_back(to_json(r));
            os << arr.dump(2) << '\n';
            break;
        }
        case Format::Csv:
            os << kCsvHeader;
            for (const auto& r : rs) {
                for (const Survivor& s : r.survivors) {
                    for (const auto& o : s.attribution.outcomes) {
                        os << r.z << ',' << s.candidate.x << ',' << s.candidate.y << ','
                           << (o.verdict ? "eliminated" : "undecided") << ',' << filter_name(o.filter)
                           << ',' << (o.verdict ? describe_witness(o.verdict->witness) : "") << '\n';
                    }
                }
            }
            break;
        case Format::Text:
            for (std::size_t i = 0; i < rs.size(); ++i) {
                if (i) os << '\n';
                write_text_sieve(os, rs[i]);
            }
            break;
    }
    return os.str();
}

std::string serialize(const ScanReport& r, Format f) {
    std::ostringstream os;
    switch (f) {
        case Format::Json: os << to_json(r).dump(2) << '\n'; break;
        case Format::Csv:
            os << kCsvHeader;
            for (const ScanEntry& e : r.entries) write_csv_scan_row(os, e.candidate, e.profile);
            break;
        case Format::Text:
            os << "points with at least " << r.request.min_count << " integer vertex distances, z in ["
               << r.request.z_min << ", " << r.request.z_max << "]: " << r.entries.size() << "\n";
            for (const ScanEntry& e : r.entries) {
                os << "  (" << e.candidate.x << ", " << e.candidate.y << ", " << e.candidate.z
                   << ")  count=" << e.profile.integer_count << "  " << roots_cell(e.profile)
                   << "  orbit=" << e.orbit_size << "\n";
            }
            break;
    }
    return os.str();
}

std::string serialize(const UnavailableLists& l, Format f) {
    std::ostringstream os;
    const std::pair<std::string_view, const ValueList*> lists[] = {
        {"theorem3_x", &l.theorem3_x},
        {"theorem4_x", &l.theorem4_x},
        {"theorem5_y", &l.theorem5_y},
        {"lemma3_y", &l.lemma3_y},
    };
    const FilterId ids[] = {FilterId::Theorem3, FilterId::Theorem4, FilterId::Theorem5, FilterId::Lemma3};
    switch (f) {
        case Format::Json: os << to_json(l).dump(2) << '\n'; break;
        case Format::Csv:
            os << "z,list,scope,value\n";
            for (const auto& [name, list] : lists) {
                for (Int v : list->direct) os << l.z << ',' << name << ",direct," << v << '\n';
                for (Int v : list->combined) os << l.z << ',' << name << ",combined," << v << '\n';
            }
            break;
        case Format::Text:
            os << "unavailable side distances for z = " << l.z << "\n";
            for (std::size_t i = 0; i < 4; ++i) {
                const auto& [name, list] = lists[i];
                os << name << " (" << filter_name(ids[i]) << ", " << filter_label(ids[i]) << ")\n";
                os << "  direct:   " << join(list->direct) << "\n";
                os << "  combined: " << join(list->combined) << "\n";
            }
            break;
    }
    return os.str();
}

std::string serialize(const Candidate& c, const DistanceProfile& p, Format f) {
    std::ostringstream os;
    switch (f) {
        case Format::Json: os << to_json(c, p).dump(2) << '\n'; break;
        case Format::Csv:
            os << kCsvHeader;
            write_csv_scan_row(os, c, p);
            break;
        case Format::Text: {
            const CornerLegs legs = corner_legs(c);
            os << "P = (" << c.x << ", " << c.y << ") in the square of side " << c.z << "\n";
            for (Corner k : kCorners) {
                os << "  " << corner_name(k) << "P^2 = " << legs[k].a << "^2 + " << legs[k].b
                   << "^2 = " << p[k].squared;
                if (p[k].root)
                    os << " = " << *p[k].root << "^2\n";
                else
                    os << " (not a square)\n";
            }
            os << "integer distances: " << p.integer_count << "\n";
            break;
        }
    }
    return os.str();
}

}  // namespace fourdist
