#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "fourdist/arith.hpp"
#include "fourdist/cli.hpp"
#include "fourdist/filters.hpp"
#include "fourdist/model.hpp"
#include "fourdist/report.hpp"
#include "fourdist/search.hpp"
#include "fourdist/witness.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace fourdist;

namespace {

py::object to_python(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case Json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& v : j) out.append(to_python(v));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (const auto& [k, v] : j.items()) out[py::str(k)] = to_python(v);
            return out;
        }
        default: return py::none();
    }
}

FilterConfig make_config(const std::optional<std::vector<std::string>>& filters, UInt prime_bound) {
    std::vector<FilterId> enabled;
    if (!filters) {
        enabled.assign(kAllFilters.begin(), kAllFilters.end());
    } else {
        for (const auto& name : *filters) {
            const auto id = parse_filter_id(name);
            if (!id) throw std::invalid_argument("unknown filter '" + name + "'");
            enabled.push_back(*id);
        }
    }
    return FilterConfig(std::move(enabled), two_nonresidue_primes(prime_bound),
                        two_nonresidue_primes(prime_bound));
}

AttributionMode make_mode(const std::string& mode) {
    const auto m = parse_mode(mode);
    if (!m) throw std::invalid_argument("mode must be 'first' or 'full'");
    return *m;
}

py::tuple as_tuple(const Candidate& c) { return py::make_tuple(c.x, c.y, c.z); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Lattice points with integer distances to the four vertices of a square";

    m.def("isqrt", [](UInt n) {
        const SqrtResult r = isqrt(n);
        return py::make_tuple(r.root, r.exact);
    }, py::arg("n"), "floor(sqrt(n)) and whether n is a perfect square");
    m.def("is_prime", &is_prime, py::arg("n"));
    m.def("factorize", [](UInt n) {
        std::vector<std::pair<UInt, unsigned>> out;
        for (const auto& f : factorize(n).factors) out.emplace_back(f.prime, f.exponent);
        return out;
    }, py::arg("n"));
    m.def("jacobi", &jacobi, py::arg("a"), py::arg("n"));
    m.def("is_qr_bruteforce", &is_qr_bruteforce, py::arg("a"), py::arg("p"));
    m.def("prime_power_root", [](UInt n) -> std::optional<std::pair<UInt, unsigned>> {
        const auto r = prime_power_root(n);
        if (!r) return std::nullopt;
        return std::pair{r->prime, r->exponent};
    }, py::arg("n"));
    m.def("two_nonresidue_primes", &two_nonresidue_primes, py::arg("bound"));
    m.def("lemma3_multipliers", &lemma3_multipliers, py::arg("bound"));
    m.def("odd_leg_decompositions", [](UInt a) {
        std::vector<std::tuple<UInt, UInt, UInt>> out;
        for (const auto& d : odd_leg_decompositions(a)) out.emplace_back(d.k, d.u, d.v);
        return out;
    }, py::arg("a"), "All (k, u, v) with k(u^2 - v^2) == a");
    m.def("pythagorean_partners", &pythagorean_partners, py::arg("a"));

    m.def("distance_profile", [](Int x, Int y, Int z) {
        const Candidate c{x, y, z};
        return to_python(to_json(c, distance_profile(c)));
    }, py::arg("x"), py::arg("y"), py::arg("z"));
    m.def("orbit", [](Int x, Int y, Int z) {
        py::list out;
        for (const auto& c : orbit({x, y, z})) out.append(as_tuple(c));
        return out;
    }, py::arg("x"), py::arg("y"), py::arg("z"));
    m.def("canonicalize", [](Int x, Int y, Int z) { return as_tuple(canonicalize({x, y, z})); },
          py::arg("x"), py::arg("y"), py::arg("z"));
    m.def("is_primitive_interior", [](Int x, Int y, Int z) { return is_primitive_interior({x, y, z}); },
          py::arg("x"), py::arg("y"), py::arg("z"));

    m.def("run_pipeline", [](Int x, Int y, Int z, std::optional<std::vector<std::string>> filters,
                             const std::string& mode, UInt prime_bound) {
        const Candidate c{x, y, z};
        const Attribution a = run_pipeline(c, make_config(filters, prime_bound), make_mode(mode));
        py::list out;
        for (const auto& o : a.outcomes) {
            py::dict d;
            d["filter"] = std::string(filter_name(o.filter));
            d["eliminated"] = o.verdict.has_value();
            if (o.verdict) {
                d["witness"] = to_python(to_json(o.verdict->witness));
                d["detail"] = describe_witness(o.verdict->witness);
                d["rechecked"] = witness_holds(c, *o.verdict);
            }
            out.append(d);
        }
        return out;
    }, py::arg("x"), py::arg("y"), py::arg("z"), py::arg("filters") = py::none(),
       py::arg("mode") = "first", py::arg("prime_bound") = 100);

    m.def("sieve_z", [](Int z, std::optional<std::vector<std::string>> filters,
                        const std::string& mode, UInt prime_bound) {
        const FilterConfig cfg = make_config(filters, prime_bound);
        const AttributionMode am = make_mode(mode);
        SieveResult r;
        {
            py::gil_scoped_release release;
            r = sieve_z(z, cfg, am);
        }
        return to_python(to_json(r));
    }, py::arg("z"), py::arg("filters") = py::none(), py::arg("mode") = "first",
       py::arg("prime_bound") = 100);

    m.def("search_range", [](Int z_min, Int z_max, std::optional<std::vector<std::string>> filters,
                             unsigned workers, const std::string& mode) {
        const FilterConfig cfg = make_config(filters, 100);
        const AttributionMode am = make_mode(mode);
        std::vector<SieveResult> rs;
        {
            py::gil_scoped_release release;
            rs = search_range(z_min, z_max, cfg, workers, am);
        }
        py::list out;
        for (const auto& r : rs) out.append(to_python(to_json(r)));
        return out;
    }, py::arg("z_min"), py::arg("z_max"), py::arg("filters") = py::none(), py::arg("workers") = 1,
       py::arg("mode") = "first");

    m.def("oracle_scan", [](Int z_max, Int z_min, int min_count, bool include_boundary,
                            bool primitive_only, bool mod12_only, bool dedup, UInt budget) {
        ScanRequest req;
        req.z_min = z_min;
        req.z_max = z_max;
        req.min_count = min_count;
        req.include_boundary = include_boundary;
        req.primitive_only = primitive_only;
        req.mod12_only = mod12_only;
        req.dedup = dedup;
        req.budget = budget;
        ScanReport rep;
        {
            py::gil_scoped_release release;
            rep = oracle_scan(req);
        }
        return to_python(to_json(rep));
    }, py::arg("z_max"), py::arg("z_min") = 1, py::arg("min_count") = 3,
       py::arg("include_boundary") = false, py::arg("primitive_only") = true,
       py::arg("mod12_only") = false, py::arg("dedup") = true,
       py::arg("budget") = UInt{1'000'000'000});

    m.def("unavailable_lists", [](Int z, UInt prime_bound) {
        return to_python(to_json(unavailable_lists(z, make_config(std::nullopt, prime_bound))));
    }, py::arg("z"), py::arg("prime_bound") = 100);

    m.def("run_cli", [](std::vector<std::string> args) {
        args.insert(args.begin(), "fourdist");
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Run the command-line interface; returns (exit_code, stdout, stderr)");

    m.def("filter_ids", [] {
        std::vector<std::string> out;
        for (FilterId id : kAllFilters) out.emplace_back(filter_name(id));
        return out;
    });

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
