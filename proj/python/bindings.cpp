#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "fairsim/catalog.hpp"
#include "fairsim/errors.hpp"
#include "fairsim/export.hpp"
#include "fairsim/runner.hpp"
#include "fairsim/version.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

json py_to_json(py::handle obj) {
    if (obj.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
    if (py::isinstance<py::int_>(obj)) return obj.cast<std::int64_t>();
    if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
    if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
    if (py::isinstance<py::dict>(obj)) {
        json out = json::object();
        for (auto item : obj.cast<py::dict>())
            out[item.first.cast<std::string>()] = py_to_json(item.second);
        return out;
    }
    if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
        json out = json::array();
        for (auto item : obj.cast<py::sequence>()) out.push_back(py_to_json(item));
        return out;
    }
    throw fairsim::ConfigError("config: unsupported python value in config object");
}

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const json& item : j) out.append(json_to_py(item));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

/// Accepts a built-in name, a JSON string, or a dict in the config schema.
fairsim::ScenarioConfig config_from(py::object obj) {
    if (py::isinstance<py::str>(obj)) {
        const std::string text = obj.cast<std::string>();
        const auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{') return fairsim::load_config(text);
        return fairsim::builtin(text);
    }
    if (py::isinstance<py::dict>(obj)) return fairsim::load_config(py_to_json(obj).dump());
    throw fairsim::ConfigError("config: expected a scenario name, JSON text, or dict");
}

py::object optional_series_to_py(const std::vector<std::optional<double>>& values) {
    py::list out;
    for (const auto& v : values) out.append(v ? py::object(py::float_(*v)) : py::object(py::none()));
    return out;
}

py::dict result_to_py(const fairsim::ScenarioResult& result) {
    const int m = result.config.num_firms();
    py::dict out;
    out["scenario"] = result.config.name;
    out["engine_version"] = result.engine_version;
    out["timestamp_utc"] = result.timestamp_utc;
    out["config"] = json_to_py(json::parse(fairsim::config_to_json(result.config)));
    py::list series;
    for (const fairsim::AveragedSeries& s : result.series) {
        py::dict entry;
        entry["scope"] = fairsim::scope_label(s.scope, m);
        entry["group_or_gap"] = s.group ? fairsim::group_label(*s.group) : "gap";
        entry["metric"] = fairsim::metric_label(s.metric);
        entry["mean"] = optional_series_to_py(s.mean);
        entry["std"] = optional_series_to_py(s.stddev);
        entry["n_replications"] = py::cast(s.n);
        series.append(entry);
    }
    out["series"] = series;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Deterministic multi-firm lending fairness simulator";

    py::register_exception<fairsim::ConfigError>(m, "ConfigError", PyExc_ValueError);

    m.def("version", [] { return std::string(fairsim::kEngineVersion); });

    m.def("list_scenarios", [] {
        py::list out;
        for (const fairsim::CatalogEntry& e : fairsim::catalog()) {
            py::dict d;
            d["name"] = e.name;
            d["summary"] = e.summary;
            d["anchor"] = e.anchor;
            d["is_sweep"] = e.sweep.has_value();
            out.append(d);
        }
        return out;
    });

    m.def("builtin", [](const std::string& name) {
        return json_to_py(json::parse(fairsim::config_to_json(fairsim::builtin(name))));
    }, py::arg("name"), "Config of a built-in scenario, as a dict");

    m.def("load_config", [](py::object config) {
        return json_to_py(json::parse(fairsim::config_to_json(config_from(config))));
    }, py::arg("config"), "Validate a config (name, JSON text, or dict) and echo it back");

    m.def("derive_seed", &fairsim::derive_seed, py::arg("base_seed"), py::arg("index"));

    m.def("run_scenario", [](py::object config, int parallelism) {
        const fairsim::ScenarioConfig c = config_from(config);
        fairsim::ScenarioResult result;
        {
            py::gil_scoped_release release;
            result = fairsim::run_scenario(c, fairsim::RunOptions{parallelism, false});
        }
        return result_to_py(result);
    }, py::arg("config"), py::arg("parallelism") = 0,
       "Run a scenario and return the replication-averaged metric series");

    m.def("run_scenario_csv", [](py::object config, int parallelism) {
        const fairsim::ScenarioConfig c = config_from(config);
        fairsim::ScenarioResult result;
        {
            py::gil_scoped_release release;
            result = fairsim::run_scenario(c, fairsim::RunOptions{parallelism, false});
        }
        return fairsim::metrics_csv(result);
    }, py::arg("config"), py::arg("parallelism") = 0,
       "Run a scenario and return the metrics CSV text");

    m.def("sweep", [](py::object config, const std::string& axis, const std::vector<double>& values,
                      int parallelism) {
        const fairsim::ScenarioConfig base = config_from(config);
        const fairsim::SweepAxis ax = fairsim::parse_sweep_axis(axis);
        std::vector<fairsim::ScenarioResult> results;
        {
            py::gil_scoped_release release;
            results = fairsim::sweep(base, ax, values, fairsim::RunOptions{parallelism, false});
        }
        py::list out;
        for (const fairsim::ScenarioResult& r : results) out.append(result_to_py(r));
        return out;
    }, py::arg("config"), py::arg("axis"), py::arg("values"), py::arg("parallelism") = 0,
       "Run one scenario per value of the given axis");
}
