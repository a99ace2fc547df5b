#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "graviton/arb.hpp"
#include "graviton/engine.hpp"

namespace py = pybind11;
using namespace graviton;

namespace {

py::dict summary_dict(const RunSummary& s) {
    py::dict d;
    d["ticks_run"] = s.ticks_run;
    d["audits"] = s.audits;
    d["rgu_supply"] = s.rgu_supply;
    d["rgu_emitted"] = s.emitted;
    d["rgu_claimed"] = s.claimed;
    d["rgu_burned"] = s.burned;
    return d;
}

} // namespace

PYBIND11_MODULE(_graviton, m) {
    m.doc() = "Deterministic multi-chain liquidity-protocol engine";

    py::register_exception<Error>(m, "ProtocolError");

    py::class_<Scenario>(m, "Scenario")
        .def_property(
            "seed", [](const Scenario& s) { return s.run.seed; },
            [](Scenario& s, std::uint64_t v) { s.run.seed = v; })
        .def_property(
            "ticks", [](const Scenario& s) { return s.run.ticks; },
            [](Scenario& s, Tick v) { s.run.ticks = v; })
        .def_property(
            "audit_every", [](const Scenario& s) { return s.run.audit_every; },
            [](Scenario& s, std::uint64_t v) { s.run.audit_every = v; });

    m.def("parse_scenario", &parse_scenario, py::arg("text"),
          "Parse scenario text; raises ProtocolError on any validation failure");
    m.def("load_scenario", &load_scenario, py::arg("path"));

    py::class_<Engine>(m, "Engine")
        .def(py::init<Scenario>(), py::arg("scenario"))
        .def_property_readonly("now", &Engine::now)
        .def_property_readonly("columns", &Engine::columns)
        .def("step", [](Engine& e) { e.step(nullptr); },
             "Advance one tick without recording metrics")
        .def("run",
             [](Engine& e) {
                 TableWriter table;
                 const RunSummary s = e.run(table);
                 py::dict out;
                 out["columns"] = table.columns();
                 out["rows"] = table.rows();
                 out["summary"] = summary_dict(s);
                 return out;
             },
             "Run to the configured tick count; returns columns, rows and a summary")
        .def("agent_wealth", [](Engine& e, std::uint32_t agent, Tick t) {
            return e.agent_wealth(agent, t).str();
        });

    m.def(
        "run_csv",
        [](const Scenario& sc) {
            std::ostringstream os;
            CsvWriter w(os);
            Engine engine(sc);
            const RunSummary s = engine.run(w);
            return py::make_tuple(os.str(), summary_dict(s));
        },
        py::arg("scenario"), "Run a scenario; returns (csv_text, summary)");

    m.def("swap_output", &swap_output, py::arg("reserve_in"), py::arg("reserve_out"),
          py::arg("amount_in"), py::arg("fee_bps"),
          "Constant-product output with pool-favoring rounding");

    m.def(
        "optimal_arb",
        [](Amount reserve_w, Amount reserve_o, std::uint32_t fee_bps, std::int64_t price_num,
           std::int64_t price_den) {
            const ArbPlan plan =
                optimal_arb_input(reserve_w, reserve_o, fee_bps,
                                  Rational(bigint(price_num), bigint(price_den)));
            py::dict d;
            d["direction"] = plan.direction == ArbDirection::None
                                 ? "none"
                                 : (plan.direction == ArbDirection::BuyW ? "buy_w" : "sell_w");
            d["amount_in"] = plan.amount_in;
            d["amount_out"] = plan.amount_out;
            d["profit"] = plan.profit.str();
            return d;
        },
        py::arg("reserve_w"), py::arg("reserve_o"), py::arg("fee_bps"), py::arg("price_num"),
        py::arg("price_den"), "Profit-maximizing swap against an external price");
}
