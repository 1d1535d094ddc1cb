#include "relay/connectivity.hpp"
#include "relay/cover.hpp"
#include "relay/harness.hpp"
#include "relay/io.hpp"
#include "relay/placement.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <sstream>
#include <string>

namespace py = pybind11;
using namespace relay;

namespace {

std::string point_repr(const Point& p) {
    std::ostringstream ss;
    ss << "Point(" << p.x << ", " << p.y << ")";
    return ss.str();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Relay placement for two-tiered wireless sensor networks";

    py::class_<Point>(m, "Point")
        .def(py::init<>())
        .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
        .def_readwrite("x", &Point::x)
        .def_readwrite("y", &Point::y)
        .def("__repr__", &point_repr);

    py::class_<Scenario>(m, "Scenario")
        .def(py::init<>())
        .def_readwrite("field_width", &Scenario::field_width)
        .def_readwrite("field_height", &Scenario::field_height)
        .def_readwrite("sensors", &Scenario::sensors)
        .def_readwrite("sink", &Scenario::sink)
        .def_readwrite("r", &Scenario::r)
        .def_readwrite("R", &Scenario::R)
        .def("n", &Scenario::n)
        .def("validate", &Scenario::validate);

    py::enum_<PositionKind>(m, "PositionKind")
        .value("PairIntersection", PositionKind::PairIntersection)
        .value("SensorCenter", PositionKind::SensorCenter);

    py::class_<PossiblePosition>(m, "PossiblePosition")
        .def_readonly("id", &PossiblePosition::id)
        .def_readonly("covered", &PossiblePosition::covered)
        .def_readonly("anchor", &PossiblePosition::anchor)
        .def_readonly("kind", &PossiblePosition::kind);

    py::class_<WeightConfig>(m, "WeightConfig")
        .def(py::init<>())
        .def(py::init([](double alpha, double beta, double gamma) {
                 WeightConfig w;
                 w.alpha = alpha;
                 w.beta = beta;
                 w.gamma = gamma;
                 return w;
             }),
             py::arg("alpha"), py::arg("beta"), py::arg("gamma"))
        .def_readwrite("alpha", &WeightConfig::alpha)
        .def_readwrite("beta", &WeightConfig::beta)
        .def_readwrite("gamma", &WeightConfig::gamma)
        .def("validate", &WeightConfig::validate);

    py::enum_<CoverAlgorithm>(m, "CoverAlgorithm")
        .value("Lsaa", CoverAlgorithm::Lsaa)
        .value("Lsaadc", CoverAlgorithm::Lsaadc)
        .value("WeightedGreedy", CoverAlgorithm::WeightedGreedy)
        .value("Grid", CoverAlgorithm::Grid)
        .value("ExactOracle", CoverAlgorithm::ExactOracle);

    py::class_<ChosenPosition>(m, "ChosenPosition")
        .def_readonly("position_id", &ChosenPosition::position_id)
        .def_readonly("covered", &ChosenPosition::covered)
        .def_readonly("anchor", &ChosenPosition::anchor)
        .def_readonly("second_pass", &ChosenPosition::second_pass);

    py::class_<CoverSolution>(m, "CoverSolution")
        .def_readonly("positions", &CoverSolution::positions)
        .def_readonly("degrees", &CoverSolution::degrees)
        .def_readonly("algorithm", &CoverSolution::algorithm)
        .def("position_ids", &CoverSolution::position_ids);

    py::class_<OracleLimits>(m, "OracleLimits")
        .def(py::init<>())
        .def_readwrite("max_sensors", &OracleLimits::max_sensors)
        .def_readwrite("max_positions", &OracleLimits::max_positions)
        .def_readwrite("time_budget_ms", &OracleLimits::time_budget_ms);

    py::enum_<RelayRole>(m, "RelayRole")
        .value("Cover", RelayRole::Cover)
        .value("Connectivity", RelayRole::Connectivity);

    py::class_<Relay>(m, "Relay")
        .def_readonly("position", &Relay::position)
        .def_readonly("role", &Relay::role)
        .def_readonly("source_position_id", &Relay::source_position_id);

    py::class_<Deployment>(m, "Deployment")
        .def_readonly("relays", &Deployment::relays)
        .def_readonly("sink_candidate_uses", &Deployment::sink_candidate_uses)
        .def("cover_points", &Deployment::cover_points);

    py::enum_<NodeKind>(m, "NodeKind")
        .value("Relay", NodeKind::Relay)
        .value("Sink", NodeKind::Sink)
        .value("Steiner", NodeKind::Steiner);

    py::class_<TopologyNode>(m, "TopologyNode")
        .def_readonly("p", &TopologyNode::p)
        .def_readonly("kind", &TopologyNode::kind);

    py::class_<TopologyEdge>(m, "TopologyEdge")
        .def_readonly("u", &TopologyEdge::u)
        .def_readonly("v", &TopologyEdge::v)
        .def_readonly("weight", &TopologyEdge::weight);

    py::class_<TopologyGraph>(m, "TopologyGraph")
        .def_readonly("nodes", &TopologyGraph::nodes)
        .def_readonly("edges", &TopologyGraph::edges)
        .def_readonly("comm_radius", &TopologyGraph::comm_radius);

    py::enum_<PlacementMethod>(m, "PlacementMethod")
        .value("Rlsa", PlacementMethod::Rlsa)
        .value("Ilsm", PlacementMethod::Ilsm)
        .value("Rlsm", PlacementMethod::Rlsm);

    py::class_<Metrics>(m, "Metrics")
        .def_readonly("relay_count_cover", &Metrics::relay_count_cover)
        .def_readonly("relay_count_connectivity", &Metrics::relay_count_connectivity)
        .def_readonly("avg_node_degree", &Metrics::avg_node_degree)
        .def_readonly("avg_pairwise_relay_distance", &Metrics::avg_pairwise_relay_distance)
        .def_readonly("runtime_ms", &Metrics::runtime_ms)
        .def_readonly("ratio_to_optimum", &Metrics::ratio_to_optimum);

    py::class_<PipelineConfig>(m, "PipelineConfig")
        .def(py::init<>())
        .def_readwrite("name", &PipelineConfig::name)
        .def_readwrite("cover_algorithm", &PipelineConfig::cover_algorithm)
        .def_readwrite("placement", &PipelineConfig::placement)
        .def_readwrite("weights", &PipelineConfig::weights)
        .def_readwrite("coverage_k", &PipelineConfig::coverage_k)
        .def_readwrite("seed", &PipelineConfig::seed)
        .def_readwrite("greedy_alpha", &PipelineConfig::greedy_alpha)
        .def("validate", &PipelineConfig::validate)
        .def("display_name", &PipelineConfig::display_name);

    py::class_<RunResult>(m, "RunResult")
        .def_readonly("solution", &RunResult::solution)
        .def_readonly("deployment", &RunResult::deployment)
        .def_readonly("topology", &RunResult::topology)
        .def_readonly("metrics", &RunResult::metrics);

    m.def("geom_tol", &geom_tol, py::arg("radius"));
    m.def("circle_intersections", &circle_intersections, py::arg("c1"), py::arg("c2"),
          py::arg("radius"));
    m.def("nearest_point_on_disc", &nearest_point_on_disc, py::arg("center"), py::arg("radius"),
          py::arg("target"));
    m.def(
        "nps",
        [](Point xi, Point xj, double radius, Point sink) { return nps(xi, xj, radius, sink).point; },
        py::arg("xi"), py::arg("xj"), py::arg("radius"), py::arg("sink"));

    m.def("enumerate_possible_positions", &enumerate_possible_positions, py::arg("scenario"));
    m.def("lsaa", &lsaa, py::arg("scenario"), py::arg("family"),
          py::arg("weights") = WeightConfig{});
    m.def("lsaadc", &lsaadc, py::arg("scenario"), py::arg("family"),
          py::arg("weights") = WeightConfig{});
    m.def("weighted_greedy", &weighted_greedy, py::arg("scenario"), py::arg("family"),
          py::arg("alpha"));
    m.def("grid_cover", &grid_cover, py::arg("scenario"));
    m.def("exact_min_cover", &exact_min_cover, py::arg("scenario"), py::arg("family"),
          py::arg("limits") = OracleLimits{});
    m.def(
        "coverage_degrees",
        [](const Scenario& sc, const std::vector<Point>& relays) {
            return coverage_degrees(sc, relays);
        },
        py::arg("scenario"), py::arg("relays"));
    m.def("validate_cover", &validate_cover, py::arg("scenario"), py::arg("solution"),
          py::arg("k"));

    m.def("rlsa", &rlsa, py::arg("solution"), py::arg("scenario"));
    m.def("ilsm", &ilsm, py::arg("solution"), py::arg("scenario"));
    m.def("rlsm", &rlsm, py::arg("solution"), py::arg("scenario"), py::arg("seed"));

    m.def(
        "build_topology",
        [](const std::vector<Point>& relays, Point sink, double R) {
            return build_topology(std::span<const Point>(relays), sink, R);
        },
        py::arg("relays"), py::arg("sink"), py::arg("R"));
    m.def(
        "mst_steinerize",
        [](const std::vector<Point>& relays, Point sink, double R) {
            return mst_steinerize(std::span<const Point>(relays), sink, R);
        },
        py::arg("relays"), py::arg("sink"), py::arg("R"));
    m.def("is_connected", &is_connected, py::arg("graph"));

    m.def("generate_scenario", &generate_scenario, py::arg("n"), py::arg("field_width"),
          py::arg("field_height"), py::arg("r"), py::arg("R"), py::arg("sink"), py::arg("seed"));
    m.def("run_pipeline", &run_pipeline, py::arg("scenario"), py::arg("config"));

    m.def("scenario_to_json", &scenario_to_json, py::arg("scenario"));
    m.def("scenario_from_json", &scenario_from_json, py::arg("text"));
    m.def("solution_to_json", &solution_to_json, py::arg("solution"));
    m.def("solution_from_json", &solution_from_json, py::arg("text"));
}
