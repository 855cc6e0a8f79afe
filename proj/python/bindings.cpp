#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <secnet/attack.hpp>
#include <secnet/infoleak.hpp>
#include <secnet/network.hpp>
#include <secnet/onehop.hpp>
#include <secnet/robust.hpp>
#include <secnet/seccode.hpp>

namespace py = pybind11;
using namespace secnet;

namespace {

std::vector<std::vector<std::uint32_t>> mat_rows(const Mat& m) {
    std::vector<std::vector<std::uint32_t>> rows((std::size_t)m.rows);
    for (int r = 0; r < m.rows; ++r) {
        rows[(std::size_t)r].resize((std::size_t)m.cols);
        for (int c = 0; c < m.cols; ++c) rows[(std::size_t)r][(std::size_t)c] = m.at(r, c);
    }
    return rows;
}

py::dict model_dict(const TransferModel& m) {
    py::dict d;
    d["kind"] = m.kind == ModelKind::Passive    ? "passive"
                : m.kind == ModelKind::Addition ? "addition"
                                                : "replacement";
    d["m0"] = m.m0;
    d["m1"] = m.m1;
    d["m2"] = m.m2;
    d["m3"] = m.m3;
    d["m4"] = m.m4;
    d["m5"] = m.m5;
    d["m6"] = m.m6;
    d["K_B"] = mat_rows(m.K_B);
    d["K_E"] = mat_rows(m.K_E);
    d["H_B"] = mat_rows(m.H_B);
    d["H_E"] = mat_rows(m.H_E);
    return d;
}

RateRegime regime_of(const std::string& s) {
    if (s == "secrecy-robustness") return RateRegime::SecrecyRobustness;
    if (s == "secrecy-only") return RateRegime::SecrecyOnly;
    if (s == "robustness-only") return RateRegime::RobustnessOnly;
    throw Error("unknown regime '" + s + "'");
}

}  // namespace

PYBIND11_MODULE(_secnet, m) {
    m.doc() = "secure network coding toolkit";

    py::register_exception<Error>(m, "SecnetError");

    py::class_<ArithCtx>(m, "ArithCtx")
        .def_property_readonly("size", &ArithCtx::size)
        .def_property_readonly("is_field", &ArithCtx::is_field)
        .def("add", &ArithCtx::add)
        .def("mul", &ArithCtx::mul)
        .def("inv", &ArithCtx::inv);
    m.def("make_field", [](std::uint64_t p, std::uint32_t t) {
        return t == 1 ? ArithCtx::prime_field(p) : ArithCtx::extension_field(p, t);
    }, py::arg("p"), py::arg("t") = 1);
    m.def("make_ring", &ArithCtx::ring, py::arg("d"));

    py::class_<NetworkSpec>(m, "NetworkSpec")
        .def_property_readonly("edge_count", [](const NetworkSpec& s) { return s.m7(); })
        .def_property_readonly("source_count", [](const NetworkSpec& s) { return s.m3(); })
        .def_property_readonly("sink_edges", [](const NetworkSpec& s) { return s.sink_edges; })
        .def_property_readonly("wiretap_edges",
                               [](const NetworkSpec& s) { return s.wiretap_edges; })
        .def_property_readonly("inject_edges",
                               [](const NetworkSpec& s) { return s.inject_edges; });
    m.def("parse_network", &parse_network, py::arg("text"),
          "Parse a line-oriented network description.");
    m.def("parse_network_file", &parse_network_file, py::arg("path"));

    m.def("compile_model", [](const NetworkSpec& s) { return model_dict(compile_model(s)); },
          "Transfer matrices and dimensions for the description's model kind.");
    m.def("compile_passive",
          [](const NetworkSpec& s) { return model_dict(compile_passive(s)); });
    m.def("compile_addition",
          [](const NetworkSpec& s) { return model_dict(compile_addition(s)); });
    m.def("compile_replacement",
          [](const NetworkSpec& s) { return model_dict(compile_replacement(s)); });

    m.def("node_adversary_ranks",
          [](const NetworkSpec& s, const std::vector<std::string>& nodes) {
              NodeAdversary adv = nodes_to_edges(s, nodes);
              int ke = 0, hb = 0;
              if (!adv.edges.empty()) {
                  TransferModel tm = compile_addition(adv.spec);
                  ke = tm.m2;
                  hb = tm.m1;
              }
              return py::make_tuple(ke, hb);
          },
          py::arg("spec"), py::arg("nodes"),
          "(rank of Eve's view, rank of her injection reach) for occupied nodes.");

    m.def("optimal_windows", [](const NetworkSpec& s) {
        OptimalWindows ow = optimal_windows(s);
        py::dict out;
        out["injection_order"] = ow.eta_edges;
        out["windows"] = ow.windows.windows;
        TransferModel m = compile_addition(s);
        out["causal"] = check_causal(m, ow.windows).ok;
        return out;
    }, py::arg("spec"),
          "Largest nested observation windows and the injection order they fit.");

    m.def("rate_report", [](int m0, int m1, int m2, const std::string& regime) {
        RateReport r = rate_report(m0, m1, m2, regime_of(regime));
        return py::make_tuple(r.rate, r.guaranteed);
    }, py::arg("m0"), py::arg("m1"), py::arg("m2"), py::arg("regime"));

    m.def("construct_pair", [](std::uint64_t d) {
        return d % 2 == 1 ? construct_odd(d) : construct_even(d);
    }, py::arg("d"), "Systematic decodable relay-table pair for d >= 3.");
    m.def("verify_pair", [](const RelayTable& t3, const RelayTable& t4) {
        ALSVerdict v = verify_pair(t3, t4, (std::uint64_t)t3.size());
        py::dict out;
        out["anti_latin_3"] = v.anti_latin_3;
        out["anti_latin_4"] = v.anti_latin_4;
        out["fibers_disjoint"] = v.fibers_disjoint;
        out["decodable"] = v.decodable;
        out["witness"] = v.witness;
        return out;
    }, py::arg("t3"), py::arg("t4"));
    m.def("search_pairs", [](std::uint64_t d, std::uint64_t budget) {
        return search_pairs(d, budget);
    }, py::arg("d"), py::arg("budget") = (std::uint64_t)400 << 20);

    m.def("binary_attack_information", [](const std::string& attack) {
        OneHopCode c = binary_counterexample();
        if (attack == "passive") {
            JointDist d = onehop_passive_dist(c);
            return mutual_info(d, {"M"}, {"Y1", "Y3"}).value;
        }
        int observe = attack == "ii" ? 4 : 3;
        std::uint32_t constant = attack == "ii" ? 0u : 1u;
        Channel ch = onehop_channel(c, 1, observe);
        JointDist d = run_active(onehop_code_adapter(c), ch,
                                 replacement_strategy(c.zd, {constant, constant}));
        return mutual_info(d, {"M"}, {"YE"}).value;
    }, py::arg("attack"), "Leak in bits for 'passive', 'i' or 'ii'.");

    m.def("toeplitz_audit", [](int k, int kbar) {
        Universal2Audit a = universal2_audit(ArithCtx::prime_field(2), k, kbar);
        return py::make_tuple(a.max_collision.str(), a.bound.str(), a.ok);
    }, py::arg("k"), py::arg("kbar"));

    m.def("robust_failure_rate",
          [](std::uint64_t q, int n, int m0, int m1, int m3, int m4, int trials,
             std::uint64_t seed) {
              ArithCtx f = ArithCtx::prime_field(q);
              int failures = 0;
              for (int i = 0; i < trials; ++i) {
                  Rng rng = Rng::stream(seed, (std::uint64_t)i);
                  RobustCode code = make_robust_code(f, m0, m1, m3, m4, n, rng);
                  Mat k_b = random_full_rank_matrix(f, m4, m3, m0, rng);
                  Mat h_hat = random_matrix(f, m4, m1, rng);
                  Mat z_hat = random_full_rank_matrix(f, m1, n, m1, rng);
                  Mat msg = random_matrix(f, m0 - m1, n, rng);
                  RobustEncoding enc = robust_encode(code, msg);
                  Mat y = mat_add(mat_mul(k_b, enc.channel_input), mat_mul(h_hat, z_hat));
                  DecodeTrace trace = robust_decode(code, y, enc.header);
                  if (!(trace.solved && trace.decoded == msg)) ++failures;
              }
              return (double)failures / (double)trials;
          },
          py::arg("q") = 65521, py::arg("n") = 8, py::arg("m0") = 3, py::arg("m1") = 1,
          py::arg("m3") = 4, py::arg("m4") = 4, py::arg("trials") = 200,
          py::arg("seed") = 1);

    m.def("binary_relay_audit", [] {
        RelayAudit a = classify_binary_relays();
        py::dict out;
        out["survivors"] = a.survivor_count;
        out["orbit_size"] = a.orbit_size;
        out["all_in_orbit"] = a.all_survivors_in_orbit;
        return out;
    });
}
