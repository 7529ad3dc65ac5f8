#include "spt/json_io.hpp"

#include <sstream>
#include <stdexcept>

#include "spt/errors.hpp"

namespace spt {

namespace {

int get_n(const Json& j) {
    if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 0)
        throw std::invalid_argument("expected nonnegative integer field 'n'");
    return j["n"].get<int>();
}

std::vector<Weight> get_weights(const Json& j, int n) {
    std::vector<Weight> w(n, 1);
    if (!j.contains("weights")) return w;
    if (!j["weights"].is_array() || static_cast<int>(j["weights"].size()) != n)
        throw std::invalid_argument("weights must list one value per vertex");
    for (int i = 0; i < n; ++i) {
        w[i] = j["weights"][i].get<Weight>();
        if (w[i] < 0) throw std::invalid_argument("negative weight");
    }
    return w;
}

} // namespace

Json graph_to_json(const WeightedGraph& g) {
    Json j;
    j["n"] = g.n;
    j["edges"] = Json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    j["weights"] = g.weights;
    return j;
}

WeightedGraph graph_from_json(const Json& j) {
    WeightedGraph g(get_n(j));
    g.weights = get_weights(j, g.n);
    for (const Json& e : j.value("edges", Json::array()))
        g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
}

Json orientation_to_json(const BiOrientation& o) {
    Json j;
    j["n"] = o.n;
    j["arcs"] = Json::array();
    for (const Arc& a : o.arcs) {
        Json arc;
        arc["from"] = a.from;
        arc["to"] = a.to;
        arc["bucket"] = a.bucket == Bucket::A ? "A" : "B";
        j["arcs"].push_back(arc);
    }
    return j;
}

BiOrientation orientation_from_json(const Json& j) {
    BiOrientation o(get_n(j));
    for (const Json& a : j.value("arcs", Json::array())) {
        std::string b = a.at("bucket").get<std::string>();
        if (b != "A" && b != "B") throw std::invalid_argument("bucket must be \"A\" or \"B\"");
        o.add_arc(a.at("from").get<int>(), a.at("to").get<int>(),
                  b == "A" ? Bucket::A : Bucket::B);
    }
    return o;
}

Json report_to_json(const VerifierReport& rep) {
    Json j;
    for (const auto& [name, flag] : rep.entries()) {
        Json f;
        f["pass"] = flag->pass;
        if (!flag->pass) f["witness"] = flag->witness;
        j[name] = f;
    }
    return j;
}

Json result_to_json(const ChainResult& res, bool verified) {
    Json j;
    j["value"] = res.value;
    j["members"] = res.members;
    j["verified"] = verified;
    return j;
}

Json instance_to_json(const Instance& inst) {
    Json j;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, RectangleInstance>) {
                j["type"] = "rectangles";
                j["items"] = Json::array();
                for (size_t i = 0; i < v.items.size(); ++i) {
                    const Rect& r = v.items[i];
                    j["items"].push_back({{"x1", r.x1},
                                          {"y1", r.y1},
                                          {"x2", r.x2},
                                          {"y2", r.y2},
                                          {"w", v.weights[i]}});
                }
            } else if constexpr (std::is_same_v<T, HalfSegmentInstance>) {
                j["type"] = "half_segments";
                j["items"] = Json::array();
                for (size_t i = 0; i < v.items.size(); ++i) {
                    const HalfSegment& h = v.items[i];
                    j["items"].push_back({{"foot_x", h.foot_x},
                                          {"apex_x", h.apex_x},
                                          {"apex_y", h.apex_y},
                                          {"w", v.weights[i]}});
                }
            } else if constexpr (std::is_same_v<T, FilamentInstance>) {
                j["type"] = "filaments";
                j["items"] = Json::array();
                for (size_t i = 0; i < v.items.size(); ++i) {
                    const Filament& f = v.items[i];
                    j["items"].push_back(
                        {{"l", f.l}, {"r", f.r}, {"h", f.h}, {"w", v.weights[i]}});
                }
            } else if constexpr (std::is_same_v<T, OverlapInstance>) {
                j["type"] = "overlap";
                j["items"] = Json::array();
                for (const IntervalItem& it : v.items)
                    j["items"].push_back({{"l", it.l}, {"r", it.r}, {"w", it.w}});
            } else if constexpr (std::is_same_v<T, DagInstance>) {
                j["type"] = "dag";
                j["n"] = v.n;
                j["arcs"] = Json::array();
                for (auto [a, b] : v.arcs) j["arcs"].push_back({a, b});
                j["weights"] = v.weights;
            } else if constexpr (std::is_same_v<T, SubtreeInstance>) {
                j["type"] = "subtrees";
                j["tree"] = Json{{"parents", v.tree.parent}, {"child_order", v.tree.children}};
                j["subtrees"] = v.subtrees;
                j["weights"] = v.weights;
            } else {
                j["type"] = "peo_graph";
                j["n"] = v.graph.n;
                j["edges"] = Json::array();
                for (auto [a, b] : v.graph.edges()) j["edges"].push_back({a, b});
                j["peo"] = v.order;
                j["weights"] = v.graph.weights;
            }
        },
        inst);
    return j;
}

Instance instance_from_json(const Json& j) {
    std::string type = j.at("type").get<std::string>();
    auto items = [&]() -> const Json& {
        if (!j.contains("items") || !j["items"].is_array())
            throw std::invalid_argument("instance is missing its items array");
        return j["items"];
    };
    if (type == "rectangles") {
        RectangleInstance v;
        for (const Json& it : items()) {
            v.items.push_back(Rect{it.at("x1").get<long long>(), it.at("y1").get<long long>(),
                                   it.at("x2").get<long long>(), it.at("y2").get<long long>()});
            v.weights.push_back(it.value("w", Weight{1}));
        }
        return v;
    }
    if (type == "half_segments") {
        HalfSegmentInstance v;
        for (const Json& it : items()) {
            v.items.push_back(HalfSegment{it.at("foot_x").get<long long>(),
                                          it.at("apex_x").get<long long>(),
                                          it.at("apex_y").get<long long>()});
            v.weights.push_back(it.value("w", Weight{1}));
        }
        return v;
    }
    if (type == "filaments") {
        FilamentInstance v;
        for (const Json& it : items()) {
            v.items.push_back(Filament{it.at("l").get<long long>(), it.at("r").get<long long>(),
                                       it.at("h").get<long long>()});
            v.weights.push_back(it.value("w", Weight{1}));
        }
        return v;
    }
    if (type == "overlap") {
        OverlapInstance v;
        for (const Json& it : items())
            v.items.push_back(IntervalItem{it.at("l").get<long long>(),
                                           it.at("r").get<long long>(),
                                           it.value("w", Weight{1})});
        return v;
    }
    if (type == "dag") {
        DagInstance v;
        v.n = get_n(j);
        for (const Json& a : j.value("arcs", Json::array()))
            v.arcs.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
        v.weights = get_weights(j, v.n);
        return v;
    }
    if (type == "subtrees") {
        SubtreeInstance v;
        const Json& tree = j.at("tree");
        v.tree.parent = tree.at("parents").get<std::vector<int>>();
        v.tree.children = tree.at("child_order").get<std::vector<std::vector<int>>>();
        v.subtrees = j.at("subtrees").get<std::vector<std::vector<int>>>();
        v.weights = get_weights(j, static_cast<int>(v.subtrees.size()));
        return v;
    }
    if (type == "peo_graph") {
        PeoInstance v;
        v.graph = WeightedGraph(get_n(j));
        v.graph.weights = get_weights(j, v.graph.n);
        for (const Json& e : j.value("edges", Json::array()))
            v.graph.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
        v.order = j.at("peo").get<std::vector<int>>();
        return v;
    }
    throw std::invalid_argument("unknown instance type: " + type);
}

Json fuzz_report_to_json(const FuzzReport& rep) {
    Json j;
    j["class"] = rep.class_name;
    j["trials"] = rep.trials;
    j["failures"] = Json::array();
    for (const FuzzFailure& f : rep.failures)
        j["failures"].push_back({{"seed", f.seed}, {"kind", f.kind}});
    j["first_type"] = Json{{"pass", rep.first_type_pass}, {"checked", rep.first_type_checked}};
    return j;
}

Json bench_to_json(const BenchResult& res, const std::string& workload) {
    Json j;
    j["workload"] = workload;
    j["sizes"] = Json::array();
    for (const BenchRow& r : res.rows)
        j["sizes"].push_back({{"n", r.n}, {"median_ms", r.median_ms}});
    j["fitted_slope"] = res.fitted_slope;
    j["cubic_target"] = 3.0;
    return j;
}

std::string to_dot(const WeightedGraph& g, const BiOrientation& o) {
    std::ostringstream out;
    out << "digraph spt {\n";
    for (int v = 0; v < g.n; ++v)
        out << "  " << v << " [label=\"" << v << " (w=" << g.weights[v] << ")\"];\n";
    for (auto [u, v] : g.edges())
        out << "  " << u << " -> " << v << " [dir=none, color=gray];\n";
    for (const Arc& a : o.arcs)
        out << "  " << a.from << " -> " << a.to
            << (a.bucket == Bucket::A ? " [style=solid];\n" : " [style=dashed];\n");
    out << "}\n";
    return out.str();
}

} // namespace spt
