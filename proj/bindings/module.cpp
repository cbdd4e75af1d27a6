#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mbook/constructions.hpp"
#include "mbook/io.hpp"
#include "mbook/solver.hpp"

namespace py = pybind11;
using namespace mbook;

namespace {

Label label_from_object(const py::object& obj);

Label label_from_object(const py::object& obj) {
    if (py::isinstance<Label>(obj)) return obj.cast<Label>();
    if (py::isinstance<py::str>(obj)) return Label::plain(obj.cast<std::string>());
    throw py::type_error("expected a Label or a string");
}

Graph graph_from_parts(int n, const std::vector<std::pair<int, int>>& edges,
                       const std::vector<std::string>& tags) {
    if (tags.empty()) return make_graph(n, edges);
    std::vector<Label> labels;
    std::vector<Tag> tag_values;
    for (int i = 0; i < n; ++i) labels.push_back(Label::plain(std::to_string(i)));
    for (const auto& t : tags) {
        if (t == "black") tag_values.push_back(Tag::Black);
        else if (t == "white") tag_values.push_back(Tag::White);
        else throw py::value_error("tag must be 'black' or 'white'");
    }
    return Graph::make(std::move(labels), std::move(tag_values), edges);
}

}  // namespace

PYBIND11_MODULE(_mbook, m) {
    m.doc() = "matching book embeddings: graph transforms, F-sums, validation, exact search";

    py::register_exception<budget_error>(m, "BudgetError");

    py::class_<Label>(m, "Label")
        .def_static("plain", &Label::plain, py::arg("name"))
        .def_static(
            "edge",
            [](const py::object& a, const py::object& b) {
                return Label::edge(label_from_object(a), label_from_object(b));
            },
            py::arg("a"), py::arg("b"))
        .def_static(
            "pair",
            [](const py::object& x, const py::object& u) {
                return Label::pair(label_from_object(x), label_from_object(u));
            },
            py::arg("graph_side"), py::arg("copy_side"))
        .def("__str__", &Label::str)
        .def("__repr__", [](const Label& l) { return "Label(" + l.str() + ")"; })
        .def("__eq__", [](const Label& a, const Label& b) { return a == b; })
        .def("__lt__", [](const Label& a, const Label& b) { return a < b; })
        .def("__hash__", [](const Label& l) { return py::hash(py::str(l.str())); });

    py::class_<Graph>(m, "Graph")
        .def(py::init(&graph_from_parts), py::arg("n"), py::arg("edges"),
             py::arg("tags") = std::vector<std::string>{})
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("edges", [](const Graph& g) { return g.edges(); })
        .def_property_readonly("labels",
                               [](const Graph& g) {
                                   std::vector<std::string> out;
                                   for (const auto& l : g.labels()) out.push_back(l.str());
                                   return out;
                               })
        .def_property_readonly("tags",
                               [](const Graph& g) {
                                   std::vector<std::string> out;
                                   for (auto t : g.tags())
                                       out.push_back(t == Tag::Black ? "black" : "white");
                                   return out;
                               })
        .def("degree", &Graph::degree, py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(" + std::to_string(g.vertex_count()) + " vertices, " +
                   std::to_string(g.edge_count()) + " edges)";
        });

    py::class_<BookEmbedding>(m, "BookEmbedding")
        .def_property_readonly("page_count", &BookEmbedding::page_count)
        .def_property_readonly("spine",
                               [](const BookEmbedding& e) {
                                   std::vector<std::string> out;
                                   for (const auto& l : e.spine) out.push_back(l.str());
                                   return out;
                               })
        .def_property_readonly("pages", [](const BookEmbedding& e) {
            std::vector<std::vector<std::pair<std::string, std::string>>> out;
            for (const auto& page : e.pages) {
                std::vector<std::pair<std::string, std::string>> edges;
                for (const auto& [a, b] : page) edges.emplace_back(a.str(), b.str());
                out.push_back(std::move(edges));
            }
            return out;
        });

    py::class_<ValidationReport>(m, "ValidationReport")
        .def_readonly("ok", &ValidationReport::ok)
        .def_readonly("page_count", &ValidationReport::page_count)
        .def("summary", &ValidationReport::summary)
        .def("__bool__", [](const ValidationReport& r) { return r.ok; });

    py::class_<BoundCertificate>(m, "BoundCertificate")
        .def_readonly("value", &BoundCertificate::value)
        .def_property_readonly(
            "reason", [](const BoundCertificate& c) { return std::string(to_string(c.reason)); })
        .def("verify", &BoundCertificate::verify, py::arg("graph"))
        .def("describe", &BoundCertificate::describe, py::arg("graph"));

    py::class_<SolveResult>(m, "SolveResult")
        .def_readonly("mbt", &SolveResult::mbt)
        .def_readonly("embedding", &SolveResult::embedding)
        .def_readonly("lower", &SolveResult::lower)
        .def_property_readonly("nodes",
                               [](const SolveResult& r) { return r.stats.nodes; });

    py::class_<DispersableInput>(m, "DispersableInput")
        .def_static("make", [](const Graph& h) { return DispersableInput::make(h); },
                    py::arg("graph"))
        .def_readonly("graph", &DispersableInput::graph)
        .def_readonly("embedding", &DispersableInput::embedding)
        .def_property_readonly("max_degree", &DispersableInput::max_degree);

    m.def("path_graph", &path_graph, py::arg("n"));
    m.def("cycle_graph", &cycle_graph, py::arg("n"));
    m.def("star_graph", &star_graph, py::arg("n"));
    m.def("circulant_graph", &circulant_graph, py::arg("n"), py::arg("offsets"));

    m.def("max_degree", [](const Graph& g) { return degree_profile(g).max_degree; },
          py::arg("graph"));
    m.def("is_regular", [](const Graph& g) { return degree_profile(g).regular; },
          py::arg("graph"));
    m.def("is_bipartite", [](const Graph& g) { return bipartition(g).has_value(); },
          py::arg("graph"));
    m.def("is_odd_cycle", &is_odd_cycle, py::arg("graph"));
    m.def("isomorphic", &isomorphic, py::arg("g1"), py::arg("g2"), py::arg("vertex_cap") = 16);
    m.def("cartesian_product", &cartesian_product, py::arg("g1"), py::arg("g2"));

    m.def(
        "transform",
        [](const Graph& g, const std::string& kind) {
            return transform(g, transform_kind_from_string(kind));
        },
        py::arg("graph"), py::arg("kind"));
    m.def(
        "f_sum",
        [](const Graph& g1, const Graph& g2, const std::string& kind) {
            return f_sum(g1, g2, transform_kind_from_string(kind));
        },
        py::arg("g1"), py::arg("g2"), py::arg("kind"));

    m.def("validate", &validate, py::arg("graph"), py::arg("embedding"));
    m.def(
        "chromatic_index",
        [](const Graph& g) { return chromatic_index(g).first; }, py::arg("graph"));
    m.def(
        "mbt_lower_bound", [](const Graph& g) { return mbt_lower_bound(g); },
        py::arg("graph"));
    m.def(
        "classify",
        [](const Graph& g, int mbt) { return std::string(to_string(classify(g, mbt))); },
        py::arg("graph"), py::arg("mbt"));

    m.def(
        "mbt_exact",
        [](const Graph& g, long long budget, int threads) {
            SolveOptions opt;
            opt.node_budget = budget;
            opt.threads = threads;
            return mbt_exact(g, opt);
        },
        py::arg("graph"), py::arg("budget") = 50'000'000LL, py::arg("threads") = 1);
    m.def("heuristic_upper", &heuristic_upper, py::arg("graph"), py::arg("seed") = 1,
          py::arg("tries") = 32);

    m.def("embed_outerplanar",
          [](const Graph& g) { return embed_outerplanar(g); }, py::arg("graph"));
    m.def("embed_q_star", &embed_q_star, py::arg("n"));
    m.def("embed_t_star", &embed_t_star, py::arg("n"));
    m.def(
        "embed_fsum_generic",
        [](const Graph& g, const DispersableInput& h, const std::string& kind,
           const BookEmbedding& base) {
            return embed_fsum_generic(g, h, transform_kind_from_string(kind), base);
        },
        py::arg("g"), py::arg("h"), py::arg("kind"), py::arg("base"));
    m.def("embed_star_q", &embed_star_q, py::arg("n"), py::arg("h"), py::arg("e_page") = 0);
    m.def("embed_path_q", &embed_path_q, py::arg("n"), py::arg("h"), py::arg("e1_page") = 0,
          py::arg("e2_page") = 1);
    m.def("embed_cycle_q_cycle", &embed_cycle_q_cycle, py::arg("p"), py::arg("q"));

    m.def("parse_graph", &parse_graph, py::arg("text"));
    m.def("serialize_graph", &serialize_graph, py::arg("graph"));
    m.def("serialize_embedding", &serialize_embedding, py::arg("graph"), py::arg("embedding"));
    m.def(
        "parse_embedding",
        [](const std::string& text) {
            EmbeddingDocument doc = parse_embedding(text);
            return py::make_tuple(doc.graph, doc.embedding);
        },
        py::arg("text"));
    m.def(
        "render_svg",
        [](const Graph& g, const BookEmbedding& e) { return render_svg(g, e); },
        py::arg("graph"), py::arg("embedding"));
}
