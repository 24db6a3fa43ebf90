#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "primegraph/cli.hpp"
#include "primegraph/embed.hpp"
#include "primegraph/graphs.hpp"
#include "primegraph/verify.hpp"

namespace py = pybind11;
using namespace primegraph;

// Python int <-> mpz_class through hexadecimal text; ints of any size.
namespace pybind11::detail {
template <>
struct type_caster<mpz_class> {
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        const std::string hex = py::str(py::module_::import("builtins").attr("hex")(src));
        const bool negative = hex.front() == '-';
        value.set_str(hex.substr(negative ? 3 : 2), 16);
        if (negative) value = -value;
        return true;
    }

    static handle cast(const mpz_class& v, return_value_policy, handle) {
        return PyLong_FromString(v.get_str(16).c_str(), nullptr, 16);
    }
};
}  // namespace pybind11::detail

namespace {

AmbientGraph make_graph(const std::string& target, const BigInt& n, const std::optional<BigInt>& q) {
    if (cli::parse_target(target) == Target::PrimeSum) return AmbientGraph::prime_sum(n);
    if (!q) throw InputError("the coprime target needs q");
    return AmbientGraph::coprime_sum(n, *q);
}

py::dict embedding_dict(const Embedding& e) {
    py::dict out;
    out["target"] = to_string(e.target);
    out["d"] = e.encoding.d;
    out["q"] = e.residues.q;
    out["moduli"] = e.residues.moduli;
    out["codes"] = e.encoding.codes;
    out["residues"] = e.residues.residues;
    out["labels"] = e.labels;
    out["max_label"] = e.max_label;
    out["n"] = e.host_n;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Induced tree embeddings in prime-sum and coprime-sum graphs";
    m.attr("__version__") = cli::kToolVersion;

    auto error = py::register_exception<Error>(m, "Error");
    py::register_exception<InputError>(m, "InputError", error.ptr());
    py::register_exception<SearchBudgetExceeded>(m, "SearchBudgetExceeded", error.ptr());
    py::register_exception<CapExceeded>(m, "CapExceeded", error.ptr());

    py::class_<Tree>(m, "Tree")
        .def(py::init<int, std::vector<Edge>>(), py::arg("m"), py::arg("edges"))
        .def_static("path", &Tree::path)
        .def_static("star", &Tree::star)
        .def_property_readonly("size", &Tree::size)
        .def_property_readonly("edges", &Tree::edges)
        .def("neighbors", &Tree::neighbors)
        .def("adjacent", &Tree::adjacent)
        .def("__len__", &Tree::size)
        .def("__eq__", [](const Tree& a, const Tree& b) { return a == b; })
        .def("__str__", &serialize_tree)
        .def("__repr__", [](const Tree& t) { return "Tree(" + std::to_string(t.size()) + ", ...)"; });

    m.def("parse_tree", [](const std::string& text) { return parse_tree(text); }, py::arg("text"));
    m.def("serialize_tree", &serialize_tree);
    m.def("random_tree", &random_tree, py::arg("m"), py::arg("seed") = 0);
    m.def("enumerate_free_trees", &enumerate_free_trees, py::arg("m"), py::arg("cap") = kDefaultEnumerationCap);
    m.def("canonical_form", &canonical_form);

    m.def("is_prime", [](const BigInt& n) { return is_prime(n); });
    m.def(
        "crt_solve",
        [](const std::vector<std::pair<BigInt, BigInt>>& system) {
            std::vector<Congruence> c;
            for (const auto& [r, q] : system) c.push_back({r, q});
            return crt_solve(c);
        },
        py::arg("system"));
    m.def(
        "next_prime_in_ap",
        [](const BigInt& a, const BigInt& q, const BigInt& x_min) {
            const auto found = next_prime_in_ap(a, q, x_min);
            return py::make_tuple(found.prime, found.candidates);
        },
        py::arg("a"), py::arg("q"), py::arg("x_min"));

    m.def("encode_tree", [](const Tree& t) {
        const Encoding e = encode_tree(t);
        return py::make_tuple(e.d, e.codes);
    });
    m.def(
        "embed",
        [](const Tree& t, const std::string& target, const BigInt& start_multiplier, Vertex root) {
            if (cli::parse_target(target) == Target::CoprimeSum) return embedding_dict(embed_coprime(t));
            EmbedConfig cfg;
            cfg.start_multiplier = start_multiplier;
            cfg.root = root;
            return embedding_dict(embed_prime(t, cfg));
        },
        py::arg("tree"), py::arg("target") = "prime", py::arg("start_multiplier") = BigInt(1), py::arg("root") = 1);
    m.def(
        "verify",
        [](const Tree& t, const std::vector<BigInt>& labels, const std::string& target, std::optional<BigInt> n,
           std::optional<BigInt> q) {
            BigInt host = n.value_or(BigInt(0));
            if (!n) {
                for (const auto& x : labels) host = std::max(host, x);
            }
            const auto report = verify_induced(t, labels, make_graph(target, host, q));
            py::list violations;
            for (const auto& v : report.violations) {
                py::dict d;
                d["kind"] = to_string(v.kind);
                d["x"] = v.x;
                d["y"] = v.y;
                d["sum"] = v.sum;
                d["witness"] = v.witness;
                violations.append(d);
            }
            return py::make_tuple(report.ok, violations);
        },
        py::arg("tree"), py::arg("labels"), py::arg("target") = "prime", py::arg("n") = py::none(),
        py::arg("q") = py::none());

    m.def(
        "is_edge",
        [](const BigInt& i, const BigInt& j, const BigInt& n, const std::string& target, std::optional<BigInt> q) {
            return is_edge(make_graph(target, n, q), i, j);
        },
        py::arg("i"), py::arg("j"), py::arg("n"), py::arg("target") = "prime", py::arg("q") = py::none());
    m.def(
        "find_induced",
        [](const Tree& t, std::uint64_t n) { return find_induced(t, AmbientGraph::prime_sum(to_big(n))); },
        py::arg("tree"), py::arg("n"));
    m.def("max_universal_m", [](std::uint64_t n) { return max_universal_m(n); }, py::arg("n"));
    m.def(
        "average_degree",
        [](const BigInt& n, const std::string& target, std::optional<BigInt> q) {
            const auto stats = average_degree(make_graph(target, n, q));
            return py::make_tuple(stats.edge_count, stats.average());
        },
        py::arg("n"), py::arg("target") = "prime", py::arg("q") = py::none());
    m.def("check_bipartite_parity", &check_bipartite_parity, py::arg("n"));
    m.def("expected_induced_path_count", [](std::uint64_t n, double p, int k) {
        const auto e = expected_induced_path_count(n, p, k);
        return py::make_tuple(e.exact, e.coarse_bound);
    });

    // Same documents the command-line tool prints, as JSON text.
    m.def(
        "embed_json",
        [](const std::string& tree_text, const std::string& target) {
            cli::EmbedOptions opts;
            opts.tree = {tree_text, "<python>"};
            opts.target = cli::parse_target(target);
            const auto result = cli::cmd_embed(opts);
            if (result.document.is_null()) throw InputError(result.diagnostic);
            return result.document.dump();
        },
        py::arg("tree_text"), py::arg("target") = "prime");
}
