#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "capset/caps.hpp"
#include "capset/gf3.hpp"
#include "capset/linear.hpp"
#include "capset/orbits.hpp"
#include "capset/parallel.hpp"
#include "capset/partitions.hpp"
#include "capset/render.hpp"
#include "capset/verify.hpp"

namespace py = pybind11;
using namespace capset;

namespace {

PointSet set_from_list(const Geometry& g, const std::vector<int>& pts) {
    PointSet s;
    for (int p : pts) {
        if (p < 0 || p >= g.num_points()) throw std::invalid_argument("point outside universe");
        s.set(p);
    }
    return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "maximal caps and cap partitions of AG(n,3), n <= 4";

    m.def("point_from_coords", [](const std::vector<int>& coords) {
        return Geometry::of(static_cast<int>(coords.size())).point_from_coords(coords);
    });
    m.def("coords_of", [](int n, int p) {
        const Geometry& g = Geometry::of(n);
        if (p < 0 || p >= g.num_points()) throw std::invalid_argument("point outside universe");
        auto c = g.coords_of(p);
        return std::vector<int>(c.begin(), c.begin() + n);
    });
    m.def("third_point", [](int n, int p, int q) { return Geometry::of(n).third_point(p, q); });
    m.def("is_line",
          [](int n, int p, int q, int r) { return Geometry::of(n).is_line(p, q, r); });
    m.def("line_count", [](int n) { return Geometry::of(n).num_lines(); });
    m.def("grid_position", [](int n, int p) { return Geometry::of(n).grid_position(p); });

    m.def("is_cap", [](int n, const std::vector<int>& pts) {
        const Geometry& g = Geometry::of(n);
        return is_cap(g, set_from_list(g, pts));
    });
    m.def("is_complete_cap", [](int n, const std::vector<int>& pts) {
        const Geometry& g = Geometry::of(n);
        return is_complete_cap(g, set_from_list(g, pts));
    });
    m.def("max_cap_size", [](int n) { return max_cap_size(Geometry::of(n)); });
    m.def("cap_sum", [](int n, const std::vector<int>& pts) {
        const Geometry& g = Geometry::of(n);
        return cap_sum(g, set_from_list(g, pts));
    });
    m.def("anchor_of", [](int n, const std::vector<int>& pts) {
        const Geometry& g = Geometry::of(n);
        auto d = anchor_of(g, set_from_list(g, pts));
        return py::make_tuple(d.anchor, d.pairs);
    });
    m.def("completion_count", [](int n, const std::vector<int>& pts, int p) {
        const Geometry& g = Geometry::of(n);
        return completion_count(g, set_from_list(g, pts), p);
    });

    m.def("canonical_cap", [] { return canonical_cap(Geometry::of(4)).to_indices(); });
    m.def("anchor0_cap_count",
          [] { return static_cast<long long>(anchor0_caps(Geometry::of(4)).size()); });
    m.def(
        "maximal_caps",
        [](int n, long long limit) {
            auto caps = enumerate_maximal_caps(Geometry::of(n), default_jobs());
            std::vector<std::vector<int>> out;
            for (const auto& c : caps) {
                if (limit >= 0 && static_cast<long long>(out.size()) >= limit) break;
                out.push_back(c.to_indices());
            }
            return out;
        },
        py::arg("n"), py::arg("limit") = -1);

    m.def(
        "stabilizer_order",
        [](int n, const std::vector<int>& pts, const std::string& ambient) {
            const Geometry& g = Geometry::of(n);
            auto elems = setwise_stabilizer(g, set_from_list(g, pts),
                                            ambient == "aff" ? Ambient::Aff : Ambient::GL);
            return static_cast<long long>(elems.size());
        },
        py::arg("n"), py::arg("points"), py::arg("ambient") = "gl");

    m.def(
        "classify",
        [](const std::vector<int>& pts, int jobs) {
            const Geometry& g = Geometry::of(4);
            auto dc = classify_disjoint_caps(g, set_from_list(g, pts), jobs);
            py::dict out;
            out["disjoint"] = dc.caps.size();
            out["one"] = dc.one;
            out["two"] = dc.two;
            out["six"] = dc.six;
            return out;
        },
        py::arg("points"), py::arg("jobs") = 0);

    m.def(
        "partition_census",
        [](const std::vector<int>& pts, int jobs) {
            const Geometry& g = Geometry::of(4);
            if (jobs <= 0) jobs = default_jobs();
            PointSet s = set_from_list(g, pts);
            auto dc = classify_disjoint_caps(g, s, jobs);
            auto sp = partitions_containing(g, s, dc, jobs);
            py::dict out;
            out["partitions"] = sp.parts.size();
            out["e1"] = sp.e1;
            out["e2"] = sp.e2;
            return out;
        },
        py::arg("points"), py::arg("jobs") = 0);

    m.def(
        "render_ascii",
        [](int n, const std::vector<int>& pts, int anchor) {
            const Geometry& g = Geometry::of(n);
            return render_ascii(g, {set_from_list(g, pts)}, anchor);
        },
        py::arg("n"), py::arg("points"), py::arg("anchor") = -1);

    m.def(
        "verify_json",
        [](const std::string& depth, int jobs, uint64_t seed) {
            if (jobs <= 0) jobs = default_jobs();
            auto outcome = verify_all(depth_from_string(depth), jobs, seed);
            return outcome.report.to_json().dump();
        },
        py::arg("depth") = "quick", py::arg("jobs") = 0, py::arg("seed") = 0);

    m.def("gl_order", &gl_order);
    m.def("aff_order", &aff_order);
}
