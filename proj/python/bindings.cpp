#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "solenoid/cli.hpp"
#include "solenoid/dynamics.hpp"
#include "solenoid/error.hpp"
#include "solenoid/hull.hpp"
#include "solenoid/induced.hpp"
#include "solenoid/io.hpp"

namespace py = pybind11;
using namespace solenoid;

namespace {

// Rationals cross the boundary as "p/q" strings; ints are accepted on input.
Rational to_q(const py::handle& h) {
  if (py::isinstance<py::str>(h)) return parse_rational(h.cast<std::string>());
  if (py::isinstance<py::int_>(h)) return parse_rational(py::str(h).cast<std::string>());
  throw py::type_error("expected a rational as str ('p/q') or int");
}

Integer to_z(const py::handle& h) {
  Rational q = to_q(h);
  if (q.get_den() != 1) throw py::value_error("expected an integer");
  return q.get_num();
}

std::vector<Knot> to_knots(const std::vector<std::pair<py::object, py::object>>& pairs) {
  std::vector<Knot> out;
  for (const auto& [x, y] : pairs) out.push_back({to_q(x), to_q(y)});
  return out;
}

py::dict enclosure_dict(const RotationEnclosure& e) {
  py::dict d;
  d["lo"] = to_string(e.lo);
  d["hi"] = to_string(e.hi);
  d["exact"] = e.exact ? py::object(py::str(to_string(*e.exact))) : py::none();
  d["witness"] = e.witness ? py::object(py::str(to_string(*e.witness))) : py::none();
  d["iterations"] = e.iterations;
  d["certified"] = e.certified;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact dynamics of induced homeomorphisms of the universal solenoid";

  static py::exception<Error> error(m, "SolenoidError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error(e.what());
    }
  });

  m.attr("DEFAULT_DEPTH") = kDefaultDepth;

  py::class_<ProfiniteInt>(m, "ProfiniteInt")
      .def(py::init<std::size_t>(), py::arg("depth") = kDefaultDepth)
      .def_static("embed", [](const py::object& t, std::size_t depth) { return embed_int(to_z(t), depth); },
                  py::arg("t"), py::arg("depth") = kDefaultDepth)
      .def_static("parse", [](const std::string& s) { return ProfiniteInt::parse(s); })
      .def_property_readonly("depth", &ProfiniteInt::depth)
      .def_property_readonly("residues",
                             [](const ProfiniteInt& a) {
                               std::vector<std::string> out;
                               for (const Integer& r : a.residues()) out.push_back(r.get_str());
                               return out;
                             })
      .def("residue", [](const ProfiniteInt& a, const py::object& n) { return a.residue(to_z(n)).get_str(); })
      .def("__add__", [](const ProfiniteInt& a, const ProfiniteInt& b) { return a + b; })
      .def("__sub__", [](const ProfiniteInt& a, const ProfiniteInt& b) { return a - b; })
      .def("__neg__", [](const ProfiniteInt& a) { return -a; })
      .def("__eq__", [](const ProfiniteInt& a, const ProfiniteInt& b) { return a == b; })
      .def("__repr__", &ProfiniteInt::to_string);
  m.def("pf_dist", [](const ProfiniteInt& a, const ProfiniteInt& b) { return to_string(pf_dist(a, b)); });

  py::class_<SolenoidPoint>(m, "SolenoidPoint")
      .def(py::init([](const py::object& x, const ProfiniteInt& k) { return canonicalize<Rational>(to_q(x), k); }),
           py::arg("x"), py::arg("k"))
      .def_static("zero", &SolenoidPoint::zero, py::arg("depth") = kDefaultDepth)
      .def_static("parse", [](const std::string& s) { return parse_point(s); })
      .def_property_readonly("leaf", [](const SolenoidPoint& s) { return to_string(s.leaf()); })
      .def_property_readonly("fiber", &SolenoidPoint::fiber)
      .def_property_readonly("depth", &SolenoidPoint::depth)
      .def("__add__", [](const SolenoidPoint& a, const SolenoidPoint& b) { return sol_add(a, b); })
      .def("__sub__", [](const SolenoidPoint& a, const SolenoidPoint& b) { return sol_sub(a, b); })
      .def("__neg__", [](const SolenoidPoint& a) { return sol_neg(a); })
      .def("__eq__", [](const SolenoidPoint& a, const SolenoidPoint& b) { return a == b; })
      .def("__repr__", [](const SolenoidPoint& s) { return to_literal(s); });
  m.def("sigma", [](const py::object& t, std::size_t depth) { return sigma(to_q(t), depth); },
        py::arg("t"), py::arg("depth") = kDefaultDepth);
  m.def("project", [](const SolenoidPoint& s, const py::object& n) { return to_string(project(s, to_z(n)).value); });
  m.def("sol_dist", [](const SolenoidPoint& a, const SolenoidPoint& b) { return to_string(sol_dist(a, b)); });

  py::class_<CircleLift>(m, "CircleLift")
      .def_property_readonly("degree", &CircleLift::degree)
      .def_property_readonly("is_pl", &CircleLift::is_pl)
      .def("eval", [](const CircleLift& f, const py::object& x) {
        if (py::isinstance<py::float_>(x)) return py::object(py::float_(f.eval(x.cast<double>())));
        return py::object(py::str(to_string(f.eval(to_q(x)))));
      })
      .def_property_readonly("knots",
                             [](const CircleLift& f) {
                               std::vector<std::pair<std::string, std::string>> out;
                               for (const Knot& k : f.pl().knots()) out.emplace_back(to_string(k.x), to_string(k.y));
                               return out;
                             })
      .def("to_json", [](const CircleLift& f) { return io::map_to_json(f).dump(); });
  m.def("pl_new", [](std::int64_t n, const std::vector<std::pair<py::object, py::object>>& pts) {
    return CircleLift(pl_new(n, to_knots(pts)));
  });
  m.def("rotation", [](const py::object& a, std::int64_t n) { return CircleLift(rotation(to_q(a), n)); },
        py::arg("alpha"), py::arg("degree") = 1);
  m.def("analytic", [](std::int64_t n, double alpha, const std::vector<std::pair<double, double>>& terms) {
    std::vector<AnalyticTerm> t;
    for (const auto& [a, p] : terms) t.push_back({a, p});
    return CircleLift(AnalyticLift(n, alpha, t));
  }, py::arg("degree"), py::arg("alpha"), py::arg("terms") = std::vector<std::pair<double, double>>{});
  m.def("parse_map", [](const std::string& json) { return io::parse_map(io::Json::parse(json)); });
  m.def("lift_compose", [](const CircleLift& f, const CircleLift& g) { return CircleLift(lift_compose(f, g)); });
  m.def("lift_inverse", [](const CircleLift& f) { return CircleLift(lift_inverse(f)); });
  m.def("lift_iterate_eval", [](const CircleLift& f, const py::object& x, std::int64_t q) {
    return to_string(lift_iterate_eval(f, to_q(x), q));
  });
  m.def("minimal_period", [](const CircleLift& f) { return minimal_period(displacement_of(f)); });
  m.def("embed_degree", [](const CircleLift& f, std::int64_t n) { return embed_degree(f, n); });

  py::class_<InducedHomeo>(m, "InducedHomeo")
      .def_property_readonly("degree", &InducedHomeo::degree)
      .def_property_readonly("offset", [](const InducedHomeo& f) { return f.offset().get_str(); })
      .def_property_readonly("base", &InducedHomeo::base)
      .def("leaf_eval", [](const InducedHomeo& f, const ProfiniteInt& k, const py::object& x) {
        return to_string(f.leaf_eval(k, to_q(x)));
      })
      .def("__call__", [](const InducedHomeo& f, const SolenoidPoint& s) { return apply(f, s); })
      .def("to_json", [](const InducedHomeo& f) { return io::homeo_to_json(f).dump(); });
  m.def("induce", [](const CircleLift& f, const py::object& offset) { return induce(f, to_z(offset)); },
        py::arg("lift"), py::arg("offset") = 0);
  m.def("parse_homeo", [](const std::string& json) { return io::parse_homeo(io::Json::parse(json)); });
  m.def("apply", [](const InducedHomeo& f, const SolenoidPoint& s) { return apply(f, s); });
  m.def("apply_iterate", &apply_iterate);
  m.def("compose_induced", &compose_induced);
  m.def("invert_induced", &invert_induced);
  m.def("circle_factor", [](const InducedHomeo& f, std::int64_t d) -> std::optional<CircleLift> {
    auto fd = circle_factor(f, d);
    if (!fd) return std::nullopt;
    return CircleLift(*fd);
  });

  m.def("translation_enclosure", [](const CircleLift& f, std::int64_t q, const py::object& x0) {
    return enclosure_dict(translation_enclosure(f, q, to_q(x0)));
  }, py::arg("lift"), py::arg("q"), py::arg("x0") = 0);
  m.def("certify_rotation", [](const CircleLift& f, std::int64_t q, std::int64_t max_den) {
    return enclosure_dict(certify_rotation(f, q, 0, max_den));
  }, py::arg("lift"), py::arg("q"), py::arg("max_denominator") = 64);
  m.def("rho_of_induced", [](const InducedHomeo& f, std::int64_t q) { return enclosure_dict(rho_of_induced(f, q)); });
  m.def("certify_rational", [](const CircleLift& f, const py::object& p, std::int64_t q) -> std::optional<std::string> {
    auto x = certify_rational(f.pl(), to_z(p), q);
    if (!x) return std::nullopt;
    return to_string(*x);
  });
  m.def("find_fiber_periodic", [](const InducedHomeo& f, const py::object& p, std::int64_t q, std::size_t depth) {
    return find_fiber_periodic(f, to_z(p), q, depth);
  }, py::arg("f"), py::arg("p"), py::arg("q"), py::arg("depth") = kDefaultDepth);
  m.def("classify_orbit", [](const InducedHomeo& f, const SolenoidPoint& s, const py::object& p, std::int64_t q,
                             std::int64_t max_iters, const py::object& tol) {
    OrbitClassification c = classify_orbit(f, s, to_z(p), q, max_iters, to_q(tol), true);
    py::dict d;
    py::list distances;
    for (const OrbitSample& o : c.trace) distances.append(to_string(o.distance));
    d["distances"] = distances;
    if (const auto* a = std::get_if<AsymptoticToFiber>(&c.verdict)) {
      d["verdict"] = "AsymptoticToFiber";
      d["target"] = a->target;
      d["distance"] = to_string(a->distance);
      d["iterations"] = a->iterations;
    } else if (const auto* fp = std::get_if<FiberPeriodic>(&c.verdict)) {
      d["verdict"] = "FiberPeriodic";
      d["point"] = fp->point;
    } else {
      d["verdict"] = "Inconclusive";
      d["reason"] = std::get<Inconclusive>(c.verdict).reason;
    }
    return d;
  }, py::arg("f"), py::arg("s"), py::arg("p"), py::arg("q"), py::arg("max_iters"), py::arg("tol"));

  m.def("hull_period", [](const InducedHomeo& f) { return Hull::of_induced(f)->period(); });
  m.def("K_map", [](const SolenoidPoint& s, const InducedHomeo& f) {
    return to_string(K_map(s, Hull::of_induced(f)).parameter());
  });
  m.def("check_semiconjugacy", [](const InducedHomeo& f, const std::vector<SolenoidPoint>& pts) {
    SemiconjugacyReport r = check_semiconjugacy(f, pts);
    py::dict d;
    d["max_error"] = to_string(r.max_error);
    d["exact"] = r.exact;
    d["samples"] = r.samples;
    d["period"] = std::to_string(r.period);
    return d;
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "Runs the command-line front end in process; returns (exit_code, stdout, stderr).");
}
