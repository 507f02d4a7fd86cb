#include "boxball/birational.hpp"
#include "boxball/crystal.hpp"
#include "boxball/kkr.hpp"
#include "boxball/pbbs.hpp"
#include "boxball/tau.hpp"
#include "boxball/theta.hpp"
#include "boxball/troptoda.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace boxball;

namespace {

// Accepts int, str or fractions.Fraction.
Rational to_q(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

RatVec to_qvec(const py::sequence& s) {
  RatVec v;
  for (auto h : s) v.push_back(to_q(h));
  return v;
}

RatMat to_qmat(const py::sequence& s) {
  RatMat m;
  for (auto row : s) m.push_back(to_qvec(row.cast<py::sequence>()));
  return m;
}

py::object from_q(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::str(to_string(q)));
}

py::list from_qvec(const RatVec& v) {
  py::list out;
  for (const auto& q : v) out.append(from_q(q));
  return out;
}

py::object big(const BigInt& b) { return py::int_(py::str(b.str())); }

int capacity(std::optional<int> l) { return l ? *l : kInfinity; }

py::object json_loads(const std::string& s) { return py::module_::import("json").attr("loads")(s); }

std::string json_dumps(const py::object& o) { return py::module_::import("json").attr("dumps")(o).cast<std::string>(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Box-ball systems, rigged configurations and tropical Toda";
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def(
      "comb_r",
      [](int n, const std::string& x, const std::string& y) {
        RResult r = comb_R(CrystalElement::from_word(n, x), CrystalElement::from_word(n, y));
        return py::make_tuple(r.left.word(), r.right.word(), r.energy);
      },
      py::arg("n"), py::arg("x"), py::arg("y"));

  m.def(
      "birational_r",
      [](const py::sequence& x, const py::sequence& y) {
        auto [yt, xt] = birational_R(to_qvec(x), to_qvec(y));
        return py::make_tuple(from_qvec(yt), from_qvec(xt));
      },
      py::arg("x"), py::arg("y"));

  m.def(
      "evolve",
      [](const std::string& state, std::optional<int> l, long steps, int rank) {
        BBSState s = BBSState::parse(state, rank);
        std::vector<BBSState> rows = {s};
        for (long t = 0; t < steps; ++t) rows.push_back(s = evolve(s, capacity(l)).state);
        long from = 0, to = static_cast<long>(state.size()) - 1;
        for (const auto& r : rows)
          if (auto sup = r.support()) {
            from = std::min(from, sup->first);
            to = std::max(to, sup->second);
          }
        std::vector<std::string> out;
        for (const auto& r : rows) out.push_back(r.render(from, to));
        return out;
      },
      py::arg("state"), py::arg("l") = py::none(), py::arg("steps") = 1, py::arg("rank") = 0);

  m.def(
      "energies",
      [](const std::string& state, int l_max, int rank) { return energies(BBSState::parse(state, rank), l_max); },
      py::arg("state"), py::arg("l_max"), py::arg("rank") = 0);

  m.def(
      "scatter",
      [](const std::string& big_label, const std::string& small_label) {
        ScatterResult r = scatter_two(parse_label(big_label), parse_label(small_label));
        return py::make_tuple(format_label(r.small_out), format_label(r.big_out), r.delta);
      },
      py::arg("big"), py::arg("small"));

  m.def(
      "kkr",
      [](const std::string& word, int n) {
        auto w = parse_word(word);
        if (n == 0)
          for (int b : w) n = std::max(n, b - 1);
        return json_loads(rc_to_json(kkr_phi(w, std::max(n, 1))));
      },
      py::arg("word"), py::arg("n") = 0);

  m.def(
      "kkr_inverse", [](const py::object& rc) { return format_word(kkr_phi_inv(rc_from_json(json_dumps(rc)))); },
      py::arg("rc"));

  m.def(
      "tau_table",
      [](const std::string& word, int n) {
        auto w = parse_word(word);
        if (n == 0)
          for (int b : w) n = std::max(n, b - 1);
        return tau_table(StringSet::from_rc(kkr_phi(w, std::max(n, 1)))).values;
      },
      py::arg("word"), py::arg("n") = 0);

  m.def(
      "theta",
      [](const py::sequence& Z, const py::sequence& Xi) { return from_q(theta(to_qvec(Z), to_qmat(Xi))); },
      py::arg("z"), py::arg("xi"));

  m.def(
      "evolve_periodic",
      [](const std::string& state, std::optional<int> l) {
        auto r = evolve_periodic(PeriodicState::parse(state), capacity(l));
        return py::make_tuple(r.state.str(), r.energy);
      },
      py::arg("state"), py::arg("l") = py::none());

  m.def(
      "action", [](const std::string& state) { return action_variable(PeriodicState::parse(state)).mu; },
      py::arg("state"));

  m.def(
      "angle", [](const std::string& state) { return direct_scattering(PeriodicState::parse(state)).J; },
      py::arg("state"));

  m.def(
      "inverse_scattering",
      [](long L, std::vector<long> mu, std::vector<IntVec> J) {
        return inverse_scattering(AngleVariable{ActionVariable::from_partition(std::move(mu), L), std::move(J)}).str();
      },
      py::arg("L"), py::arg("mu"), py::arg("J"));

  m.def(
      "fundamental_period",
      [](const std::string& state, std::optional<int> l) {
        return fundamental_period(PeriodicState::parse(state), capacity(l));
      },
      py::arg("state"), py::arg("l") = py::none());

  m.def(
      "isolevel_cardinality",
      [](long L, std::vector<long> mu) { return big(isolevel_cardinality(ActionVariable::from_partition(std::move(mu), L))); },
      py::arg("L"), py::arg("mu"));

  m.def(
      "torus_decomposition",
      [](long L, std::vector<long> mu) {
        py::list out;
        for (const auto& c : torus_decomposition(ActionVariable::from_partition(std::move(mu), L)))
          out.append(py::make_tuple(c.gamma, big(c.multiplicity), from_q(c.det_F_gamma)));
        return out;
      },
      py::arg("L"), py::arg("mu"));

  m.def(
      "toda_evolve",
      [](const py::sequence& s) { return from_qvec(evolve_toda(TodaState::from_interleaved(to_qvec(s))).interleaved()); },
      py::arg("state"));

  m.def(
      "toda_conserved",
      [](const py::sequence& s) { return from_qvec(conserved_all(TodaState::from_interleaved(to_qvec(s)))); },
      py::arg("state"));

  m.def(
      "spectral_data",
      [](const py::sequence& C) {
        SpectralData sd = spectral_data(to_qvec(C));
        py::list omega;
        for (const auto& row : sd.Omega) omega.append(from_qvec(row));
        py::dict d;
        d["L"] = from_q(sd.L);
        d["lambda"] = from_qvec(sd.lambda);
        d["eta"] = from_qvec(sd.eta);
        d["omega"] = omega;
        d["smooth"] = sd.smooth;
        return d;
      },
      py::arg("C"));

  m.def(
      "embed",
      [](const std::string& state, long leftmost) {
        return from_qvec(embed_pbbs(PeriodicState::parse(state), leftmost).interleaved());
      },
      py::arg("state"), py::arg("leftmost") = 0);
}
