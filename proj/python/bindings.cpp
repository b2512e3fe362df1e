#include <cstdint>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "elliptic/asymptotics.hpp"
#include "elliptic/combinatorics.hpp"
#include "elliptic/errors.hpp"
#include "elliptic/moments.hpp"
#include "elliptic/montecarlo.hpp"
#include "elliptic/positional.hpp"
#include "elliptic/version.hpp"

namespace py = pybind11;
using namespace elliptic;

namespace {

py::int_ to_py(const BigInt& v) {
  std::string s = v.str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

BigInt from_py(const py::handle& obj) {
  return BigInt(py::str(py::int_(py::reinterpret_borrow<py::object>(obj))).cast<std::string>());
}

py::dict to_py(const MomentPolynomial& p) {
  py::dict d;
  for (const auto& [e, c] : p.terms()) d[py::int_(e)] = to_py(c);
  return d;
}

MomentPolynomial poly_from_py(const py::dict& d) {
  MomentPolynomial p;
  for (auto [k, v] : d) p.add_term(k.cast<std::size_t>(), from_py(v));
  return p;
}

Ensemble parse_ensemble(const std::string& name) {
  if (name == "goe") return Ensemble::goe;
  if (name == "anti_goe") return Ensemble::anti_goe;
  if (name == "ginibre") return Ensemble::ginibre;
  throw py::value_error("ensemble must be 'goe', 'anti_goe' or 'ginibre'");
}

Parity parse_parity(const std::string& name) {
  if (name == "even") return Parity::even;
  if (name == "odd") return Parity::odd;
  throw py::value_error("parity must be 'even' or 'odd'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Mixed moments of Gaussian elliptic matrices";
  m.attr("__version__") = version();

  static py::exception<CapacityError> capacity(m, "CapacityError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const CapacityError& e) {
      PyErr_SetString(capacity.ptr(), e.what());
    }
  });

  m.def("catalan", [](std::size_t n) { return to_py(catalan(n)); }, py::arg("n"));
  m.def("binomial", [](std::size_t n, std::size_t k) { return to_py(binomial(n, k)); }, py::arg("n"), py::arg("k"));
  m.def("catalan_triangle", [](std::size_t n, std::size_t k) { return to_py(catalan_triangle(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("ballot_b", [](std::size_t k, std::size_t t) { return to_py(ballot_b(k, t)); }, py::arg("k"), py::arg("t"));
  m.def("ballot_b_recursive", [](std::size_t k, std::size_t t) { return to_py(ballot_b_recursive(k, t)); },
        py::arg("k"), py::arg("t"));
  m.def(
      "rank_cardinality_closed",
      [](std::size_t u, std::size_t v, std::size_t k, const std::string& parity) {
        return to_py(rank_cardinality_closed(u, v, k, parse_parity(parity)));
      },
      py::arg("u"), py::arg("v"), py::arg("k"), py::arg("parity") = "even");
  m.def(
      "rank_census",
      [](const std::string& word) {
        py::dict d;
        for (const auto& [l, c] : rank_census(Word::parse(word))) d[py::int_(l)] = to_py(c);
        return d;
      },
      py::arg("word"), "Number of non-crossing pairings of the word by count of mixed pairs.");
  m.def(
      "nc_pairings",
      [](std::size_t length) {
        py::list out;
        for (const auto& p : enumerate_nc_pairings(length)) {
          py::list pairs;
          for (const auto& pr : p.pairs()) pairs.append(py::make_tuple(pr.lo, pr.hi));
          out.append(pairs);
        }
        return out;
      },
      py::arg("length"));

  m.def("word_moment", [](const std::string& word) { return to_py(word_moment_oracle(Word::parse(word))); },
        py::arg("word"), "Exhaustive sum over NC2 of rho^sigma; exponent -> coefficient.");
  m.def("block_moment", [](std::size_t n, std::size_t mm) { return to_py(block_moment(n, mm)); }, py::arg("n"),
        py::arg("m"));
  m.def(
      "special_value",
      [](std::size_t n, std::size_t mm, const std::string& which) {
        return to_py(special_value(n, mm, parse_ensemble(which)));
      },
      py::arg("n"), py::arg("m"), py::arg("which"));
  m.def(
      "evaluate",
      [](const py::dict& poly, const py::object& rho) -> py::object {
        MomentPolynomial p = poly_from_py(poly);
        if (py::hasattr(rho, "numerator") && py::hasattr(rho, "denominator") && !py::isinstance<py::float_>(rho)) {
          Rational r(from_py(rho.attr("numerator")), from_py(rho.attr("denominator")));
          Rational v = evaluate_exact(p, r);
          py::object fraction = py::module_::import("fractions").attr("Fraction");
          return fraction(to_py(numerator(v)), to_py(denominator(v)));
        }
        return py::float_(evaluate(p, rho.cast<double>()));
      },
      py::arg("poly"), py::arg("rho"),
      "Float evaluation, or exact when rho is an int or fractions.Fraction.");

  m.def(
      "canonicalize",
      [](std::size_t M, std::vector<std::size_t> positions) {
        CanonicalForm f = canonicalize(M, std::move(positions));
        py::list names;
        for (auto t : f.transforms) names.append(t == Transform::letter_swap ? "letter_swap" : "rotate");
        return py::make_tuple(f.tuple.positions, names);
      },
      py::arg("M"), py::arg("positions"));
  m.def(
      "word_from_positions",
      [](std::size_t M, std::vector<std::size_t> positions) {
        PositionTuple t{M, std::move(positions)};
        t.validate();
        return word_from_positions(t).to_string();
      },
      py::arg("M"), py::arg("positions"));
  m.def(
      "positional_moment",
      [](std::size_t M, std::vector<std::size_t> positions) {
        return to_py(positional_moment(PositionTuple{M, std::move(positions)}));
      },
      py::arg("M"), py::arg("positions"));
  m.def(
      "ginibre_moment",
      [](std::size_t M, std::vector<std::size_t> positions) {
        return to_py(ginibre_moment(PositionTuple{M, std::move(positions)}));
      },
      py::arg("M"), py::arg("positions"));
  m.def("pair_block_cardinality",
        [](std::size_t e, std::size_t l, std::size_t M) { return to_py(pair_block_cardinality(e, l, M)); },
        py::arg("e"), py::arg("ell"), py::arg("M"));
  m.def(
      "pair_intersection_cardinality",
      [](std::size_t e1, std::size_t oa, std::size_t e2, std::size_t ob, std::size_t M) {
        return to_py(pair_intersection_cardinality(e1, oa, e2, ob, M));
      },
      py::arg("e1"), py::arg("o_a"), py::arg("e2"), py::arg("o_b"), py::arg("M"));

  m.def("catalan_gf", &catalan_gf, py::arg("z"));
  m.def("saddle_point", &saddle_point, py::arg("q"), py::arg("x"));
  m.def("saddle_point_radical", &saddle_point_radical, py::arg("q"), py::arg("x"));
  m.def("rate_function", &rate_function, py::arg("q"), py::arg("x"), py::arg("y"));
  m.def("h_prefactor", &h_prefactor, py::arg("q"), py::arg("y"));
  m.def("psi_prefactor", &psi_prefactor, py::arg("q"), py::arg("rho"));
  m.def("phi_rate", &phi_rate, py::arg("q"), py::arg("rho"));
  m.def("phi_hat", &phi_hat, py::arg("q"), py::arg("rho"));
  m.def("rescaled_exact", &rescaled_exact, py::arg("n"), py::arg("m"), py::arg("rho"));
  m.def("rescaled_estimate", &rescaled_estimate, py::arg("u"), py::arg("v"), py::arg("rho"));
  m.def("rescaled_plateau", &rescaled_plateau, py::arg("q"));

  m.def(
      "estimate_word_moment",
      [](const std::string& word, double rho, std::size_t N, std::size_t samples, std::uint64_t seed,
         std::size_t threads) {
        MonteCarloConfig config;
        config.threads = threads;
        EstimateResult r;
        {
          py::gil_scoped_release release;
          r = estimate_word_moment(Word::parse(word), rho, N, samples, seed, config);
        }
        py::dict d;
        d["mean"] = r.mean;
        d["stderr"] = r.std_error;
        d["imag_mean"] = r.imag_mean;
        d["imag_stderr"] = r.imag_std_error;
        d["samples"] = r.samples;
        d["seed"] = r.seed;
        return d;
      },
      py::arg("word"), py::arg("rho"), py::arg("N"), py::arg("samples"), py::arg("seed"), py::arg("threads") = 0);
}
