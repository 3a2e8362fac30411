#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "bps/adversary.hpp"
#include "bps/analysis.hpp"
#include "bps/error.hpp"
#include "bps/primes.hpp"
#include "bps/reproduce.hpp"
#include "bps/sequences.hpp"

namespace py = pybind11;

namespace {

py::int_ to_python_int(const bps::BigInt& value) {
  return py::int_(py::reinterpret_steal<py::object>(
      PyLong_FromString(value.str().c_str(), nullptr, 10)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Binary primes sequences: generation, hardening and correlation analysis";

  static py::exception<bps::Error> error(m, "BpsError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const bps::Error& e) {
      const std::string msg = std::string(bps::to_string(e.kind())) + ": " + e.what();
      PyErr_SetString(error.ptr(), msg.c_str());
    }
  });

  py::class_<bps::PrimeTable>(m, "PrimeTable")
      .def(py::init<std::int64_t>(), py::arg("limit"))
      .def_property_readonly("limit", &bps::PrimeTable::limit)
      .def("is_prime", &bps::PrimeTable::is_prime, py::arg("k"))
      .def("primes_in", &bps::PrimeTable::primes_in, py::arg("lo"), py::arg("hi"));

  m.def("sieve_primes", &bps::sieve_primes, py::arg("limit"));
  m.def("prime_indicator", &bps::prime_indicator, py::arg("k"), py::arg("table"));
  m.def("count_primes", &bps::count_primes, py::arg("n"), py::arg("table"));
  m.def("pnt_estimate", &bps::pnt_estimate, py::arg("n"));
  m.def("recommended_shift_count", &bps::recommended_shift_count, py::arg("n"));

  py::class_<bps::BitSequence>(m, "BitSequence")
      .def(py::init([](const std::string& bits, std::string label) {
             return bps::BitSequence::from_string(bits, std::move(label));
           }),
           py::arg("bits"), py::arg("label") = "")
      .def_property_readonly("bits", [](const bps::BitSequence& s) {
        return std::vector<int>(s.bits().begin(), s.bits().end());
      })
      .def_property_readonly("label", &bps::BitSequence::label)
      .def("ones", &bps::BitSequence::ones)
      .def("__len__", &bps::BitSequence::size)
      .def("__str__", &bps::BitSequence::to_string)
      .def("__eq__", [](const bps::BitSequence& a, const bps::BitSequence& b) { return a == b; });

  py::class_<bps::ShiftSet>(m, "ShiftSet")
      .def(py::init<std::vector<std::int64_t>>(), py::arg("shifts"))
      .def_property_readonly("values", &bps::ShiftSet::values)
      .def_property_readonly("added_count", &bps::ShiftSet::added_count)
      .def("__str__", &bps::ShiftSet::to_string)
      .def("__eq__", [](const bps::ShiftSet& a, const bps::ShiftSet& b) { return a == b; });

  m.def(
      "d_sequence",
      [](std::int64_t q, std::size_t length, const bps::PrimeTable& table) {
        return bps::d_sequence({q, length}, table);
      },
      py::arg("q"), py::arg("length"), py::arg("table"));
  m.def("d_sequence_period", &bps::d_sequence_period, py::arg("q"));
  m.def("binary_primes_sequence", &bps::binary_primes_sequence, py::arg("n"),
        py::arg("shifts"), py::arg("table"));
  m.def("harden", &bps::harden, py::arg("pn"), py::arg("bps"));
  m.def(
      "select_shifts",
      [](std::int64_t n, std::int64_t count, const std::string& strategy,
         std::optional<std::uint64_t> seed, const std::vector<std::int64_t>& values) {
        const auto parsed = bps::parse_shift_strategy(strategy);
        if (!parsed) throw py::value_error("unknown strategy: " + strategy);
        return bps::select_shifts(n, count, *parsed, seed, values);
      },
      py::arg("n"), py::arg("count"), py::arg("strategy"), py::arg("seed") = py::none(),
      py::arg("values") = std::vector<std::int64_t>{});

  py::enum_<bps::SymbolMapping>(m, "SymbolMapping")
      .value("RAW01", bps::SymbolMapping::Raw01)
      .value("BIPOLAR", bps::SymbolMapping::Bipolar);
  py::enum_<bps::Normalization>(m, "Normalization")
      .value("BY_N", bps::Normalization::ByN)
      .value("BY_PEAK", bps::Normalization::ByPeak);

  py::class_<bps::CorrelationConvention>(m, "CorrelationConvention")
      .def(py::init([](bps::SymbolMapping mapping, bps::Normalization norm) {
             return bps::CorrelationConvention{mapping, norm};
           }),
           py::arg("mapping") = bps::SymbolMapping::Bipolar,
           py::arg("normalization") = bps::Normalization::ByN)
      .def_readonly("mapping", &bps::CorrelationConvention::mapping)
      .def_readonly("normalization", &bps::CorrelationConvention::normalization)
      .def("__str__", &bps::CorrelationConvention::to_string);

  py::class_<bps::CorrelationSeries>(m, "CorrelationSeries")
      .def_readonly("values", &bps::CorrelationSeries::values)
      .def_readonly("convention", &bps::CorrelationSeries::convention)
      .def_readonly("n", &bps::CorrelationSeries::n);

  py::class_<bps::AnalysisReport>(m, "AnalysisReport")
      .def_readonly("randomness", &bps::AnalysisReport::randomness)
      .def_readonly("max_offpeak", &bps::AnalysisReport::max_offpeak)
      .def_readonly("mean_offpeak", &bps::AnalysisReport::mean_offpeak)
      .def_readonly("ones_fraction", &bps::AnalysisReport::ones_fraction)
      .def_readonly("convention", &bps::AnalysisReport::convention)
      .def_readonly("sequence_label", &bps::AnalysisReport::sequence_label);

  m.def("autocorrelation", &bps::autocorrelation, py::arg("seq"),
        py::arg("convention") = bps::CorrelationConvention{});
  m.def("randomness_measure", &bps::randomness_measure, py::arg("corr"));
  m.def(
      "off_peak_stats",
      [](const bps::CorrelationSeries& c) {
        const auto s = bps::off_peak_stats(c);
        return py::make_tuple(s.max_abs, s.mean_abs);
      },
      py::arg("corr"));
  m.def("balance", &bps::balance, py::arg("seq"));
  m.def("analyze", &bps::analyze, py::arg("seq"),
        py::arg("convention") = bps::CorrelationConvention{});

  m.def("search_space_log10_paper", &bps::search_space_log10_paper, py::arg("n"));
  m.def("search_space_log10_consistent", &bps::search_space_log10_consistent, py::arg("n"));
  m.def(
      "exact_hypothesis_count",
      [](std::int64_t n, std::int64_t l_max, const bps::PrimeTable& table) {
        return to_python_int(bps::exact_hypothesis_count(n, l_max, table));
      },
      py::arg("n"), py::arg("l_max"), py::arg("table"));
  m.def(
      "brute_force_attack",
      [](const bps::BitSequence& observed, std::int64_t l_max, const bps::PrimeTable& table) {
        const auto result = bps::brute_force_attack(observed, l_max, table);
        py::list hyps;
        for (const auto& h : result.consistent_hypotheses) {
          hyps.append(py::make_tuple(h.q, h.shifts.values()));
        }
        py::dict out;
        out["consistent_hypotheses"] = hyps;
        out["hypotheses_tested"] = to_python_int(result.hypotheses_tested);
        out["target_length"] = result.target_length;
        return out;
      },
      py::arg("observed"), py::arg("l_max"), py::arg("table"));

  m.def(
      "reproduce",
      [](const std::string& target, const bps::PrimeTable& table,
         const bps::CorrelationConvention& conv) {
        const auto parsed = bps::repro::parse_target(target);
        if (!parsed) throw py::value_error("unknown target: " + target);
        const auto out = bps::repro::run(*parsed, table, conv);
        return py::make_tuple(out.csv, out.summary);
      },
      py::arg("target"), py::arg("table"), py::arg("convention") = bps::CorrelationConvention{});
}
