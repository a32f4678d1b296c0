#include "geode/errors.hpp"
#include "geode/geode.hpp"
#include "geode/hypercat.hpp"
#include "geode/identities.hpp"
#include "geode/verify.hpp"
#include "geode/wz.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

// Python int <-> mpz_class through the decimal representation.
namespace pybind11::detail {
template <>
struct type_caster<mpz_class> {
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool)
    {
        if (!PyLong_Check(src.ptr()))
            return false;
        return value.set_str(py::str(src).cast<std::string>(), 10) == 0;
    }

    static handle cast(const mpz_class& z, return_value_policy, handle)
    {
        return PyLong_FromString(z.get_str(10).c_str(), nullptr, 10);
    }
};
} // namespace pybind11::detail

namespace {

using namespace geode;

py::dict series_dict(const TruncatedSeries& s)
{
    py::dict d;
    for (const auto& [m, c] : s.terms()) {
        py::tuple key(m.size());
        for (std::size_t k = 0; k < m.size(); ++k)
            key[k] = m[k];
        d[key] = py::cast(c);
    }
    return d;
}

ExpVec to_expvec(const std::vector<ExpVec::value_type>& v)
{
    return ExpVec(v);
}

py::dict check_dict(const WzCheck& c)
{
    py::dict d;
    d["passed"] = c.passed;
    d["points"] = c.points;
    d["counterexample"] = c.counterexample ? py::cast(*c.counterexample) : py::none();
    d["detail"] = c.detail;
    d["orientation"] = c.orientation;
    return d;
}

std::string rational_str(const Rational& q)
{
    return q.get_str(10);
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Hyper-Catalan and Geode numbers with exact arithmetic";

    py::register_exception<NotDivisible>(m, "NotDivisible", PyExc_ArithmeticError);
    py::register_exception<NonzeroConstant>(m, "NonzeroConstant", PyExc_ArithmeticError);
    py::register_exception<OutOfRange>(m, "OutOfRange", PyExc_IndexError);

    m.def("solve_S", [](std::size_t r, unsigned N) { return series_dict(solve_S(r, N)); }, py::arg("r"), py::arg("N"),
          "Coefficients {exponents: value} of the series solution S through total degree N.");
    m.def("geode_series", [](std::size_t r, unsigned N) { return series_dict(geode_series(r, N).series); },
          py::arg("r"), py::arg("N"), "Coefficients of the Geode series G = (S - 1)/(t_1 + ... + t_r).");
    m.def("hyper_catalan", [](const std::vector<ExpVec::value_type>& e) { return hyper_catalan(to_expvec(e)); },
          py::arg("m"));
    m.def("geode_closed_2var", &geode_closed_2var, py::arg("m1"), py::arg("m2"));
    m.def("geode_closed_shifted", &geode_closed_shifted, py::arg("a"), py::arg("m_a"), py::arg("m_a1"));
    m.def("geode_closed_two_nonzero", &geode_closed_two_nonzero, py::arg("s"), py::arg("t"), py::arg("n"), py::arg("i"));
    m.def("eval_alternating", [](unsigned long a, unsigned N) { return eval_alternating(a, N).coeffs; }, py::arg("a"),
          py::arg("N"));
    m.def("eval_general",
          [](unsigned long a, const std::vector<long>& c, unsigned N) { return eval_general(a, c, N).coeffs; },
          py::arg("a"), py::arg("c"), py::arg("N"));
    m.def("geode_recurrence_check",
          [](std::size_t r, const std::vector<ExpVec::value_type>& e) {
              const ExpVec mv = to_expvec(e);
              if (mv.size() != r || mv.is_zero())
                  throw std::invalid_argument("need a nonzero exponent vector of length r");
              return geode_recurrence_check(geode_series(r, static_cast<unsigned>(mv.total_degree() - 1)), mv);
          },
          py::arg("r"), py::arg("m"));

    m.def("partition_sum_main", &partition_sum_main, py::arg("n"), py::arg("a"));
    m.def("claim1_sum", &claim1_sum, py::arg("n"), py::arg("a"), py::arg("x"));
    m.def("claim2_sum", &claim2_sum, py::arg("n"), py::arg("a"), py::arg("x"));
    m.def("claim2_ct", &claim2_ct, py::arg("n"), py::arg("a"), py::arg("x"));
    m.def("enumerate_mult_vectors",
          [](unsigned length, unsigned max_part) {
              std::vector<std::vector<unsigned>> out;
              for (const auto& v : MultVectorRange(length, max_part))
                  out.push_back(v.mult);
              return out;
          },
          py::arg("length"), py::arg("max_part"));

    m.def("F1", [](long n, long k) { return rational_str(F1(n, k)); }, py::arg("n"), py::arg("k"),
          "Exact value as a 'p/q' string.");
    m.def("H1", [](long n, long k) { return rational_str(H1(n, k)); }, py::arg("n"), py::arg("k"));
    m.def("certificate_R", [](long n, long k) { return rational_str(certificate_R(n, k)); }, py::arg("n"), py::arg("m"));
    m.def("check_wz1", [](long n_max) { return check_dict(check_wz1(n_max)); }, py::arg("n_max"));
    m.def("check_wz2", [](long a, long n_max) { return check_dict(check_wz2(a, n_max)); }, py::arg("a"),
          py::arg("n_max"));
    m.def("check_certificate_R", [](long n_max) { return check_dict(check_certificate_R(n_max)); }, py::arg("n_max"));

    m.def("suite_names", &suite_names);
    m.def(
        "run_suite_json",
        [](const std::string& name, std::optional<unsigned> max_degree, std::optional<unsigned> max_order,
           std::optional<unsigned> max_n, std::optional<unsigned> n_max, std::optional<unsigned> max_vars,
           std::vector<long> a) {
            SuiteBounds b{max_degree, max_order, max_n, n_max, max_vars, std::move(a)};
            VerifyReport r;
            {
                py::gil_scoped_release release;
                r = run_suite(name, b);
            }
            return to_json(r).dump();
        },
        py::arg("name"), py::kw_only(), py::arg("max_degree") = py::none(), py::arg("max_order") = py::none(),
        py::arg("max_n") = py::none(), py::arg("n_max") = py::none(), py::arg("max_vars") = py::none(),
        py::arg("a") = std::vector<long>{});
}
