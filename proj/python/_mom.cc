// Copyright 2026 The mom Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "mom/field.h"
#include "mom/interpolate.h"
#include "mom/kakeya.h"
#include "mom/merger.h"
#include "mom/poly.h"
#include "mom/rs_decode.h"
#include "mom/selftest.h"

namespace py = pybind11;
using namespace mom;

namespace {

std::vector<FieldElement> elements(const FieldSpec& f, const std::vector<std::uint32_t>& idx) {
  std::vector<FieldElement> out;
  for (auto i : idx) out.push_back(f.element(i));
  return out;
}

Exponents exponents(const std::vector<std::uint32_t>& i) { return Exponents(i.begin(), i.end()); }

std::vector<Point> points(const FieldSpec& f, const std::vector<std::string>& text) {
  std::vector<Point> out;
  for (const auto& s : text) out.push_back(parse_point(f, s));
  return out;
}

std::vector<std::string> strings(const std::vector<Point>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

std::vector<std::string> strings(const std::vector<MultiPoly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

RSInstance rs_instance(const std::string& field, const std::optional<std::vector<std::uint32_t>>& alphas,
                       const std::vector<std::uint32_t>& betas, std::uint32_t k, std::uint32_t t) {
  const FieldSpec f = parse_field(field);
  return {f, alphas ? elements(f, *alphas) : field_enumerate(f), elements(f, betas), k, t};
}

}  // namespace

PYBIND11_MODULE(_mom, m) {
  static py::exception<Error> mom_error(m, "MomError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = mom_error;
      py::object exc = err(std::string(e.name()), e.what());
      PyErr_SetObject(mom_error.ptr(), exc.ptr());
    }
  });

  m.def("hasse", [](const std::string& field, std::size_t n, const std::string& poly,
                    const std::vector<std::uint32_t>& i) {
    return to_string(hasse_derivative(parse_poly(parse_field(field), n, poly), exponents(i)));
  });

  m.def("multiplicity", [](const std::string& field, const std::string& poly,
                           const std::string& point) -> std::optional<std::uint32_t> {
    const FieldSpec f = parse_field(field);
    const Point a = parse_point(f, point);
    const Multiplicity r = multiplicity(parse_poly(f, a.size(), poly), a);
    if (r.is_infinite()) return std::nullopt;
    return r.value();
  });

  m.def(
      "multiplicity_mass",
      [](const std::string& field, std::size_t n, const std::string& poly,
         const std::optional<std::vector<std::uint32_t>>& set, std::size_t jobs) {
        const FieldSpec f = parse_field(field);
        return multiplicity_mass(parse_poly(f, n, poly), set ? elements(f, *set) : field_enumerate(f), jobs);
      },
      py::arg("field"), py::arg("n"), py::arg("poly"), py::arg("set") = py::none(), py::arg("jobs") = 1);

  m.def(
      "interpolate",
      [](const std::string& field, std::size_t n, const std::vector<std::string>& pts, std::uint32_t mult,
         std::uint32_t degree) {
        const FieldSpec f = parse_field(field);
        return to_string(vanishing_interpolation({f, n, points(f, pts), mult, TotalDegreeBasis{degree}}));
      },
      py::arg("field"), py::arg("n"), py::arg("points"), py::arg("m"), py::arg("degree"));

  m.def("is_kakeya", [](const std::string& field, std::size_t n, const std::vector<std::string>& pts) {
    const FieldSpec f = parse_field(field);
    return is_kakeya(f, n, points(f, pts)).is_kakeya;
  });

  m.def("min_kakeya", [](const std::string& field, std::size_t n) {
    const auto r = exhaustive_min_kakeya(parse_field(field), n);
    py::dict out;
    out["found"] = r.found;
    out["set"] = strings(r.set);
    out["crude"] = to_string(r.bounds.crude);
    out["main"] = to_string(r.bounds.main);
    out["subsets_examined"] = r.subsets_examined;
    return out;
  });

  m.def("kakeya_bounds", [](std::uint32_t q, std::uint32_t n) {
    const auto b = kakeya_lower_bounds(q, n);
    return py::make_tuple(to_string(b.crude), to_string(b.main));
  });

  m.def("seed_length", [](const std::string& delta, const std::string& eps, std::uint32_t blocks) {
    return seed_length(parse_rational(delta), parse_rational(eps), blocks);
  });

  m.def(
      "verify_merger",
      [](const std::string& delta, const std::string& eps, std::uint32_t blocks, std::size_t n, std::size_t jobs) {
        MergerVerification v;
        {
          py::gil_scoped_release release;
          v = verify_merger_theorem(parse_rational(delta), parse_rational(eps), blocks, n, adversarial_family, jobs);
        }
        py::list sources;
        for (const auto& r : v.results) {
          py::dict s;
          s["source"] = r.source;
          s["distance"] = to_string(r.distance);
          s["max_probability"] = to_string(r.max_probability);
          s["within_eps"] = r.within_eps;
          sources.append(s);
        }
        py::dict out;
        out["seed_bits"] = v.seed_bits;
        out["threshold_bits"] = to_string(v.threshold_bits);
        out["sources"] = sources;
        out["all_within_eps"] = v.all_within_eps;
        return out;
      },
      py::arg("delta"), py::arg("eps"), py::arg("blocks"), py::arg("n"), py::arg("jobs") = 1);

  m.def(
      "list_decode",
      [](const std::string& field, const std::vector<std::uint32_t>& betas, std::uint32_t k, std::uint32_t t,
         const std::optional<std::vector<std::uint32_t>>& alphas, const std::string& eps) {
        const RSInstance inst = rs_instance(field, alphas, betas, k, t);
        py::gil_scoped_release release;
        return strings(list_decode(inst, parse_rational(eps)));
      },
      py::arg("field"), py::arg("betas"), py::arg("k"), py::arg("t"), py::arg("alphas") = py::none(),
      py::arg("eps") = "1/4");

  m.def(
      "brute_force_decode",
      [](const std::string& field, const std::vector<std::uint32_t>& betas, std::uint32_t k, std::uint32_t t,
         const std::optional<std::vector<std::uint32_t>>& alphas) {
        return strings(brute_force_decode(rs_instance(field, alphas, betas, k, t)));
      },
      py::arg("field"), py::arg("betas"), py::arg("k"), py::arg("t"), py::arg("alphas") = py::none());

  m.def("list_size_bound", [](const std::string& gamma, const std::string& rate) {
    return to_string(list_size_bound(parse_rational(gamma), parse_rational(rate)));
  });

  m.def("count_weighted_monomials", [](std::uint32_t k, std::uint32_t d, const std::string& theta) {
    return count_weighted_monomials(k, d, parse_rational(theta));
  });

  m.def(
      "selftest",
      [](std::uint64_t seed, std::uint32_t trials, std::size_t jobs) {
        SelftestReport rep;
        {
          py::gil_scoped_release release;
          rep = run_selftest({seed, jobs, nullptr, trials});
        }
        py::list rows;
        for (const auto& r : rep.rows) {
          py::dict row;
          row["statement"] = r.statement;
          row["key"] = r.key;
          row["passed"] = r.passed;
          row["checked"] = r.checked;
          row["detail"] = r.detail;
          rows.append(row);
        }
        return rows;
      },
      py::arg("seed"), py::arg("trials") = 200, py::arg("jobs") = 1);
}
