#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "covercalc/braid.hpp"
#include "covercalc/floer.hpp"
#include "covercalc/matrices.hpp"
#include "covercalc/pell.hpp"
#include "covercalc/sigma.hpp"
#include "covercalc/twobridge.hpp"

namespace py = pybind11;
using namespace covercalc;

namespace {

py::object big_to_py(const BigInt& v) {
    // round-trip through the decimal string to keep arbitrary precision
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

BigInt big_from_py(const py::handle& obj) {
    return BigInt(py::str(obj).cast<std::string>());
}

py::list matrix_to_py(const IntMatrix& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.dim(); ++j) row.append(big_to_py(m.at(i, j)));
        rows.append(row);
    }
    return rows;
}

IntMatrix matrix_from_py(const py::sequence& rows) {
    const std::size_t n = rows.size();
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        py::sequence row = rows[i].cast<py::sequence>();
        if (row.size() != n) throw std::invalid_argument("matrix must be square");
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = big_from_py(row[j]);
    }
    return m;
}

py::list poly_to_py(const IntPoly& p) {
    py::list out;
    for (const auto& c : p.coeffs()) out.append(big_to_py(c));
    return out;
}

IntPoly poly_from_py(const py::sequence& coeffs) {
    std::vector<BigInt> c;
    for (const auto& v : coeffs) c.push_back(big_from_py(v));
    return IntPoly(std::move(c));
}

CirculantFirstRow row_from_py(const py::sequence& row) {
    CirculantFirstRow r;
    for (const auto& v : row) r.row.push_back(big_from_py(v));
    return r;
}

braid::BraidWord word_from_py(const py::sequence& letters, std::size_t strands) {
    std::vector<int> w;
    for (const auto& v : letters) w.push_back(v.cast<int>());
    return braid::BraidWord(strands, std::move(w));
}

std::string shape_name(floer::Shape s) {
    return s == floer::Shape::V ? "V" : (s == floer::Shape::W ? "W" : "unknown");
}

floer::Shape shape_from(const std::string& s) {
    if (s == "V") return floer::Shape::V;
    if (s == "W") return floer::Shape::W;
    return floer::Shape::Unknown;
}

py::dict nu_to_py(const floer::NuSharpInfo& info) {
    py::dict d;
    d["nu"] = info.nu ? py::cast(*info.nu) : py::none();
    d["shape"] = shape_name(info.shape);
    d["provenance"] = info.provenance;
    return d;
}

floer::Catalog catalog_from(const std::string& path) {
    return path.empty() ? floer::Catalog::builtin() : floer::Catalog::from_json_file(path);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact circulant-lattice, braid-linking and two-bridge computations";

    // ----- matrices ---------------------------------------------------------
    m.def(
        "circulant",
        [](const py::sequence& row) { return matrix_to_py(circulant_from_first_row(row_from_py(row))); },
        py::arg("first_row"));
    m.def(
        "det_exact", [](const py::sequence& rows) { return big_to_py(det_exact(matrix_from_py(rows))); },
        py::arg("matrix"));
    m.def(
        "is_circulant", [](const py::sequence& rows) { return matrix_from_py(rows).is_circulant(); },
        py::arg("matrix"));
    m.def(
        "is_positive_definite",
        [](const py::sequence& rows) { return is_positive_definite(matrix_from_py(rows)); },
        py::arg("matrix"));
    m.def(
        "verify_sicup",
        [](const py::sequence& rows) {
            auto rep = matrices::verify_sicup(matrix_from_py(rows));
            py::dict d;
            d["symmetric"] = rep.symmetric;
            d["integral"] = rep.integral;
            d["circulant"] = rep.circulant;
            d["unimodular"] = rep.unimodular;
            d["positive_definite"] = rep.positive_definite;
            d["determinant"] = big_to_py(rep.determinant);
            d["lambda1"] = big_to_py(rep.lambda1);
            d["verdict"] = rep.verdict;
            return d;
        },
        py::arg("matrix"));
    m.def(
        "enumerate_sicup",
        [](std::size_t d, long long c1_max) {
            auto res = matrices::enumerate_sicup(d, c1_max);
            py::list out;
            for (const auto& mm : res.matrices) out.append(matrix_to_py(mm));
            return out;
        },
        py::arg("d"), py::arg("c1_max"));
    m.def(
        "circulant_spectrum",
        [](const py::sequence& row) {
            auto spec = matrices::circulant_spectrum(row_from_py(row));
            py::dict d;
            d["lambda1"] = big_to_py(spec.lambda1_exact);
            py::list ev;
            for (auto [value, mult] : spec.eigenvalues) ev.append(py::make_tuple(value, mult));
            d["eigenvalues"] = ev;
            return d;
        },
        py::arg("first_row"));
    m.def(
        "blow_down",
        [](const py::sequence& rows, std::size_t k) {
            return matrix_to_py(blow_down(matrix_from_py(rows), k));
        },
        py::arg("matrix"), py::arg("k"));
    m.def(
        "circulant_block_check",
        [](const py::sequence& rows, std::size_t d, std::size_t u) {
            return circulant_block_check(matrix_from_py(rows), d, u);
        },
        py::arg("matrix"), py::arg("d"), py::arg("u"));

    // ----- pell ---------------------------------------------------------------
    m.def(
        "solve_pell",
        [](std::size_t count, bool admissible) {
            pell::SolveOptions opts;
            if (admissible) {
                opts.require_a_mod5 = 2;
                opts.require_a_positive = true;
            }
            py::list out;
            for (const auto& s : pell::solve_pell_5_4(count, opts))
                out.append(py::make_tuple(big_to_py(s.a), big_to_py(s.b)));
            return out;
        },
        py::arg("count"), py::arg("admissible") = false);
    m.def(
        "phi",
        [](const py::handle& x, const py::handle& l, const py::handle& mm) {
            auto s = pell::phi({big_from_py(x), big_from_py(l), big_from_py(mm)});
            return py::make_tuple(big_to_py(s.a), big_to_py(s.b));
        },
        py::arg("x"), py::arg("l"), py::arg("m"));
    m.def(
        "phi_inverse",
        [](const py::handle& a, const py::handle& b) {
            auto p = pell::phi_inverse({big_from_py(a), big_from_py(b)});
            return py::make_tuple(big_to_py(p.x), big_to_py(p.l), big_to_py(p.m));
        },
        py::arg("a"), py::arg("b"));
    m.def(
        "enumerate_m5",
        [](std::size_t count) {
            py::list out;
            for (const auto& mm : pell::enumerate_m5(count)) out.append(matrix_to_py(mm));
            return out;
        },
        py::arg("count"));

    // ----- braid ----------------------------------------------------------------
    m.def(
        "braid_permutation",
        [](const py::sequence& letters, std::size_t strands) {
            return braid_permutation(word_from_py(letters, strands));
        },
        py::arg("letters"), py::arg("strands"));
    m.def(
        "closure_components",
        [](const py::sequence& letters, std::size_t strands, std::size_t power) {
            auto cc = braid::closure_components(braid::power(word_from_py(letters, strands), power));
            py::dict d;
            d["count"] = cc.count;
            d["labels"] = cc.labels;
            return d;
        },
        py::arg("letters"), py::arg("strands"), py::arg("power") = 1);
    m.def(
        "linking_matrix",
        [](const py::sequence& letters, std::size_t strands, std::size_t power, long long framing) {
            auto res = braid::linking_matrix_of_closure(
                braid::power(word_from_py(letters, strands), power), BigInt(framing));
            py::dict d;
            d["components"] = res.components.count;
            d["matrix"] = matrix_to_py(res.matrix);
            return d;
        },
        py::arg("letters"), py::arg("strands"), py::arg("power") = 1, py::arg("framing") = 1);
    m.def(
        "alexander_via_burau",
        [](const py::sequence& letters, std::size_t strands) {
            return poly_to_py(braid::alexander_via_burau(word_from_py(letters, strands)));
        },
        py::arg("letters"), py::arg("strands"));
    m.def(
        "unknot_check",
        [](const py::sequence& letters, std::size_t strands) {
            auto res = braid::unknot_necessary_check(word_from_py(letters, strands));
            py::dict d;
            d["pass"] = res.pass;
            d["reason"] = res.reason;
            d["alexander"] = poly_to_py(res.alexander);
            return d;
        },
        py::arg("letters"), py::arg("strands"));

    // ----- sigma -------------------------------------------------------------------
    m.def(
        "sigma_linking",
        [](std::size_t mm, const std::vector<long long>& c) {
            sigma::SigmaParams p(mm, c);
            auto brute = sigma::brute_force_linking(p);
            auto row = sigma::closed_form_first_row(p);
            py::dict d;
            d["matrix"] = matrix_to_py(brute.matrix);
            py::list rowpy;
            for (const auto& v : row) rowpy.append(big_to_py(v));
            d["closed_form_first_row"] = rowpy;
            d["match"] = brute.matrix.first_row() == row;
            return d;
        },
        py::arg("m"), py::arg("c"));
    m.def(
        "sigma_identify_L1",
        [](std::size_t mm, const std::vector<long long>& c) {
            auto cert = sigma::identify_L1(sigma::SigmaParams(mm, c));
            py::dict d;
            d["valid"] = cert.valid;
            d["torus_parameter"] = cert.torus_parameter;
            d["genus"] = cert.genus;
            d["self_region"] = cert.self_region;
            d["failure"] = cert.failure;
            return d;
        },
        py::arg("m"), py::arg("c"));
    m.def(
        "sigma_check_adapted",
        [](std::size_t mm, const std::vector<long long>& c, const py::sequence& target) {
            auto rep = sigma::check_adapted(sigma::SigmaParams(mm, c), matrix_from_py(target));
            py::dict d;
            d["unknot_pass"] = rep.unknot_check.pass;
            d["unknot_reason"] = rep.unknot_check.reason;
            d["linking_match"] = rep.linking_match;
            d["computed_linking"] = matrix_to_py(rep.computed_linking);
            d["nu_condition"] = rep.nu_condition.status == floer::AdaptedStatus::Satisfied
                                    ? "satisfied"
                                    : (rep.nu_condition.status == floer::AdaptedStatus::Violated
                                           ? "violated"
                                           : "inconclusive");
            d["nu_case"] = rep.nu_condition.case_number ? py::cast(*rep.nu_condition.case_number)
                                                        : py::none();
            d["verdict"] = rep.verdict;
            return d;
        },
        py::arg("m"), py::arg("c"), py::arg("target"));

    // ----- floer --------------------------------------------------------------------
    m.def(
        "nu_sharp",
        [](const std::string& spec, const std::string& catalog) {
            return nu_to_py(floer::nu_sharp(floer::KnotClass::parse(spec), catalog_from(catalog)));
        },
        py::arg("knot_class"), py::arg("catalog") = std::string());
    m.def(
        "trace_map_trivial",
        [](long long nu, const std::string& shape, long long n) {
            return floer::trace_map_trivial({nu, shape_from(shape), "python"}, n);
        },
        py::arg("nu"), py::arg("shape"), py::arg("n"));
    m.def(
        "thm_nu_applies",
        [](const py::sequence& rows, const std::vector<std::string>& classes,
           const std::string& catalog) {
            auto cat = catalog_from(catalog);
            std::vector<floer::NuSharpInfo> comps;
            for (const auto& s : classes)
                comps.push_back(floer::nu_sharp(floer::KnotClass::parse(s), cat));
            auto v = floer::thm_nu_applies(matrix_from_py(rows), comps);
            py::dict d;
            d["applies"] = v.applies;
            d["witness_index"] = v.witness_index ? py::cast(*v.witness_index + 1) : py::none();
            d["case"] = v.case_number ? py::cast(*v.case_number) : py::none();
            d["failures"] = v.failures;
            return d;
        },
        py::arg("matrix"), py::arg("component_classes"), py::arg("catalog") = std::string());
    m.def(
        "adapted_inequalities",
        [](long long a11, long long nu, const std::string& shape) {
            auto v = floer::adapted_inequalities(BigInt(a11), {nu, shape_from(shape), "python"});
            py::dict d;
            d["status"] = v.status == floer::AdaptedStatus::Satisfied
                              ? "satisfied"
                              : (v.status == floer::AdaptedStatus::Violated ? "violated"
                                                                            : "inconclusive");
            d["case"] = v.case_number ? py::cast(*v.case_number) : py::none();
            return d;
        },
        py::arg("a11"), py::arg("nu"), py::arg("shape"));
    m.def(
        "cover_factorization",
        [](long long d, long long w) {
            auto f = floer::cover_factorization(d, w);
            return py::make_tuple(f.g, f.d_prime, f.coprime);
        },
        py::arg("d"), py::arg("w"));

    // ----- twobridge -------------------------------------------------------------------
    m.def(
        "even_cf",
        [](long long p, long long q) {
            auto e = twobridge::even_cf(twobridge::TwoBridgeFraction(p, q));
            py::dict d;
            py::list terms;
            for (const auto& t : e.terms) terms.append(big_to_py(t));
            d["terms"] = terms;
            d["normalized_q"] = big_to_py(e.normalized_q);
            d["mirror_normalized"] = e.mirror_normalized;
            return d;
        },
        py::arg("p"), py::arg("q"));
    m.def(
        "twobridge_alexander",
        [](long long p, long long q) {
            auto e = twobridge::even_cf(twobridge::TwoBridgeFraction(p, q));
            return poly_to_py(twobridge::alexander_poly(twobridge::seifert_from_even_cf(e)));
        },
        py::arg("p"), py::arg("q"));
    m.def(
        "homology_order",
        [](const py::sequence& delta, std::size_t d) {
            return big_to_py(twobridge::homology_order(poly_from_py(delta), d));
        },
        py::arg("alexander_coefficients"), py::arg("d"));
    m.def(
        "tl_signature",
        [](long long p, long long q, std::size_t d, std::size_t j) {
            auto e = twobridge::even_cf(twobridge::TwoBridgeFraction(p, q));
            return twobridge::tl_signature(twobridge::seifert_from_even_cf(e), d, j);
        },
        py::arg("p"), py::arg("q"), py::arg("d"), py::arg("j"));
    m.def(
        "branched_cover_report",
        [](long long p, long long q, std::size_t d_max) {
            auto rep = twobridge::branched_cover_report(twobridge::TwoBridgeFraction(p, q), d_max);
            py::dict d;
            py::list terms;
            for (const auto& t : rep.cf.terms) terms.append(big_to_py(t));
            d["even_cf"] = terms;
            d["mirror_normalized"] = rep.cf.mirror_normalized;
            d["alexander"] = poly_to_py(rep.alexander);
            py::list lines;
            for (const auto& line : rep.lines) {
                py::dict lj;
                lj["d"] = line.d;
                lj["homology_order"] = big_to_py(line.homology_order);
                lj["homology_sphere"] = line.homology_sphere;
                lj["signatures"] = line.signatures;
                lj["verdict"] = line.verdict;
                lines.append(lj);
            }
            d["covers"] = lines;
            return d;
        },
        py::arg("p"), py::arg("q"), py::arg("d_max"));
}
