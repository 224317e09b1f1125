#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ppm/bijections.hpp"
#include "ppm/reports.hpp"

namespace py = pybind11;
using namespace ppm;

namespace {

py::int_ to_pyint(const BigInt& v) {
    const std::string s = v.str();
    PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::object to_pyfraction(const BigRational& q) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_pyint(numerator(q)), to_pyint(denominator(q)));
}

PathKind kind_of(const std::string& s) {
    if (s == "lattice") return PathKind::lattice;
    if (s == "delannoy") return PathKind::delannoy;
    throw std::invalid_argument("kind must be 'lattice' or 'delannoy'");
}

PathWord parse_auto(const std::string& word, const std::string& kind) {
    if (kind == "auto")
        return PathWord::parse(word, word.find('D') != std::string::npos ? PathKind::delannoy
                                                                         : PathKind::lattice);
    return PathWord::parse(word, kind_of(kind));
}

GFName name_of(const std::string& s) {
    auto n = parse_gf_name(s);
    if (!n) throw std::invalid_argument("unknown generating function '" + s + "'");
    return *n;
}

PatternSet set_of(const std::string& patterns) { return PatternSet::parse(patterns); }

py::dict profile_dict(const PathWord& p) {
    PathReport r = profile_path(p);
    py::dict d;
    d["word"] = r.word;
    d["kind"] = r.kind == PathKind::delannoy ? "delannoy" : "lattice";
    d["n"] = r.semisize;
    for (int i = 1; i <= 6; ++i)
        d[("p" + std::to_string(i)).c_str()] = r.profile.at(i);
    d["east_below"] = r.east_below;
    d["north_above"] = r.north_above;
    d["bounce_minus"] = r.bounce_minus;
    d["bounce_plus"] = r.bounce_plus;
    d["cross_h"] = r.cross_h;
    d["cross_v"] = r.cross_v;
    d["dyck"] = r.dyck;
    if (r.area) d["area"] = *r.area;
    return d;
}

// t-coefficients as {monomial-tuple over (x, x1..x6): Fraction}
py::list series_coeffs(const TruncatedSeries<MultiPoly>& s) {
    py::list out;
    for (int n = 0; n < s.order(); ++n) {
        py::dict d;
        for (const auto& [m, c] : s.coeff(n).terms()) {
            py::tuple key(kNumVars);
            for (int i = 0; i < kNumVars; ++i) key[static_cast<size_t>(i)] = m[static_cast<size_t>(i)];
            d[key] = to_pyfraction(c);
        }
        out.append(d);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_ppmatch, m) {
    m.doc() = "Paired-pattern matching on lattice and Delannoy paths: exact series and oracles.";

    // paths
    m.def("parse_word", [](const std::string& w, const std::string& kind) {
        return parse_auto(w, kind).word();
    }, py::arg("word"), py::arg("kind") = "auto",
        "Validate a path word; returns it back, raises ValueError on bad input.");
    m.def("semisize", [](const std::string& w, const std::string& kind) {
        return parse_auto(w, kind).semisize();
    }, py::arg("word"), py::arg("kind") = "auto");
    m.def("enumerate_paths", [](int n, const std::string& kind) {
        std::vector<std::string> out;
        for_each_path(n, kind_of(kind), [&](const PathWord& p) { out.push_back(p.word()); });
        return out;
    }, py::arg("n"), py::arg("kind") = "lattice");
    m.def("paired_subword", [](const std::string& w, const std::vector<int>& keep,
                               const std::string& kind) {
        IndexSet a;
        a.indices = keep;
        std::sort(a.indices.begin(), a.indices.end());
        return paired_subword(parse_auto(w, kind), a).word();
    }, py::arg("word"), py::arg("keep"), py::arg("kind") = "auto");
    m.def("to_array", [](const std::string& w) {
        TwoRowArray t = to_array(PathWord::parse(w, PathKind::lattice));
        return py::make_tuple(t.bottom, t.top);
    });
    m.def("from_array", [](const std::vector<int>& bottom, const std::vector<int>& top) {
        TwoRowArray t;
        t.bottom = bottom;
        t.top = top;
        return from_array(t).word();
    });

    // matching
    m.def("match_count", [](const std::string& w, const std::string& patterns,
                            const std::string& kind) {
        return match_count(parse_auto(w, kind), set_of(patterns));
    }, py::arg("word"), py::arg("patterns"), py::arg("kind") = "auto");
    m.def("avoids", [](const std::string& w, const std::string& patterns, const std::string& kind) {
        return avoids(parse_auto(w, kind), set_of(patterns));
    }, py::arg("word"), py::arg("patterns"), py::arg("kind") = "auto");
    m.def("occurs", [](const std::string& w, const std::string& patterns, const std::string& kind) {
        return occurs(parse_auto(w, kind), set_of(patterns));
    }, py::arg("word"), py::arg("patterns"), py::arg("kind") = "auto");
    m.def("profile", [](const std::string& w, const std::string& kind) {
        return profile_dict(parse_auto(w, kind));
    }, py::arg("word"), py::arg("kind") = "auto",
        "Match counts P1..P6 plus the geometric statistics of one path.");

    // bijections
    m.def("cross_to_bounce", [](const std::string& w) {
        return cross_to_bounce(PathWord::parse(w, PathKind::lattice)).word();
    });
    m.def("touch_to_cross", [](const std::string& w) {
        return touch_to_cross(PathWord::parse(w, PathKind::lattice)).word();
    });

    // catalog
    m.def("gf_names", [] {
        std::vector<std::string> out;
        for (GFName n : all_gf_names()) out.push_back(gf_name_str(n));
        return out;
    });
    m.def("series_text", [](const std::string& name, int order) {
        return series_str(build(name_of(name), order));
    }, py::arg("name"), py::arg("order") = 16);
    m.def("series_coefficients", [](const std::string& name, int order) {
        return series_coeffs(build(name_of(name), order));
    }, py::arg("name"), py::arg("order") = 16,
        "Per t-power dict of monomial exponent tuples over (x, x1..x6) to Fraction.");
    m.def("sequence", [](const std::string& spec, int order) {
        SequenceRecord r = sequence_by_spec(spec, order);
        py::list terms;
        for (const BigInt& t : r.terms) terms.append(to_pyint(t));
        py::dict d;
        d["name"] = r.name;
        d["offset"] = r.offset;
        d["terms"] = terms;
        d["provenance"] = r.provenance;
        if (!r.oeis.empty()) d["oeis"] = r.oeis;
        return d;
    }, py::arg("spec"), py::arg("order") = 16,
        "Evaluate a sequence spec such as 'exactly:F1:x=1' or 'gf:F2:x=0'.");
    m.def("expectation", [](const std::string& name, int order) {
        std::vector<BigRational> e = expectation(name_of(name), order);
        py::list out;
        for (const BigRational& q : e) out.append(to_pyfraction(q));
        return out;
    }, py::arg("name"), py::arg("order") = 12);
    m.def("bfile", [](const std::string& spec, int order) {
        return bfile_text(sequence_by_spec(spec, order));
    }, py::arg("spec"), py::arg("order") = 16);

    // oracle
    m.def("verify", [](const std::string& name, int n_max, bool force, int jobs) {
        OracleLimits limits;
        limits.force = force;
        limits.jobs = jobs;
        VerificationReport rep = verify(name_of(name), n_max, limits);
        py::list rows;
        for (const VerificationRow& r : rep.rows) {
            py::dict d;
            d["n"] = r.n;
            d["status"] = r.pass ? "pass" : "fail";
            if (!r.pass) {
                d["expected"] = r.expected;
                d["actual"] = r.actual;
                d["first_diff_monomial"] = r.first_diff_monomial;
            }
            rows.append(d);
        }
        py::dict out;
        out["name"] = rep.name;
        out["pass"] = rep.all_pass();
        out["rows"] = rows;
        return out;
    }, py::arg("name"), py::arg("n_max") = 6, py::arg("force") = false, py::arg("jobs") = 1);
    m.def("verify_all", [](int n_max) {
        VerifyAllOutcome out = verify_all(n_max);
        py::module_ json = py::module_::import("json");
        return json.attr("loads")(out.json);
    }, py::arg("n_max") = 5);
    m.def("joint_distribution", [](int n, const std::string& patterns, const std::string& kind) {
        PatternSet set = set_of(patterns);
        DistributionTable t = joint_distribution(n, set.patterns, kind_of(kind));
        py::dict d;
        for (const auto& [vec, cnt] : t.counts) {
            py::tuple key(vec.size());
            for (size_t i = 0; i < vec.size(); ++i) key[i] = vec[i];
            d[key] = to_pyint(cnt);
        }
        return d;
    }, py::arg("n"), py::arg("patterns"), py::arg("kind") = "lattice");

    m.attr("__version__") = "1.0.0";
}
