#pragma once

#include <string>

#include <json.hpp>

#include "tdp/analysis.hpp"
#include "tdp/count.hpp"
#include "tdp/poly.hpp"
#include "tdp/roots.hpp"

namespace tdp {

using Json = nlohmann::ordered_json;

/// Polynomials travel as arrays of decimal strings, index = degree, so
/// coefficients survive consumers without big integers.
inline Json poly_to_json(const IntPoly& p) {
    Json arr = Json::array();
    for (const BigInt& c : p.coefficients()) arr.push_back(c.str());
    return arr;
}

inline IntPoly poly_from_json(const Json& arr) {
    std::vector<BigInt> cs;
    for (const auto& item : arr) cs.emplace_back(item.get<std::string>());
    return IntPoly::from_coefficients(std::move(cs));
}

inline Json count_vector_to_json(const CountVector& cv) {
    Json j;
    j["counts"] = poly_to_json(cv.polynomial());
    if (cv.gamma_t)
        j["gamma_t"] = *cv.gamma_t;
    else
        j["gamma_t"] = nullptr;
    return j;
}

inline Json complex_to_json(Complex z) {
    return Json{{"re", z.real()}, {"im", z.imag()}};
}

inline Json root_summary_to_json(const RootSummary& s) {
    Json j;
    Json ints = Json::array();
    for (auto& [r, m] : s.integer_roots)
        ints.push_back(Json{{"root", r.str()}, {"multiplicity", m}});
    j["integer_roots"] = ints;
    Json nums = Json::array();
    for (Complex z : s.numeric_roots) nums.push_back(complex_to_json(z));
    j["numeric_roots"] = nums;
    Json distinct = Json::array();
    for (Complex z : s.distinct_roots) distinct.push_back(complex_to_json(z));
    j["distinct_roots"] = distinct;
    if (s.two_root_form)
        j["two_root_form"] = Json{{"alpha", s.two_root_form->alpha},
                                  {"c", s.two_root_form->c.str()},
                                  {"beta", s.two_root_form->beta}};
    else
        j["two_root_form"] = nullptr;
    return j;
}

inline Json finding_to_json(const Finding& f) {
    return Json{{"rule", f.rule}, {"subject", f.subject}, {"expected", f.expected},
                {"actual", f.actual}};
}

inline Json equiv_classes_to_json(const EquivClassReport& r) {
    Json j;
    j["classes"] = r.classes;
    j["unique"] = r.unique_ids;
    return j;
}

inline Json identity_report_to_json(const IdentityReport& r) {
    Json j;
    j["pass_counts"] = Json::object();
    for (auto& [rule, count] : r.pass_counts) j["pass_counts"][rule] = count;
    Json fails = Json::array();
    for (const Finding& f : r.failures) fails.push_back(finding_to_json(f));
    j["failures"] = fails;
    j["all_passed"] = r.all_passed();
    return j;
}

inline Json conjecture_scan_to_json(const ConjectureScanReport& r) {
    Json j;
    j["scanned"] = r.scanned;
    Json v = Json::array();
    for (const Finding& f : r.violations) v.push_back(finding_to_json(f));
    j["violations"] = v;
    j["theorem_breach"] = r.theorem_breach;
    return j;
}

inline Json cubic10_report_to_json(const Cubic10Report& r) {
    Json j;
    j["total"] = r.total;
    j["connected"] = r.connected_count;
    j["class_sizes"] = r.class_sizes;
    j["petersen_class_size"] = r.petersen_class_size;
    j["petersen_class"] = r.petersen_class_ids;
    j["petersen_confirmed_by_canonical_form"] = r.petersen_confirmed_by_canonical;
    j["singletons"] = r.singleton_count;
    j["unlisted_graph"] = r.unlisted_graph_note;
    Json classes = Json::array();
    for (const auto& cls : r.partition.classes) classes.push_back(cls);
    j["classes"] = classes;
    Json polys = Json::object();
    for (const CorpusEntry& e : r.corpus.entries) polys[e.id] = poly_to_json(e.polynomial);
    j["polynomials"] = polys;
    return j;
}

} // namespace tdp
