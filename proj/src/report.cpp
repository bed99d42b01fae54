#include "semidual/report.hpp"

#include <fstream>
#include <sstream>

namespace semidual::report {

std::string rational_str(const hilbert::Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

namespace {

json rational_list(const std::vector<hilbert::Rational>& v) {
    json out = json::array();
    for (const auto& q : v)
        out.push_back(rational_str(q));
    return out;
}

} // namespace

json to_json(const hilbert::FitResult& f) {
    return {{"polynomial", rational_list(f.polynomial)},
            {"dim", f.dim},
            {"multiplicity", f.multiplicity}};
}

json to_json(const hilbert::HilbertData& h) {
    return {{"values", h.values},
            {"polynomial", rational_list(h.polynomial)},
            {"dim", h.dim},
            {"multiplicity", h.multiplicity}};
}

json to_json(const hilbert::AdditivityReport& r) {
    json terms = json::array();
    for (const auto& t : r.terms)
        terms.push_back({{"support", t.support}, {"length", t.length}, {"mult", t.mult}});
    return {{"lhs", r.lhs}, {"rhs", r.rhs}, {"pass", r.pass}, {"dim", r.dim},
            {"terms", terms}};
}

json to_json(const hilbert::CanonicalReport& r) {
    return {{"dim", r.dim},
            {"e_ring", r.e_ring},
            {"e_canonical", r.e_canonical},
            {"pass", r.pass},
            {"numerator", r.numerator},
            {"canonical_numerator", r.canonical_numerator}};
}

json to_json(const fatpts::FatPointHilbert& r) {
    return {{"hf", r.hf}, {"degree", r.degree}, {"stabilizes_at", r.stabilizes_at}};
}

json to_json(const fatpts::MultiplicityReport& r) {
    return {{"degree", r.degree}, {"expected", r.expected}, {"pass", r.pass}, {"hf", r.hf}};
}

json to_json(const artin::SemidualVerdict& v) {
    json out = {{"i_max", v.i_max}};
    if (v.ok) {
        out["verdict"] = "yes-up-to(" + std::to_string(v.i_max) + ")";
    } else {
        out["verdict"] = "no";
        out["witness"] = v.witness;
        if (v.failed_ext >= 0)
            out["failed_ext"] = v.failed_ext;
    }
    return out;
}

json to_json(const artin::CheckReport& r) {
    json items = json::array();
    for (const auto& it : r.items) {
        json j = {{"name", it.name}, {"pass", it.pass}};
        if (!it.detail.empty())
            j["detail"] = it.detail;
        items.push_back(j);
    }
    return {{"items", items}, {"pass", r.all_pass()}};
}

json to_json(const artin::ConvolutionReport& r) {
    return {{"betti_D", r.betti_D},
            {"betti_C", r.betti_C},
            {"betti_C_dagger", r.betti_Cd},
            {"convolution", r.convolution},
            {"pass", r.pass}};
}

json to_json(const artin::BettiIneqReport& r) {
    json out = {{"applicable", r.applicable}, {"pass", r.pass}};
    if (r.applicable) {
        out["beta0"] = r.beta0;
        out["beta1"] = r.beta1;
    }
    if (!r.note.empty())
        out["note"] = r.note;
    return out;
}

json to_json(const artin::CorBettiReport& r) {
    json out = {{"applicable", r.applicable}, {"pass", r.pass}};
    if (r.applicable) {
        out["beta0_D"] = r.beta0_D;
        out["beta1_D"] = r.beta1_D;
    }
    if (!r.note.empty())
        out["note"] = r.note;
    return out;
}

json to_json(const artin::SearchResult& r) {
    json classes = json::array();
    for (const auto& c : r.classes)
        classes.push_back({{"label", c.label}, {"hits", c.hits}, {"dim", c.rep.dim()}});
    return {{"classes", classes},
            {"candidates_tested", r.candidates_tested},
            {"length_filtered", r.length_filtered}};
}

artin::FiniteModule load_module(artin::AlgebraPtr A, const std::string& spec) {
    if (spec == "R")
        return artin::regular_module(A);
    if (spec == "D")
        return artin::matlis_dual(artin::regular_module(A));
    if (spec == "k")
        return artin::cyclic_quotient(A, mono::maximal_ideal(A->ideal().context));
    std::ifstream in(spec);
    if (!in)
        throw artin::AlgebraError("cannot open module file: " + spec);
    json j = json::parse(in);
    std::vector<FpMat> actions;
    for (const auto& mat : j.at("actions")) {
        int rows = int(mat.size());
        int cols = rows ? int(mat[0].size()) : 0;
        FpMat m(rows, cols, A->p());
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                m.set(r, c, mat[r][c].get<int>());
        actions.push_back(std::move(m));
    }
    std::optional<std::vector<int>> degrees;
    if (j.contains("degrees"))
        degrees = j["degrees"].get<std::vector<int>>();
    return artin::make_module(A, std::move(actions), std::move(degrees), true);
}

} // namespace semidual::report
