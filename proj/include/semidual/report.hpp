#pragma once

#include <string>

#include "json.hpp"
#include "semidual/checks.hpp"
#include "semidual/fatpoints.hpp"
#include "semidual/hilbert.hpp"

namespace semidual::report {

using json = nlohmann::json;

json to_json(const hilbert::FitResult& f);
json to_json(const hilbert::HilbertData& h);
json to_json(const hilbert::AdditivityReport& r);
json to_json(const hilbert::CanonicalReport& r);
json to_json(const fatpts::FatPointHilbert& r);
json to_json(const fatpts::MultiplicityReport& r);
json to_json(const artin::SemidualVerdict& v);
json to_json(const artin::CheckReport& r);
json to_json(const artin::ConvolutionReport& r);
json to_json(const artin::BettiIneqReport& r);
json to_json(const artin::CorBettiReport& r);
json to_json(const artin::SearchResult& r);

// Module spec: "R", "D", "k", or a path to a JSON file with fields
// {"actions": [[..row..],..] per variable, "degrees": [..] optional}.
artin::FiniteModule load_module(artin::AlgebraPtr A, const std::string& spec);

std::string rational_str(const hilbert::Rational& q);

} // namespace semidual::report
