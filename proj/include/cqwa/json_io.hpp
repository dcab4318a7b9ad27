#pragma once

#include <json.hpp>

#include "cqwa/cluster.hpp"
#include "cqwa/pbw.hpp"
#include "cqwa/poisson.hpp"
#include "cqwa/report.hpp"

namespace cqwa {

using Json = nlohmann::ordered_json;

// [[v-exponent, "coefficient"], ...] in ascending exponent order.
Json to_json(const LaurentScalar& c);
LaurentScalar laurent_from_json(const Json& j);

// {n, q, r} with full n x n tables.
Json to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

// {B, Lambda, d, vars: [{text, terms: [{exponent, coefficient}]}]}
Json to_json(const QuantumSeed& s);

// {m, ambient, entries: [{i, j, poly}]} over i < j with nonzero entries.
Json to_json(const BracketTable& t, const std::vector<std::string>& names = {});

// {suite, passed, checks: [{id, tag, status, witness}]}
Json to_json(const Report& r);

}  // namespace cqwa
