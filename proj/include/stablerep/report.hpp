#pragma once

#include <string>

#include "json.hpp"

#include "stablerep/characters.hpp"

namespace stablerep {

using json = nlohmann::ordered_json;

/// Outcome of a verification: what was claimed, the two sides as computed,
/// and supporting data.
struct Report {
    std::string claim;
    json left;
    json right;
    bool pass = false;
    json witnesses = json::object();

    friend bool operator==(const Report&, const Report&) = default;
};

void to_json(json& j, const Report& r);
void from_json(const json& j, Report& r);

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
json big_to_json(const BigInt& value);
BigInt big_from_json(const json& j);

json rational_to_json(const Rational& value);
Rational rational_from_json(const json& j);

/// [{key, multiplicity}], keys as partition strings.
json decomposition_to_json(const IrredDecomposition& d);
IrredDecomposition irred_decomposition_from_json(const json& j);
/// [{lambda, mu, mult}].
json decomposition_to_json(const PairDecomposition& d);
PairDecomposition pair_decomposition_from_json(const json& j);

/// [{class, value}] and [{sigma_class, tau_class, value}].
json class_function_to_json(const ClassFunction& f);
ClassFunction class_function_from_json(const json& j, int degree);
json bi_class_function_to_json(const BiClassFunction& f);
BiClassFunction bi_class_function_from_json(const json& j, int p, int q);

}  // namespace stablerep
