#include "stablerep/report.hpp"

#include "stablerep/errors.hpp"

namespace stablerep {

void to_json(json& j, const Report& r) {
    j = json{{"claim", r.claim}, {"left", r.left}, {"right", r.right}, {"pass", r.pass}, {"witnesses", r.witnesses}};
}

void from_json(const json& j, Report& r) {
    r.claim = j.at("claim").get<std::string>();
    r.left = j.at("left");
    r.right = j.at("right");
    r.pass = j.at("pass").get<bool>();
    r.witnesses = j.at("witnesses");
}

json big_to_json(const BigInt& value) {
    if (mpz_fits_slong_p(value.get_mpz_t())) return json(static_cast<long long>(value.get_si()));
    return json(value.get_str());
}

BigInt big_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()));
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw Error(ErrorKind::InvalidArgument, "expected an integer in JSON, got " + j.dump());
}

json rational_to_json(const Rational& value) {
    if (value.get_den() == 1) return big_to_json(value.get_num());
    return json(value.get_str());
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(big_from_json(j));
    if (j.is_string()) {
        Rational r(j.get<std::string>());
        r.canonicalize();
        return r;
    }
    throw Error(ErrorKind::InvalidArgument, "expected a rational in JSON, got " + j.dump());
}

json decomposition_to_json(const IrredDecomposition& d) {
    json out = json::array();
    for (const auto& [lambda, m] : d.terms()) out.push_back({{"key", lambda.to_string()}, {"multiplicity", big_to_json(m)}});
    return out;
}

IrredDecomposition irred_decomposition_from_json(const json& j) {
    IrredDecomposition d;
    for (const auto& entry : j) d.add(Partition::parse(entry.at("key").get<std::string>()), big_from_json(entry.at("multiplicity")));
    return d;
}

json decomposition_to_json(const PairDecomposition& d) {
    json out = json::array();
    for (const auto& [key, m] : d.terms()) {
        out.push_back({{"lambda", key.first.to_string()}, {"mu", key.second.to_string()}, {"mult", big_to_json(m)}});
    }
    return out;
}

PairDecomposition pair_decomposition_from_json(const json& j) {
    PairDecomposition d;
    for (const auto& entry : j) {
        d.add({Partition::parse(entry.at("lambda").get<std::string>()), Partition::parse(entry.at("mu").get<std::string>())},
              big_from_json(entry.at("mult")));
    }
    return d;
}

json class_function_to_json(const ClassFunction& f) {
    json out = json::array();
    for (const auto& rho : conjugacy_classes(f.degree())) out.push_back({{"class", rho.to_string()}, {"value", rational_to_json(f[rho])}});
    return out;
}

ClassFunction class_function_from_json(const json& j, int degree) {
    ClassFunction f(degree);
    for (const auto& entry : j) f[Partition::parse(entry.at("class").get<std::string>())] = rational_from_json(entry.at("value"));
    return f;
}

json bi_class_function_to_json(const BiClassFunction& f) {
    json out = json::array();
    for (const auto& s : conjugacy_classes(f.p())) {
        for (const auto& t : conjugacy_classes(f.q())) {
            out.push_back({{"sigma_class", s.to_string()}, {"tau_class", t.to_string()}, {"value", rational_to_json(f(s, t))}});
        }
    }
    return out;
}

BiClassFunction bi_class_function_from_json(const json& j, int p, int q) {
    BiClassFunction f(p, q);
    for (const auto& entry : j) {
        f(Partition::parse(entry.at("sigma_class").get<std::string>()), Partition::parse(entry.at("tau_class").get<std::string>())) =
            rational_from_json(entry.at("value"));
    }
    return f;
}

}  // namespace stablerep
