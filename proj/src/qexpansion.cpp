#include "eisq/qexpansion.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace eisq {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string to_json(const NearlyHolomorphicQExpansion& e) {
    nlohmann::ordered_json j;
    j["k"] = e.k;
    j["r"] = e.depth;
    j["n_max"] = e.n_max;
    j["prefactor"] = {e.prefactor.real(), e.prefactor.imag()};
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [jn, c] : e.coeffs) {
        nlohmann::ordered_json row;
        row["j"] = jn.first;
        row["n"] = jn.second;
        row["re"] = c.real();
        row["im"] = c.imag();
        arr.push_back(row);
    }
    j["coeffs"] = arr;
    return j.dump(2);
}

NearlyHolomorphicQExpansion qexpansion_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    NearlyHolomorphicQExpansion e;
    e.k = j.at("k").get<int>();
    e.depth = j.at("r").get<int>();
    e.n_max = j.at("n_max").get<int>();
    e.prefactor = Complex(j.at("prefactor")[0].get<double>(),
                          j.at("prefactor")[1].get<double>());
    for (const auto& row : j.at("coeffs")) {
        e.coeffs[{row.at("j").get<int>(), row.at("n").get<int>()}] =
            Complex(row.at("re").get<double>(), row.at("im").get<double>());
    }
    return e;
}

std::string to_csv(const NearlyHolomorphicQExpansion& e) {
    std::ostringstream os;
    os << "j,n,re,im\n";
    for (const auto& [jn, c] : e.coeffs)
        os << jn.first << ',' << jn.second << ',' << fmt(c.real()) << ','
           << fmt(c.imag()) << '\n';
    return os.str();
}

} // namespace eisq
