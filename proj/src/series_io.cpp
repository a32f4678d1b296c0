#include "geode/series_io.hpp"

#include <ostream>
#include <stdexcept>

namespace geode {

nlohmann::json to_json(const TruncatedSeries& s)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : s.terms()) {
        nlohmann::json exps = nlohmann::json::array();
        for (auto e : m.values())
            exps.push_back(e);
        terms.push_back({{"exps", std::move(exps)}, {"coeff", to_decimal(c)}});
    }
    return {{"nvars", s.nvars()}, {"trunc", s.trunc()}, {"terms", std::move(terms)}};
}

TruncatedSeries series_from_json(const nlohmann::json& j)
{
    try {
        const auto nvars = j.at("nvars").get<std::size_t>();
        const auto trunc = j.at("trunc").get<unsigned>();
        TruncatedSeries::Terms terms;
        for (const auto& t : j.at("terms")) {
            ExpVec m(t.at("exps").get<std::vector<ExpVec::value_type>>());
            if (m.total_degree() > trunc)
                throw std::invalid_argument("term beyond truncation");
            if (!terms.emplace(std::move(m), parse_integer(t.at("coeff").get<std::string>())).second)
                throw std::invalid_argument("duplicate exponent vector");
        }
        return TruncatedSeries::from_terms(nvars, trunc, std::move(terms));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed series JSON: ") + e.what());
    }
}

void write_csv(std::ostream& out, const TruncatedSeries& s)
{
    for (std::size_t k = 0; k < s.nvars(); ++k)
        out << "m_" << (k + 1) << ',';
    out << "coeff\n";
    for (const auto& [m, c] : s.terms()) {
        for (auto e : m.values())
            out << e << ',';
        out << to_decimal(c) << '\n';
    }
}

nlohmann::json to_json(const UnivariateSeries& u)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : u.coeffs)
        coeffs.push_back(to_decimal(c));
    return {{"trunc", u.trunc()}, {"coeffs", std::move(coeffs)}};
}

} // namespace geode
