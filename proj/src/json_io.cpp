#include "sym/json_io.hpp"

#include <stdexcept>

namespace sym {

nlohmann::json partition_to_json(const Partition& lambda)
{
    return nlohmann::json(lambda.parts());
}

Partition partition_from_json(const nlohmann::json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("partition must be a JSON array");
    std::vector<int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw std::invalid_argument("partition entries must be integers");
        const int x = v.get<int>();
        if (x <= 0)
            throw std::invalid_argument("partition entries must be positive");
        if (!parts.empty() && x > parts.back())
            throw std::invalid_argument("partition entries must weakly decrease");
        parts.push_back(x);
    }
    return Partition::from_canonical(std::move(parts));
}

nlohmann::json to_json(const SymFunc& f)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [lambda, c] : f.terms())
        terms.push_back({{"partition", partition_to_json(lambda)}, {"coeff", to_string(c)}});
    return {{"basis", std::string(1, basis_letter(f.basis()))}, {"terms", std::move(terms)}};
}

SymFunc symfunc_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("basis") || !j.contains("terms"))
        throw std::invalid_argument("symmetric function JSON needs 'basis' and 'terms'");
    SymFunc f(parse_basis(j.at("basis").get<std::string>()));
    for (const auto& term : j.at("terms"))
        f.add_term(partition_from_json(term.at("partition")),
                   parse_coefficient(term.at("coeff").get<std::string>()));
    return f;
}

nlohmann::json to_json(const TensorFunc& t)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, c] : t.terms())
        terms.push_back({{"left", partition_to_json(key.first)},
                         {"right", partition_to_json(key.second)},
                         {"coeff", to_string(c)}});
    return {{"terms", std::move(terms)}};
}

TensorFunc tensorfunc_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("terms"))
        throw std::invalid_argument("tensor JSON needs 'terms'");
    TensorFunc t;
    for (const auto& term : j.at("terms"))
        t.add_term(partition_from_json(term.at("left")), partition_from_json(term.at("right")),
                   parse_coefficient(term.at("coeff").get<std::string>()));
    return t;
}

} // namespace sym
