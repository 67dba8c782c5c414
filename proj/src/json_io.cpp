#include "symf/json_io.hpp"

#include "symf/errors.hpp"

#include "json.hpp"

namespace symf {

std::string to_json(const SymFn& f)
{
    nlohmann::ordered_json doc;
    doc["basis"] = std::string(1, basis_letter(f.basis()));
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [lambda, c] : f.terms()) {
        nlohmann::ordered_json t;
        t["partition"] = lambda.parts();
        t["coeff"] = to_string(c);
        terms.push_back(std::move(t));
    }
    doc["terms"] = std::move(terms);
    return doc.dump();
}

SymFn symfn_from_json(const std::string& text)
{
    try {
        auto doc = nlohmann::json::parse(text);
        SymFn f(parse_basis(doc.at("basis").get<std::string>()));
        for (const auto& t : doc.at("terms"))
            f.add_term(Partition(t.at("partition").get<std::vector<int>>()),
                       parse_rational(t.at("coeff").get<std::string>()));
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed symmetric function JSON: ") + e.what());
    }
}

} // namespace symf
