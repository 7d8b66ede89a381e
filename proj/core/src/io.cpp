#include "dimerexp/io.hpp"

#include <sstream>

#include <json.hpp>

namespace dimerexp {

namespace {

using Json = nlohmann::ordered_json;

Json rational_obj(const Rational& r) {
    return Json{{"num", r.num_string()}, {"den", r.den_string()}};
}

Rational rational_from(const Json& j) {
    return Rational::from_strings(j.at("num").get<std::string>(), j.at("den").get<std::string>());
}

Json series_array(const TruncatedSeries& s) {
    Json arr = Json::array();
    for (int k = 0; k <= s.order(); ++k)
        arr.push_back(Json{{"k", k}, {"num", s[k].num_string()}, {"den", s[k].den_string()}});
    return arr;
}

TruncatedSeries series_from(const Json& arr) {
    TruncatedSeries s(static_cast<int>(arr.size()) - 1);
    for (const auto& item : arr) s.set(item.at("k").get<int>(), rational_from(item));
    return s;
}

} // namespace

std::string mayer_to_json(const MayerTable& t) {
    Json j{{"d", t.dim}, {"order", t.order}};
    Json b = Json::array();
    for (int n = 1; n <= t.order; ++n)
        b.push_back(Json{{"n", n}, {"num", t.coeff(n).num_string()}, {"den", t.coeff(n).den_string()}});
    j["b"] = b;
    return j.dump(2) + "\n";
}

MayerTable mayer_from_json(const std::string& text) {
    const Json j = Json::parse(text);
    MayerTable t;
    t.dim = j.at("d").get<int>();
    t.order = j.at("order").get<int>();
    t.b.assign(static_cast<std::size_t>(t.order), Rational(0));
    for (const auto& item : j.at("b")) {
        const int n = item.at("n").get<int>();
        t.b.at(static_cast<std::size_t>(n) - 1) = rational_from(item);
    }
    return t;
}

std::string mayer_to_csv(const MayerTable& t) {
    std::ostringstream os;
    os << "n,numerator,denominator\n";
    for (int n = 1; n <= t.order; ++n)
        os << n << ',' << t.coeff(n).num_string() << ',' << t.coeff(n).den_string() << '\n';
    return os.str();
}

std::string mayer_to_text(const MayerTable& t) {
    std::ostringstream os;
    os << "Mayer coefficients of the hard-dimer gas, d = " << t.dim << ", order " << t.order << "\n";
    for (int n = 1; n <= t.order; ++n) os << "  b_" << n << " = " << t.coeff(n).str() << "\n";
    return os.str();
}

std::string lambda_to_json(const LambdaExpansion& e, const std::vector<EvalRecord>& evals) {
    Json j{{"d", e.dim}, {"order", e.order}};
    j["singular"] = Json{{"p_ln_p", rational_obj(e.singular_ln_p)},
                         {"p_ln_2d", rational_obj(e.singular_ln_2d)}};
    j["regular"] = series_array(e.regular);
    j["normal_form_tail"] = series_array(e.normal_form_tail);
    if (!evals.empty()) {
        Json arr = Json::array();
        for (const auto& ev : evals)
            arr.push_back(Json{{"p", ev.p}, {"value", ev.value}, {"truncation_proxy", ev.truncation_proxy}});
        j["evaluations"] = arr;
    }
    return j.dump(2) + "\n";
}

LambdaExpansion lambda_from_json(const std::string& text) {
    const Json j = Json::parse(text);
    LambdaExpansion e;
    e.dim = j.at("d").get<int>();
    e.order = j.at("order").get<int>();
    e.singular_ln_p = rational_from(j.at("singular").at("p_ln_p"));
    e.singular_ln_2d = rational_from(j.at("singular").at("p_ln_2d"));
    e.regular = series_from(j.at("regular"));
    e.normal_form_tail = series_from(j.at("normal_form_tail"));
    return e;
}

std::string lambda_to_csv(const LambdaExpansion& e, const std::vector<EvalRecord>& evals) {
    std::ostringstream os;
    os << "series,k,numerator,denominator\n";
    os << "singular_p_ln_p,1," << e.singular_ln_p.num_string() << ',' << e.singular_ln_p.den_string() << '\n';
    os << "singular_p_ln_2d,1," << e.singular_ln_2d.num_string() << ',' << e.singular_ln_2d.den_string() << '\n';
    for (int k = 0; k <= e.regular.order(); ++k)
        os << "regular," << k << ',' << e.regular[k].num_string() << ',' << e.regular[k].den_string() << '\n';
    for (int k = 0; k <= e.normal_form_tail.order(); ++k)
        os << "normal_form_tail," << k << ',' << e.normal_form_tail[k].num_string() << ','
           << e.normal_form_tail[k].den_string() << '\n';
    if (!evals.empty()) {
        os << "\np,value,truncation_proxy\n";
        for (const auto& ev : evals) os << ev.p << ',' << ev.value << ',' << ev.truncation_proxy << '\n';
    }
    return os.str();
}

std::string lambda_to_text(const LambdaExpansion& e, const std::vector<EvalRecord>& evals) {
    std::ostringstream os;
    os << "Monomer-dimer free energy lambda_" << e.dim << "(p), series to order p^" << e.order << "\n";
    os << "  lambda(p) = " << e.singular_ln_p.str() << " * p ln p + " << e.singular_ln_2d.str()
       << " * p ln(" << 2 * e.dim << ") + regular(p)\n";
    os << "  regular coefficients (k: value):\n";
    for (int k = 1; k <= e.regular.order(); ++k)
        os << "    " << k << ": " << e.regular[k].str() << "\n";
    os << "  normal-form tail after the entropy prefactor (k: a_k):\n";
    for (int k = 2; k <= e.normal_form_tail.order(); ++k)
        os << "    " << k << ": " << e.normal_form_tail[k].str() << "\n";
    if (!evals.empty()) {
        os << "  evaluations:\n";
        for (const auto& ev : evals)
            os << "    p = " << ev.p << ": " << ev.value << "  (last-term proxy " << ev.truncation_proxy
               << ")\n";
    }
    return os.str();
}

} // namespace dimerexp
