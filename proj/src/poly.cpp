#include "abelian/poly.hpp"

#include <sstream>

namespace abelian {

int monomial_width(const Monomial& m) {
    Family fam = Family::X;
    bool seen = false;
    std::vector<int> idx;
    int modulus = 1;
    for (const auto& [v, e] : m.terms()) {
        (void)e;
        if (!seen) {
            fam = v.family;
            modulus = v.modulus;
            seen = true;
        } else if (v.family != fam) {
            throw InvariantError("monomial_width: mixed variable families");
        }
        idx.push_back(v.index);
    }
    int w = 0;
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = i + 1; j < idx.size(); ++j)
            w = std::max(w, distance(idx[i], idx[j], modulus));
    return w;
}

bool try_rationalize(const PolyC& p, PolyQ& out) {
    out = PolyQ();
    for (const auto& [m, c] : p.terms()) {
        if (!c.is_rational()) return false;
        out.add_term(m, c.rational_value());
    }
    return true;
}

namespace {

// Split on top-level " + " / " - "; returns (sign, term-text) pairs.
std::vector<std::pair<int, std::string>> split_terms(const std::string& text) {
    std::vector<std::pair<int, std::string>> parts;
    std::string body = text;
    int lead = 1;
    if (!body.empty() && body[0] == '-') {
        lead = -1;
        body = body.substr(1);
    }
    size_t pos = 0, start = 0;
    int sign = lead;
    while (pos < body.size()) {
        if (body.compare(pos, 3, " + ") == 0 || body.compare(pos, 3, " - ") == 0) {
            parts.emplace_back(sign, body.substr(start, pos - start));
            sign = body[pos + 1] == '+' ? 1 : -1;
            pos += 3;
            start = pos;
        } else {
            ++pos;
        }
    }
    parts.emplace_back(sign, body.substr(start));
    return parts;
}

Monomial parse_monomial(const std::string& text, int modulus) {
    Monomial::Terms terms;
    std::istringstream is(text);
    std::string factor;
    while (std::getline(is, factor, '*')) {
        if (factor.empty()) throw ParameterError("empty monomial factor in: " + text);
        Family fam;
        if (factor[0] == 'x')
            fam = Family::X;
        else if (factor[0] == 'y')
            fam = Family::Y;
        else
            throw ParameterError("bad variable in monomial: " + factor);
        size_t rb = factor.find(']');
        if (factor[1] != '[' || rb == std::string::npos)
            throw ParameterError("bad variable in monomial: " + factor);
        int index = std::stoi(factor.substr(2, rb - 2));
        int exp = 1;
        if (rb + 1 < factor.size()) {
            if (factor[rb + 1] != '^') throw ParameterError("bad exponent in: " + factor);
            exp = std::stoi(factor.substr(rb + 2));
        }
        terms.emplace_back(Variable(fam, index, modulus), exp);
    }
    return Monomial(terms);
}

template <class K, class CoeffParse>
Polynomial<K> parse_poly(const std::string& text, int modulus, CoeffParse parse_coeff) {
    Polynomial<K> out;
    if (text == "0") return out;
    for (const auto& [sign, term] : split_terms(text)) {
        if (term.empty()) throw ParameterError("empty term in polynomial: " + text);
        std::string coeff_text, mono_text;
        if (term[0] == 'x' || term[0] == 'y') {
            mono_text = term;
        } else if (term.rfind("z{", 0) == 0) {
            size_t rb = term.find(']');
            if (rb == std::string::npos) throw ParameterError("bad coefficient in: " + term);
            coeff_text = term.substr(0, rb + 1);
            if (rb + 1 < term.size()) {
                if (term[rb + 1] != '*') throw ParameterError("bad term: " + term);
                mono_text = term.substr(rb + 2);
            }
        } else {
            size_t star = term.find('*');
            if (star == std::string::npos) {
                coeff_text = term;
            } else {
                coeff_text = term.substr(0, star);
                mono_text = term.substr(star + 1);
            }
        }
        K c = coeff_text.empty() ? FieldOps<K>::one() : parse_coeff(coeff_text);
        if (sign < 0) c = -c;
        Monomial m = mono_text.empty() ? Monomial::one() : parse_monomial(mono_text, modulus);
        out.add_term(m, c);
    }
    return out;
}

}  // namespace

PolyQ parse_poly_q(const std::string& text, int modulus) {
    return parse_poly<Rational>(text, modulus,
                                [](const std::string& s) { return rational_from_string(s); });
}

PolyC parse_poly_c(const std::string& text, int modulus) {
    return parse_poly<Cyclotomic>(text, modulus, [](const std::string& s) {
        if (s.rfind("z{", 0) == 0) return Cyclotomic::parse(s);
        return Cyclotomic(rational_from_string(s));
    });
}

}  // namespace abelian
