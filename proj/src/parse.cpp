#include "linprod/parse.hpp"

#include <cctype>

namespace linprod {

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected a number", pos);
        return s.substr(start, pos - start);
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() &&
            (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) throw ParseError("expected a variable or number", pos);
        return s.substr(start, pos - start);
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
    Lexer lx{text};
    std::vector<Term> terms;
    bool first = true;
    while (!lx.done()) {
        Coeff sign = Coeff::one(ring->field());
        if (lx.accept('-'))
            sign = -sign;
        else if (lx.accept('+')) {
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", lx.pos);
        }
        first = false;

        Coeff coeff = sign;
        Monomial mono(ring->nvars());
        bool any_factor = false;
        while (true) {
            char c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num = lx.number();
                std::string lit = num;
                if (lx.accept('/')) lit += "/" + lx.number();
                coeff = coeff * Coeff::from_string(lit, ring->field());
                any_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t at = lx.pos;
                std::string name = lx.ident();
                int vi = ring->var_index(name);
                if (vi < 0) throw ParseError("unknown variable '" + name + "'", at);
                int e = 1;
                if (lx.accept('^')) {
                    std::size_t ep = lx.pos;
                    std::string es = lx.number();
                    try {
                        e = std::stoi(es);
                    } catch (...) {
                        throw ParseError("malformed exponent", ep);
                    }
                    if (e < 0) throw ParseError("malformed exponent", ep);
                }
                std::vector<int> ev(ring->nvars(), 0);
                ev[vi] = e;
                mono = mono * Monomial(std::move(ev));
                any_factor = true;
            } else if (c == '/') {
                throw ParseError("division is not allowed in polynomial input", lx.pos);
            } else {
                break;
            }
            if (!lx.accept('*')) break;
        }
        if (!any_factor) throw ParseError("empty term", lx.pos);
        if (!coeff.is_zero()) terms.push_back({std::move(mono), std::move(coeff)});
    }
    if (first) throw ParseError("empty polynomial text", 0);
    return Polynomial(ring, std::move(terms));
}

FieldSpec field_from_string(const std::string& s) {
    if (s == "q" || s == "Q" || s == "rational") return FieldSpec{};
    if (s.rfind("p:", 0) == 0) {
        unsigned long p = std::stoul(s.substr(2));
        if (p < 2) throw Error("invalid prime field: " + s);
        return FieldSpec{p};
    }
    throw Error("unknown field spec: " + s + " (use \"q\" or \"p:<prime>\")");
}

RingPtr ring_from_json(const nlohmann::json& j) {
    std::vector<std::string> vars = j.at("variables").get<std::vector<std::string>>();
    FieldSpec field;
    if (j.contains("field")) field = field_from_string(j.at("field").get<std::string>());
    std::optional<MatrixLayout> layout;
    if (j.contains("matrix_layout")) {
        layout = MatrixLayout{j["matrix_layout"].at("rows").get<int>(),
                              j["matrix_layout"].at("cols").get<int>()};
    }
    std::optional<std::vector<MultiDegree>> grading;
    if (j.contains("grading"))
        grading = j.at("grading").get<std::vector<MultiDegree>>();
    return Ring::make(std::move(vars), field, layout, std::move(grading));
}

nlohmann::json ring_to_json(const RingPtr& ring) {
    nlohmann::json j;
    j["variables"] = ring->var_names();
    j["field"] = ring->field().str();
    if (ring->layout())
        j["matrix_layout"] = {{"rows", ring->layout()->rows}, {"cols", ring->layout()->cols}};
    bool trivial = true;
    for (int i = 0; i < ring->nvars(); ++i)
        if (ring->var_degree(i) != MultiDegree{1}) trivial = false;
    if (!trivial) {
        nlohmann::json g = nlohmann::json::array();
        for (int i = 0; i < ring->nvars(); ++i) g.push_back(ring->var_degree(i));
        j["grading"] = g;
    }
    return j;
}

}  // namespace linprod
