#include "pslab/poly.hpp"

#include <cctype>
#include <stdexcept>

#include "pslab/patterns.hpp"

namespace pslab {

char var_name(Var v) {
    switch (v) {
        case Var::q: return 'q';
        case Var::r: return 'r';
        case Var::s: return 's';
        default: return 't';
    }
}

// ---------------------------------------------------------------- Poly1

Poly1 Poly1::constant(mpz_class c, char var) { return monomial(0, std::move(c), var); }

Poly1 Poly1::monomial(int degree, mpz_class c, char var) {
    Poly1 p(var);
    if (degree < 0) throw std::invalid_argument("Poly1: negative degree");
    if (c != 0) p.coeffs_[degree] = std::move(c);
    return p;
}

Poly1 Poly1::with_var(char var) const {
    Poly1 p = *this;
    p.var_ = var;
    return p;
}

mpz_class Poly1::coefficient(int degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? mpz_class(0) : it->second;
}

mpz_class Poly1::eval_one() const {
    mpz_class sum = 0;
    for (const auto& [d, c] : coeffs_) sum += c;
    return sum;
}

void Poly1::add_term(int degree, const mpz_class& c) {
    if (degree < 0) throw std::invalid_argument("Poly1: negative degree");
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(degree, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

Poly1& Poly1::operator+=(const Poly1& o) {
    for (const auto& [d, c] : o.coeffs_) add_term(d, c);
    return *this;
}

Poly1 operator*(const Poly1& a, const Poly1& b) {
    Poly1 out(a.var_);
    for (const auto& [da, ca] : a.coeffs_)
        for (const auto& [db, cb] : b.coeffs_) out.add_term(da + db, ca * cb);
    return out;
}

// ---------------------------------------------------------------- Poly4

Poly4 Poly4::constant(mpz_class c) { return monomial(0, 0, 0, 0, std::move(c)); }

Poly4 Poly4::monomial(int eq, int er, int es, int et, mpz_class c) {
    Poly4 p;
    if (eq < 0 || er < 0 || es < 0 || et < 0) throw std::invalid_argument("Poly4: negative exponent");
    if (eq > 0xffff || er > 0xffff || es > 0xffff || et > 0xffff)
        throw std::invalid_argument("Poly4: exponent exceeds the 16-bit term encoding");
    if (c != 0)
        p.terms_[Exp4{{static_cast<std::uint16_t>(eq), static_cast<std::uint16_t>(er),
                       static_cast<std::uint16_t>(es), static_cast<std::uint16_t>(et)}}] = std::move(c);
    return p;
}

mpz_class Poly4::coefficient(const Exp4& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

int Poly4::degree_in(Var v) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[static_cast<std::size_t>(v)]));
    return d;
}

mpz_class Poly4::eval_all_ones() const {
    mpz_class sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
}

void Poly4::add_term(const Exp4& e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly4& Poly4::operator+=(const Poly4& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly4 operator*(const Poly4& a, const Poly4& b) {
    Poly4 out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exp4 e{{static_cast<std::uint16_t>(ea.e[0] + eb.e[0]), static_cast<std::uint16_t>(ea.e[1] + eb.e[1]),
                    static_cast<std::uint16_t>(ea.e[2] + eb.e[2]), static_cast<std::uint16_t>(ea.e[3] + eb.e[3])}};
            out.add_term(e, ca * cb);
        }
    return out;
}

Poly4 Poly4::set_one(std::initializer_list<Var> vars) const {
    bool drop[4] = {false, false, false, false};
    for (Var v : vars) drop[static_cast<int>(v)] = true;
    Poly4 out;
    for (const auto& [e, c] : terms_) {
        Exp4 ne = e;
        for (int i = 0; i < 4; ++i)
            if (drop[i]) ne.e[static_cast<std::size_t>(i)] = 0;
        out.add_term(ne, c);
    }
    return out;
}

Poly1 Poly4::specialize(StatKind keep) const {
    int kept = static_cast<int>(var_of(keep));
    Poly1 out(var_name(var_of(keep)));
    for (const auto& [e, c] : terms_) out.add_term(e[static_cast<std::size_t>(kept)], c);
    return out;
}

Poly4 Poly4::swap_vars(SwapPair pair) const {
    Poly4 out;
    for (const auto& [e, c] : terms_) {
        Exp4 ne = e;
        if (pair == SwapPair::qt) std::swap(ne.e[0], ne.e[3]);
        else std::swap(ne.e[1], ne.e[2]);
        out.add_term(ne, c);
    }
    return out;
}

// ---------------------------------------------------------------- text

namespace {

void append_term(std::string& out, bool first, const mpz_class& coeff, const std::string& vars) {
    mpz_class c = coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
        if (negative) out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    if (vars.empty()) {
        out += c.get_str();
    } else {
        if (c != 1) {
            out += c.get_str();
            out += '*';
        }
        out += vars;
    }
}

std::string var_power(char v, int e) {
    if (e == 0) return "";
    std::string s(1, v);
    if (e > 1) s += "^" + std::to_string(e);
    return s;
}

}  // namespace

std::string Poly1::to_text() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [d, c] : coeffs_) {
        append_term(out, first, c, var_power(var_, d));
        first = false;
    }
    return out;
}

std::string Poly4::to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string vars;
        for (int i = 0; i < 4; ++i) {
            std::string p = var_power(var_name(static_cast<Var>(i)), e[static_cast<std::size_t>(i)]);
            if (!p.empty()) {
                if (!vars.empty()) vars += '*';
                vars += p;
            }
        }
        append_term(out, first, c, vars);
        first = false;
    }
    return out;
}

std::string Poly1::to_json() const {
    std::string out = "{\"vars\":[\"";
    out += var_;
    out += "\"],\"terms\":[";
    bool first = true;
    for (const auto& [d, c] : coeffs_) {
        if (!first) out += ',';
        out += "{\"e\":[" + std::to_string(d) + "],\"c\":\"" + c.get_str() + "\"}";
        first = false;
    }
    out += "]}";
    return out;
}

std::string Poly4::to_json() const {
    std::string out = "{\"vars\":[\"q\",\"r\",\"s\",\"t\"],\"terms\":[";
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out += ',';
        out += "{\"e\":[" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) +
               "," + std::to_string(e[3]) + "],\"c\":\"" + c.get_str() + "\"}";
        first = false;
    }
    out += "]}";
    return out;
}

std::string Poly1::to_csv() const {
    std::string out = "e,coeff\n";
    for (const auto& [d, c] : coeffs_) out += std::to_string(d) + "," + c.get_str() + "\n";
    return out;
}

std::string Poly4::to_csv() const {
    std::string out = "e_q,e_r,e_s,e_t,coeff\n";
    for (const auto& [e, c] : terms_)
        out += std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) + "," +
               std::to_string(e[3]) + "," + c.get_str() + "\n";
    return out;
}

// ---------------------------------------------------------------- parsing

namespace {

struct PolyParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool done() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    mpz_class parse_int() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("poly parse: expected integer");
        return mpz_class(std::string(text.substr(start, pos - start)), 10);
    }

    // One term: optional coefficient and variable powers joined by '*'.
    void parse_term(int sign, Poly4& out) {
        mpz_class coeff = 1;
        int exps[4] = {0, 0, 0, 0};
        bool any = false;
        while (true) {
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= parse_int();
                any = true;
            } else if (c == 'q' || c == 'r' || c == 's' || c == 't') {
                ++pos;
                int idx = c == 'q' ? 0 : c == 'r' ? 1 : c == 's' ? 2 : 3;
                int e = 1;
                if (peek() == '^') {
                    ++pos;
                    e = static_cast<int>(parse_int().get_si());
                }
                exps[idx] += e;
                any = true;
            } else {
                throw std::invalid_argument("poly parse: unexpected character");
            }
            if (peek() == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!any) throw std::invalid_argument("poly parse: empty term");
        out += Poly4::monomial(exps[0], exps[1], exps[2], exps[3], sign * coeff);
    }
};

}  // namespace

Poly4 parse_poly4(std::string_view text) {
    PolyParser p{text};
    Poly4 out;
    if (p.done()) throw std::invalid_argument("poly parse: empty input");
    int sign = 1;
    if (p.peek() == '-') {
        sign = -1;
        ++p.pos;
    }
    p.parse_term(sign, out);
    while (!p.done()) {
        char c = p.peek();
        if (c == '+') sign = 1;
        else if (c == '-') sign = -1;
        else throw std::invalid_argument("poly parse: expected + or -");
        ++p.pos;
        p.parse_term(sign, out);
    }
    // "0" parses to the zero polynomial via a vanishing term.
    return out;
}

Poly1 parse_poly1(std::string_view text) {
    Poly4 p = parse_poly4(text);
    char var = 'q';
    int vars_used = 0;
    for (Var v : kAllVars)
        if (p.degree_in(v) > 0) {
            var = var_name(v);
            ++vars_used;
        }
    if (vars_used > 1) throw std::invalid_argument("parse_poly1: more than one variable");
    Poly1 out(var);
    for (const auto& [e, c] : p.terms()) out.add_term(e.total(), c);
    return out;
}

// ---------------------------------------------------------------- streams

void DistributionAccumulator::add(std::span<const std::uint8_t> word) {
    StatQuad q = stat_quad(word);
    poly_.add_term(Exp4{{static_cast<std::uint16_t>(q.lb), static_cast<std::uint16_t>(q.ls),
                         static_cast<std::uint16_t>(q.rb), static_cast<std::uint16_t>(q.rs)}},
                   1);
}

void DistributionAccumulator::merge(const DistributionAccumulator& o) { poly_ += o.poly_; }

Poly4 distribution(const std::vector<Rgf>& words) {
    DistributionAccumulator acc;
    for (const auto& w : words) acc.add(w.letters());
    return acc.take();
}

Poly4 class_distribution(int n, const PatternSet* pats, bool prune, int limit) {
    DistributionAccumulator acc;
    if (pats == nullptr) {
        for_each_rgf(n, [&](std::span<const std::uint8_t> w) { acc.add(w); }, limit);
    } else {
        for_each_avoiding(n, *pats, [&](std::span<const std::uint8_t> w) { acc.add(w); }, prune, limit);
    }
    return acc.take();
}

}  // namespace pslab
