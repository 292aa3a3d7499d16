#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pslab/core.hpp"
#include "pslab/stats.hpp"

namespace pslab {

// The four generating-function variables, in print order.  They pair with
// the statistics: q tracks lb, r tracks ls, s tracks rb, t tracks rs.
enum class Var : int { q = 0, r = 1, s = 2, t = 3 };

inline constexpr Var kAllVars[] = {Var::q, Var::r, Var::s, Var::t};

inline Var var_of(StatKind k) { return static_cast<Var>(static_cast<int>(k)); }
char var_name(Var v);

// Exponent quadruple with graded-lex ordering: total degree first, then
// lexicographic on (e_q, e_r, e_s, e_t).
struct Exp4 {
    std::array<std::uint16_t, 4> e{};

    int total() const { return e[0] + e[1] + e[2] + e[3]; }
    std::uint16_t operator[](std::size_t i) const { return e[i]; }
    bool operator==(const Exp4&) const = default;
    bool operator<(const Exp4& o) const {
        int ta = total(), tb = o.total();
        if (ta != tb) return ta < tb;
        return e < o.e;
    }
};

// Exact polynomial in one variable; no zero coefficients stored.
class Poly1 {
public:
    Poly1() = default;
    explicit Poly1(char var) : var_(var) {}
    static Poly1 constant(mpz_class c, char var = 'q');
    static Poly1 monomial(int degree, mpz_class c, char var = 'q');

    char var() const { return var_; }
    Poly1 with_var(char var) const;

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
    mpz_class coefficient(int degree) const;
    mpz_class leading() const { return coeffs_.empty() ? mpz_class(0) : coeffs_.rbegin()->second; }
    mpz_class constant_term() const { return coefficient(0); }
    mpz_class eval_one() const;

    const std::map<int, mpz_class>& terms() const { return coeffs_; }

    void add_term(int degree, const mpz_class& c);
    Poly1& operator+=(const Poly1& o);
    friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
    friend Poly1 operator*(const Poly1& a, const Poly1& b);

    // Equality compares coefficients only; the variable tag is presentation.
    bool operator==(const Poly1& o) const { return coeffs_ == o.coeffs_; }

    std::string to_text() const;
    std::string to_json() const;
    std::string to_csv() const;

private:
    char var_ = 'q';
    std::map<int, mpz_class> coeffs_;
};

// Exact polynomial in (q, r, s, t); terms kept in graded-lex order.
class Poly4 {
public:
    Poly4() = default;
    static Poly4 constant(mpz_class c);
    static Poly4 one() { return constant(1); }
    static Poly4 monomial(int eq, int er, int es, int et, mpz_class c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exp4, mpz_class>& terms() const { return terms_; }

    mpz_class coefficient(const Exp4& e) const;
    // Highest exponent of one variable; -1 for the zero polynomial.
    int degree_in(Var v) const;
    mpz_class eval_all_ones() const;

    void add_term(const Exp4& e, const mpz_class& c);
    Poly4& operator+=(const Poly4& o);
    friend Poly4 operator+(Poly4 a, const Poly4& b) { return a += b; }
    friend Poly4 operator*(const Poly4& a, const Poly4& b);

    bool operator==(const Poly4&) const = default;

    // Substitutes 1 for the given variables, merging coefficients.
    Poly4 set_one(std::initializer_list<Var> vars) const;
    // Keeps only the variable of the given statistic, all others set to 1.
    Poly1 specialize(StatKind keep) const;

    enum class SwapPair { qt, rs };
    Poly4 swap_vars(SwapPair pair) const;

    std::string to_text() const;
    std::string to_json() const;
    std::string to_csv() const;

private:
    std::map<Exp4, mpz_class> terms_;
};

Poly4 parse_poly4(std::string_view text);
Poly1 parse_poly1(std::string_view text);

// Sum of q^lb r^ls s^rb t^rs over a stream of words.
class DistributionAccumulator {
public:
    void add(std::span<const std::uint8_t> word);
    void merge(const DistributionAccumulator& o);
    const Poly4& poly() const { return poly_; }
    Poly4 take() { return std::move(poly_); }

private:
    Poly4 poly_;
};

Poly4 distribution(const std::vector<Rgf>& words);
// Distribution of R_n(P); pass nullptr for the unrestricted R_n.
Poly4 class_distribution(int n, const class PatternSet* pats, bool prune = true,
                         int limit = kDefaultEnumLimit);

}  // namespace pslab
