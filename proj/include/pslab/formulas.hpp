#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pslab/patterns.hpp"
#include "pslab/poly.hpp"

namespace pslab {

// Binomial coefficient with the convention the closed-form sums rely on:
// C(a, 0) = 1 for every integer a (negative included); zero when b < 0,
// when 0 <= a < b, or when a < 0 < b; the ordinary value otherwise.
mpz_class binom_conv(long a, long b);

// Fibonacci numbers seeded F_0 = F_1 = 1.
mpz_class fibonacci(int n);

// 1 * 3 * 5 * ... * (2k-1); empty product for k = 0.  Note this is the ODD
// product even though the avoidance-count literature writes it as (2k)!!.
mpz_class odd_double_factorial(int k);

// Bell numbers via the Bell-triangle recurrence (independent of enumeration).
mpz_class bell_number(int n);

// |Pi_n(pi)| for the five patterns of [3]; n = 0 counts the empty partition.
mpz_class cardinality(int n, const SetPartition& pi);

// Number of divisors d of k with d + k/d + 1 <= n; the q^k coefficient of
// the lb polynomial over the 12/3 class for k >= 1.
long divisor_count(int n, int k);
long tau(int k);

struct ClosedForm {
    Poly4 poly;
    bool corrected = false;  // printed source formula disagreed with enumeration
    std::string note;        // what was corrected, empty otherwise
};

struct ClosedForm1 {
    Poly1 poly;
    bool corrected = false;
    std::string note;
};

// Four-variable closed forms.  Supported: the four singleton sets {1/2/3},
// {1/23}, {13/2}, {12/3} and the nine two-pattern subsets of the partitions
// of [3] (those not containing both 1/2/3 and 123).  Pair forms hold for
// n >= 3; below that they return the distribution of the full R_n.
ClosedForm f_closed(const PatternSet& pats, int n);
// The formula exactly as printed in the source, correction not applied.
Poly4 f_closed_printed(const PatternSet& pats, int n);

// Single-statistic closed forms.  Supported: all four statistics for each of
// {1/2/3}, {1/23}, {13/2}, {12/3}; ls for {123}; lb for {14/2/3}, for
// {14/2/3, 1/2/.../t} (t singleton blocks), and for {14/2/3, 13/2/4}.
ClosedForm1 stat_closed(const PatternSet& pats, StatKind k, int n);
Poly1 stat_closed_printed(const PatternSet& pats, StatKind k, int n);

struct CoeffFacts {
    std::optional<long> degree;
    std::optional<mpz_class> leading;
    std::optional<mpz_class> constant;
    std::optional<mpz_class> linear;  // coefficient of the first power

    std::string to_text() const;
};

enum class FactsSelector { lb_123, rs_123, rb_123, lb_14_2_3_and_123 };

// The claimed degree/leading/constant/linear facts for the statistic
// polynomials without a full closed form; n >= 3.
CoeffFacts coeff_facts(FactsSelector which, int n);

// The explicit word families of the two- and three/four-pattern avoidance
// tables, instantiated at n >= 3 and sorted lexicographically.
std::vector<Rgf> table_words(const PatternSet& pats, int n);
bool has_table_family(const PatternSet& pats);

// ------------------------------------------------------------- registry

// Every closed form is addressable by a stable string id, e.g. "f.13_2",
// "f.pair.1_23+12_3", "ls.123", "lb.123.facts", "card.123".
struct FormulaOutput {
    std::optional<Poly4> poly4;
    std::optional<Poly1> poly1;
    std::optional<CoeffFacts> facts;
    bool corrected = false;
    std::string note;
};

// t_param is required by "lb.14_2_3+singletons" (the 1/2/.../t companion
// pattern) and rejected elsewhere.
FormulaOutput evaluate_formula(const std::string& id, int n, std::optional<int> t_param = std::nullopt);
std::vector<std::string> formula_ids();

// t singleton blocks 1/2/.../t.
SetPartition singletons_pattern(int t);

}  // namespace pslab
