#include "pslab/formulas.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace pslab {

namespace {

mpz_class binom(unsigned long a, unsigned long b) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), a, b);
    return out;
}

mpz_class factorial(unsigned long k) {
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), k);
    return out;
}

mpz_class pow2(int e) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return out;
}

long choose2(long m) { return m >= 2 ? m * (m - 1) / 2 : 0; }

// Visits every size-k subset of {1..m} in increasing value order.
template <typename F>
void for_each_subset(int m, int k, F&& f) {
    if (k < 0 || k > m) return;
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        f(c);
        if (k == 0) return;
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == m - (k - 1 - i)) --i;
        if (i < 0) return;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
}

enum class Pat3 { p1_2_3, p1_23, p13_2, p12_3, p123 };

std::optional<Pat3> pat3_of(const SetPartition& pi) {
    if (pi.n() != 3) return std::nullopt;
    Rgf r = to_rgf(pi);
    Letters w(r.letters().begin(), r.letters().end());
    if (w == Letters{1, 2, 3}) return Pat3::p1_2_3;
    if (w == Letters{1, 2, 2}) return Pat3::p1_23;
    if (w == Letters{1, 2, 1}) return Pat3::p13_2;
    if (w == Letters{1, 1, 2}) return Pat3::p12_3;
    return Pat3::p123;
}

bool is_word(const SetPartition& pi, const Letters& w) {
    return std::ranges::equal(to_rgf(pi).letters(), w);
}

// t singleton blocks?  Returns t >= 2, or 0.
int singleton_count(const SetPartition& pi) {
    if (pi.n() < 2) return 0;
    for (const auto& b : pi.blocks())
        if (b.size() != 1) return 0;
    return pi.n();
}

}  // namespace

mpz_class binom_conv(long a, long b) {
    if (b == 0) return 1;
    if (b < 0) return 0;
    if (a < 0) return 0;
    if (b > a) return 0;
    return binom(static_cast<unsigned long>(a), static_cast<unsigned long>(b));
}

mpz_class fibonacci(int n) {
    if (n < 0) throw std::invalid_argument("fibonacci: negative index");
    mpz_class a = 1, b = 1;  // F_0, F_1
    for (int i = 2; i <= n; ++i) {
        mpz_class c = a + b;
        a = b;
        b = c;
    }
    return n == 0 ? a : b;
}

mpz_class odd_double_factorial(int k) {
    mpz_class out = 1;
    for (int i = 1; i <= k; ++i) out *= 2 * i - 1;
    return out;
}

mpz_class bell_number(int n) {
    if (n < 0) throw std::invalid_argument("bell_number: negative index");
    std::vector<mpz_class> row = {1};
    mpz_class bell = 1;  // B_0
    for (int i = 1; i <= n; ++i) {
        std::vector<mpz_class> next;
        next.reserve(row.size() + 1);
        next.push_back(row.back());
        for (const auto& x : row) next.push_back(next.back() + x);
        bell = next.front();
        row = std::move(next);
    }
    return bell;
}

mpz_class cardinality(int n, const SetPartition& pi) {
    auto p = pat3_of(pi);
    if (!p) throw std::domain_error("cardinality: closed counts exist only for the patterns of [3]");
    if (n == 0) return 1;
    switch (*p) {
        case Pat3::p1_2_3:
        case Pat3::p13_2: return pow2(n - 1);
        case Pat3::p1_23:
        case Pat3::p12_3: return 1 + binom_conv(n, 2);
        default: {
            mpz_class sum = 0;
            for (int k = 0; 2 * k <= n; ++k) sum += binom_conv(n, 2 * k) * odd_double_factorial(k);
            return sum;
        }
    }
}

long divisor_count(int n, int k) {
    if (k < 1) throw std::invalid_argument("divisor_count: k must be >= 1");
    long count = 0;
    for (int d = 1; d <= k; ++d)
        if (k % d == 0 && d + k / d + 1 <= n) ++count;
    return count;
}

long tau(int k) {
    if (k < 1) throw std::invalid_argument("tau: k must be >= 1");
    long count = 0;
    for (int d = 1; d <= k; ++d)
        if (k % d == 0) ++count;
    return count;
}

// ------------------------------------------------- four-variable forms

namespace {

Poly4 f_1_2_3(int n) {
    Poly4 p = Poly4::one();
    for (int l = 1; l <= n - 1; ++l) p += Poly4::monomial(0, n - l, l, 0, 1);
    for (int l = 2; l <= n - 1; ++l)
        for (int k = 0; k <= n - l - 1; ++k)
            for (int i = 1; i <= l - 1; ++i)
                for (int j = 1; j <= l - i; ++j) {
                    mpz_class c = binom_conv(n - i - j - k - 2, l - i - j);
                    if (c == 0) continue;
                    int es = l - (k == 0 ? j : 0);
                    p += Poly4::monomial(l - i, n - l, es, n - l - k, c);
                }
    return p;
}

Poly4 f_1_23(int n) {
    Poly4 p = Poly4::monomial(0, static_cast<int>(choose2(n)), static_cast<int>(choose2(n)), 0, 1);
    for (int m = 1; m <= n - 1; ++m)
        for (int j = 1; j <= m; ++j)
            p += Poly4::monomial(j - 1, static_cast<int>(choose2(m)),
                                 (n - m) * (m - 1) + m - j + static_cast<int>(choose2(m - 1)), j - 1, 1);
    return p;
}

Poly4 f_13_2(int n) {
    Poly4 p = Poly4::one();
    for (int i = 1; i <= n - 1; ++i) {
        Poly4 factor = Poly4::one() + Poly4::monomial(0, n - i, i, 0, 1);
        p = p * factor;
    }
    return p;
}

Poly4 f_12_3(int n) {
    Poly4 p = Poly4::monomial(0, static_cast<int>(choose2(n)), static_cast<int>(choose2(n)), 0, 1);
    for (int m = 1; m <= n - 1; ++m)
        for (int i = 1; i <= m; ++i)
            p += Poly4::monomial((n - m) * (m - i), static_cast<int>(choose2(m)) + (n - m) * (i - 1),
                                 static_cast<int>(choose2(m)), m - i, 1);
    return p;
}

// Shared by the ls form over the 123 class and the (13/2, 123) pair: words
// with maximum m are the run 12...m plus a set L of n-m repeated letters.
template <typename PerSubset>
void for_each_repeat_set(int n, PerSubset&& f) {
    for (int m = (n + 1) / 2; m <= n; ++m) {
        for_each_subset(m, n - m, [&](const std::vector<int>& ell) { f(m, ell); });
    }
}

Poly4 f_13_2_123(int n) {
    Poly4 p;
    for_each_repeat_set(n, [&](int m, const std::vector<int>& ell) {
        long er = choose2(m), es = choose2(m);
        for (int l : ell) {
            er += l - 1;
            es += m - l;
        }
        p += Poly4::monomial(0, static_cast<int>(er), static_cast<int>(es), 0, 1);
    });
    return p;
}

Poly4 small_n_distribution(int n) {
    // Pi_n(P) = Pi_n for patterns of [3] when n < 3.
    if (n <= 1) return Poly4::one();
    return Poly4::one() + Poly4::monomial(0, 1, 1, 0, 1);  // R_2 = {11, 12}
}

struct PairKey {
    Pat3 a, b;
    bool operator==(const PairKey&) const = default;
};

std::optional<PairKey> pair_of(const PatternSet& pats) {
    if (pats.size() != 2) return std::nullopt;
    auto a = pat3_of(pats.patterns()[0]);
    auto b = pat3_of(pats.patterns()[1]);
    if (!a || !b) return std::nullopt;
    if (*a == Pat3::p1_2_3 && *b == Pat3::p123) return std::nullopt;  // class empty for n >= 5
    return PairKey{*a, *b};
}

Poly4 f_pair(const PairKey& key, int n, bool printed_form, bool* corrected, std::string* note) {
    if (corrected) *corrected = false;
    if (n < 3) return small_n_distribution(n);
    Poly4 p;
    auto C2 = [](long m) { return static_cast<int>(choose2(m)); };
    if (key == PairKey{Pat3::p1_2_3, Pat3::p1_23}) {
        p = Poly4::one() + Poly4::monomial(0, 1, n - 1, 0, 1) + Poly4::monomial(1, 1, n - 2, 1, 1);
    } else if (key == PairKey{Pat3::p1_2_3, Pat3::p13_2}) {
        p = Poly4::one();
        for (int i = 1; i <= n - 1; ++i) p += Poly4::monomial(0, i, n - i, 0, 1);
    } else if (key == PairKey{Pat3::p1_2_3, Pat3::p12_3}) {
        // Printed middle term r s^{n-1}; enumeration shows the word 1 2^{n-1}
        // carries (ls, rb) = (n-1, 1), so the exponents transpose.
        p = Poly4::one() + Poly4::monomial(n - 2, 1, 1, 1, 1);
        if (printed_form) {
            p += Poly4::monomial(0, 1, n - 1, 0, 1);
        } else {
            p += Poly4::monomial(0, n - 1, 1, 0, 1);
            if (corrected) *corrected = true;
            if (note)
                *note = "middle term corrected from r*s^(n-1) to r^(n-1)*s to match enumeration";
        }
    } else if (key == PairKey{Pat3::p1_23, Pat3::p13_2}) {
        p = Poly4::one();
        for (int i = 1; i <= n - 1; ++i)
            p += Poly4::monomial(0, C2(n - i + 1), C2(n) - C2(i), 0, 1);
    } else if (key == PairKey{Pat3::p1_23, Pat3::p12_3}) {
        p = Poly4::one() + Poly4::monomial(n - 2, C2(n - 1), C2(n - 1), n - 2, 1) +
            Poly4::monomial(0, C2(n), C2(n), 0, 1);
    } else if (key == PairKey{Pat3::p1_23, Pat3::p123}) {
        p = Poly4::monomial(0, C2(n), C2(n), 0, 1);
        for (int i = 0; i <= n - 2; ++i) p += Poly4::monomial(i, C2(n - 1), C2(n) - i - 1, i, 1);
    } else if (key == PairKey{Pat3::p13_2, Pat3::p12_3}) {
        p = Poly4::one();
        for (int i = 1; i <= n - 1; ++i)
            p += Poly4::monomial(0, C2(n) - C2(i), C2(n - i + 1), 0, 1);
    } else if (key == PairKey{Pat3::p13_2, Pat3::p123}) {
        p = f_13_2_123(n);
    } else if (key == PairKey{Pat3::p12_3, Pat3::p123}) {
        p = Poly4::monomial(0, C2(n), C2(n), 0, 1);
        for (int i = 0; i <= n - 2; ++i) p += Poly4::monomial(i, C2(n) - i - 1, C2(n - 1), i, 1);
    } else {
        throw std::domain_error("f_closed: unsupported pattern pair");
    }
    return p;
}

const char* kSupportedF =
    "supported: {1/2/3}, {1/23}, {13/2}, {12/3} and the nine pairs from the partitions of [3] "
    "without {1/2/3,123}";

Poly4 f_closed_impl(const PatternSet& pats, int n, bool printed_form, bool* corrected,
                    std::string* note) {
    if (corrected) *corrected = false;
    if (pats.size() == 1) {
        auto p = pat3_of(pats.patterns()[0]);
        if (!p || *p == Pat3::p123) throw std::domain_error(std::string("f_closed: ") + kSupportedF);
        if (n == 0) return Poly4::one();
        switch (*p) {
            case Pat3::p1_2_3: return f_1_2_3(n);
            case Pat3::p1_23: return f_1_23(n);
            case Pat3::p13_2: return f_13_2(n);
            default: return f_12_3(n);
        }
    }
    auto key = pair_of(pats);
    if (!key) throw std::domain_error(std::string("f_closed: ") + kSupportedF);
    if (n == 0) return Poly4::one();
    return f_pair(*key, n, printed_form, corrected, note);
}

}  // namespace

ClosedForm f_closed(const PatternSet& pats, int n) {
    ClosedForm out;
    out.poly = f_closed_impl(pats, n, false, &out.corrected, &out.note);
    return out;
}

Poly4 f_closed_printed(const PatternSet& pats, int n) {
    return f_closed_impl(pats, n, true, nullptr, nullptr);
}

// ------------------------------------------------- single-variable forms

namespace {

Poly1 ls_123_closed(int n) {
    Poly1 p('q');
    for_each_repeat_set(n, [&](int m, const std::vector<int>& ell) {
        mpz_class coeff = 1;
        // ell ascending; the g-th placed letter is the g-th largest.
        int k = static_cast<int>(ell.size());
        for (int g = 1; g <= k; ++g) coeff *= m - ell[static_cast<std::size_t>(k - g)] + g;
        long expo = choose2(m);
        for (int l : ell) expo += l - 1;
        p.add_term(static_cast<int>(expo), coeff);
    });
    return p;
}

// Inner weight of the lb form over the 14/2/3 class: number of ways to
// interleave k dale indices with m-1 later left-right maxima.
mpz_class dale_run_weight(int k, int m) {
    mpz_class sum = 0;
    for (int j = 1; j <= std::min(k, m); ++j)
        sum += binom_conv(k - 1, j - 1) * binom_conv(m - j, j);
    return sum;
}

Poly1 lb_14_2_3_closed(int n, int max_m) {
    Poly1 p('q');
    for (int k = 1; k <= n - 2; ++k) {
        mpz_class coeff = 0;
        for (int m = 2; m <= std::min(max_m, n - k); ++m)
            coeff += binom_conv(n - 1, k + m - 1) * dale_run_weight(k, m);
        p.add_term(k, coeff);
    }
    return p;
}

Poly1 lb_14_2_3_13_2_4_closed(int n) {
    Poly1 p = Poly1::constant(pow2(n - 1));
    for (int k = 1; k <= n - 2; ++k) {
        mpz_class coeff = 0;
        for (int m = 2; m <= n - k; ++m) coeff += binom_conv(n - 1, k + m - 1);
        p.add_term(k, coeff);
    }
    return p;
}

const char* kSupportedStat =
    "supported: every statistic for {1/2/3}, {1/23}, {13/2}, {12/3}; ls for {123}; lb for "
    "{14/2/3}, {14/2/3, 1/2/.../t}, {14/2/3, 13/2/4}";

Poly1 stat_closed_impl(const PatternSet& pats, StatKind kind, int n, bool printed_form,
                       bool* corrected, std::string* note) {
    if (corrected) *corrected = false;
    if (n == 0) return Poly1::constant(1);
    auto C2 = [](long m) { return static_cast<int>(choose2(m)); };
    if (pats.size() == 1) {
        auto p3 = pat3_of(pats.patterns()[0]);
        if (p3 == Pat3::p1_2_3) {
            if (kind == StatKind::lb || kind == StatKind::rs) {
                Poly1 p = Poly1::constant(1);
                for (int k = 0; k <= n - 2; ++k) p.add_term(k, binom_conv(n - 1, k + 1));
                return p;
            }
            Poly1 p;  // (q+1)^{n-1}
            for (int k = 0; k <= n - 1; ++k) p.add_term(k, binom_conv(n - 1, k));
            return p;
        }
        if (p3 == Pat3::p1_23) {
            if (kind == StatKind::lb || kind == StatKind::rs) {
                Poly1 p = Poly1::constant(1);
                for (int j = 1; j <= n - 1; ++j) p.add_term(j - 1, n - j);
                return p;
            }
            if (kind == StatKind::ls) {
                Poly1 p = Poly1::monomial(C2(n), 1);
                for (int m = 1; m <= n - 1; ++m) p.add_term(C2(m), m);
                return p;
            }
            Poly1 p = Poly1::monomial(C2(n), 1);
            for (int m = 1; m <= n - 1; ++m)
                for (int j = 1; j <= m; ++j) p.add_term((n - m) * (m - 1) + m - j + C2(m - 1), 1);
            return p;
        }
        if (p3 == Pat3::p13_2) {
            if (kind == StatKind::lb || kind == StatKind::rs) return Poly1::constant(pow2(n - 1));
            Poly1 p = Poly1::constant(1);
            for (int i = 1; i <= n - 1; ++i) {
                Poly1 factor = Poly1::constant(1);
                factor.add_term(i, 1);
                p = p * factor;
            }
            return p;
        }
        if (p3 == Pat3::p12_3) {
            if (kind == StatKind::ls) {
                Poly1 p = Poly1::monomial(C2(n), 1);
                for (int m = 1; m <= n - 1; ++m)
                    for (int i = 1; i <= m; ++i) p.add_term(C2(m) + (n - m) * (i - 1), 1);
                return p;
            }
            if (kind == StatKind::rb) {
                Poly1 p = Poly1::monomial(C2(n), 1);
                for (int m = 1; m <= n - 1; ++m) p.add_term(C2(m), m);
                return p;
            }
            if (kind == StatKind::rs) {
                Poly1 p = Poly1::constant(1);
                for (int k = 0; k <= n - 2; ++k) p.add_term(k, n - k - 1);
                return p;
            }
            // lb: divisor-count coefficients; the constant term is the number
            // of words with no descent contribution, which is n.
            Poly1 p = Poly1::constant(n);
            int deg = (n - 1) * (n - 1) / 4;
            for (int k = 1; k <= deg; ++k) p.add_term(k, divisor_count(n, k));
            return p;
        }
        if (p3 == Pat3::p123 && kind == StatKind::ls) return ls_123_closed(n);
        if (is_word(pats.patterns()[0], Letters{1, 2, 3, 1}) && kind == StatKind::lb) {
            Poly1 p = Poly1::constant(pow2(n - 1));
            p += lb_14_2_3_closed(n, n);
            return p;
        }
        throw std::domain_error(std::string("stat_closed: ") + kSupportedStat);
    }
    if (pats.size() == 2 && kind == StatKind::lb) {
        bool has_dale_pattern = false;
        int t = 0;
        bool has_13_2_4 = false;
        for (const auto& pi : pats.patterns()) {
            if (is_word(pi, Letters{1, 2, 3, 1})) has_dale_pattern = true;
            else if (is_word(pi, Letters{1, 2, 1, 3})) has_13_2_4 = true;
            else if (int s = singleton_count(pi); s >= 2) t = s;
        }
        if (has_dale_pattern && has_13_2_4) return lb_14_2_3_13_2_4_closed(n);
        if (has_dale_pattern && t >= 2) {
            // Printed constant sums C(n, i); the layered words with maximum
            // below t number sum_i C(n-1, i), which is what enumeration gives.
            // The two agree only for t = 2, where the sums stop at i = 0.
            Poly1 p;
            for (int i = 0; i <= t - 2; ++i)
                p.add_term(0, binom_conv((printed_form ? n : n - 1), i));
            p += lb_14_2_3_closed(n, t - 1);
            if (!printed_form && t >= 3) {
                if (corrected) *corrected = true;
                if (note)
                    *note = "constant term corrected from sum C(n,i) to sum C(n-1,i) "
                            "to match enumeration";
            }
            return p;
        }
    }
    throw std::domain_error(std::string("stat_closed: ") + kSupportedStat);
}

}  // namespace

ClosedForm1 stat_closed(const PatternSet& pats, StatKind k, int n) {
    ClosedForm1 out;
    out.poly = stat_closed_impl(pats, k, n, false, &out.corrected, &out.note);
    return out;
}

Poly1 stat_closed_printed(const PatternSet& pats, StatKind k, int n) {
    return stat_closed_impl(pats, k, n, true, nullptr, nullptr);
}

// ------------------------------------------------- coefficient facts

std::string CoeffFacts::to_text() const {
    std::string out;
    auto field = [&out](const char* name, const std::string& v) {
        if (!out.empty()) out += ' ';
        out += name;
        out += '=';
        out += v;
    };
    if (degree) field("degree", std::to_string(*degree));
    if (leading) field("leading", leading->get_str());
    if (constant) field("constant", constant->get_str());
    if (linear) field("linear", linear->get_str());
    return out;
}

CoeffFacts coeff_facts(FactsSelector which, int n) {
    if (n < 3) throw std::invalid_argument("coeff_facts: needs n >= 3");
    CoeffFacts facts;
    switch (which) {
        case FactsSelector::lb_123: {
            facts.degree = static_cast<long>(n) * (n - 1) / 6;
            int k = n / 3;  // n = 3k or 3k+1 or 3k+2
            facts.leading = n % 3 == 2 ? mpz_class((k + 2) * factorial(static_cast<unsigned long>(k)))
                                       : factorial(static_cast<unsigned long>(k));
            facts.constant = fibonacci(n);
            facts.linear = mpz_class(n - 2) * fibonacci(n - 2);
            break;
        }
        case FactsSelector::rs_123: {
            facts.degree = static_cast<long>(n - 1) * (n - 1) / 4;
            facts.leading = n % 2 == 1 ? 1 : 2;
            facts.constant = fibonacci(n);
            break;
        }
        case FactsSelector::rb_123: {
            facts.degree = choose2(n);
            facts.leading = 1;
            break;
        }
        case FactsSelector::lb_14_2_3_and_123: {
            facts.degree = n / 3;
            if (n % 3 == 0) facts.leading = 1;
            else if (n % 3 == 1) facts.leading = n;
            else facts.leading = mpz_class(3L * n * n - 7 * n + 14) / 6;
            break;
        }
    }
    return facts;
}

// ------------------------------------------------- table families

namespace {

Rgf word_of(std::vector<int> letters) {
    Letters w(letters.begin(), letters.end());
    return Rgf(std::move(w));
}

std::vector<int> run(int value, int count) { return std::vector<int>(static_cast<std::size_t>(count), value); }

std::vector<int> cat(std::initializer_list<std::vector<int>> parts) {
    std::vector<int> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

std::vector<int> iota_word(int from, int to) {  // from, from+1, ..., to (empty if to < from)
    std::vector<int> out;
    for (int v = from; v <= to; ++v) out.push_back(v);
    return out;
}

// Layered words whose layer sizes are all 1 or 2.
std::vector<Rgf> thin_layered_words(int n) {
    std::vector<Rgf> out;
    std::vector<int> word;
    std::function<void(int, int)> go = [&](int remaining, int next) {
        if (remaining == 0) {
            out.push_back(word_of(word));
            return;
        }
        for (int take = 1; take <= std::min(2, remaining); ++take) {
            for (int i = 0; i < take; ++i) word.push_back(next);
            go(remaining - take, next + 1);
            for (int i = 0; i < take; ++i) word.pop_back();
        }
    };
    go(n, 1);
    return out;
}

using FamilyFn = std::function<std::vector<Rgf>(int)>;

const std::map<std::string, FamilyFn>& family_table() {
    static const std::map<std::string, FamilyFn> table = {
        {"1/2/3,1/23",
         [](int n) {
             return std::vector<Rgf>{word_of(run(1, n)), word_of(cat({run(1, n - 1), {2}})),
                                     word_of(cat({run(1, n - 2), {2, 1}}))};
         }},
        {"1/2/3,13/2",
         [](int n) {
             std::vector<Rgf> out;
             for (int m = 1; m <= n; ++m) out.push_back(word_of(cat({run(1, m), run(2, n - m)})));
             return out;
         }},
        {"1/2/3,12/3",
         [](int n) {
             return std::vector<Rgf>{word_of(run(1, n)), word_of(cat({{1}, run(2, n - 1)})),
                                     word_of(cat({{1, 2}, run(1, n - 2)}))};
         }},
        {"1/23,13/2",
         [](int n) {
             std::vector<Rgf> out;
             for (int m = 1; m <= n; ++m)
                 out.push_back(word_of(cat({run(1, n - m + 1), iota_word(2, m)})));
             return out;
         }},
        {"1/23,12/3",
         [](int n) {
             return std::vector<Rgf>{word_of(run(1, n)), word_of(cat({iota_word(1, n - 1), {1}})),
                                     word_of(iota_word(1, n))};
         }},
        {"1/23,123",
         [](int n) {
             std::vector<Rgf> out{word_of(iota_word(1, n))};
             for (int j = 1; j <= n - 1; ++j)
                 out.push_back(word_of(cat({iota_word(1, j), {1}, iota_word(j + 1, n - 1)})));
             return out;
         }},
        {"13/2,12/3",
         [](int n) {
             std::vector<Rgf> out;
             for (int m = 1; m <= n; ++m)
                 out.push_back(word_of(cat({iota_word(1, m - 1), run(m, n - m + 1)})));
             return out;
         }},
        {"13/2,123", [](int n) { return thin_layered_words(n); }},
        {"12/3,123",
         [](int n) {
             std::vector<Rgf> out;
             for (int m = 1; m <= n; ++m) out.push_back(word_of(cat({iota_word(1, n - 1), {m}})));
             return out;
         }},
        {"1/2/3,1/23,13/2",
         [](int n) {
             return std::vector<Rgf>{word_of(run(1, n)), word_of(cat({run(1, n - 1), {2}}))};
         }},
        {"1/2/3,1/23,12/3",
         [](int n) {
             std::vector<Rgf> out{word_of(run(1, n))};
             if (n == 3) out.push_back(word_of({1, 2, 1}));
             return out;
         }},
        {"1/2/3,13/2,12/3",
         [](int n) {
             return std::vector<Rgf>{word_of(run(1, n)), word_of(cat({{1}, run(2, n - 1)}))};
         }},
        {"1/23,13/2,12/3",
         [](int n) { return std::vector<Rgf>{word_of(run(1, n)), word_of(iota_word(1, n))}; }},
        {"1/23,13/2,123",
         [](int n) {
             return std::vector<Rgf>{word_of(cat({{1}, iota_word(1, n - 1)})), word_of(iota_word(1, n))};
         }},
        {"1/23,12/3,123",
         [](int n) {
             return std::vector<Rgf>{word_of(cat({iota_word(1, n - 1), {1}})), word_of(iota_word(1, n))};
         }},
        {"13/2,12/3,123",
         [](int n) {
             return std::vector<Rgf>{word_of(cat({iota_word(1, n - 1), {n - 1}})), word_of(iota_word(1, n))};
         }},
        {"1/2/3,1/23,13/2,12/3", [](int n) { return std::vector<Rgf>{word_of(run(1, n))}; }},
        {"1/23,13/2,12/3,123", [](int n) { return std::vector<Rgf>{word_of(iota_word(1, n))}; }},
    };
    return table;
}

}  // namespace

bool has_table_family(const PatternSet& pats) { return family_table().count(pats.to_text()) > 0; }

std::vector<Rgf> table_words(const PatternSet& pats, int n) {
    if (n < 3) throw std::invalid_argument("table_words: families are stated for n >= 3");
    auto it = family_table().find(pats.to_text());
    if (it == family_table().end())
        throw std::domain_error("table_words: no listed family for {" + pats.to_text() + "}");
    std::vector<Rgf> words = it->second(n);
    std::sort(words.begin(), words.end());
    return words;
}

// ------------------------------------------------- registry

SetPartition singletons_pattern(int t) {
    if (t < 1) throw std::invalid_argument("singletons_pattern: t must be >= 1");
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= t; ++i) blocks.push_back({i});
    return SetPartition::of(t, std::move(blocks));
}

FormulaOutput evaluate_formula(const std::string& id, int n, std::optional<int> t_param) {
    if (n < 0) throw std::invalid_argument("evaluate_formula: negative n");
    if (t_param && id != "lb.14_2_3+singletons")
        throw std::invalid_argument("evaluate_formula: --t applies only to lb.14_2_3+singletons");

    static const std::vector<std::string> pair_ids = {
        "1_2_3+1_23", "1_2_3+13_2", "1_2_3+12_3", "1_23+13_2", "1_23+12_3",
        "1_23+123",   "13_2+12_3",  "13_2+123",   "12_3+123"};
    static const std::vector<std::pair<std::string, std::string>> singles = {
        {"1_2_3", "1/2/3"}, {"1_23", "1/23"}, {"13_2", "13/2"}, {"12_3", "12/3"}, {"123", "123"}};

    FormulaOutput out;
    auto slash_of = [](std::string idpart) {
        std::replace(idpart.begin(), idpart.end(), '+', ',');
        std::replace(idpart.begin(), idpart.end(), '_', '/');
        return idpart;
    };

    for (const auto& [suffix, slash] : singles) {
        if (id == "f." + suffix && suffix != "123") {
            ClosedForm cf = f_closed(PatternSet::parse(slash), n);
            out.poly4 = std::move(cf.poly);
            out.corrected = cf.corrected;
            out.note = std::move(cf.note);
            return out;
        }
        if (id == "card." + suffix) {
            out.poly1 = Poly1::constant(cardinality(n, parse_partition(slash)));
            return out;
        }
        for (StatKind k : kAllStats) {
            if (id == to_string(k) + "." + suffix) {
                ClosedForm1 cf = stat_closed(PatternSet::parse(slash), k, n);
                out.poly1 = std::move(cf.poly);
                out.corrected = cf.corrected;
                out.note = std::move(cf.note);
                return out;
            }
        }
    }
    for (const auto& pid : pair_ids) {
        if (id == "f.pair." + pid) {
            ClosedForm cf = f_closed(PatternSet::parse(slash_of(pid)), n);
            out.poly4 = std::move(cf.poly);
            out.corrected = cf.corrected;
            out.note = std::move(cf.note);
            return out;
        }
    }
    if (id == "lb.14_2_3") {
        ClosedForm1 cf = stat_closed(PatternSet::parse("14/2/3"), StatKind::lb, n);
        out.poly1 = std::move(cf.poly);
        return out;
    }
    if (id == "lb.14_2_3+13_2_4") {
        ClosedForm1 cf = stat_closed(PatternSet::parse("14/2/3,13/2/4"), StatKind::lb, n);
        out.poly1 = std::move(cf.poly);
        return out;
    }
    if (id == "lb.14_2_3+singletons") {
        if (!t_param) throw std::invalid_argument("lb.14_2_3+singletons requires --t");
        if (*t_param < 2) throw std::invalid_argument("lb.14_2_3+singletons: t must be >= 2");
        PatternSet pats({parse_partition("14/2/3"), singletons_pattern(*t_param)});
        ClosedForm1 cf = stat_closed(pats, StatKind::lb, n);
        out.poly1 = std::move(cf.poly);
        out.corrected = cf.corrected;
        out.note = std::move(cf.note);
        return out;
    }
    if (id == "lb.123.facts") {
        out.facts = coeff_facts(FactsSelector::lb_123, n);
        return out;
    }
    if (id == "rs.123.facts") {
        out.facts = coeff_facts(FactsSelector::rs_123, n);
        return out;
    }
    if (id == "rb.123.facts") {
        out.facts = coeff_facts(FactsSelector::rb_123, n);
        return out;
    }
    if (id == "lb.14_2_3+123.facts") {
        out.facts = coeff_facts(FactsSelector::lb_14_2_3_and_123, n);
        return out;
    }
    throw std::domain_error("unknown formula id '" + id + "'; see formula_ids()");
}

std::vector<std::string> formula_ids() {
    std::vector<std::string> ids;
    for (const char* p : {"1_2_3", "1_23", "13_2", "12_3"}) ids.push_back(std::string("f.") + p);
    for (const char* p : {"1_2_3+1_23", "1_2_3+13_2", "1_2_3+12_3", "1_23+13_2", "1_23+12_3",
                          "1_23+123", "13_2+12_3", "13_2+123", "12_3+123"})
        ids.push_back(std::string("f.pair.") + p);
    for (const char* p : {"1_2_3", "1_23", "13_2", "12_3"})
        for (StatKind k : kAllStats) ids.push_back(to_string(k) + "." + p);
    ids.push_back("ls.123");
    ids.push_back("lb.14_2_3");
    ids.push_back("lb.14_2_3+singletons");
    ids.push_back("lb.14_2_3+13_2_4");
    ids.push_back("lb.123.facts");
    ids.push_back("rs.123.facts");
    ids.push_back("rb.123.facts");
    ids.push_back("lb.14_2_3+123.facts");
    for (const char* p : {"1_2_3", "1_23", "13_2", "12_3", "123"}) ids.push_back(std::string("card.") + p);
    return ids;
}

}  // namespace pslab
