#include "pslab/bijections.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "pslab/patterns.hpp"
#include "pslab/stats.hpp"

namespace pslab {

Rgf phi_123(const Rgf& v) {
    for (int i = 0; i < v.size(); ++i)
        if (v[i] > 2) throw std::invalid_argument("phi_123: word must use only 1s and 2s");
    if (v.size() <= 1) return v;
    Letters out;
    out.reserve(static_cast<std::size_t>(v.size()));
    out.push_back(v[0]);
    for (int i = v.size() - 1; i >= 1; --i) out.push_back(static_cast<std::uint8_t>(3 - v[i]));
    return Rgf(std::move(out));
}

Rgf psi_123(const Rgf& v) {
    int last_two = -1;
    for (int i = 0; i < v.size(); ++i) {
        if (v[i] > 2) throw std::invalid_argument("psi_123: word must use only 1s and 2s");
        if (v[i] == 2) last_two = i;
    }
    if (last_two < 0) return v;  // 1^n is fixed
    Letters out;
    out.reserve(static_cast<std::size_t>(v.size()));
    for (int i = last_two; i >= 0; --i) out.push_back(static_cast<std::uint8_t>(3 - v[i]));
    for (int i = last_two + 1; i < v.size(); ++i) out.push_back(1);
    return Rgf(std::move(out));
}

long DistinctPartition::weight() const {
    long sum = 0;
    for (int p : parts) sum += p;
    return sum;
}

long DistinctPartition::complement_weight() const {
    long sum = 0;
    for (int p : parts) sum += ambient_n - p;
    return sum;
}

std::string to_string(const DistinctPartition& lambda) {
    std::string out = "(";
    for (std::size_t i = 0; i < lambda.parts.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(lambda.parts[i]);
    }
    out += ')';
    return out;
}

DistinctPartition phi_layered(const Rgf& w) {
    if (!is_layered(w)) throw std::invalid_argument("phi_layered: word is not layered");
    DistinctPartition lambda;
    lambda.ambient_n = w.size();
    for (int i = 1; i < w.size(); ++i)
        if (w[i] == w[i - 1] + 1) lambda.parts.push_back(i);  // partial layer sums
    return lambda;
}

Rgf phi_layered_inv(const DistinctPartition& lambda) {
    const int n = lambda.ambient_n;
    for (std::size_t i = 0; i < lambda.parts.size(); ++i) {
        int p = lambda.parts[i];
        if (p < 1 || p >= n || (i > 0 && lambda.parts[i - 1] >= p))
            throw std::invalid_argument("phi_layered_inv: parts must strictly increase below n");
    }
    Letters out;
    out.reserve(static_cast<std::size_t>(n));
    int prev = 0;
    std::uint8_t letter = 1;
    for (int p : lambda.parts) {
        for (int i = prev; i < p; ++i) out.push_back(letter);
        prev = p;
        ++letter;
    }
    for (int i = prev; i < n; ++i) out.push_back(letter);
    return Rgf(std::move(out));
}

Rgf phi_dale(const Rgf& w) {
    Letters out;
    out.reserve(static_cast<std::size_t>(w.size()));
    for (const Segment& seg : decompose(w)) {  // rejects words with crowded dales
        if (const auto* plat = std::get_if<Plateau>(&seg)) {
            for (int i = 0; i < plat->length; ++i) out.push_back(static_cast<std::uint8_t>(plat->value));
            continue;
        }
        const auto& sec = std::get<DaleSection>(seg);
        auto low = static_cast<std::uint8_t>(sec.top - 1);
        auto high = static_cast<std::uint8_t>(sec.top);
        auto push = [&out](std::uint8_t v, int count) {
            for (int i = 0; i < count; ++i) out.push_back(v);
        };
        const std::size_t t = sec.high_runs.size();
        push(low, sec.low_runs[0]);
        if (sec.low_runs[t] > 0) {
            // (a-1)^{l0} a^{l1} (a-1)^{j1} ... a^{lt} (a-1)^{jt}
            for (std::size_t i = 1; i <= t; ++i) {
                push(high, sec.low_runs[i]);
                push(low, sec.high_runs[i - 1]);
            }
        } else {
            // trailing high run kept: ... a^{l_{t-1}} (a-1)^{j_{t-1}} a^{jt}
            for (std::size_t i = 1; i < t; ++i) {
                push(high, sec.low_runs[i]);
                push(low, sec.high_runs[i - 1]);
            }
            push(high, sec.high_runs[t - 1]);
        }
    }
    return Rgf(std::move(out));
}

Rgf phi_1_23_to_12_3(const Rgf& w) {
    if (w.empty()) return w;
    if (word_contains(w.letters(), Letters{1, 2, 2}))
        throw std::invalid_argument("phi_1_23_to_12_3: word must avoid 1/23");
    int ones = 0, rightmost_one = 0;
    for (int i = 0; i < w.size(); ++i)
        if (w[i] == 1) {
            ++ones;
            rightmost_one = i + 1;
        }
    const int n = w.size();
    Letters out;
    out.reserve(static_cast<std::size_t>(n));
    for (int v = 1; v <= n - ones + 1; ++v) out.push_back(static_cast<std::uint8_t>(v));
    for (int i = 0; i < ones - 1; ++i) out.push_back(static_cast<std::uint8_t>(n - rightmost_one + 1));
    return Rgf(std::move(out));
}

// ------------------------------------------------------------ verifier

namespace {

struct Claim {
    StatKind from;
    StatKind to;
};

void check_transfer(BijectionReport& rep, const Rgf& w, const Rgf& image,
                    std::initializer_list<Claim> claims) {
    StatQuad a = stat_quad(w), b = stat_quad(image);
    for (const Claim& c : claims) {
        if (a.get(c.from) != b.get(c.to)) {
            rep.stats_transfer = false;
            rep.counterexamples.push_back(to_string(w) + " -> " + to_string(image) + ": " +
                                          to_string(c.from) + "=" + std::to_string(a.get(c.from)) +
                                          " but " + to_string(c.to) + "=" + std::to_string(b.get(c.to)));
        }
    }
}

template <typename Map>
void check_self_map(BijectionReport& rep, const std::vector<Rgf>& domain, Map&& map,
                    std::initializer_list<Claim> claims, bool claims_involution) {
    std::set<Rgf> domain_set(domain.begin(), domain.end());
    std::set<Rgf> images;
    rep.domain_size = rep.codomain_size = domain.size();
    for (const Rgf& w : domain) {
        Rgf image = map(w);
        if (!domain_set.count(image)) {
            rep.well_defined = false;
            rep.counterexamples.push_back(to_string(w) + " -> " + to_string(image) +
                                          " leaves the class");
            continue;
        }
        if (!images.insert(image).second) {
            rep.injective = false;
            rep.counterexamples.push_back("image " + to_string(image) + " repeated");
        }
        check_transfer(rep, w, image, claims);
        if (claims_involution && map(image) != w) {
            rep.involution = false;
            rep.counterexamples.push_back(to_string(w) + " not restored by a second application");
        }
    }
    rep.surjective = images.size() == domain_set.size();
    if (!rep.surjective) rep.counterexamples.push_back("image set misses part of the class");
}

std::vector<Rgf> class_of(int n, const char* pattern_text) {
    return avoidance_class(n, PatternSet::parse(pattern_text));
}

}  // namespace

BijectionReport verify_bijection(const std::string& id, int n) {
    BijectionReport rep;
    rep.id = id;
    rep.n = n;
    if (id == "bij.phi_123") {
        check_self_map(rep, class_of(n, "1/2/3"), [](const Rgf& w) { return phi_123(w); },
                       {{StatKind::lb, StatKind::rs}}, true);
    } else if (id == "bij.psi_123") {
        check_self_map(rep, class_of(n, "1/2/3"), [](const Rgf& w) { return psi_123(w); },
                       {{StatKind::ls, StatKind::rb}}, true);
    } else if (id == "bij.phi_dale") {
        check_self_map(rep, class_of(n, "14/2/3"), [](const Rgf& w) { return phi_dale(w); },
                       {{StatKind::lb, StatKind::rs}}, true);
        // The same map restricts to the class that also avoids 13/2/4.
        PatternSet pair = PatternSet::parse("14/2/3,13/2/4");
        for (const Rgf& w : class_of(n, "14/2/3,13/2/4")) {
            Rgf image = phi_dale(w);
            if (!avoids_all(from_rgf(image), pair)) {
                rep.well_defined = false;
                rep.counterexamples.push_back(to_string(w) + " -> " + to_string(image) +
                                              " leaves the two-pattern class");
            }
            if (w.max_value() != image.max_value()) {
                rep.well_defined = false;
                rep.counterexamples.push_back(to_string(w) + ": maximum value not preserved");
            }
        }
    } else if (id == "bij.phi_layered") {
        std::vector<Rgf> domain = class_of(n, "13/2");
        rep.domain_size = domain.size();
        // Codomain: all distinct-part partitions with parts below n.
        std::set<std::vector<int>> codomain;
        std::vector<int> parts;
        std::function<void(int)> gen = [&](int next) {
            codomain.insert(parts);
            for (int p = next; p <= n - 1; ++p) {
                parts.push_back(p);
                gen(p + 1);
                parts.pop_back();
            }
        };
        gen(1);
        rep.codomain_size = codomain.size();
        std::set<std::vector<int>> images;
        for (const Rgf& w : domain) {
            DistinctPartition lambda = phi_layered(w);
            if (!codomain.count(lambda.parts)) {
                rep.well_defined = false;
                rep.counterexamples.push_back(to_string(w) + " -> " + to_string(lambda) +
                                              " not a distinct partition below n");
                continue;
            }
            if (!images.insert(lambda.parts).second) {
                rep.injective = false;
                rep.counterexamples.push_back("image " + to_string(lambda) + " repeated");
            }
            StatQuad q = stat_quad(w);
            if (q.rb != lambda.weight() || q.ls != lambda.complement_weight()) {
                rep.stats_transfer = false;
                rep.counterexamples.push_back(to_string(w) + ": (ls, rb) != (|n-lambda|, |lambda|)");
            }
            if (phi_layered_inv(lambda) != w) {
                rep.involution = false;  // here: inverse round trip
                rep.counterexamples.push_back(to_string(w) + " not restored by the inverse");
            }
        }
        rep.surjective = images.size() == codomain.size();
        if (!rep.surjective) rep.counterexamples.push_back("image set misses part of D_{n-1}");
    } else if (id == "bij.phi_1_23_to_12_3") {
        std::vector<Rgf> domain = class_of(n, "1/23");
        std::vector<Rgf> codomain_words = class_of(n, "12/3");
        std::set<Rgf> codomain(codomain_words.begin(), codomain_words.end());
        rep.domain_size = domain.size();
        rep.codomain_size = codomain.size();
        std::set<Rgf> images;
        for (const Rgf& w : domain) {
            Rgf image = phi_1_23_to_12_3(w);
            if (!codomain.count(image)) {
                rep.well_defined = false;
                rep.counterexamples.push_back(to_string(w) + " -> " + to_string(image) +
                                              " not in the 12/3 class");
                continue;
            }
            if (!images.insert(image).second) {
                rep.injective = false;
                rep.counterexamples.push_back("image " + to_string(image) + " repeated");
            }
            check_transfer(rep, w, image, {{StatKind::lb, StatKind::rs}, {StatKind::ls, StatKind::rb}});
        }
        rep.surjective = images.size() == codomain.size();
        if (!rep.surjective) rep.counterexamples.push_back("image set misses part of the 12/3 class");
    } else {
        throw std::domain_error("unknown bijection id '" + id + "'");
    }
    return rep;
}

std::vector<std::string> bijection_ids() {
    return {"bij.phi_123", "bij.psi_123", "bij.phi_layered", "bij.phi_dale", "bij.phi_1_23_to_12_3"};
}

}  // namespace pslab
