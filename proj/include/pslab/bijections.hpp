#pragma once

#include <string>
#include <vector>

#include "pslab/core.hpp"

namespace pslab {

// Complement-reverse on the tail of a two-letter word: sends lb to rs over
// the words made of 1s and 2s.  An involution.
Rgf phi_123(const Rgf& v);

// Complement-reverse of the prefix ending at the last 2, trailing 1s kept:
// sends ls to rb over the same class.  An involution; fixes 1^n.
Rgf psi_123(const Rgf& v);

// An integer partition with distinct parts, each below the ambient n.
struct DistinctPartition {
    int ambient_n = 0;
    std::vector<int> parts;  // strictly increasing

    long weight() const;              // sum of parts
    long complement_weight() const;   // sum of (ambient_n - part)
    bool operator==(const DistinctPartition&) const = default;
};

std::string to_string(const DistinctPartition& lambda);

// Layered word 1^{n_1}...m^{n_m} -> the partial sums (n_1, n_1+n_2, ...)
// short of n; carries rb to the weight and ls to the complement weight.
DistinctPartition phi_layered(const Rgf& w);
Rgf phi_layered_inv(const DistinctPartition& lambda);

// Piecewise exponent swap on dale sections, identity on plateaus: sends lb
// to rs over the words avoiding 14/2/3.  An involution; preserves the
// maximum value.
Rgf phi_dale(const Rgf& w);

// Sends the class avoiding 1/23 onto the class avoiding 12/3, exchanging
// lb with rs and ls with rb.
Rgf phi_1_23_to_12_3(const Rgf& w);

struct BijectionReport {
    std::string id;
    int n = 0;
    std::size_t domain_size = 0;
    std::size_t codomain_size = 0;
    bool well_defined = true;   // every image lands in the codomain
    bool injective = true;
    bool surjective = true;
    bool stats_transfer = true;
    bool involution = true;     // only checked where claimed
    std::vector<std::string> counterexamples;

    bool success() const { return counterexamples.empty(); }
};

// Exhaustively checks one named map at size n: domain membership of images,
// bijectivity onto the declared codomain, the claimed statistic transfers,
// and the involution property where claimed.  Domain membership is decided
// by the containment search, never by the structural shape predicates.
BijectionReport verify_bijection(const std::string& id, int n);
std::vector<std::string> bijection_ids();

}  // namespace pslab
