#pragma once

#include "heisorb/fock.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace heisorb {

// Products whose result would exceed this weight throw std::length_error.
void set_weight_cap(int cap);
int weight_cap();

// u_n v via the free-boson recursion. Results are memoized per monomial pair.
FockState nth_product(const FockState& u, int n, const FockState& v);

// s_n applied to the vacuum
FockState on_vacuum(const FockState& s, int n);
// u_{-1} v
FockState nop(const FockState& u, const FockState& v);

// The derivation a_i(-m) -> m a_i(-m-1); equals v_{-2} vacuum.
FockState translate(const FockState& v);

// 1/2 sum a_i(-1)^2 in the alpha basis, 1/2 b1(-1)^2 + b2(-1)b3(-1) in the beta basis.
FockState conformal_vector(int rank, Basis basis);

// L(k)v = omega_{k+1} v
FockState virasoro_mode(int k, const FockState& v);

// L(1)v == 0 and L(2)v == 0. Throws std::invalid_argument on non-homogeneous v.
bool is_primary(const FockState& v);

// u_n v - sum_j (-1)^{n+j+1} T^j(v_{n+j} u)/j!
FockState check_skew_symmetry(const FockState& u, const FockState& v, int n);

// Borcherds identity, left side minus right side.
FockState check_borcherds(const FockState& u, const FockState& v, const FockState& w, int p, int q, int r);

// generalized binomial C(n, k), zero for k < 0
Rational binomial(long n, long k);

// Seeded random states of weight 1..max_weight (alpha and beta basis alike),
// each instance checking skew-symmetry and one Borcherds identity.
struct AxiomSuiteReport {
    std::size_t instances = 0;
    std::size_t skew_failures = 0;
    std::size_t borcherds_failures = 0;
    std::vector<std::string> failures;
    bool pass() const { return instances > 0 && skew_failures == 0 && borcherds_failures == 0; }
};
AxiomSuiteReport random_axiom_suite(std::uint64_t seed, int instances = 200, int max_weight = 4);

std::size_t product_cache_size();
void clear_product_cache();

}  // namespace heisorb
