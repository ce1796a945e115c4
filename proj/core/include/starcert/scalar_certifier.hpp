#ifndef STARCERT_SCALAR_CERTIFIER_HPP
#define STARCERT_SCALAR_CERTIFIER_HPP

#include <functional>
#include <optional>
#include <vector>

#include "starcert/poly.hpp"

namespace starcert {

/// Witness that c*c * p is a sum of squares: c*c*p = sum_t q_t^* q_t.
struct ScalarSosCertificate {
    StarPoly c;
    std::vector<StarPoly> squares;
};

using ScalarCertifier = std::function<std::optional<ScalarSosCertificate>(const StarPoly&)>;

bool verify_scalar_certificate(const StarPoly& p, const ScalarSosCertificate& cert);

/// Certifier that answers only for polynomials with a registered decomposition.
ScalarCertifier make_pass_through_certifier(std::vector<std::pair<StarPoly, ScalarSosCertificate>> table);

/// Univariate certifier over Q[x]: squarefree-decomposes p = lc * q^2 * sigma,
/// writes the rootless odd part sigma as a^2 + b^2 whenever it splits over
/// Q(i) (verified exactly), and splits the positive rational lc into at most
/// four rational squares. Denominator-free: c = 1 on success. Fails (nullopt)
/// on anything outside that range.
std::optional<ScalarSosCertificate> certify_nonneg_univariate(const StarPoly& p);
ScalarCertifier make_univariate_certifier();

/// Tries `first`, then `second`.
ScalarCertifier chain_certifiers(ScalarCertifier first, ScalarCertifier second);

}  // namespace starcert

#endif
