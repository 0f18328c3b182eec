#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "artin/artin.hpp"

namespace artin {

/// Self-contained witness that the Galois-orbit sum of a character lies in
/// the span of induced trivials, hence in the kernel of every linear
/// functional that vanishes on them.  Embeds full raw data so a third-party
/// checker needs only induction and pointwise arithmetic.
struct TheoremCertificate {
  GroupPtr group;
  ClassFunction inputCharacter;
  /// (k, sigma_k . chi) for every k in (Z/e)^x, ascending in k.
  std::vector<std::pair<std::int64_t, ClassFunction>> orbit;
  ClassFunction orbitSum;
  bool rationalityWitness = false;
  ArtinDecomposition decomposition;
  bool verified = false;
};

/// Build and verify a certificate for sum over k of sigma_k . chi.
TheoremCertificate certifyGaloisOrbitSum(const TablePtr& table, const ClassFunction& chi);

/// Re-verify everything from the raw fields without trusting cached flags:
/// the orbit entries, the k set, the sum, rationality, and the decomposition
/// identity.
bool checkCertificate(const TheoremCertificate& cert);

/// The formal conclusion drawn from a verified certificate: every Q-linear
/// functional vanishing on all Ind_H^G 1 also kills orbitSum (and the input
/// itself when it is rational, with the recorded scalar).
struct KernelReport {
  std::string schema = "artin-kernel-report/1";
  std::string hypothesis;   // what is assumed about the functional
  std::string conclusion;   // the certified membership statement
  bool inputIsRational = false;
  /// When the input is rational, orbitSum = phi(e) * input, so the functional
  /// kills the input itself; the scalar 1/phi(e) is recorded.
  Rat rationalScalar = Rat(0);
  std::string fieldNote;    // how a larger coefficient field would rescale sums
  std::int64_t galoisOrderUsed = 0;  // phi(e)
};

/// Throws verification_error when the certificate is not verified.
KernelReport kernelConclusion(const TheoremCertificate& cert);

}  // namespace artin
