#include "artin/certify.hpp"

#include <numeric>

#include "artin/errors.hpp"
#include "artin/modarith.hpp"

namespace artin {

TheoremCertificate certifyGaloisOrbitSum(const TablePtr& table, const ClassFunction& chi) {
  const GroupPtr& group = table->group();
  if (!chi.group()->sameAs(*group)) throw input_error("character belongs to a different group");
  // the hypothesis is a virtual character; reject anything else up front
  decomposeIntoIrreducibles(table, chi);

  TheoremCertificate cert{group, chi, {}, zeroFunction(group), false,
                          ArtinDecomposition{group, {}, zeroFunction(group)}, false};
  const std::int64_t e = group->exponent();
  ClassFunction sum = zeroFunction(group);
  for (std::int64_t k : unitsMod(e)) {
    ClassFunction entry = galoisAct(chi, k);
    sum = sum + entry;
    cert.orbit.emplace_back(k, std::move(entry));
  }
  cert.orbitSum = sum;
  cert.rationalityWitness = isRationalCharacter(sum);
  if (!cert.rationalityWitness)
    throw defect_error("Galois orbit sum is not rational-valued");
  cert.decomposition = decomposeRational(table, sum);
  cert.verified = checkCertificate(cert);
  if (!cert.verified) throw defect_error("freshly built certificate failed to re-verify");
  return cert;
}

bool checkCertificate(const TheoremCertificate& cert) {
  const FiniteGroup& g = *cert.group;
  const std::int64_t e = g.exponent();
  const std::vector<std::int64_t> units = unitsMod(e);
  if (cert.orbit.size() != units.size()) return false;
  ClassFunction sum = zeroFunction(cert.group);
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (cert.orbit[i].first != units[i]) return false;
    ClassFunction expected = galoisAct(cert.inputCharacter, units[i]);
    if (!(expected == cert.orbit[i].second)) return false;
    sum = sum + expected;
  }
  if (!(sum == cert.orbitSum)) return false;
  if (!isRationalCharacter(cert.orbitSum)) return false;
  if (!(cert.decomposition.target == cert.orbitSum)) return false;
  if (!cert.decomposition.group->sameAs(g)) return false;
  return verifyDecomposition(cert.decomposition);
}

KernelReport kernelConclusion(const TheoremCertificate& cert) {
  if (!cert.verified || !checkCertificate(cert))
    throw verification_error("kernelConclusion requires a verified certificate");
  const std::int64_t e = cert.group->exponent();
  const std::int64_t phiE = eulerPhi(e);

  KernelReport report;
  report.galoisOrderUsed = phiE;
  report.hypothesis =
      "delta is any Q-linear functional on the virtual characters of G with "
      "delta(Ind_H^G 1) = 0 for every subgroup H";
  report.conclusion =
      "delta(orbit_sum) = 0, where orbit_sum = sum over k in (Z/" + std::to_string(e) +
      ")^x of sigma_k . chi; orbit_sum equals the certified combination of "
      "induced trivials";
  report.fieldNote =
      "coefficients were taken in Q(zeta_" + std::to_string(e) +
      "); for a larger Galois field K the sum over Gal(K/Q) is the same "
      "combination scaled by [K:Q(zeta_" + std::to_string(e) + ")]";
  report.inputIsRational = isRationalCharacter(cert.inputCharacter);
  if (report.inputIsRational) {
    // orbit entries all equal chi, so orbit_sum = phi(e) * chi
    report.rationalScalar = Rat(1, static_cast<long>(phiE));
    report.conclusion +=
        "; the input is rational-valued, orbit_sum = phi(e) * chi, hence "
        "delta(chi) = 0";
  }
  return report;
}

}  // namespace artin
