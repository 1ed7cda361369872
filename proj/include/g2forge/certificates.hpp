#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "g2forge/closed_space.hpp"
#include "g2forge/g2.hpp"
#include "g2forge/sos.hpp"

namespace g2forge {

// Gram matrix of b at the generic closed 3-form; entries are homogeneous
// cubics in the free coefficients (and rational in any algebra parameters).
GramMatrix genericGram(const LieAlgebra& g, const ClosedFormSpace& space);
GramMatrix genericGram(const LieAlgebra& g);

enum class CertificateKind { ZeroDiagonal, DiagonalProduct, SubspaceMinor, ScriptedL76 };

const char* certificateKindName(CertificateKind k);
CertificateKind certificateKindFromName(const std::string& name);

// A machine-checkable proof that no closed 3-form on the algebra has a
// definite b. Every kind reduces to polynomial identities whose pointwise
// consequences contradict definiteness:
//   ZeroDiagonal     b_ii == 0 identically for the listed i
//   DiagonalProduct  L1 * L2 = -f^2 * S1 * S2 with S1, S2 sums of squares,
//                    where L = sum of b_ii over an index combo
//   SubspaceMinor    the restricted 2x2 minor is identically 0, has
//                    -det = B01^2 + f^2 S1 S2, or -det a perfect square
//   ScriptedL76      the scripted identity chain for the rank-one-free
//                    closed space (see verifyL76)
struct Certificate {
  CertificateKind kind = CertificateKind::ZeroDiagonal;
  std::string algebraLabel;

  // ZeroDiagonal
  std::vector<int> zeroIndices;

  // DiagonalProduct (also reused for the SubspaceMinor product route):
  // L1 = sign1 * factor * expand(sos1), L2 = sign2 * factor * expand(sos2),
  // sign1 * sign2 = -1.
  std::vector<int> combo1, combo2;
  int sign1 = 0, sign2 = 0;
  Polynomial factor;
  SOSWitness sos1, sos2;

  // SubspaceMinor
  std::vector<std::vector<Rational>> subspaceVectors;
  std::string minorRoute;  // "zero-determinant" | "sos-product" | "perfect-square"
  Polynomial square;       // q with -det = q^2 (perfect-square route)

  // ScriptedL76
  std::vector<std::string> identities;

  std::vector<std::string> notes;

  nlohmann::json toJson() const;
  static Certificate fromJson(const nlohmann::json& j);
  std::string summary() const;
};

// Diagonal entries identically zero (certificate listing all of them), or
// nullopt when none vanish.
std::optional<Certificate> findZeroDiagonal(const GramMatrix& b);

// Index combinations tried as diagonal sums, in scan order.
std::vector<std::vector<int>> defaultDiagonalCombos(int dim);

// First pair (in scan order) of diagonal sums L1, L2 with
// L1 L2 = -f^2 S1 S2; f is the polynomial gcd of the pair.
std::optional<Certificate> findDiagonalProduct(
    const GramMatrix& b, const std::vector<std::vector<int>>& combos);
std::optional<Certificate> findDiagonalProduct(const GramMatrix& b);

// Certificate that the Gram matrix restricted to the span of the given
// vectors (one or two independent rational vectors) cannot be definite.
std::optional<Certificate> subspaceMinorCertificate(
    const GramMatrix& b, const std::vector<std::vector<Rational>>& vectors);

// Scripted certificate for a closed space whose radical-block entries are
// carried by the five coefficients at e246, e247, e346, e347, e357: checks
// that the Gram block is determined by b1..b4 = B44..B47 through fixed
// polynomial identities, that det B is b1^{-4} times the square of an
// explicit quartic, and that the quartic's discriminant identity forces
// indefiniteness. Throws std::domain_error with the failing residual when
// any identity does not hold.
Certificate verifyL76(const LieAlgebra& g, const ClosedFormSpace& space);
Certificate verifyL76(const LieAlgebra& g);

// Orchestrated search: zero diagonal, then diagonal products, then 2x2
// subspace minors over basis pairs, then the scripted chain.
std::optional<Certificate> obstruct(const LieAlgebra& g);

// Re-derives every claimed identity of a (possibly deserialized) certificate
// against a freshly computed Gram matrix.
bool verifyCertificate(const LieAlgebra& g, const Certificate& cert, std::string* why = nullptr);

struct SampleCounts {
  long definite = 0;
  long indefinite = 0;
  long singular = 0;

  friend bool operator==(const SampleCounts&, const SampleCounts&) = default;
};

// Random rational sampling of the closed space: coefficients have integer
// numerators in [-10, 10] and denominators in {1,2,3,4}, drawn from a
// counter-based generator so results do not depend on thread count.
SampleCounts sampleDefiniteness(const LieAlgebra& g, long trials, std::uint64_t seed,
                                bool parallel = true);
SampleCounts sampleDefiniteness(const LieAlgebra& g, const ClosedFormSpace& space,
                                const GramMatrix& gram, long trials, std::uint64_t seed,
                                bool parallel = true);

// Counter-based generator: a pure function of (seed, stream, counter).
std::uint64_t counterRandom(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

}  // namespace g2forge
