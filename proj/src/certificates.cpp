#include "g2forge/certificates.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "g2forge/parser.hpp"

namespace g2forge {

GramMatrix genericGram(const LieAlgebra& g, const ClosedFormSpace& space) {
  return bMatrix(g, space.genericElement);
}

GramMatrix genericGram(const LieAlgebra& g) { return genericGram(g, closedSpace(g, 3)); }

const char* certificateKindName(CertificateKind k) {
  switch (k) {
    case CertificateKind::ZeroDiagonal: return "zero-diagonal";
    case CertificateKind::DiagonalProduct: return "diagonal-product";
    case CertificateKind::SubspaceMinor: return "subspace-minor";
    case CertificateKind::ScriptedL76: return "scripted-chain";
  }
  return "unknown";
}

CertificateKind certificateKindFromName(const std::string& name) {
  if (name == "zero-diagonal") return CertificateKind::ZeroDiagonal;
  if (name == "diagonal-product") return CertificateKind::DiagonalProduct;
  if (name == "subspace-minor") return CertificateKind::SubspaceMinor;
  if (name == "scripted-chain") return CertificateKind::ScriptedL76;
  throw std::invalid_argument("unknown certificate kind \"" + name + "\"");
}

namespace {

Polynomial diagonalSum(const GramMatrix& b, const std::vector<int>& combo) {
  Polynomial sum;
  for (int i : combo) {
    if (i < 1 || i > b.entries.rows())
      throw std::invalid_argument("diagonal combo index out of range");
    sum += b.entries.at(i - 1, i - 1);
  }
  return sum;
}

std::optional<SOSWitness> trySOS(const Polynomial& p) {
  if (p.isZero()) return std::nullopt;
  if (p.isConstant()) {
    // Covers proportional diagonal entries: the quotient by the gcd is a
    // positive constant c, witnessed as c * 1^2.
    if (p.constantValue().sign() <= 0) return std::nullopt;
    SOSWitness w;
    w.squares.emplace_back(p.constantValue(), Polynomial(1));
    return w;
  }
  if (!p.isHomogeneous(2)) return std::nullopt;
  try {
    return sosCertify(p, p.vars());
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

// L1 = sign1 f S1, L2 = sign2 f S2 with sign1 sign2 = -1; nullopt otherwise.
struct ProductParts {
  Polynomial factor;
  int sign1 = 0, sign2 = 0;
  SOSWitness sos1, sos2;
};
std::optional<ProductParts> productDecomposition(const Polynomial& l1, const Polynomial& l2) {
  if (l1.isZero() || l2.isZero()) return std::nullopt;
  Polynomial f = polyGcd(l1, l2);
  auto r1 = tryDivideExact(l1, f);
  auto r2 = tryDivideExact(l2, f);
  if (!r1 || !r2) return std::nullopt;
  if (auto s1 = trySOS(-*r1)) {
    if (auto s2 = trySOS(*r2)) return ProductParts{f, -1, 1, std::move(*s1), std::move(*s2)};
  }
  if (auto s1 = trySOS(*r1)) {
    if (auto s2 = trySOS(-*r2)) return ProductParts{f, 1, -1, std::move(*s1), std::move(*s2)};
  }
  return std::nullopt;
}

PMatrix restrictedGram(const GramMatrix& b, const std::vector<std::vector<Rational>>& vectors) {
  int n = b.entries.rows();
  int m = static_cast<int>(vectors.size());
  PMatrix r(m, m);
  for (int a = 0; a < m; ++a) {
    if (static_cast<int>(vectors[static_cast<std::size_t>(a)].size()) != n)
      throw std::invalid_argument("subspace vector has wrong dimension");
    for (int c = a; c < m; ++c) {
      Polynomial entry;
      for (int i = 0; i < n; ++i) {
        const Rational& vi = vectors[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)];
        if (vi.isZero()) continue;
        for (int j = 0; j < n; ++j) {
          const Rational& wj =
              vectors[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)];
          if (wj.isZero()) continue;
          entry += (vi * wj) * b.entries.at(i, j);
        }
      }
      r.at(a, c) = entry;
      if (a != c) r.at(c, a) = std::move(entry);
    }
  }
  return r;
}

}  // namespace

std::optional<Certificate> findZeroDiagonal(const GramMatrix& b) {
  Certificate cert;
  cert.kind = CertificateKind::ZeroDiagonal;
  for (int i = 0; i < b.entries.rows(); ++i)
    if (b.entries.at(i, i).isZero()) cert.zeroIndices.push_back(i + 1);
  if (cert.zeroIndices.empty()) return std::nullopt;
  return cert;
}

std::vector<std::vector<int>> defaultDiagonalCombos(int dim) {
  std::vector<std::vector<int>> combos;
  for (int i = 1; i <= dim; ++i) combos.push_back({i});
  for (int i = 1; i <= dim; ++i)
    for (int j = i + 1; j <= dim; ++j) combos.push_back({i, j});
  return combos;
}

std::optional<Certificate> findDiagonalProduct(const GramMatrix& b,
                                               const std::vector<std::vector<int>>& combos) {
  std::vector<Polynomial> sums;
  sums.reserve(combos.size());
  for (const auto& c : combos) sums.push_back(diagonalSum(b, c));
  for (std::size_t a = 0; a < combos.size(); ++a) {
    for (std::size_t c = a + 1; c < combos.size(); ++c) {
      auto parts = productDecomposition(sums[a], sums[c]);
      if (!parts) continue;
      Certificate cert;
      cert.kind = CertificateKind::DiagonalProduct;
      cert.combo1 = combos[a];
      cert.combo2 = combos[c];
      cert.factor = parts->factor;
      cert.sign1 = parts->sign1;
      cert.sign2 = parts->sign2;
      cert.sos1 = parts->sos1;
      cert.sos2 = parts->sos2;
      return cert;
    }
  }
  return std::nullopt;
}

std::optional<Certificate> findDiagonalProduct(const GramMatrix& b) {
  return findDiagonalProduct(b, defaultDiagonalCombos(b.entries.rows()));
}

std::optional<Certificate> subspaceMinorCertificate(
    const GramMatrix& b, const std::vector<std::vector<Rational>>& vectors) {
  if (vectors.empty() || vectors.size() > 2)
    throw std::invalid_argument("subspaceMinorCertificate: need one or two vectors");
  int n = b.entries.rows();
  QMatrix stacked(static_cast<int>(vectors.size()), n);
  for (std::size_t a = 0; a < vectors.size(); ++a)
    for (int i = 0; i < n; ++i)
      stacked.at(static_cast<int>(a), i) = vectors[a][static_cast<std::size_t>(i)];
  if (rank(stacked) != static_cast<int>(vectors.size()))
    throw std::invalid_argument("subspaceMinorCertificate: vectors are not independent");

  PMatrix r = restrictedGram(b, vectors);
  Certificate cert;
  cert.kind = CertificateKind::SubspaceMinor;
  cert.subspaceVectors = vectors;
  if (vectors.size() == 1) {
    if (!r.at(0, 0).isZero()) return std::nullopt;
    cert.minorRoute = "zero-determinant";
    return cert;
  }
  Polynomial det = r.at(0, 0) * r.at(1, 1) - r.at(0, 1) * r.at(0, 1);
  if (det.isZero()) {
    cert.minorRoute = "zero-determinant";
    return cert;
  }
  if (auto parts = productDecomposition(r.at(0, 0), r.at(1, 1))) {
    cert.minorRoute = "sos-product";
    cert.factor = parts->factor;
    cert.sign1 = parts->sign1;
    cert.sign2 = parts->sign2;
    cert.sos1 = parts->sos1;
    cert.sos2 = parts->sos2;
    return cert;
  }
  if (auto q = perfectSquareRoot(-det)) {
    cert.minorRoute = "perfect-square";
    cert.square = *q;
    return cert;
  }
  return std::nullopt;
}

std::optional<Certificate> obstruct(const LieAlgebra& g) {
  ClosedFormSpace space = closedSpace(g, 3);
  GramMatrix b = genericGram(g, space);
  std::optional<Certificate> cert = findZeroDiagonal(b);
  if (!cert) cert = findDiagonalProduct(b);
  if (!cert) {
    for (int i = 1; i <= g.dim() && !cert; ++i) {
      for (int j = i + 1; j <= g.dim() && !cert; ++j) {
        std::vector<std::vector<Rational>> vs(2, std::vector<Rational>(7, Rational(0)));
        vs[0][static_cast<std::size_t>(i) - 1] = Rational(1);
        vs[1][static_cast<std::size_t>(j) - 1] = Rational(1);
        cert = subspaceMinorCertificate(b, vs);
      }
    }
  }
  if (!cert) {
    try {
      cert = verifyL76(g, space);
    } catch (const std::domain_error&) {
      cert = std::nullopt;
    }
  }
  if (cert) cert->algebraLabel = g.label();
  return cert;
}

namespace {

nlohmann::json sosToJson(const SOSWitness& w) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [c, l] : w.squares)
    arr.push_back({{"coeff", c.toString()}, {"linear", l.toString()}});
  return arr;
}

SOSWitness sosFromJson(const nlohmann::json& j, const std::vector<std::string>& names) {
  SOSWitness w;
  for (const auto& item : j)
    w.squares.emplace_back(Rational::fromString(item.at("coeff").get<std::string>()),
                           parsePolynomialExpression(item.at("linear").get<std::string>(),
                                                     names));
  return w;
}

void collectVars(const Polynomial& p, std::set<std::string>& names) {
  for (const auto& v : p.vars()) names.insert(v);
}

}  // namespace

nlohmann::json Certificate::toJson() const {
  std::set<std::string> names;
  collectVars(factor, names);
  collectVars(square, names);
  for (const auto& [c, l] : sos1.squares) collectVars(l, names);
  for (const auto& [c, l] : sos2.squares) collectVars(l, names);

  nlohmann::json j;
  j["kind"] = certificateKindName(kind);
  j["algebra"] = algebraLabel;
  j["variables"] = std::vector<std::string>(names.begin(), names.end());
  if (!zeroIndices.empty()) j["zeroIndices"] = zeroIndices;
  if (!combo1.empty()) j["combo1"] = combo1;
  if (!combo2.empty()) j["combo2"] = combo2;
  if (sign1 != 0) j["sign1"] = sign1;
  if (sign2 != 0) j["sign2"] = sign2;
  if (!factor.isZero()) j["factor"] = factor.toString();
  if (!sos1.squares.empty()) j["sos1"] = sosToJson(sos1);
  if (!sos2.squares.empty()) j["sos2"] = sosToJson(sos2);
  if (!subspaceVectors.empty()) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& v : subspaceVectors) {
      nlohmann::json row = nlohmann::json::array();
      for (const auto& c : v) row.push_back(c.toString());
      rows.push_back(row);
    }
    j["subspaceVectors"] = rows;
  }
  if (!minorRoute.empty()) j["minorRoute"] = minorRoute;
  if (!square.isZero()) j["square"] = square.toString();
  if (!identities.empty()) j["identities"] = identities;
  if (!notes.empty()) j["notes"] = notes;
  std::size_t identityCount = 0;
  switch (kind) {
    case CertificateKind::ZeroDiagonal: identityCount = zeroIndices.size(); break;
    case CertificateKind::DiagonalProduct: identityCount = 3; break;
    case CertificateKind::SubspaceMinor: identityCount = 1; break;
    case CertificateKind::ScriptedL76: identityCount = identities.size(); break;
  }
  j["residuals"] = std::vector<std::string>(identityCount, "0");
  j["text"] = summary();
  return j;
}

Certificate Certificate::fromJson(const nlohmann::json& j) {
  Certificate cert;
  cert.kind = certificateKindFromName(j.at("kind").get<std::string>());
  cert.algebraLabel = j.value("algebra", std::string());
  std::vector<std::string> names;
  if (j.contains("variables")) names = j.at("variables").get<std::vector<std::string>>();
  if (j.contains("zeroIndices")) cert.zeroIndices = j.at("zeroIndices").get<std::vector<int>>();
  if (j.contains("combo1")) cert.combo1 = j.at("combo1").get<std::vector<int>>();
  if (j.contains("combo2")) cert.combo2 = j.at("combo2").get<std::vector<int>>();
  cert.sign1 = j.value("sign1", 0);
  cert.sign2 = j.value("sign2", 0);
  if (j.contains("factor"))
    cert.factor = parsePolynomialExpression(j.at("factor").get<std::string>(), names);
  if (j.contains("sos1")) cert.sos1 = sosFromJson(j.at("sos1"), names);
  if (j.contains("sos2")) cert.sos2 = sosFromJson(j.at("sos2"), names);
  if (j.contains("subspaceVectors")) {
    for (const auto& row : j.at("subspaceVectors")) {
      std::vector<Rational> v;
      for (const auto& c : row) v.push_back(Rational::fromString(c.get<std::string>()));
      cert.subspaceVectors.push_back(std::move(v));
    }
  }
  cert.minorRoute = j.value("minorRoute", std::string());
  if (j.contains("square"))
    cert.square = parsePolynomialExpression(j.at("square").get<std::string>(), names);
  if (j.contains("identities"))
    cert.identities = j.at("identities").get<std::vector<std::string>>();
  if (j.contains("notes")) cert.notes = j.at("notes").get<std::vector<std::string>>();
  return cert;
}

std::string Certificate::summary() const {
  std::string s = certificateKindName(kind);
  switch (kind) {
    case CertificateKind::ZeroDiagonal: {
      s += ": b(e_i,e_i) = 0 identically for i in {";
      for (std::size_t i = 0; i < zeroIndices.size(); ++i)
        s += (i ? "," : "") + std::to_string(zeroIndices[i]);
      s += "}";
      break;
    }
    case CertificateKind::DiagonalProduct: {
      auto comboText = [](const std::vector<int>& c) {
        std::string t = "{";
        for (std::size_t i = 0; i < c.size(); ++i) t += (i ? "," : "") + std::to_string(c[i]);
        return t + "}";
      };
      s += ": (sum b_ii over " + comboText(combo1) + ") * (sum over " + comboText(combo2) +
           ") = -f^2*S1*S2 with f = " + factor.toString();
      break;
    }
    case CertificateKind::SubspaceMinor: {
      s += " (" + minorRoute + ") on a " + std::to_string(subspaceVectors.size()) +
           "-dimensional subspace";
      break;
    }
    case CertificateKind::ScriptedL76: {
      s += ": " + std::to_string(identities.size()) + " scripted identities";
      break;
    }
  }
  return s;
}

bool verifyCertificate(const LieAlgebra& g, const Certificate& cert, std::string* why) {
  auto fail = [why](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  ClosedFormSpace space = closedSpace(g, 3);
  GramMatrix b = genericGram(g, space);
  switch (cert.kind) {
    case CertificateKind::ZeroDiagonal: {
      if (cert.zeroIndices.empty()) return fail("no indices listed");
      for (int i : cert.zeroIndices) {
        if (i < 1 || i > b.entries.rows()) return fail("index out of range");
        if (!b.entries.at(i - 1, i - 1).isZero())
          return fail("b(e_" + std::to_string(i) + ",e_" + std::to_string(i) +
                      ") is not identically zero");
      }
      return true;
    }
    case CertificateKind::DiagonalProduct: {
      if (cert.combo1.empty() || cert.combo2.empty()) return fail("empty index combo");
      if (cert.sign1 * cert.sign2 != -1) return fail("signs must multiply to -1");
      Polynomial l1 = diagonalSum(b, cert.combo1);
      Polynomial l2 = diagonalSum(b, cert.combo2);
      if (l1.isZero() || l2.isZero()) return fail("diagonal sum vanishes identically");
      for (const auto& [c, l] : cert.sos1.squares)
        if (c.sign() <= 0) return fail("sos1 has a nonpositive coefficient");
      for (const auto& [c, l] : cert.sos2.squares)
        if (c.sign() <= 0) return fail("sos2 has a nonpositive coefficient");
      Polynomial lhs1 = Rational(cert.sign1) * (cert.factor * cert.sos1.expand());
      Polynomial lhs2 = Rational(cert.sign2) * (cert.factor * cert.sos2.expand());
      if (lhs1 != l1) return fail("identity for the first diagonal sum fails");
      if (lhs2 != l2) return fail("identity for the second diagonal sum fails");
      return true;
    }
    case CertificateKind::SubspaceMinor: {
      if (cert.subspaceVectors.empty() || cert.subspaceVectors.size() > 2)
        return fail("need one or two subspace vectors");
      QMatrix stacked(static_cast<int>(cert.subspaceVectors.size()), b.entries.rows());
      for (std::size_t a = 0; a < cert.subspaceVectors.size(); ++a) {
        if (static_cast<int>(cert.subspaceVectors[a].size()) != b.entries.rows())
          return fail("subspace vector has wrong dimension");
        for (int i = 0; i < b.entries.rows(); ++i)
          stacked.at(static_cast<int>(a), i) = cert.subspaceVectors[a][static_cast<std::size_t>(i)];
      }
      if (rank(stacked) != static_cast<int>(cert.subspaceVectors.size()))
        return fail("subspace vectors are not independent");
      PMatrix r = restrictedGram(b, cert.subspaceVectors);
      if (cert.subspaceVectors.size() == 1) {
        if (cert.minorRoute != "zero-determinant") return fail("unknown route for dimension 1");
        return r.at(0, 0).isZero() ? true : fail("restricted entry is not identically zero");
      }
      Polynomial det = r.at(0, 0) * r.at(1, 1) - r.at(0, 1) * r.at(0, 1);
      if (cert.minorRoute == "zero-determinant")
        return det.isZero() ? true : fail("restricted determinant is not identically zero");
      if (cert.minorRoute == "sos-product") {
        if (cert.sign1 * cert.sign2 != -1) return fail("signs must multiply to -1");
        for (const auto& [c, l] : cert.sos1.squares)
          if (c.sign() <= 0) return fail("sos1 has a nonpositive coefficient");
        for (const auto& [c, l] : cert.sos2.squares)
          if (c.sign() <= 0) return fail("sos2 has a nonpositive coefficient");
        Polynomial lhs1 = Rational(cert.sign1) * (cert.factor * cert.sos1.expand());
        Polynomial lhs2 = Rational(cert.sign2) * (cert.factor * cert.sos2.expand());
        if (lhs1 != r.at(0, 0)) return fail("identity for the first diagonal entry fails");
        if (lhs2 != r.at(1, 1)) return fail("identity for the second diagonal entry fails");
        return true;
      }
      if (cert.minorRoute == "perfect-square") {
        if (-det != cert.square * cert.square)
          return fail("-det is not the square of the stored polynomial");
        return true;
      }
      return fail("unknown minor route \"" + cert.minorRoute + "\"");
    }
    case CertificateKind::ScriptedL76: {
      try {
        verifyL76(g, space);
        return true;
      } catch (const std::domain_error& e) {
        return fail(e.what());
      }
    }
  }
  return fail("unknown certificate kind");
}

}  // namespace g2forge
