#ifndef CAYLEYPAIR_SPECTRA_HPP_
#define CAYLEYPAIR_SPECTRA_HPP_

#include <array>
#include <string>

#include "cayleypair/charpoly.hpp"
#include "cayleypair/multigraph.hpp"
#include "cayleypair/polynomial.hpp"
#include "cayleypair/puzzle.hpp"
#include "json.hpp"

namespace cayleypair {

// Y/H. base vertex i is vertex orbit i and base arc j is arc orbit j.
struct QuotientGraph {
  KSubgroup h = KSubgroup::kTrivial;
  DirectedMultigraph base;
  Orbits orbits;
};

// Reverses of arc orbits become reverses in the quotient, except that a
// loop whose orbit is its own reverse stays unpaired.
QuotientGraph quotient(const DirectedMultigraph& y, const KAction& action, KSubgroup h);

// Characters 0 = trivial, 1 = chi_rho, 2 = chi_psi, 3 = chi_rhopsi,
// evaluated on K elements encoded as in puzzle.hpp.
int character(int chi, int k);
// Rows are pairwise orthogonal and each has squared norm |K|.
bool character_table_orthogonal();

// Characteristic polynomials of Y and its four quotients.
struct CoveringDiagram {
  int group_order = 0;  // |G| = |V_Y| / 2
  IntPolynomial p_y;
  IntPolynomial p_rho;
  IntPolynomial p_psi;
  IntPolynomial p_rhopsi;
  IntPolynomial p_z;
  QuotientGraph x_rho;
  QuotientGraph x_psi;
  QuotientGraph x_rhopsi;
  QuotientGraph z;
};

CoveringDiagram covering_diagram(const ContractedPuzzle& cp, const KAction& action);

struct Spectra1Report {
  bool ok = false;
  IntPolynomial lhs;  // P_Y P_Z^2
  IntPolynomial rhs;  // P_rho P_psi P_rhopsi
};
Spectra1Report verify_spectra1(const CoveringDiagram& d);

struct Spectra2Report {
  bool ratio_ok = false;     // P_rho/P_Z = (-1)^{|G|/2} (P_psi/P_Z)(-x)
  bool rhopsi_ok = false;    // P_rhopsi = (-1)^{|G|/2} P_Z(x) P_Z(-x)
  bool degree_ok = false;    // deg(P_rho/P_Z) = |G|/2
  IntPolynomial rho_over_z;
  IntPolynomial psi_over_z;
  bool ok() const { return ratio_ok && rhopsi_ok && degree_ok; }
};
// Divisions are exact or throw VerificationFailure.
Spectra2Report verify_spectra2(const CoveringDiagram& d);

struct NonIsomorphismCertificate {
  bool polynomials_differ = false;
  int diameter1 = -1;
  int diameter2 = -1;
  // Lowest-degree coefficient where P1 and P2 differ, or -1.
  int first_difference = -1;
  std::string verdict() const;
};
NonIsomorphismCertificate verify_nonisomorphic(const IntPolynomial& p1, const IntPolynomial& p2,
                                               int diameter1 = -1, int diameter2 = -1);

nlohmann::json polynomial_json(const IntPolynomial& p);

}  // namespace cayleypair

#endif  // CAYLEYPAIR_SPECTRA_HPP_
