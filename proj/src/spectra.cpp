#include "cayleypair/spectra.hpp"

#include "cayleypair/error.hpp"

namespace cayleypair {

QuotientGraph quotient(const DirectedMultigraph& y, const KAction& action, KSubgroup h) {
  QuotientGraph q;
  q.h = h;
  q.orbits = k_action_orbits(action, h);
  q.base = DirectedMultigraph(q.orbits.num_vertex_orbits);
  std::vector<int> representative(q.orbits.num_arc_orbits, -1);
  for (int e = 0; e < y.num_arcs(); ++e) {
    int o = q.orbits.arc_orbit[e];
    if (representative[o] < 0) representative[o] = e;
  }
  for (int o = 0; o < q.orbits.num_arc_orbits; ++o) {
    const Arc& a = y.arc(representative[o]);
    q.base.add_arc(q.orbits.vertex_orbit[a.source], q.orbits.vertex_orbit[a.target], a.label);
  }
  for (int o = 0; o < q.orbits.num_arc_orbits; ++o) {
    const int r = y.arc(representative[o]).reverse;
    if (r < 0) continue;
    const int ro = q.orbits.arc_orbit[r];
    if (ro > o) q.base.pair_arcs(o, ro);
  }
  for (int v = 0; v < q.base.num_vertices(); ++v) {
    if (q.base.out_degree(v) != y.out_degree(0)) {
      throw VerificationFailure("quotient " + to_string(h) + " is not regular");
    }
  }
  return q;
}

int character(int chi, int k) {
  if (chi == 0) return 1;
  return (k == 0 || k == chi) ? 1 : -1;
}

bool character_table_orthogonal() {
  for (int c = 0; c < 4; ++c) {
    for (int d = 0; d < 4; ++d) {
      int s = 0;
      for (int k = 0; k < 4; ++k) s += character(c, k) * character(d, k);
      if (s != (c == d ? 4 : 0)) return false;
    }
  }
  return true;
}

CoveringDiagram covering_diagram(const ContractedPuzzle& cp, const KAction& action) {
  CoveringDiagram d;
  d.group_order = cp.graph.num_vertices() / 2;
  d.x_rho = quotient(cp.graph, action, KSubgroup::kRho);
  d.x_psi = quotient(cp.graph, action, KSubgroup::kPsi);
  d.x_rhopsi = quotient(cp.graph, action, KSubgroup::kRhoPsi);
  d.z = quotient(cp.graph, action, KSubgroup::kFull);
  d.p_y = charpoly(adjacency_matrix(cp.graph));
  d.p_rho = charpoly(adjacency_matrix(d.x_rho.base));
  d.p_psi = charpoly(adjacency_matrix(d.x_psi.base));
  d.p_rhopsi = charpoly(adjacency_matrix(d.x_rhopsi.base));
  d.p_z = charpoly(adjacency_matrix(d.z.base));
  return d;
}

Spectra1Report verify_spectra1(const CoveringDiagram& d) {
  Spectra1Report r;
  r.lhs = d.p_y * d.p_z * d.p_z;
  r.rhs = d.p_rho * d.p_psi * d.p_rhopsi;
  r.ok = r.lhs == r.rhs;
  return r;
}

Spectra2Report verify_spectra2(const CoveringDiagram& d) {
  Spectra2Report r;
  const int half = d.group_order / 2;
  const long sign = d.group_order % 4 == 2 ? -1 : 1;  // (-1)^{|G|/2}
  if (d.group_order % 2 != 0) throw VerificationFailure("|G| must be even");
  r.rho_over_z = exact_divide(d.p_rho, d.p_z);
  r.psi_over_z = exact_divide(d.p_psi, d.p_z);
  r.ratio_ok = r.rho_over_z == r.psi_over_z.negate_variable().scaled(sign);
  r.rhopsi_ok = d.p_rhopsi == (d.p_z * d.p_z.negate_variable()).scaled(sign);
  r.degree_ok = r.rho_over_z.degree() == half && d.p_z.degree() == half;
  return r;
}

std::string NonIsomorphismCertificate::verdict() const {
  return polynomials_differ ? "non-isomorphic (characteristic polynomials differ)" : "isomorphism not excluded";
}

NonIsomorphismCertificate verify_nonisomorphic(const IntPolynomial& p1, const IntPolynomial& p2, int diameter1,
                                               int diameter2) {
  NonIsomorphismCertificate c;
  c.diameter1 = diameter1;
  c.diameter2 = diameter2;
  const int top = std::max(p1.degree(), p2.degree());
  for (int i = 0; i <= top; ++i) {
    if (p1.coefficient(i) != p2.coefficient(i)) {
      c.first_difference = i;
      break;
    }
  }
  c.polynomials_differ = c.first_difference >= 0;
  return c;
}

nlohmann::json polynomial_json(const IntPolynomial& p) {
  return nlohmann::json{{"coefficients", to_json_coefficients(p)}, {"text", p.to_string()}, {"degree", p.degree()}};
}

}  // namespace cayleypair
