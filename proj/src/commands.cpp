#include "cayleypair/commands.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cayleypair/error.hpp"
#include "cayleypair/instance.hpp"
#include "cayleypair/spectra.hpp"
#include "cayleypair/walks.hpp"
#include "cayleypair/zeta.hpp"

namespace cayleypair {

namespace {

bool wants(const RunConfig& cfg, const std::string& f) { return cfg.formats.count(f) > 0; }

std::filesystem::path out_path(const RunConfig& cfg, const std::string& name) {
  std::filesystem::path dir = cfg.output_dir.empty() ? "." : cfg.output_dir;
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write_file(const RunConfig& cfg, const std::string& name, const std::string& content) {
  std::ofstream os(out_path(cfg, name));
  if (!os) throw InvalidInput("cannot write " + out_path(cfg, name).string());
  os << content;
}

void emit_json(const RunConfig& cfg, const std::string& name, const nlohmann::json& j, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (cfg.output_dir.empty()) {
    out << text;
  } else {
    write_file(cfg, name, text);
  }
}

nlohmann::json check(const std::string& name, bool pass, nlohmann::json detail = nullptr) {
  nlohmann::json j{{"name", name}, {"pass", pass}};
  if (!detail.is_null()) j["detail"] = std::move(detail);
  return j;
}

void require_charpoly_cap(const RunConfig& cfg, int n) {
  if (n > cfg.cap_charpoly_n) {
    throw ResourceCapExceeded("characteristic polynomial verification is capped at n <= " +
                              std::to_string(cfg.cap_charpoly_n) + " (n = " + std::to_string(n) +
                              "); raise --cap-charpoly-n to override");
  }
}

nlohmann::json walk_table(const CayleyGraph& x, const std::vector<PathCountVector>& w) {
  nlohmann::json elems = nlohmann::json::array();
  for (int g = 0; g < x.num_vertices(); ++g) elems.push_back(x.vertex_name(g));
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& v : w) {
    nlohmann::json row = nlohmann::json::array();
    for (int g = 0; g < x.num_vertices(); ++g) row.push_back(rational_string(v.probability(g)));
    rows.push_back(row);
  }
  return {{"elements", elems}, {"mu", rows}};
}

}  // namespace

std::vector<Permutation> parse_generator_list(const std::string& text, int degree) {
  std::vector<Permutation> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(parse_cycles(item, degree));
  if (out.empty()) throw InvalidInput("empty generator list");
  return out;
}

nlohmann::json report_header(const std::string& command, const RunConfig& cfg) {
  return {{"schema_version", kReportSchemaVersion}, {"command", command}, {"a", cfg.a}, {"b", cfg.b}};
}

int cmd_pair(const RunConfig& cfg, std::ostream& out) {
  check_pair_constructible(cfg.a, cfg.b);
  const ThetaGraph t = ThetaGraph::build(cfg.a, cfg.b);
  const GeneratingPair p = sigma_tau_sets(t);
  const std::int64_t order = predicted_group_order(p.group_tag, p.n);
  nlohmann::json j = report_header("pair", cfg);
  j["pair"] = to_json(p);
  j["theta"] = {{"vertices", t.num_vertices()}, {"edges", t.graph().num_edges()}};
  j["counts"] = {{"G", order},
                 {"X", order},
                 {"Y", 2 * order},
                 {"puz", factorial(p.n + 1)},
                 {"puz_contracted", 2 * factorial(p.n)},
                 {"puz_contracted_0", natural_scope(p.a, p.b) == PuzzleScope::kFull ? 2 * factorial(p.n)
                                                                                     : factorial(p.n)}};
  emit_json(cfg, "pair.json", j, out);
  return kExitOk;
}

int cmd_walk(const RunConfig& cfg, std::ostream& out) {
  const PairInstance inst = build_pair_instance(cfg.a, cfg.b, cfg.cap_elements);
  const bool custom = !cfg.gens1.empty() || !cfg.gens2.empty();
  const CayleyGraph x1 = cfg.gens1.empty() ? inst.x1
                                             : build_cayley(parse_generator_list(cfg.gens1, inst.pair.n), false,
                                                            cfg.cap_elements);
  const CayleyGraph x2 = cfg.gens2.empty() ? inst.x2
                                             : build_cayley(parse_generator_list(cfg.gens2, inst.pair.n), false,
                                                            cfg.cap_elements);
  if (x1.num_vertices() != x2.num_vertices()) throw InvalidInput("the two generating sets span groups of different order");
  const int T = cfg.T >= 0 ? cfg.T : 2 * std::max(diameter(x1), diameter(x2)) + 4;
  const auto w1 = walk(x1, T);
  const auto w2 = walk(x2, T);

  WalkReport r;
  if (!custom) {
    const CoverInstance cover = build_cover_instance(inst, cfg.cap_elements);
    r = verify_walk_equality(x1, x2, cover.steps, T);
  } else {
    for (int t = 0; t <= T; ++t) {
      r.tv1.push_back(tv_distance(w1[t]));
      r.tv2.push_back(tv_distance(w2[t]));
      if (r.tv1.back() != r.tv2.back()) r.tv_equal = false;
    }
  }

  if (wants(cfg, "csv")) {
    std::ostringstream m1, m2, tv;
    write_distribution_csv(m1, x1, w1);
    write_distribution_csv(m2, x2, w2);
    write_tv_csv(tv, r);
    if (cfg.output_dir.empty()) {
      out << m1.str() << "\n" << m2.str() << "\n" << tv.str();
    } else {
      write_file(cfg, "mu1.csv", m1.str());
      write_file(cfg, "mu2.csv", m2.str());
      write_file(cfg, "tv.csv", tv.str());
    }
  }
  if (wants(cfg, "json")) {
    nlohmann::json j = report_header("walk", cfg);
    j["T"] = T;
    j["custom_generators"] = custom;
    j["mu1"] = walk_table(x1, w1);
    j["mu2"] = walk_table(x2, w2);
    nlohmann::json tv = nlohmann::json::array();
    for (int t = 0; t <= T; ++t) {
      tv.push_back({{"t", t}, {"tv1", rational_string(r.tv1[t])}, {"tv2", rational_string(r.tv2[t])}});
    }
    j["tv"] = tv;
    j["tv_equal"] = r.tv_equal;
    if (!custom) j["counts_equal_under_phi"] = r.counts_equal;
    emit_json(cfg, "walk.json", j, out);
  }
  return r.ok() ? kExitOk : kExitVerificationFailed;
}

int cmd_spectra(const RunConfig& cfg, std::ostream& out) {
  check_pair_constructible(cfg.a, cfg.b);
  require_charpoly_cap(cfg, 2 * cfg.a + cfg.b + 1);
  const PairInstance inst = build_pair_instance(cfg.a, cfg.b, cfg.cap_elements);
  const CoverInstance cover = build_cover_instance(inst, cfg.cap_elements);
  const KAction action = k_action(cover.puzzle, inst.theta);
  const CoveringDiagram d = covering_diagram(cover.puzzle, action);
  const Spectra1Report s1 = verify_spectra1(d);
  const Spectra2Report s2 = verify_spectra2(d);
  const IntPolynomial p1 = charpoly(adjacency_matrix(inst.x1.graph()));
  const IntPolynomial p2 = charpoly(adjacency_matrix(inst.x2.graph()));

  nlohmann::json j = report_header("spectra", cfg);
  j["polynomials"] = {{"Y", polynomial_json(d.p_y)},
                      {"X_rho", polynomial_json(d.p_rho)},
                      {"X_psi", polynomial_json(d.p_psi)},
                      {"X_rhopsi", polynomial_json(d.p_rhopsi)},
                      {"Z", polynomial_json(d.p_z)},
                      {"P1", polynomial_json(p1)},
                      {"P2", polynomial_json(p2)},
                      {"P1_over_PZ", polynomial_json(s2.rho_over_z)},
                      {"P2_over_PZ", polynomial_json(s2.psi_over_z)}};
  nlohmann::json checks = nlohmann::json::array();
  checks.push_back(check("X_rho = X(G,S1) spectrally", d.p_rho == p1));
  checks.push_back(check("X_psi = X(G,S2) spectrally", d.p_psi == p2));
  checks.push_back(check("P_Y P_Z^2 = P_rho P_psi P_rhopsi", s1.ok));
  checks.push_back(check("P_rho/P_Z = (-1)^{|G|/2} P_psi(-x)/P_Z(-x)", s2.ratio_ok));
  checks.push_back(check("P_rhopsi = (-1)^{|G|/2} P_Z(x) P_Z(-x)", s2.rhopsi_ok));
  checks.push_back(check("deg P_Z = deg(P_rho/P_Z) = |G|/2", s2.degree_ok));
  bool all = true;
  for (const auto& c : checks) all = all && c["pass"].get<bool>();
  j["checks"] = checks;
  j["all_pass"] = all;
  emit_json(cfg, "spectra.json", j, out);
  return all ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  check_pair_constructible(cfg.a, cfg.b);
  const int n = 2 * cfg.a + cfg.b + 1;
  require_charpoly_cap(cfg, n);
  const PairInstance inst = build_pair_instance(cfg.a, cfg.b, cfg.cap_elements);
  const CoverInstance cover = build_cover_instance(inst, cfg.cap_elements);
  const int d1 = diameter(inst.x1), d2 = diameter(inst.x2);
  const int T = cfg.T >= 0 ? cfg.T : 2 * std::max(d1, d2) + 4;

  nlohmann::json j = report_header("verify", cfg);
  j["pair"] = to_json(inst.pair);
  j["T"] = T;
  j["trunc"] = cfg.trunc;

  // (i) non-isomorphism
  const KAction action = k_action(cover.puzzle, inst.theta);
  const CoveringDiagram d = covering_diagram(cover.puzzle, action);
  const IntPolynomial p1 = charpoly(adjacency_matrix(inst.x1.graph()));
  const IntPolynomial p2 = charpoly(adjacency_matrix(inst.x2.graph()));
  const auto cert = verify_nonisomorphic(p1, p2, d1, d2);
  nlohmann::json noniso{{"pass", cert.polynomials_differ},
                        {"verdict", cert.verdict()},
                        {"first_differing_coefficient", cert.first_difference},
                        {"diameter_S1", d1},
                        {"diameter_S2", d2},
                        {"X1_bipartite", inst.x1.graph().is_bipartite()},
                        {"X2_bipartite", inst.x2.graph().is_bipartite()}};

  // (ii) random walks
  const WalkReport wr = verify_walk_equality(inst.x1, inst.x2, cover.steps, T);
  const ProjectionReport pr1 = verify_projection(cover.y1, inst.x1, std::min(T, 8));
  const ProjectionReport pr2 = verify_projection(cover.y2, inst.x2, std::min(T, 8));
  nlohmann::json tv = nlohmann::json::array();
  for (int t = 0; t <= T; ++t) tv.push_back(rational_string(wr.tv1[t]));
  nlohmann::json walks{{"pass", wr.ok() && pr1.ok && pr2.ok},
                       {"counts_equal_under_phi", wr.counts_equal},
                       {"tv_equal", wr.tv_equal},
                       {"projection_S1", pr1.ok},
                       {"projection_S2", pr2.ok},
                       {"tv", tv},
                       {"phi_normalized_by_translation", cover.steps.translated},
                       {"phi_normalized_by_deck", cover.steps.deck_swapped}};
  if (wr.counterexample) {
    walks["counterexample"] = {{"t", wr.counterexample->t},
                               {"g", format_cycles(inst.x1.element(wr.counterexample->element))}};
  }
  if (!pr1.ok) walks["projection_S1_witness"] = pr1.witness;
  if (!pr2.ok) walks["projection_S2_witness"] = pr2.witness;

  // (iii) spectra
  const Spectra1Report s1 = verify_spectra1(d);
  const Spectra2Report s2 = verify_spectra2(d);
  nlohmann::json spectral{{"spectra1", s1.ok},
                          {"spectra2_ratio", s2.ratio_ok},
                          {"spectra2_rhopsi", s2.rhopsi_ok},
                          {"half_degree", s2.degree_ok},
                          {"X_rho_is_X1", d.p_rho == p1},
                          {"X_psi_is_X2", d.p_psi == p2},
                          {"P_Z", d.p_z.to_string()},
                          {"P1_over_PZ", s2.rho_over_z.to_string()}};
  bool spectral_pass = s1.ok && s2.ok() && d.p_rho == p1 && d.p_psi == p2;
  if (d.z.base.has_loops() || !d.z.base.is_reverse_paired()) {
    spectral["L_factorization"] = "not applicable: quotients carry unpaired loops";
  } else {
    const auto lr = verify_L_factorization(cover.puzzle, action, d, cfg.trunc);
    spectral["L_factorization"] = {{"pass", lr.ok()},
                                   {"primes", lr.num_primes},
                                   {"frobenius_parity", lr.frobenius_parity_ok},
                                   {"L_rho_equals_L_psi_at_minus_u", lr.rho_psi_ok},
                                   {"zeta_routes_agree_on_Z", lr.z_routes_ok}};
    spectral_pass = spectral_pass && lr.ok();
  }
  spectral["pass"] = spectral_pass;

  j["properties"] = {{"nonisomorphic", noniso}, {"random_walk", walks}, {"spectral", spectral}};
  const bool all = cert.polynomials_differ && walks["pass"].get<bool>() && spectral_pass;
  j["all_pass"] = all;
  emit_json(cfg, "verify.json", j, out);
  return all ? kExitOk : kExitVerificationFailed;
}

int cmd_export(const RunConfig& cfg, std::ostream& out) {
  check_pair_constructible(cfg.a, cfg.b);
  const PairInstance inst = build_pair_instance(cfg.a, cfg.b, cfg.cap_elements);
  const CoverInstance cover = build_cover_instance(inst, cfg.cap_elements);
  const KAction action = k_action(cover.puzzle, inst.theta);
  const auto orbit_name = [&](const QuotientGraph& q) {
    return [&q, &cover](int v) {
      for (std::size_t f = 0; f < q.orbits.vertex_orbit.size(); ++f) {
        if (q.orbits.vertex_orbit[f] == v) return "orbit of " + cover.puzzle.positions[f].to_string();
      }
      return std::string("?");
    };
  };
  std::vector<std::string> written;
  auto save = [&](const std::string& name, const std::string& content) {
    write_file(cfg, name, content);
    written.push_back(out_path(cfg, name).string());
  };
  if (wants(cfg, "dot")) {
    std::ostringstream s;
    write_dot(s, inst.theta);
    save("theta.dot", s.str());
    s.str("");
    write_dot(s, inst.x1.graph(), "X1", [&](int v) { return inst.x1.vertex_name(v); });
    save("x1.dot", s.str());
    s.str("");
    write_dot(s, inst.x2.graph(), "X2", [&](int v) { return inst.x2.vertex_name(v); });
    save("x2.dot", s.str());
    s.str("");
    write_dot(s, cover.puzzle);
    save("y.dot", s.str());
    for (KSubgroup h : {KSubgroup::kRho, KSubgroup::kPsi, KSubgroup::kRhoPsi, KSubgroup::kFull}) {
      const QuotientGraph q = quotient(cover.puzzle.graph, action, h);
      const std::string name = h == KSubgroup::kRho      ? "x_rho"
                               : h == KSubgroup::kPsi    ? "x_psi"
                               : h == KSubgroup::kRhoPsi ? "x_rhopsi"
                                                         : "z";
      s.str("");
      write_dot(s, q.base, name, orbit_name(q));
      save(name + ".dot", s.str());
    }
  }
  if (wants(cfg, "csv")) {
    std::ostringstream s;
    write_arc_csv(s, inst.x1.graph(), [&](int v) { return inst.x1.vertex_name(v); });
    save("x1_arcs.csv", s.str());
    s.str("");
    write_arc_csv(s, inst.x2.graph(), [&](int v) { return inst.x2.vertex_name(v); });
    save("x2_arcs.csv", s.str());
  }
  if (wants(cfg, "json")) {
    save("pair.json", to_json(inst.pair).dump(2) + "\n");
    save("phi.json", to_json(cover.steps, inst.x1, inst.x2).dump(2) + "\n");
  }
  nlohmann::json j = report_header("export", cfg);
  j["files"] = written;
  out << j.dump(2) << "\n";
  return kExitOk;
}

int run_command(const std::string& command, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (command == "pair") return cmd_pair(cfg, out);
    if (command == "verify") return cmd_verify(cfg, out);
    if (command == "walk") return cmd_walk(cfg, out);
    if (command == "spectra") return cmd_spectra(cfg, out);
    if (command == "export") return cmd_export(cfg, out);
    err << "error: unknown command " << command << "\n";
    return kExitInvalidInput;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const ResourceCapExceeded& e) {
    err << "resource cap: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
}

}  // namespace cayleypair
