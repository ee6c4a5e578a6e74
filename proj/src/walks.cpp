#include "cayleypair/walks.hpp"

#include "cayleypair/error.hpp"

namespace cayleypair {

namespace {

BigInt power(int d, int t) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(t));
  return r;
}

}  // namespace

PathCountVector PathCountVector::point_mass(int num_vertices, int vertex, int d) {
  PathCountVector v;
  v.counts.assign(num_vertices, 0);
  v.counts.at(vertex) = 1;
  v.d = d;
  return v;
}

BigInt PathCountVector::total() const {
  BigInt s = 0;
  for (const auto& c : counts) s += c;
  return s;
}

BigRational PathCountVector::probability(int v) const {
  BigRational q(counts[v], power(d, t));
  q.canonicalize();
  return q;
}

PathCountVector step(const PathCountVector& v, const CayleyGraph& x) {
  if (static_cast<int>(v.counts.size()) != x.num_vertices()) throw InvalidInput("count vector size mismatch");
  const int d = static_cast<int>(x.gens().size());
  if (v.d != d) throw InvalidInput("count vector degree mismatch");
  PathCountVector next;
  next.counts.assign(v.counts.size(), 0);
  next.t = v.t + 1;
  next.d = d;
  const auto& g = x.graph();
  for (int u = 0; u < x.num_vertices(); ++u) {
    if (v.counts[u] == 0) continue;
    for (int e : g.out_arcs(u)) next.counts[g.arc(e).target] += v.counts[u];
  }
  if (next.total() != power(d, next.t)) throw VerificationFailure("walk step does not conserve mass");
  return next;
}

std::vector<PathCountVector> walk(const CayleyGraph& x, int T, int start) {
  std::vector<PathCountVector> out;
  out.push_back(PathCountVector::point_mass(x.num_vertices(), start, static_cast<int>(x.gens().size())));
  for (int t = 1; t <= T; ++t) out.push_back(step(out.back(), x));
  return out;
}

BigRational tv_distance(const PathCountVector& v) {
  const long n = static_cast<long>(v.counts.size());
  const BigInt dt = power(v.d, v.t);
  BigInt sum = 0;
  for (const auto& c : v.counts) sum += abs(c * n - dt);
  BigRational q(sum, dt * n * 2);
  q.canonicalize();
  return q;
}

WalkReport verify_walk_equality(const CayleyGraph& x1, const CayleyGraph& x2, const StepBijections& phi,
                                int T) {
  if (x1.num_vertices() != x2.num_vertices()) throw InvalidInput("walk comparison needs groups of equal order");
  WalkReport r;
  auto w1 = walk(x1, T);
  auto w2 = walk(x2, T);
  for (int t = 0; t <= T; ++t) {
    const auto& map = t % 2 == 0 ? phi.phi0 : phi.phi1;
    for (int g = 0; g < x1.num_vertices() && r.counts_equal; ++g) {
      if (w1[t].counts[g] != w2[t].counts[map[g]]) {
        r.counts_equal = false;
        r.counterexample = WalkCounterexample{t, g};
      }
    }
    r.tv1.push_back(tv_distance(w1[t]));
    r.tv2.push_back(tv_distance(w2[t]));
    if (r.tv1.back() != r.tv2.back()) r.tv_equal = false;
  }
  return r;
}

ProjectionReport verify_projection(const CayleyGraph& y, const CayleyGraph& x, int T) {
  ProjectionReport r;
  auto wy = walk(y, T);
  auto wx = walk(x, T);
  for (int t = 0; t <= T; ++t) {
    r.max_t = t;
    for (int g = 0; g < x.num_vertices(); ++g) {
      int live = y.index_of(x.element(g), t & 1);
      int dead = y.index_of(x.element(g), (t + 1) & 1);
      BigInt live_count = live >= 0 ? wy[t].counts[live] : BigInt(0);
      BigInt dead_count = dead >= 0 ? wy[t].counts[dead] : BigInt(0);
      if (live_count != wx[t].counts[g] || dead_count != 0) {
        r.ok = false;
        r.witness = "t=" + std::to_string(t) + " g=" + format_cycles(x.element(g));
        return r;
      }
    }
  }
  return r;
}

std::string rational_string(const BigRational& q) {
  BigRational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

void write_distribution_csv(std::ostream& os, const CayleyGraph& x, const std::vector<PathCountVector>& walk) {
  os << "t";
  for (int g = 0; g < x.num_vertices(); ++g) os << ",\"" << x.vertex_name(g) << "\"";
  os << "\n";
  for (const auto& v : walk) {
    os << v.t;
    for (int g = 0; g < x.num_vertices(); ++g) os << "," << rational_string(v.probability(g));
    os << "\n";
  }
}

void write_tv_csv(std::ostream& os, const WalkReport& r) {
  os << "t,tv1,tv2,equal\n";
  for (std::size_t t = 0; t < r.tv1.size(); ++t) {
    os << t << "," << rational_string(r.tv1[t]) << "," << rational_string(r.tv2[t]) << ","
       << (r.tv1[t] == r.tv2[t] ? "true" : "false") << "\n";
  }
}

}  // namespace cayleypair
