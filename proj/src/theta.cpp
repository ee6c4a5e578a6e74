#include "cayleypair/theta.hpp"

#include "cayleypair/error.hpp"

namespace cayleypair {

ThetaGraph ThetaGraph::build(int a, int b) {
  if (a < 1) throw InvalidInput("theta graph needs a >= 1");
  if (b < 0) throw InvalidInput("theta graph needs b >= 0");
  const int n = 2 * a + b + 1;
  SimpleGraph g(n + 1);
  for (int i = 0; i < n; ++i) {
    if (i != 2 * a + 1) g.add_edge(i, i + 1);
  }
  g.add_edge(0, 2 * a + 1);
  if (b > 0) {
    g.add_edge(0, 2 * a + 2);
    g.add_edge(n, a + 1);
  } else {
    g.add_edge(0, a + 1);
  }
  return ThetaGraph(a, b, std::move(g));
}

Permutation ThetaGraph::rho() const {
  std::vector<int> img(num_vertices());
  for (int i = 0; i <= n(); ++i) {
    img[i] = i <= 2 * a_ + 1 ? (i + a_ + 1) % (2 * a_ + 2) : 4 * a_ + b_ + 3 - i;
  }
  return Permutation(std::move(img));
}

Permutation ThetaGraph::psi() const {
  std::vector<int> img(num_vertices());
  for (int i = 0; i <= n(); ++i) {
    if (i <= a_ + 1) {
      img[i] = a_ + 1 - i;
    } else if (i <= 2 * a_ + 1) {
      img[i] = 3 * a_ + 3 - i;
    } else {
      img[i] = 4 * a_ + b_ + 3 - i;
    }
  }
  return Permutation(std::move(img));
}

std::array<std::vector<int>, 3> ThetaGraph::paths() const {
  std::array<std::vector<int>, 3> p;
  for (int i = 0; i <= a_ + 1; ++i) p[0].push_back(i);
  p[1].push_back(0);
  for (int i = 2 * a_ + 2; i <= n(); ++i) p[1].push_back(i);
  p[1].push_back(a_ + 1);
  p[2].push_back(0);
  for (int i = 2 * a_ + 1; i >= a_ + 1; --i) p[2].push_back(i);
  return p;
}

bool ThetaGraph::is_automorphism(const Permutation& p) const {
  if (p.degree() != num_vertices()) return false;
  for (auto [u, v] : graph_.edges()) {
    if (!graph_.has_edge(p(u), p(v))) return false;
  }
  return true;
}

Permutation path_permutation(const std::vector<int>& path, int degree) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  if (path.empty()) return Permutation(std::move(img));
  for (std::size_t i = 0; i + 1 < path.size(); ++i) img[path[i]] = path[i + 1];
  img[path.back()] = path.front();
  return Permutation(std::move(img));
}

CongruenceCase classify(int a, int b) {
  if ((a + b) % 2 == 1) return CongruenceCase::kOddSum;
  if (a % 2 == 0) return b % 4 == 0 ? CongruenceCase::kEvenA_B0mod4 : CongruenceCase::kEvenA_B2mod4;
  return b % 4 == 1 ? CongruenceCase::kOddA_B1mod4 : CongruenceCase::kOddA_B3mod4;
}

std::string to_string(CongruenceCase c) {
  switch (c) {
    case CongruenceCase::kOddSum: return "a+b odd";
    case CongruenceCase::kEvenA_B0mod4: return "a even, b = 0 mod 4";
    case CongruenceCase::kEvenA_B2mod4: return "a even, b = 2 mod 4";
    case CongruenceCase::kOddA_B1mod4: return "a odd, b = 1 mod 4";
    case CongruenceCase::kOddA_B3mod4: return "a odd, b = 3 mod 4";
  }
  return "?";
}

std::string group_name(GroupTag g, int n) {
  return (g == GroupTag::kSymmetric ? "S" : "A") + std::to_string(n);
}

GroupTag generated_group(CongruenceCase c, int which) {
  switch (c) {
    case CongruenceCase::kOddSum:
    case CongruenceCase::kEvenA_B2mod4:
      return GroupTag::kSymmetric;
    case CongruenceCase::kEvenA_B0mod4:
      return GroupTag::kAlternating;
    case CongruenceCase::kOddA_B1mod4:
      return which == 1 ? GroupTag::kAlternating : GroupTag::kSymmetric;
    case CongruenceCase::kOddA_B3mod4:
      return which == 1 ? GroupTag::kSymmetric : GroupTag::kAlternating;
  }
  return GroupTag::kSymmetric;
}

bool lemma_parity(CongruenceCase c, int which, Parity* out) {
  if (c == CongruenceCase::kOddSum) return false;
  *out = generated_group(c, which) == GroupTag::kAlternating ? Parity::kEven : Parity::kOdd;
  return true;
}

GeneratorSets raw_generators(const ThetaGraph& t) {
  const int n = t.n();
  const Permutation rho = t.rho();
  const Permutation psi = t.psi();
  GeneratorSets out;
  for (const auto& path : t.paths()) {
    const Permutation sp = path_permutation(path, n + 1);
    for (int flavor = 0; flavor < 2; ++flavor) {
      const Permutation c = sp * (flavor == 0 ? rho : psi);
      if (c(0) != 0) throw VerificationFailure("sigma_p composed with rho/psi moves v0");
      std::vector<int> img(n);
      for (int i = 1; i <= n; ++i) img[i - 1] = c(i) - 1;
      (flavor == 0 ? out.s1 : out.s2).emplace_back(std::move(img));
    }
  }
  return out;
}

void check_pair_constructible(int a, int b) {
  if (a < 1 || b < 0) throw InvalidInput("need a >= 1 and b >= 0");
  if (a == 2 && b == 1) {
    throw InvalidInput("(a,b) = (2,1): theta_{2,1} is the Wilson exception theta_0");
  }
  const CongruenceCase c = classify(a, b);
  if (c != CongruenceCase::kOddSum && c != CongruenceCase::kEvenA_B0mod4) {
    throw InvalidInput("(a,b) = (" + std::to_string(a) + "," + std::to_string(b) +
                       ") is a mixed case (" + to_string(c) +
                       "); pairs need a+b odd, or a even and b = 0 mod 4");
  }
}

GeneratingPair sigma_tau_sets(const ThetaGraph& t) {
  check_pair_constructible(t.a(), t.b());
  GeneratorSets g = raw_generators(t);
  GeneratingPair p;
  p.a = t.a();
  p.b = t.b();
  p.n = t.n();
  p.case_tag = classify(t.a(), t.b());
  p.group_tag = generated_group(p.case_tag, 1);
  p.s1 = std::move(g.s1);
  p.s2 = std::move(g.s2);
  for (int which = 1; which <= 2; ++which) {
    Parity want;
    if (!lemma_parity(p.case_tag, which, &want)) continue;
    for (const auto& s : which == 1 ? p.s1 : p.s2) {
      if (s.parity() != want) {
        throw VerificationFailure("generator " + format_cycles(s) + " has the wrong parity");
      }
    }
  }
  return p;
}

nlohmann::json to_json(const GeneratingPair& p) {
  nlohmann::json j;
  j["a"] = p.a;
  j["b"] = p.b;
  j["n"] = p.n;
  j["case"] = to_string(p.case_tag);
  j["group"] = group_name(p.group_tag, p.n);
  for (const auto* set : {&p.s1, &p.s2}) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : *set) arr.push_back(format_cycles(s));
    j[set == &p.s1 ? "S1" : "S2"] = arr;
  }
  return j;
}

void write_dot(std::ostream& os, const ThetaGraph& t) {
  write_dot(os, t.graph(),
            "theta_" + std::to_string(t.a()) + "_" + std::to_string(t.b()),
            [](int v) { return "v" + std::to_string(v); });
}

}  // namespace cayleypair
