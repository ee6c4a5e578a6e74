#ifndef CAYLEYPAIR_TESTS_ORACLES_HPP_
#define CAYLEYPAIR_TESTS_ORACLES_HPP_

// Reference implementations used only by the tests. They share no code
// with the library beyond the big-number types.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace oracle {

// 0-based one-line images.
using Perm = std::vector<int>;

Perm identity(int n);
// (p q)(i) = p(q(i)).
Perm mul(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
// 1-based disjoint cycles, e.g. "(1,3,2)(4,5)".
Perm cycles(const std::string& text, int n);

// Number of generator words k1..kt with k1 k2 ... kt = g, for every g
// reached. Exhaustive over all d^t words.
std::map<Perm, std::int64_t> word_counts(const std::vector<Perm>& gens, int t);

// Subgroup generated by gens, as a sorted list.
std::vector<Perm> closure(const std::vector<Perm>& gens);
// Eccentricity of the identity in the right Cayley graph.
int cayley_diameter(const std::vector<Perm>& gens);

// (1/2) sum over all N group elements of |count/d^t - 1/N|; elements not in
// `counts` have count zero.
mpq_class total_variation(const std::map<Perm, std::int64_t>& counts, int group_order, int d, int t);

// det(xI - A) by Faddeev-LeVerrier over Q, constant term first.
std::vector<mpz_class> faddeev_charpoly(const std::vector<std::vector<long>>& a);

// tr(W^m) for m = 1..max_len, W the non-backtracking matrix of a simple
// undirected graph.
std::vector<mpz_class> nonbacktracking_traces(const std::vector<std::vector<int>>& adjacency, int max_len);

// Closed non-backtracking cycle counts N_m recovered from a polynomial
// p(u) = 1/zeta(u) with p(0) = 1: u p'(u)/p(u) = -sum N_m u^m.
std::vector<mpz_class> cycle_counts_from_zeta_inverse(const std::vector<mpz_class>& p, int max_len);

// Connected components of the sliding-puzzle move graph, by BFS on label
// vectors.
int puzzle_components(const std::vector<std::vector<int>>& adjacency, std::int64_t* positions);

}  // namespace oracle

#endif  // CAYLEYPAIR_TESTS_ORACLES_HPP_
