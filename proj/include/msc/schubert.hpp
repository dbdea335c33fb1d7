#pragma once

#include <string>
#include <vector>

namespace msc::schubert {

// one-line notation, values 1..n
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& s);

// positions i (1-based) with s(i) > s(i+1)
std::vector<int> descent_set(const Permutation& s);

// inversion count
long length(const Permutation& s);

// |{l <= i : j + s(l) > n}|
long r_sigma(const Permutation& s, int i, int j);

struct FlagType {
  std::vector<int> alpha;  // strictly increasing, 1 <= a_1, a_k < n
  int n = 0;
};

bool valid_flag_type(const FlagType& ft);
long flag_dim(const FlagType& ft);

struct Condition {
  Permutation perm;
  long count = 1;
};

struct SchubertProblem {
  FlagType type;
  std::vector<Condition> conditions;
};

struct Validity {
  bool valid = false;
  std::string reason;  // empty when valid
};

Validity validate_problem(const SchubertProblem& p);

// generic number of complex solutions, by iterated Chevalley-Monk products;
// requires every condition to be simple (length 1)
long schubert_degree(const SchubertProblem& p);

// canonical dihedral class of a circular descent sequence
struct Necklace {
  std::vector<int> beads;
  bool operator==(const Necklace& o) const { return beads == o.beads; }
  bool operator<(const Necklace& o) const { return beads < o.beads; }
};

// lexicographically minimal representative over all rotations and reflections
Necklace canonical_necklace(std::vector<int> beads);

// every dihedral class of the problem's descent multiset, monotone class first,
// then ascending
std::vector<Necklace> enumerate_necklaces(const SchubertProblem& p);

// true iff some rotation of the bead sequence is weakly increasing
bool is_monotone(const Necklace& nk);

// compact form: digits concatenated when all beads are single-digit,
// hyphen-separated otherwise
std::string necklace_to_string(const Necklace& nk);
Necklace parse_necklace(const std::string& s);

}  // namespace msc::schubert
