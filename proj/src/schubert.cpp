#include "msc/schubert.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "msc/errors.hpp"

namespace msc::schubert {

bool is_permutation(const Permutation& s) {
  int n = static_cast<int>(s.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : s) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

std::vector<int> descent_set(const Permutation& s) {
  std::vector<int> d;
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] > s[i + 1]) d.push_back(static_cast<int>(i) + 1);
  return d;
}

long length(const Permutation& s) {
  long inv = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] > s[j]) ++inv;
  return inv;
}

long r_sigma(const Permutation& s, int i, int j) {
  int n = static_cast<int>(s.size());
  if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("r_sigma: index out of range");
  long r = 0;
  for (int l = 1; l <= i; ++l)
    if (j + s[static_cast<std::size_t>(l) - 1] > n) ++r;
  return r;
}

bool valid_flag_type(const FlagType& ft) {
  if (ft.alpha.empty() || ft.n < 2) return false;
  int prev = 0;
  for (int a : ft.alpha) {
    if (a <= prev) return false;
    prev = a;
  }
  return ft.alpha.front() >= 1 && ft.alpha.back() < ft.n;
}

long flag_dim(const FlagType& ft) {
  if (!valid_flag_type(ft)) throw std::invalid_argument("flag_dim: invalid flag type");
  long d = 0;
  int prev = 0;
  for (int a : ft.alpha) {
    d += static_cast<long>(ft.n - a) * (a - prev);
    prev = a;
  }
  return d;
}

namespace {

bool descents_within(const Permutation& s, const std::vector<int>& alpha) {
  for (int d : descent_set(s))
    if (std::find(alpha.begin(), alpha.end(), d) == alpha.end()) return false;
  return true;
}

std::string perm_string(const Permutation& s) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ")";
  return os.str();
}

// longest permutation with descents contained in alpha: largest values in the
// first block, each block increasing
Permutation longest_in_quotient(const FlagType& ft) {
  Permutation w;
  w.reserve(static_cast<std::size_t>(ft.n));
  std::vector<int> bounds(ft.alpha.begin(), ft.alpha.end());
  bounds.push_back(ft.n);
  int next_high = ft.n;
  int prev = 0;
  for (int b : bounds) {
    int sz = b - prev;
    for (int v = next_high - sz + 1; v <= next_high; ++v) w.push_back(v);
    next_high -= sz;
    prev = b;
  }
  return w;
}

}  // namespace

Validity validate_problem(const SchubertProblem& p) {
  std::ostringstream os;
  if (!valid_flag_type(p.type)) return {false, "invalid flag type"};
  if (p.conditions.empty()) return {false, "no conditions"};
  long total = 0;
  for (std::size_t c = 0; c < p.conditions.size(); ++c) {
    const Condition& cond = p.conditions[c];
    if (static_cast<int>(cond.perm.size()) != p.type.n) {
      os << "condition " << c + 1 << " has " << cond.perm.size() << " entries, expected "
         << p.type.n;
      return {false, os.str()};
    }
    if (!is_permutation(cond.perm)) {
      os << "condition " << c + 1 << " " << perm_string(cond.perm) << " is not a permutation";
      return {false, os.str()};
    }
    if (cond.count < 1) {
      os << "condition " << c + 1 << " has multiplicity " << cond.count;
      return {false, os.str()};
    }
    if (!descents_within(cond.perm, p.type.alpha)) {
      os << "condition " << c + 1 << " " << perm_string(cond.perm)
         << " has a descent outside alpha";
      return {false, os.str()};
    }
    total += cond.count * length(cond.perm);
  }
  long dim = flag_dim(p.type);
  if (total != dim) {
    os << "total length " << total << " != dimension " << dim;
    return {false, os.str()};
  }
  return {true, ""};
}

long schubert_degree(const SchubertProblem& p) {
  Validity v = validate_problem(p);
  if (!v.valid) throw std::invalid_argument("schubert_degree: invalid problem: " + v.reason);
  int n = p.type.n;
  for (const Condition& c : p.conditions)
    if (length(c.perm) != 1)
      throw UnsupportedProblem("schubert_degree: condition " + perm_string(c.perm) +
                               " is not simple");

  Permutation id(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i + 1;
  std::map<Permutation, long> front;
  front[id] = 1;

  for (const Condition& c : p.conditions) {
    int a = descent_set(c.perm).front();
    for (long rep = 0; rep < c.count; ++rep) {
      std::map<Permutation, long> next;
      for (const auto& [w, mult] : front) {
        // Monk terms: w * t_{ij}, i <= a < j, w(i) < w(j), no intermediate
        // value between them
        for (int i = 1; i <= a; ++i) {
          for (int j = a + 1; j <= n; ++j) {
            int wi = w[static_cast<std::size_t>(i) - 1];
            int wj = w[static_cast<std::size_t>(j) - 1];
            if (wi >= wj) continue;
            bool blocked = false;
            for (int k = i + 1; k < j && !blocked; ++k) {
              int wk = w[static_cast<std::size_t>(k) - 1];
              if (wi < wk && wk < wj) blocked = true;
            }
            if (blocked) continue;
            Permutation u = w;
            std::swap(u[static_cast<std::size_t>(i) - 1], u[static_cast<std::size_t>(j) - 1]);
            if (!descents_within(u, p.type.alpha))
              throw ContractViolation("schubert_degree: Monk term " + perm_string(u) +
                                      " leaves the descent span");
            next[u] += mult;
          }
        }
      }
      front = std::move(next);
    }
  }

  Permutation target = longest_in_quotient(p.type);
  auto it = front.find(target);
  return it == front.end() ? 0 : it->second;
}

Necklace canonical_necklace(std::vector<int> beads) {
  if (beads.empty()) throw std::invalid_argument("canonical_necklace: empty sequence");
  std::vector<int> best = beads;
  std::vector<int> cur = beads;
  for (int refl = 0; refl < 2; ++refl) {
    for (std::size_t r = 0; r < cur.size(); ++r) {
      std::rotate(cur.begin(), cur.begin() + 1, cur.end());
      if (cur < best) best = cur;
    }
    std::reverse(cur.begin(), cur.end());
  }
  return Necklace{best};
}

std::vector<Necklace> enumerate_necklaces(const SchubertProblem& p) {
  Validity v = validate_problem(p);
  if (!v.valid) throw std::invalid_argument("enumerate_necklaces: invalid problem: " + v.reason);
  std::vector<int> beads;
  for (const Condition& c : p.conditions) {
    std::vector<int> d = descent_set(c.perm);
    if (d.size() != 1)
      throw UnsupportedProblem("enumerate_necklaces: condition " + perm_string(c.perm) +
                               " is not Grassmannian");
    for (long rep = 0; rep < c.count; ++rep) beads.push_back(d.front());
  }
  std::sort(beads.begin(), beads.end());
  std::set<Necklace> classes;
  do {
    classes.insert(canonical_necklace(beads));
  } while (std::next_permutation(beads.begin(), beads.end()));
  std::vector<Necklace> out;
  for (const Necklace& nk : classes)
    if (is_monotone(nk)) out.push_back(nk);
  for (const Necklace& nk : classes)
    if (!is_monotone(nk)) out.push_back(nk);
  return out;
}

bool is_monotone(const Necklace& nk) {
  const std::vector<int>& b = nk.beads;
  int cyclic_descents = 0;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] > b[(i + 1) % b.size()]) ++cyclic_descents;
  return cyclic_descents <= 1;
}

std::string necklace_to_string(const Necklace& nk) {
  bool compact = std::all_of(nk.beads.begin(), nk.beads.end(),
                             [](int b) { return b >= 0 && b <= 9; });
  std::ostringstream os;
  for (std::size_t i = 0; i < nk.beads.size(); ++i) {
    if (!compact && i) os << "-";
    os << nk.beads[i];
  }
  return os.str();
}

Necklace parse_necklace(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_necklace: empty string");
  std::vector<int> beads;
  if (s.find('-') != std::string::npos) {
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, '-')) {
      if (tok.empty()) throw std::invalid_argument("parse_necklace: bad token");
      beads.push_back(std::stoi(tok));
    }
  } else {
    for (char c : s) {
      if (c < '0' || c > '9') throw std::invalid_argument("parse_necklace: bad character");
      beads.push_back(c - '0');
    }
  }
  return Necklace{beads};
}

}  // namespace msc::schubert
