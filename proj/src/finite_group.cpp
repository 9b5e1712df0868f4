#include "frobenian/finite_group.hpp"

#include <algorithm>
#include <string>

#include "frobenian/errors.hpp"

namespace frobenian {

FiniteGroupTable::FiniteGroupTable(std::vector<std::vector<int>> table) : table_(std::move(table)) {
  const int n = static_cast<int>(table_.size());
  if (n == 0) throw InputError("empty group table");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw InputError("group table is not square");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : row) {
      if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) throw InputError("group table row is not a permutation");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw InputError("group table has no identity");
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul(a, b) == identity_) {
        if (mul(b, a) != identity_) throw InputError("group table: one-sided inverse");
        inverse_[static_cast<std::size_t>(a)] = b;
      }
    }
  }
  auto check_assoc = [&](int a, int b, int c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw InputError("group table is not associative");
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check_assoc(a, b, c);
  } else {
    // deterministic sample of triples
    unsigned long long state = 0x9e3779b97f4a7c15ULL;
    auto next = [&]() {
      state ^= state << 13U;
      state ^= state >> 7U;
      state ^= state << 17U;
      return static_cast<int>(state % static_cast<unsigned long long>(n));
    };
    for (int i = 0; i < 20000; ++i) check_assoc(next(), next(), next());
  }

  class_of_.assign(static_cast<std::size_t>(n), -1);
  conjugator_.assign(static_cast<std::size_t>(n), identity_);
  std::vector<int> order_seeds;
  order_seeds.push_back(identity_);
  for (int x = 0; x < n; ++x) {
    if (x != identity_) order_seeds.push_back(x);
  }
  for (int x : order_seeds) {
    if (class_of_[static_cast<std::size_t>(x)] >= 0) continue;
    const int cls = static_cast<int>(classes_.size());
    std::vector<int> members;
    for (int g = 0; g < n; ++g) {
      int y = conjugate(g, x);
      if (class_of_[static_cast<std::size_t>(y)] < 0) {
        class_of_[static_cast<std::size_t>(y)] = cls;
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    classes_.push_back(std::move(members));
  }
  // representatives are least members; record conjugators from them
  for (const auto& members : classes_) {
    int rep = members.front();
    for (int g = 0; g < n; ++g) {
      int y = conjugate(g, rep);
      if (conjugator_[static_cast<std::size_t>(y)] == identity_ && y != rep) conjugator_[static_cast<std::size_t>(y)] = g;
    }
    conjugator_[static_cast<std::size_t>(rep)] = identity_;
  }
  centralizers_.resize(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    for (int g = 0; g < n; ++g) {
      if (commute(x, g)) centralizers_[static_cast<std::size_t>(x)].push_back(g);
    }
    if (classes_[static_cast<std::size_t>(class_of(x))].size() * centralizers_[static_cast<std::size_t>(x)].size() !=
        static_cast<std::size_t>(n)) {
      throw InvariantViolation("class size times centralizer order differs from group order");
    }
  }
}

int FiniteGroupTable::element_order(int x) const {
  int k = 1;
  for (int y = x; y != identity_; y = mul(y, x)) ++k;
  return k;
}

std::vector<int> FiniteGroupTable::cyclic_subgroup(int x) const {
  std::vector<int> out{identity_};
  for (int y = x; y != identity_; y = mul(y, x)) out.push_back(y);
  std::sort(out.begin(), out.end());
  return out;
}

void FiniteGroupTable::set_designated_subgroups(std::vector<std::vector<int>> subgroups) {
  const int n = static_cast<int>(order());
  for (auto& h : subgroups) {
    std::sort(h.begin(), h.end());
    h.erase(std::unique(h.begin(), h.end()), h.end());
    if (h.empty() || !std::binary_search(h.begin(), h.end(), identity_)) throw InputError("subgroup lacks identity");
    for (int a : h) {
      if (a < 0 || a >= n) throw InputError("subgroup element out of range");
      for (int b : h) {
        if (!std::binary_search(h.begin(), h.end(), mul(a, inverse(b)))) throw InputError("subset is not a subgroup");
      }
    }
  }
  designated_ = std::move(subgroups);
}

FiniteGroupTable FiniteGroupTable::cyclic(int n) {
  if (n < 1) throw InputError("cyclic group order must be positive");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return FiniteGroupTable(std::move(t));
}

FiniteGroupTable FiniteGroupTable::symmetric3() {
  // permutations of {0,1,2} in lexicographic order; index 0 is the identity
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (std::size_t i = 0; i < 3; ++i) c[i] = perms[a][static_cast<std::size_t>(perms[b][i])];
      t[a][b] = index_of(c);
    }
  }
  return FiniteGroupTable(std::move(t));
}

FiniteGroupTable FiniteGroupTable::named(const std::string& name) {
  if (name == "C1") return cyclic(1);
  if (name == "C2") return cyclic(2);
  if (name == "C3") return cyclic(3);
  if (name == "S3") return symmetric3();
  throw InputError("unknown group name '" + name + "' (expected C1, C2, C3, S3)");
}

}  // namespace frobenian
