#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace frobenian {

/// A finite group given by its multiplication table, with derived
/// conjugacy and centralizer data. Element indices are 0..order-1;
/// table[i][j] is the index of (i * j).
class FiniteGroupTable {
 public:
  /// Validates the group axioms (associativity exhaustively up to order 64,
  /// on a deterministic sample above) and throws InputError otherwise.
  explicit FiniteGroupTable(std::vector<std::vector<int>> table);

  std::size_t order() const { return table_.size(); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int conjugate(int g, int x) const { return mul(mul(g, x), inverse(g)); }
  const std::vector<std::vector<int>>& table() const { return table_; }

  /// Conjugacy classes; class 0 is {identity}, the rest ordered by least
  /// member. Each class is sorted and its representative is its least member.
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int x) const { return class_of_[static_cast<std::size_t>(x)]; }
  int representative(int cls) const { return classes_[static_cast<std::size_t>(cls)].front(); }
  std::size_t class_count() const { return classes_.size(); }
  /// Some g with g * rep * g^-1 = x, rep the representative of x's class.
  int conjugator(int x) const { return conjugator_[static_cast<std::size_t>(x)]; }

  const std::vector<int>& centralizer(int x) const { return centralizers_[static_cast<std::size_t>(x)]; }
  int element_order(int x) const;
  /// Sorted elements of the cyclic subgroup generated by x.
  std::vector<int> cyclic_subgroup(int x) const;
  bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }

  /// Subgroups attached by callers (e.g. root stabilizers).
  const std::vector<std::vector<int>>& designated_subgroups() const { return designated_; }
  /// Each must be a subgroup; throws InputError otherwise.
  void set_designated_subgroups(std::vector<std::vector<int>> subgroups);

  /// Named small groups: "C1", "C2", "C3", "S3".
  static FiniteGroupTable named(const std::string& name);
  static FiniteGroupTable cyclic(int n);
  static FiniteGroupTable symmetric3();

 private:
  std::vector<std::vector<int>> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  std::vector<int> conjugator_;
  std::vector<std::vector<int>> centralizers_;
  std::vector<std::vector<int>> designated_;
};

}  // namespace frobenian
