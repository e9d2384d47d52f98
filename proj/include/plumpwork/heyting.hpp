#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace plumpwork {

// Finite poset on labelled elements; leq[i][j] means elements[i] <= elements[j].
struct Poset {
  std::vector<std::string> elements;
  std::vector<std::vector<bool>> leq;

  static Poset chain(const std::vector<std::string>& labels);
  static Poset antichain(const std::vector<std::string>& labels);

  // Reflexive-transitive closure in place.
  void close();
  // Violated partial-order axioms, one message each; empty if valid.
  std::vector<std::string> validate() const;
  bool is_antichain() const;
};

// Parses {"elements": [...], "leq": [["a","b"], ...]}; the closure is applied,
// then antisymmetry is validated.
Poset poset_from_json(const std::string& text);

// Finite complete Heyting algebra with all operations as lookup tables.
// Carrier members are small integer indices; downset_algebra builds one that
// is correct by construction, from_tables accepts arbitrary tables which must
// pass check_laws before use.
class HeytingAlgebra {
 public:
  static HeytingAlgebra downset_algebra(const Poset& p);
  static HeytingAlgebra from_tables(std::string id,
                                    std::vector<std::string> labels,
                                    std::vector<std::vector<bool>> leq,
                                    std::vector<std::vector<int>> meet,
                                    std::vector<std::vector<int>> join,
                                    std::vector<std::vector<int>> implies,
                                    int bottom, int top);

  // Built-in algebras: "bool2", "sierpinski", "chain4", "diamond".
  static const HeytingAlgebra& builtin(const std::string& id);
  static std::vector<std::string> builtin_ids();

  const std::string& id() const { return id_; }
  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int v) const { return labels_[v]; }
  std::optional<int> index_of(const std::string& label) const;

  bool leq(int p, int q) const { return leq_[p][q]; }
  int meet(int p, int q) const { return meet_[p][q]; }
  int join(int p, int q) const { return join_[p][q]; }
  int implies(int p, int q) const { return implies_[p][q]; }
  int neg(int p) const { return implies_[p][bottom_]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  // Exhaustive check of the lattice axioms, distributivity, the residuation
  // adjunction and the bound laws. Returns every violated instance.
  std::vector<std::string> check_laws() const;

  // True when p \/ (p -> bottom) = top for every p.
  bool is_boolean() const;

  // Description of the carrier for `algebra show`.
  std::string describe() const;

 private:
  HeytingAlgebra() = default;

  std::string id_;
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<int>> meet_;
  std::vector<std::vector<int>> join_;
  std::vector<std::vector<int>> implies_;
  int bottom_ = 0;
  int top_ = 0;
};

// Handle to one element of a fixed algebra. Two TruthValues combine only when
// they reference the identical algebra object.
struct TruthValue {
  const HeytingAlgebra* alg = nullptr;
  int v = 0;

  bool operator==(const TruthValue&) const = default;
  bool is_top() const { return v == alg->top(); }
  bool is_bottom() const { return v == alg->bottom(); }
  const std::string& label() const { return alg->label(v); }
};

TruthValue tv_meet(TruthValue a, TruthValue b);
TruthValue tv_join(TruthValue a, TruthValue b);
TruthValue tv_implies(TruthValue a, TruthValue b);
bool tv_leq(TruthValue a, TruthValue b);

// Empty meet is top, empty join is bottom. Mixed-algebra input is rejected.
TruthValue big_meet(const HeytingAlgebra& h, const std::vector<TruthValue>& vs);
TruthValue big_join(const HeytingAlgebra& h, const std::vector<TruthValue>& vs);

}  // namespace plumpwork
