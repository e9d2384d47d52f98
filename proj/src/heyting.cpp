#include "plumpwork/heyting.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace plumpwork {

namespace {

std::string pair_str(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

}  // namespace

Poset Poset::chain(const std::vector<std::string>& labels) {
  Poset p;
  p.elements = labels;
  int n = static_cast<int>(labels.size());
  p.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) p.leq[i][j] = true;
  return p;
}

Poset Poset::antichain(const std::vector<std::string>& labels) {
  Poset p;
  p.elements = labels;
  int n = static_cast<int>(labels.size());
  p.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) p.leq[i][i] = true;
  return p;
}

void Poset::close() {
  int n = static_cast<int>(elements.size());
  for (int i = 0; i < n; ++i) leq[i][i] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
}

std::vector<std::string> Poset::validate() const {
  std::vector<std::string> bad;
  int n = static_cast<int>(elements.size());
  std::set<std::string> seen;
  for (const auto& e : elements)
    if (!seen.insert(e).second) bad.push_back("duplicate element label " + e);
  if (static_cast<int>(leq.size()) != n) {
    bad.push_back("order matrix size mismatch");
    return bad;
  }
  for (int i = 0; i < n; ++i)
    if (!leq[i][i]) bad.push_back("reflexivity violated at " + elements[i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && leq[i][j] && leq[j][i])
        bad.push_back("antisymmetry violated at " +
                      pair_str(elements[i], elements[j]));
      for (int k = 0; k < n; ++k)
        if (leq[i][j] && leq[j][k] && !leq[i][k])
          bad.push_back("transitivity violated at " + elements[i] + "<=" +
                        elements[j] + "<=" + elements[k]);
    }
  return bad;
}

bool Poset::is_antichain() const {
  int n = static_cast<int>(elements.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq[i][j]) return false;
  return true;
}

Poset poset_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Poset p;
  p.elements = j.at("elements").get<std::vector<std::string>>();
  int n = static_cast<int>(p.elements.size());
  p.leq.assign(n, std::vector<bool>(n, false));
  auto index = [&](const std::string& e) {
    auto it = std::find(p.elements.begin(), p.elements.end(), e);
    if (it == p.elements.end())
      throw std::invalid_argument("leq mentions unknown element " + e);
    return static_cast<int>(it - p.elements.begin());
  };
  for (const auto& pr : j.at("leq")) {
    if (!pr.is_array() || pr.size() != 2)
      throw std::invalid_argument("leq entries must be pairs");
    p.leq[index(pr[0].get<std::string>())][index(pr[1].get<std::string>())] =
        true;
  }
  p.close();
  auto bad = p.validate();
  if (!bad.empty()) throw std::invalid_argument("invalid poset: " + bad[0]);
  return p;
}

HeytingAlgebra HeytingAlgebra::downset_algebra(const Poset& p) {
  auto bad = p.validate();
  if (!bad.empty())
    throw std::invalid_argument("not a partial order: " + bad[0]);
  int n = static_cast<int>(p.elements.size());
  if (n > 20) throw std::invalid_argument("poset too large for downsets");

  // Principal downsets as bitmasks.
  std::vector<std::uint32_t> down(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p.leq[y][x]) down[x] |= 1u << y;

  std::uint32_t full = n == 0 ? 0 : (1u << n) - 1;
  std::vector<std::uint32_t> carrier;
  for (std::uint32_t m = 0; m <= full; ++m) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      if ((m >> x) & 1u) ok = (down[x] & ~m) == 0;
    if (ok) carrier.push_back(m);
    if (full == 0) break;
  }
  std::sort(carrier.begin(), carrier.end(),
            [](std::uint32_t a, std::uint32_t b) {
              int pa = std::popcount(a), pb = std::popcount(b);
              return pa != pb ? pa < pb : a < b;
            });

  std::map<std::uint32_t, int> idx;
  for (int i = 0; i < static_cast<int>(carrier.size()); ++i)
    idx[carrier[i]] = i;

  // Largest downset contained in mask.
  auto core = [&](std::uint32_t mask) {
    std::uint32_t r = 0;
    for (int x = 0; x < n; ++x)
      if (((mask >> x) & 1u) && (down[x] & ~mask) == 0) r |= 1u << x;
    return r;
  };

  HeytingAlgebra h;
  int m = static_cast<int>(carrier.size());
  h.labels_.resize(m);
  for (int i = 0; i < m; ++i) {
    std::uint32_t s = carrier[i];
    if (s == 0)
      h.labels_[i] = "bot";
    else if (s == full)
      h.labels_[i] = "top";
    else {
      std::string l;
      for (int x = 0; x < n; ++x)
        if ((s >> x) & 1u) l += (l.empty() ? "" : ".") + p.elements[x];
      h.labels_[i] = l;
    }
  }
  h.leq_.assign(m, std::vector<bool>(m, false));
  h.meet_.assign(m, std::vector<int>(m, 0));
  h.join_.assign(m, std::vector<int>(m, 0));
  h.implies_.assign(m, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      h.leq_[i][j] = (carrier[i] & ~carrier[j]) == 0;
      h.meet_[i][j] = idx.at(carrier[i] & carrier[j]);
      h.join_[i][j] = idx.at(carrier[i] | carrier[j]);
      h.implies_[i][j] = idx.at(core((~carrier[i] | carrier[j]) & full));
    }
  h.bottom_ = idx.at(0);
  h.top_ = idx.at(full);
  std::string elems;
  for (const auto& e : p.elements) elems += (elems.empty() ? "" : ",") + e;
  h.id_ = "downset(" + elems + ")";
  return h;
}

HeytingAlgebra HeytingAlgebra::from_tables(
    std::string id, std::vector<std::string> labels,
    std::vector<std::vector<bool>> leq, std::vector<std::vector<int>> meet,
    std::vector<std::vector<int>> join, std::vector<std::vector<int>> implies,
    int bottom, int top) {
  HeytingAlgebra h;
  h.id_ = std::move(id);
  h.labels_ = std::move(labels);
  h.leq_ = std::move(leq);
  h.meet_ = std::move(meet);
  h.join_ = std::move(join);
  h.implies_ = std::move(implies);
  h.bottom_ = bottom;
  h.top_ = top;
  return h;
}

const HeytingAlgebra& HeytingAlgebra::builtin(const std::string& id) {
  static const std::map<std::string, HeytingAlgebra> algebras = [] {
    std::map<std::string, HeytingAlgebra> m;
    auto add = [&m](const std::string& id, const Poset& p,
                    std::vector<std::string> labels) {
      HeytingAlgebra h = downset_algebra(p);
      h.id_ = id;
      if (!labels.empty()) h.labels_ = std::move(labels);
      m.emplace(id, std::move(h));
    };
    add("bool2", Poset::chain({"p"}), {"bot", "top"});
    add("sierpinski", Poset::chain({"p", "q"}), {"bot", "u", "top"});
    add("chain4", Poset::chain({"p", "q", "r"}), {"bot", "u", "v", "top"});
    add("diamond", Poset::antichain({"p", "q"}), {"bot", "a", "b", "top"});
    return m;
  }();
  auto it = algebras.find(id);
  if (it == algebras.end())
    throw std::invalid_argument("unknown algebra: " + id);
  return it->second;
}

std::vector<std::string> HeytingAlgebra::builtin_ids() {
  return {"bool2", "sierpinski", "chain4", "diamond"};
}

std::optional<int> HeytingAlgebra::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::vector<std::string> HeytingAlgebra::check_laws() const {
  std::vector<std::string> bad;
  int n = size();
  auto L = [&](int v) { return labels_[v]; };

  for (int p = 0; p < n; ++p) {
    if (!leq_[p][p]) bad.push_back("leq not reflexive at " + L(p));
    if (!leq_[bottom_][p]) bad.push_back("bottom not least at " + L(p));
    if (!leq_[p][top_]) bad.push_back("top not greatest at " + L(p));
  }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (p != q && leq_[p][q] && leq_[q][p])
        bad.push_back("leq not antisymmetric at " + pair_str(L(p), L(q)));
      int m = meet_[p][q], j = join_[p][q];
      if (m < 0 || m >= n || j < 0 || j >= n) {
        bad.push_back("table out of range at " + pair_str(L(p), L(q)));
        continue;
      }
      if (!leq_[m][p] || !leq_[m][q])
        bad.push_back("meet not a lower bound at " + pair_str(L(p), L(q)));
      if (!leq_[p][j] || !leq_[q][j])
        bad.push_back("join not an upper bound at " + pair_str(L(p), L(q)));
      for (int r = 0; r < n; ++r) {
        if (leq_[p][q] && leq_[q][r] && !leq_[p][r])
          bad.push_back("leq not transitive at " + L(p) + "<=" + L(q) +
                        "<=" + L(r));
        if (leq_[r][p] && leq_[r][q] && !leq_[r][m])
          bad.push_back("meet not greatest lower bound at " +
                        pair_str(L(p), L(q)) + " witness " + L(r));
        if (leq_[p][r] && leq_[q][r] && !leq_[j][r])
          bad.push_back("join not least upper bound at " +
                        pair_str(L(p), L(q)) + " witness " + L(r));
      }
    }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r) {
        if (meet_[p][join_[q][r]] != join_[meet_[p][q]][meet_[p][r]])
          bad.push_back("distributivity violated at (" + L(p) + "," + L(q) +
                        "," + L(r) + ")");
        bool lhs = leq_[meet_[r][p]][q];
        bool rhs = leq_[r][implies_[p][q]];
        if (lhs != rhs)
          bad.push_back("adjunction violated at (" + L(p) + "," + L(q) + "," +
                        L(r) + ")");
      }
  return bad;
}

bool HeytingAlgebra::is_boolean() const {
  for (int p = 0; p < size(); ++p)
    if (join_[p][implies_[p][bottom_]] != top_) return false;
  return true;
}

std::string HeytingAlgebra::describe() const {
  std::ostringstream os;
  os << id_ << ": " << size() << " truth values\n";
  os << "  carrier:";
  for (int i = 0; i < size(); ++i) os << " " << labels_[i];
  os << "\n  bottom=" << labels_[bottom_] << " top=" << labels_[top_]
     << (is_boolean() ? " (boolean)" : "") << "\n";
  return os.str();
}

namespace {
void require_same(const TruthValue& a, const TruthValue& b) {
  if (a.alg != b.alg)
    throw std::invalid_argument("truth values from different algebras");
}
}  // namespace

TruthValue tv_meet(TruthValue a, TruthValue b) {
  require_same(a, b);
  return {a.alg, a.alg->meet(a.v, b.v)};
}

TruthValue tv_join(TruthValue a, TruthValue b) {
  require_same(a, b);
  return {a.alg, a.alg->join(a.v, b.v)};
}

TruthValue tv_implies(TruthValue a, TruthValue b) {
  require_same(a, b);
  return {a.alg, a.alg->implies(a.v, b.v)};
}

bool tv_leq(TruthValue a, TruthValue b) {
  require_same(a, b);
  return a.alg->leq(a.v, b.v);
}

TruthValue big_meet(const HeytingAlgebra& h,
                    const std::vector<TruthValue>& vs) {
  TruthValue acc{&h, h.top()};
  for (const auto& v : vs) acc = tv_meet(acc, v);
  return acc;
}

TruthValue big_join(const HeytingAlgebra& h,
                    const std::vector<TruthValue>& vs) {
  TruthValue acc{&h, h.bottom()};
  for (const auto& v : vs) acc = tv_join(acc, v);
  return acc;
}

}  // namespace plumpwork
