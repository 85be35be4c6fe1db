#include "relchar/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "relchar/error.hpp"

namespace relchar {

namespace {

std::u16string key_of(std::span<const Point> im) {
  return std::u16string(reinterpret_cast<const char16_t*>(im.data()), im.size());
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, std::string name,
                     std::size_t max_elements)
    : degree_(degree), generators_(std::move(generators)), name_(std::move(name)) {
  if (degree_ == 0) throw InputError("degree must be at least 1");
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].degree() != degree_)
      throw InputError("generator " + std::to_string(i + 1) + " has degree " +
                       std::to_string(generators_[i].degree()) + ", expected " +
                       std::to_string(degree_));
  enumerate(max_elements);
}

void PermGroup::enumerate(std::size_t max_elements) {
  // Breadth-first closure; discovery order is kept only to record the
  // spanning tree, final ids come from the lexicographic sort.
  std::vector<std::u16string> found;
  std::unordered_map<std::u16string, std::uint32_t> seen;
  std::vector<std::uint32_t> parent{0};
  std::vector<int> via{-1};
  found.push_back(key_of(Permutation::identity(degree_).images()));
  seen.emplace(found.back(), 0);
  std::vector<Point> buf(degree_);
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (std::size_t s = 0; s < generators_.size(); ++s) {
      const auto& cur = found[head];
      for (std::size_t i = 0; i < degree_; ++i) buf[i] = generators_[s][cur[i]];
      auto key = key_of(buf);
      if (seen.contains(key)) continue;
      if (found.size() >= max_elements)
        throw GuardExceeded("element enumeration guard of " + std::to_string(max_elements) +
                                " exceeded",
                            found.size());
      seen.emplace(key, static_cast<std::uint32_t>(found.size()));
      found.push_back(std::move(key));
      parent.push_back(static_cast<std::uint32_t>(head));
      via.push_back(static_cast<int>(s));
    }
  }
  order_ = found.size();

  std::vector<std::uint32_t> perm(order_);
  std::iota(perm.begin(), perm.end(), 0u);
  std::sort(perm.begin(), perm.end(),
            [&](std::uint32_t a, std::uint32_t b) { return found[a] < found[b]; });
  std::vector<ElemId> id_of_found(order_);
  for (std::size_t i = 0; i < order_; ++i) id_of_found[perm[i]] = static_cast<ElemId>(i);

  storage_.resize(order_ * degree_);
  index_.reserve(order_);
  tree_parent_.resize(order_);
  tree_gen_.resize(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    const auto& k = found[perm[i]];
    std::copy(k.begin(), k.end(), storage_.begin() + i * degree_);
    index_.emplace(k, static_cast<ElemId>(i));
    tree_parent_[i] = id_of_found[parent[perm[i]]];
    tree_gen_[i] = via[perm[i]];
  }

  generator_ids_.reserve(generators_.size());
  for (const auto& g : generators_) generator_ids_.push_back(*find(g));

  if (order_ <= kCayleyLimit) {
    // Row a of the table: a*b for all b, filled along the spanning tree
    // (b = parent(b) * gen), so only generator products need a lookup.
    std::vector<ElemId> bfs_order(order_);
    for (std::size_t i = 0; i < order_; ++i) bfs_order[i] = id_of_found[i];
    cayley_.assign(order_ * order_, 0);
    std::vector<ElemId> by_gen(order_ * generators_.size());
    for (ElemId a = 0; a < order_; ++a)
      for (std::size_t s = 0; s < generators_.size(); ++s) by_gen[a * generators_.size() + s] =
          slow_mul(a, generator_ids_[s]);
    for (ElemId a = 0; a < order_; ++a) {
      ElemId* row = cayley_.data() + std::size_t{a} * order_;
      row[0] = a;
      for (std::size_t i = 1; i < order_; ++i) {
        ElemId b = bfs_order[i];
        ElemId ab_parent = row[tree_parent_[b]];
        row[b] = by_gen[ab_parent * generators_.size() + tree_gen_[b]];
      }
    }
  }

  inverse_.resize(order_);
  orders_.resize(order_);
  for (ElemId a = 0; a < order_; ++a) {
    inverse_[a] = *find(element(a).inverse());
    orders_[a] = element(a).order();
    exponent_ = std::lcm(exponent_, orders_[a]);
  }
}

Permutation PermGroup::element(ElemId id) const {
  auto im = images(id);
  return Permutation(std::vector<Point>(im.begin(), im.end()));
}

std::optional<ElemId> PermGroup::find(std::span<const Point> im) const {
  if (im.size() != degree_) return std::nullopt;
  auto it = index_.find(key_of(im));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ElemId> PermGroup::find(const Permutation& p) const { return find(p.images()); }

ElemId PermGroup::id_of(const Permutation& p) const {
  auto id = find(p);
  if (!id) throw InputError("permutation " + p.to_string() + " is not an element of the group");
  return *id;
}

ElemId PermGroup::slow_mul(ElemId a, ElemId b) const {
  std::vector<Point> buf(degree_);
  auto x = images(a);
  auto y = images(b);
  for (std::size_t i = 0; i < degree_; ++i) buf[i] = y[x[i]];
  return *find(buf);
}

ElemId PermGroup::mul(ElemId a, ElemId b) const {
  if (!cayley_.empty()) return cayley_[std::size_t{a} * order_ + b];
  return slow_mul(a, b);
}

ElemId PermGroup::pow(ElemId a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  ElemId acc = identity();
  ElemId base = a;
  while (k) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

std::vector<int> PermGroup::word(ElemId id) const {
  std::vector<int> w;
  while (id != identity()) {
    w.push_back(tree_gen_[id] + 1);
    id = tree_parent_[id];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

std::string PermGroup::word_string(ElemId id) const {
  auto w = word(id);
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '*';
    s += 'g' + std::to_string(w[i]);
  }
  return s;
}

std::vector<ElemId> enumerate_elements(const PermGroup& g) {
  std::vector<ElemId> ids(g.order());
  std::iota(ids.begin(), ids.end(), ElemId{0});
  return ids;
}

}  // namespace relchar
