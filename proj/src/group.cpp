#include "regrep/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

#include "regrep/error.hpp"

namespace regrep {

namespace {

// Breadth-first closure of gens; returns false as soon as an element leaves `allowed`.
bool close_under(const MatCodec& codec, const std::vector<Key>& gens, std::vector<Key>& out, std::uint64_t cap,
                 const std::function<bool(Key)>& allowed) {
  std::unordered_set<Key> seen;
  seen.reserve(1024);
  std::vector<Key> frontier = {codec.identity()};
  seen.insert(codec.identity());
  out = frontier;
  while (!frontier.empty()) {
    std::vector<Key> next;
    for (Key x : frontier)
      for (Key g : gens) {
        const Key y = codec.mul(x, g);
        if (seen.insert(y).second) {
          if (allowed && !allowed(y)) return false;
          require(seen.size() <= cap, ErrorCode::CapExceeded, "subgroup closure exceeds the enumeration cap");
          next.push_back(y);
          out.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return true;
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

Group::Group(CodecPtr codec, std::vector<Key> elements, std::vector<Key> gens)
    : codec_(std::move(codec)), elements_(std::move(elements)), gens_(std::move(gens)) {
  build_lookup();
}

void Group::build_lookup() {
  const int bits = codec_->key_bits();
  if (bits <= 16 || (bits <= 24 && elements_.size() >= 4096)) {
    dense_.assign(std::size_t{1} << bits, 0);
    for (std::size_t i = 0; i < elements_.size(); ++i) dense_[elements_[i]] = static_cast<std::uint32_t>(i + 1);
  }
}

GroupPtr Group::generate(CodecPtr codec, const std::vector<Key>& gens, std::uint64_t cap) {
  std::vector<Key> g;
  for (Key k : gens)
    if (k != codec->identity() && std::find(g.begin(), g.end(), k) == g.end()) g.push_back(k);
  std::vector<Key> elems;
  close_under(*codec, g, elems, cap, nullptr);
  return GroupPtr(new Group(std::move(codec), std::move(elems), std::move(g)));
}

GroupPtr Group::from_elements(CodecPtr codec, std::vector<Key> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const auto in_set = [&](Key k) { return std::binary_search(elements.begin(), elements.end(), k); };
  require(in_set(codec->identity()), ErrorCode::NotASubgroup, "element set lacks the identity");
  // Greedy generators in a fixed pseudo-random order.
  std::vector<Key> order = elements;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Key> gens, current = {codec->identity()};
  for (Key k : order) {
    if (std::binary_search(current.begin(), current.end(), k)) continue;
    gens.push_back(k);
    require(close_under(*codec, gens, current, elements.size(), in_set), ErrorCode::NotASubgroup,
            "element set is not closed under multiplication");
    if (current.size() == elements.size()) break;
  }
  return GroupPtr(new Group(std::move(codec), std::move(elements), std::move(gens)));
}

std::int64_t Group::index_of(Key key) const {
  if (!dense_.empty()) {
    if (key >= dense_.size()) return -1;
    return static_cast<std::int64_t>(dense_[key]) - 1;
  }
  auto it = std::lower_bound(elements_.begin(), elements_.end(), key);
  if (it == elements_.end() || *it != key) return -1;
  return it - elements_.begin();
}

bool Group::is_subgroup_of(const Group& other) const {
  return std::all_of(elements_.begin(), elements_.end(), [&](Key k) { return other.contains(k); });
}

bool Group::is_normal_in(const Group& other) const {
  if (!is_subgroup_of(other)) return false;
  for (Key g : other.generators()) {
    const Key gi = codec_->inv(g);
    for (Key h : gens_)
      if (!contains(codec_->mul(codec_->mul(g, h), gi))) return false;
  }
  return true;
}

bool Group::is_abelian() const {
  for (Key a : gens_)
    for (Key b : gens_)
      if (codec_->mul(a, b) != codec_->mul(b, a)) return false;
  return true;
}

const ClassData& Group::classes() const {
  std::call_once(classes_once_, [this] {
    const std::size_t n = elements_.size();
    UnionFind uf(n);
    for (Key g : gens_) {
      const Key gi = codec_->inv(g);
      for (std::size_t i = 0; i < n; ++i) {
        const auto j = index_of(codec_->mul(codec_->mul(g, elements_[i]), gi));
        uf.unite(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
      }
    }
    // Roots are least indices, hence least keys, of each class.
    auto data = std::make_unique<ClassData>();
    std::vector<std::uint32_t> roots;
    for (std::size_t i = 0; i < n; ++i)
      if (uf.find(static_cast<std::uint32_t>(i)) == i) roots.push_back(static_cast<std::uint32_t>(i));
    const auto id_root = uf.find(static_cast<std::uint32_t>(index_of(codec_->identity())));
    std::stable_partition(roots.begin(), roots.end(), [&](std::uint32_t r) { return r == id_root; });
    std::vector<std::uint32_t> class_of_root(n, 0);
    for (std::size_t c = 0; c < roots.size(); ++c) class_of_root[roots[c]] = static_cast<std::uint32_t>(c);
    data->class_of.resize(n);
    data->members.resize(roots.size());
    for (std::size_t i = 0; i < n; ++i) {
      const auto c = class_of_root[uf.find(static_cast<std::uint32_t>(i))];
      data->class_of[i] = c;
      data->members[c].push_back(static_cast<std::uint32_t>(i));
    }
    for (std::size_t c = 0; c < roots.size(); ++c) {
      const Key rep = elements_[roots[c]];
      data->reps.push_back(rep);
      data->sizes.push_back(data->members[c].size());
      data->inverse.push_back(data->class_of[index_of(codec_->inv(rep))]);
      std::uint64_t order = 1;
      for (Key x = rep; x != codec_->identity(); x = codec_->mul(x, rep)) ++order;
      data->orders.push_back(order);
      data->exponent = std::lcm(data->exponent, order);
    }
    classes_ = std::move(data);
  });
  return *classes_;
}

std::uint32_t Group::class_of_key(Key key) const {
  const auto i = index_of(key);
  require(i >= 0, ErrorCode::NotASubgroup, "element outside the group");
  return classes().class_of[i];
}

std::uint32_t Group::power_class(std::uint32_t c, std::uint64_t e) const {
  return class_of_key(codec_->pow(classes().reps[c], e));
}

GroupPtr subgroup_where(const GroupPtr& G, const std::function<bool(Key)>& pred) {
  std::vector<Key> elems;
  for (Key k : G->elements())
    if (pred(k)) elems.push_back(k);
  return Group::from_elements(G->codec(), std::move(elems));
}

GroupPtr product_group(const GroupPtr& A, const GroupPtr& B, std::uint64_t cap) {
  const auto inter = intersect(A, B);
  const std::uint64_t expected = A->order() / inter->order() * B->order();
  require(expected <= cap, ErrorCode::CapExceeded, "product group exceeds the enumeration cap");
  const auto& codec = *A->codec();
  std::vector<Key> elems;
  elems.reserve(A->order() * B->order());
  for (Key a : A->elements())
    for (Key b : B->elements()) elems.push_back(codec.mul(a, b));
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  require(elems.size() == expected, ErrorCode::CheckFailed, "product formula |AB| = |A||B|/|A n B| violated");
  return Group::from_elements(A->codec(), std::move(elems));
}

GroupPtr intersect(const GroupPtr& A, const GroupPtr& B) {
  const GroupPtr& small = A->order() <= B->order() ? A : B;
  const GroupPtr& large = A->order() <= B->order() ? B : A;
  return subgroup_where(small, [&](Key k) { return large->contains(k); });
}

GroupPtr derived_subgroup(const GroupPtr& G) {
  const auto& codec = G->codec();
  std::vector<Key> gens;
  for (Key a : G->generators())
    for (Key b : G->generators()) gens.push_back(codec->commutator(a, b));
  auto D = Group::generate(codec, gens);
  while (true) {
    std::vector<Key> extra;
    for (Key g : G->generators()) {
      const Key gi = codec->inv(g);
      for (Key h : D->generators()) {
        const Key c = codec->mul(codec->mul(g, h), gi);
        if (!D->contains(c)) extra.push_back(c);
      }
    }
    if (extra.empty()) break;
    auto all = D->generators();
    all.insert(all.end(), extra.begin(), extra.end());
    D = Group::generate(codec, all);
  }
  return Group::from_elements(codec, D->elements());
}

std::vector<Key> left_transversal(const Group& G, const Group& H) {
  require(G.order() % H.order() == 0, ErrorCode::NotASubgroup, "subgroup order does not divide group order");
  std::vector<bool> marked(G.order(), false);
  std::vector<Key> T;
  const auto& codec = *G.codec();
  for (std::size_t i = 0; i < G.order(); ++i) {
    if (marked[i]) continue;
    const Key t = G.element(i);
    T.push_back(t);
    for (Key h : H.elements()) {
      const auto j = G.index_of(codec.mul(t, h));
      require(j >= 0, ErrorCode::NotASubgroup, "coset leaves the group");
      marked[j] = true;
    }
  }
  require(T.size() * H.order() == G.order(), ErrorCode::NotASubgroup, "cosets do not partition the group");
  return T;
}

std::uint64_t group_index(const Group& G, const Group& H) {
  require(G.order() % H.order() == 0, ErrorCode::NotASubgroup, "Lagrange violated");
  return G.order() / H.order();
}

}  // namespace regrep
