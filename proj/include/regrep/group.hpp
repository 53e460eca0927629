#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <vector>

#include "regrep/packed.hpp"

namespace regrep {

struct ClassData {
  std::vector<std::uint32_t> class_of;        // element index -> class
  std::vector<Key> reps;                      // least key in each class
  std::vector<std::uint64_t> sizes;
  std::vector<std::vector<std::uint32_t>> members;  // element indices per class
  std::vector<std::uint32_t> inverse;         // class of g^-1
  std::vector<std::uint64_t> orders;          // element order per class
  std::uint64_t exponent = 1;
};

// Finite matrix group held as a sorted key list. Classes are computed on
// first use and cached.
class Group {
 public:
  static constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 22;

  // Closure of the generators (the identity is always included).
  static std::shared_ptr<const Group> generate(CodecPtr codec, const std::vector<Key>& gens,
                                               std::uint64_t cap = kDefaultCap);
  // Trusts that the key set is closed; verifies closure under the generators it picks.
  static std::shared_ptr<const Group> from_elements(CodecPtr codec, std::vector<Key> elements);

  const CodecPtr& codec() const { return codec_; }
  std::uint64_t order() const { return elements_.size(); }
  const std::vector<Key>& elements() const { return elements_; }
  const std::vector<Key>& generators() const { return gens_; }
  Key element(std::size_t i) const { return elements_[i]; }
  // Index of a key, or -1 when absent.
  std::int64_t index_of(Key key) const;
  bool contains(Key key) const { return index_of(key) >= 0; }
  bool is_subgroup_of(const Group& other) const;
  bool is_normal_in(const Group& other) const;  // this <= other, normalized by other's generators
  bool is_abelian() const;

  const ClassData& classes() const;
  std::size_t class_count() const { return classes().reps.size(); }
  std::uint32_t class_of_key(Key key) const;
  std::uint32_t power_class(std::uint32_t c, std::uint64_t e) const;

 private:
  Group(CodecPtr codec, std::vector<Key> elements, std::vector<Key> gens);
  void build_lookup();

  CodecPtr codec_;
  std::vector<Key> elements_;
  std::vector<Key> gens_;
  std::vector<std::uint32_t> dense_;  // key -> index + 1 when the key space is small
  mutable std::once_flag classes_once_;
  mutable std::unique_ptr<ClassData> classes_;
};

using GroupPtr = std::shared_ptr<const Group>;

// Subgroup of elements of g in a given predicate; generated from those elements.
GroupPtr subgroup_where(const GroupPtr& G, const std::function<bool(Key)>& pred);
// Product set A B for subgroups with A normalizing B (or B normalizing A); closed result.
GroupPtr product_group(const GroupPtr& A, const GroupPtr& B, std::uint64_t cap = Group::kDefaultCap);
GroupPtr intersect(const GroupPtr& A, const GroupPtr& B);
// Commutator subgroup [G, G].
GroupPtr derived_subgroup(const GroupPtr& G);
// Left transversal T with G = union of t H.
std::vector<Key> left_transversal(const Group& G, const Group& H);
std::uint64_t group_index(const Group& G, const Group& H);

}  // namespace regrep
