#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace invsem {

// Subset of a fixed universe [0, n) of element ids, stored as a bitmask.
// Universes stay small (a few hundred ids) so everything is by-value.
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(int universe) : _n(universe), _w((universe + 63) / 64, 0) {}

  static ElemSet single(int universe, int e);
  static ElemSet all(int universe);
  static ElemSet of(int universe, std::vector<int> const& elems);

  int universe() const { return _n; }

  bool test(int i) const { return (_w[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { _w[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { _w[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

  bool empty() const;
  int count() const;
  int min() const;  // -1 when empty
  int max() const;  // -1 when empty

  bool subset_of(ElemSet const& o) const;
  bool intersects(ElemSet const& o) const;

  ElemSet operator&(ElemSet const& o) const;
  ElemSet operator|(ElemSet const& o) const;
  ElemSet minus(ElemSet const& o) const;
  ElemSet& operator&=(ElemSet const& o);
  ElemSet& operator|=(ElemSet const& o);

  bool operator==(ElemSet const& o) const = default;
  // Orders sets by their value as a bitmask integer; used wherever a
  // deterministic canonical element order over carriers is needed.
  std::strong_ordering operator<=>(ElemSet const& o) const;

  template <typename F>
  void for_each(F f) const {
    for (size_t wi = 0; wi < _w.size(); ++wi) {
      uint64_t w = _w[wi];
      while (w) {
        int b = __builtin_ctzll(w);
        f(int(wi * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const;
  // One character per element, index 0 leftmost: {0,2} in universe 5 -> "10100".
  std::string to_mask_string() const;

  size_t hash() const;

 private:
  int _n = 0;
  std::vector<uint64_t> _w;
};

struct ElemSetHash {
  size_t operator()(ElemSet const& s) const { return s.hash(); }
};

}  // namespace invsem
