#include "invsem/elemset.hpp"

#include <bit>

namespace invsem {

ElemSet ElemSet::single(int universe, int e) {
  ElemSet s(universe);
  s.set(e);
  return s;
}

ElemSet ElemSet::all(int universe) {
  ElemSet s(universe);
  for (int i = 0; i < universe; ++i) s.set(i);
  return s;
}

ElemSet ElemSet::of(int universe, std::vector<int> const& elems) {
  ElemSet s(universe);
  for (int e : elems) s.set(e);
  return s;
}

bool ElemSet::empty() const {
  for (uint64_t w : _w)
    if (w) return false;
  return true;
}

int ElemSet::count() const {
  int c = 0;
  for (uint64_t w : _w) c += std::popcount(w);
  return c;
}

int ElemSet::min() const {
  for (size_t wi = 0; wi < _w.size(); ++wi)
    if (_w[wi]) return int(wi * 64 + std::countr_zero(_w[wi]));
  return -1;
}

int ElemSet::max() const {
  for (size_t wi = _w.size(); wi-- > 0;)
    if (_w[wi]) return int(wi * 64 + 63 - std::countl_zero(_w[wi]));
  return -1;
}

bool ElemSet::subset_of(ElemSet const& o) const {
  for (size_t i = 0; i < _w.size(); ++i)
    if (_w[i] & ~o._w[i]) return false;
  return true;
}

bool ElemSet::intersects(ElemSet const& o) const {
  for (size_t i = 0; i < _w.size(); ++i)
    if (_w[i] & o._w[i]) return true;
  return false;
}

ElemSet ElemSet::operator&(ElemSet const& o) const {
  ElemSet r(*this);
  r &= o;
  return r;
}

ElemSet ElemSet::operator|(ElemSet const& o) const {
  ElemSet r(*this);
  r |= o;
  return r;
}

ElemSet ElemSet::minus(ElemSet const& o) const {
  ElemSet r(*this);
  for (size_t i = 0; i < _w.size(); ++i) r._w[i] &= ~o._w[i];
  return r;
}

ElemSet& ElemSet::operator&=(ElemSet const& o) {
  for (size_t i = 0; i < _w.size(); ++i) _w[i] &= o._w[i];
  return *this;
}

ElemSet& ElemSet::operator|=(ElemSet const& o) {
  for (size_t i = 0; i < _w.size(); ++i) _w[i] |= o._w[i];
  return *this;
}

std::strong_ordering ElemSet::operator<=>(ElemSet const& o) const {
  if (_n != o._n) return _n <=> o._n;
  for (size_t i = _w.size(); i-- > 0;)
    if (_w[i] != o._w[i]) return _w[i] <=> o._w[i];
  return std::strong_ordering::equal;
}

std::vector<int> ElemSet::to_vector() const {
  std::vector<int> v;
  for_each([&](int e) { v.push_back(e); });
  return v;
}

std::string ElemSet::to_mask_string() const {
  std::string s(_n, '0');
  for_each([&](int e) { s[e] = '1'; });
  return s;
}

size_t ElemSet::hash() const {
  size_t h = size_t(_n) * 0x9e3779b97f4a7c15ull;
  for (uint64_t w : _w) h = (h ^ w) * 0x100000001b3ull;
  return h;
}

}  // namespace invsem
