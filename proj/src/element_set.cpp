#include "idemgen/element_set.hpp"

#include <string>

#include "idemgen/errors.hpp"

namespace idemgen {

  ElementSet::ElementSet(std::size_t carrier_order) : _bits(carrier_order) {}

  ElementSet::ElementSet(std::size_t                         carrier_order,
                         std::initializer_list<element_type> members)
      : _bits(carrier_order) {
    for (auto a : members) {
      insert(a);
    }
  }

  ElementSet ElementSet::full(std::size_t carrier_order) {
    ElementSet s(carrier_order);
    s._bits.set();
    return s;
  }

  bool ElementSet::contains(element_type a) const {
    return a < _bits.size() && _bits.test(a);
  }

  void ElementSet::insert(element_type a) {
    if (a >= _bits.size()) {
      throw DomainError("element " + std::to_string(a)
                        + " out of range for carrier of order "
                        + std::to_string(_bits.size()));
    }
    _bits.set(a);
  }

  void ElementSet::erase(element_type a) {
    if (a < _bits.size()) {
      _bits.reset(a);
    }
  }

  void ElementSet::check_same_carrier(ElementSet const& other) const {
    if (other._bits.size() != _bits.size()) {
      throw DomainError("element sets index carriers of different orders ("
                        + std::to_string(_bits.size()) + " vs "
                        + std::to_string(other._bits.size()) + ")");
    }
  }

  bool ElementSet::is_subset_of(ElementSet const& other) const {
    check_same_carrier(other);
    return _bits.is_subset_of(other._bits);
  }

  ElementSet& ElementSet::operator|=(ElementSet const& other) {
    check_same_carrier(other);
    _bits |= other._bits;
    return *this;
  }

  ElementSet& ElementSet::operator&=(ElementSet const& other) {
    check_same_carrier(other);
    _bits &= other._bits;
    return *this;
  }

  ElementSet ElementSet::complement() const {
    ElementSet result = *this;
    result._bits.flip();
    return result;
  }

  std::vector<element_type> ElementSet::members() const {
    std::vector<element_type> out;
    out.reserve(size());
    for_each([&out](element_type a) { out.push_back(a); });
    return out;
  }

  bool operator==(ElementSet const& a, ElementSet const& b) {
    a.check_same_carrier(b);
    return a._bits == b._bits;
  }

  ElementSet operator|(ElementSet a, ElementSet const& b) {
    a |= b;
    return a;
  }

  ElementSet operator&(ElementSet a, ElementSet const& b) {
    a &= b;
    return a;
  }

}  // namespace idemgen
