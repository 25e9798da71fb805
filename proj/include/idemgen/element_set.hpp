#ifndef IDEMGEN_ELEMENT_SET_HPP_
#define IDEMGEN_ELEMENT_SET_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace idemgen {

  using element_type = std::uint16_t;

  // A subset of the carrier {0, ..., carrier_order - 1} of one semiring.
  // Binary set operations require equal carrier orders and throw DomainError
  // otherwise.
  class ElementSet {
   public:
    ElementSet() = default;
    explicit ElementSet(std::size_t carrier_order);
    ElementSet(std::size_t carrier_order, std::initializer_list<element_type> members);

    static ElementSet full(std::size_t carrier_order);

    std::size_t carrier_order() const noexcept {
      return _bits.size();
    }
    std::size_t size() const noexcept {
      return _bits.count();
    }
    bool empty() const noexcept {
      return _bits.none();
    }
    bool is_full() const noexcept {
      return _bits.all();
    }

    bool contains(element_type a) const;
    void insert(element_type a);
    void erase(element_type a);

    bool is_subset_of(ElementSet const& other) const;
    ElementSet& operator|=(ElementSet const& other);
    ElementSet& operator&=(ElementSet const& other);
    ElementSet  complement() const;

    // Members in increasing index order.
    std::vector<element_type> members() const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
      for (auto i = _bits.find_first(); i != boost::dynamic_bitset<>::npos;
           i = _bits.find_next(i)) {
        fn(static_cast<element_type>(i));
      }
    }

    friend bool operator==(ElementSet const& a, ElementSet const& b);

   private:
    void check_same_carrier(ElementSet const& other) const;

    boost::dynamic_bitset<> _bits;
  };

  ElementSet operator|(ElementSet a, ElementSet const& b);
  ElementSet operator&(ElementSet a, ElementSet const& b);

}  // namespace idemgen

#endif  // IDEMGEN_ELEMENT_SET_HPP_
