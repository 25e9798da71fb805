// Exception types shared by every part of idemgen.
//
// StructureError   malformed input (non-square tables, bad indices, labels)
// AxiomError       well-formed tables that break a semiring axiom
// DomainError      an operation was called on an element outside its domain
// PreconditionError  the operation's hypotheses are not satisfiable in S
// InternalError    a check that cannot fail if the mathematics is right did fail

#ifndef IDEMGEN_ERRORS_HPP_
#define IDEMGEN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace idemgen {

  class StructureError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class AxiomError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
  };

  class PreconditionError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class InternalError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

}  // namespace idemgen

#endif  // IDEMGEN_ERRORS_HPP_
