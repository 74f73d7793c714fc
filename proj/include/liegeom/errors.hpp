#ifndef LIEGEOM_ERRORS_HPP_
#define LIEGEOM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace liegeom {

// Base class for every error thrown by the library.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Mixing elements of different groups where a single group is required.
class tag_error : public error {
 public:
  explicit tag_error(const std::string& what) : error(what) {}
};

// A stated precondition on the input data does not hold.
class constraint_error : public error {
 public:
  explicit constraint_error(const std::string& what) : error(what) {}
};

// Input leaves the domain of the operation (e.g. a point outside upper half space).
class domain_error : public error {
 public:
  explicit domain_error(const std::string& what) : error(what) {}
};

// Numeric blowup: overflow or a vanishing denominator near the boundary.
class range_error : public error {
 public:
  explicit range_error(const std::string& what) : error(what) {}
};

// Generators are not conjugate to a lattice of horizontal translations.
class not_a_cusp_error : public error {
 public:
  explicit not_a_cusp_error(const std::string& what) : error(what) {}
};

// The requested gluing class has the wrong orientation sign.
class orientation_error : public error {
 public:
  explicit orientation_error(const std::string& what) : error(what) {}
};

// A Klein-end involution failed one of its defining checks.
class invalid_involution_error : public error {
 public:
  explicit invalid_involution_error(const std::string& what) : error(what) {}
};

// Assembling a structure from a graph that does not admit one.
class build_error : public error {
 public:
  explicit build_error(const std::string& what) : error(what) {}
};

// A continuation path is not realizable in the structure.
class path_error : public error {
 public:
  explicit path_error(const std::string& what) : error(what) {}
};

// A reduction generator index is out of range.
class index_error : public error {
 public:
  explicit index_error(const std::string& what) : error(what) {}
};

// Scene file syntax or schema violation.
class parse_error : public error {
 public:
  explicit parse_error(const std::string& what) : error(what) {}
};

// Bad token in a loop expression.
class loop_error : public error {
 public:
  explicit loop_error(const std::string& what) : error(what) {}
};

}  // namespace liegeom

#endif  // LIEGEOM_ERRORS_HPP_
