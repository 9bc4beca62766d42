#pragma once

#include "singindex/polynomial.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace singindex::gb {

/// Where the quotient is taken: the local ring at the origin or the
/// polynomial ring itself.
enum class Locality { Local, Global };

/// Ideal given by a non-empty list of generators. Zero generators are dropped
/// and duplicates removed (first occurrence kept).
class Ideal {
 public:
  explicit Ideal(std::vector<Polynomial> generators, Locality locality = Locality::Local);

  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  const Context& context() const noexcept { return ctx_; }
  std::size_t nvars() const noexcept { return ctx_->size(); }
  Locality locality() const noexcept { return locality_; }
  /// True when every generator vanishes (the zero ideal).
  bool is_zero() const noexcept { return gens_.empty(); }

 private:
  Context ctx_;
  std::vector<Polynomial> gens_;
  Locality locality_;
};

/// Vector-space dimension of the quotient, or INFINITE.
class Colength {
 public:
  static Colength finite(std::size_t value) { return Colength(false, value); }
  static Colength infinite() { return Colength(true, 0); }

  bool is_finite() const noexcept { return !infinite_; }
  bool is_infinite() const noexcept { return infinite_; }
  /// Throws NotIsolated when infinite.
  std::size_t value() const;
  std::string to_string() const;

  bool operator==(const Colength&) const = default;

 private:
  Colength(bool inf, std::size_t v) : infinite_(inf), value_(v) {}
  bool infinite_;
  std::size_t value_;
};

struct Options {
  /// Largest total degree a basis computation may produce before aborting.
  unsigned degree_cap = 40;
};

}  // namespace singindex::gb
