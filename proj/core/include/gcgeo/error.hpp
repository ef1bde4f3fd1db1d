#pragma once

#include <stdexcept>
#include <string>

namespace gcgeo {

enum class errc {
  input,            // malformed or dimensionally inconsistent input
  parse,            // text/grammar parse failure
  mode,             // coefficient illegal for the frame mode
  twist,            // Maurer-Cartan / closedness violation
  reduction,        // data not liftable to the circle extension
  structure,        // invalid Sekiya quadruple or endomorphism
  metric,           // indefinite metric / singular theta
  duality,          // inadmissible twist for T-duality
  degenerate,       // zero pairing where a nonzero one is required
  unrepresentable,  // result leaves the exact scalar field (e.g. irrational mu)
};

class gc_error : public std::runtime_error {
public:
  gc_error(errc k, const std::string& what) : std::runtime_error(what), kind_(k) {}
  errc kind() const { return kind_; }

private:
  errc kind_;
};

[[noreturn]] inline void fail(errc k, const std::string& what) { throw gc_error(k, what); }

}  // namespace gcgeo
