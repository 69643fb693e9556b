#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace evencl {

/// Domain failures raised by the library. The CLI reports `name()` verbatim.
enum class Errc {
  non_unit,
  no_canonical_hom,
  singular_matrix,
  infinite_ring,
  not_a_similarity,
  not_an_algebra_iso,
  square_root_unavailable,
  not_a_field,
  field_too_large,
  not_specialized,
  not_semiregular,
  search_too_large,
  invalid_descriptor,
  parse_error,
  ring_mismatch,
};

constexpr std::string_view error_name(Errc code) {
  switch (code) {
    case Errc::non_unit: return "NonUnit";
    case Errc::no_canonical_hom: return "NoCanonicalHom";
    case Errc::singular_matrix: return "SingularMatrix";
    case Errc::infinite_ring: return "InfiniteRing";
    case Errc::not_a_similarity: return "NotASimilarity";
    case Errc::not_an_algebra_iso: return "NotAnAlgebraIso";
    case Errc::square_root_unavailable: return "SquareRootUnavailable";
    case Errc::not_a_field: return "NotAField";
    case Errc::field_too_large: return "FieldTooLarge";
    case Errc::not_specialized: return "NotSpecialized";
    case Errc::not_semiregular: return "NotSemiregular";
    case Errc::search_too_large: return "SearchTooLarge";
    case Errc::invalid_descriptor: return "InvalidDescriptor";
    case Errc::parse_error: return "ParseError";
    case Errc::ring_mismatch: return "RingMismatch";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  Errc code_;
};

}  // namespace evencl
