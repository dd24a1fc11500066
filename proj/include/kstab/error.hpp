#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kstab {

enum class ErrorKind {
  // exact
  ZeroVector,
  RadicandTooLarge,
  InvalidArgument,
  // polytope
  UnboundedRegion,
  EmptyInterior,
  RedundantHalfplane,
  UnsortedNormals,
  NonpositiveLevel,
  // cone
  NotStronglyConvex,
  NotFullDimensional,
  RayInteriorToHull,
  RaysNotCyclic,
  DuplicateRay,
  EmptySlice,
  // deform
  InvalidSlice,
  NonPrimitiveWeight,
  // problem input
  UnknownPreset,
  Parse,
  InconsistentSpec,
};

std::string_view name(ErrorKind kind);

/// True for errors caused by the geometry of otherwise well-formed input.
bool is_geometric(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace kstab
