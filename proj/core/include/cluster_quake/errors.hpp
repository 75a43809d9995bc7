#pragma once

#include <stdexcept>
#include <string>

namespace cluster_quake {

class ClusterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CLUSTER_QUAKE_ERROR(Name)          \
  class Name : public ClusterError {       \
   public:                                 \
    using ClusterError::ClusterError;      \
  }

// Unknown Dynkin family / rank combination.
CLUSTER_QUAKE_ERROR(InvalidTypeError);
CLUSTER_QUAKE_ERROR(IndexError);
CLUSTER_QUAKE_ERROR(SymmetrizerMismatchError);
// A mathematical invariant that must hold did not (wrong input data or a bug).
CLUSTER_QUAKE_ERROR(ConsistencyError);
CLUSTER_QUAKE_ERROR(DomainError);
CLUSTER_QUAKE_ERROR(LookupError);
CLUSTER_QUAKE_ERROR(CompletenessError);
CLUSTER_QUAKE_ERROR(HomeomorphismError);
CLUSTER_QUAKE_ERROR(GluingDomainError);
CLUSTER_QUAKE_ERROR(BoundaryError);
CLUSTER_QUAKE_ERROR(PreconditionError);
CLUSTER_QUAKE_ERROR(UnsupportedError);
CLUSTER_QUAKE_ERROR(OverflowError);
CLUSTER_QUAKE_ERROR(ParseError);

#undef CLUSTER_QUAKE_ERROR

}  // namespace cluster_quake
