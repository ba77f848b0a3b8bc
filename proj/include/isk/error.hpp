#pragma once

#include <stdexcept>
#include <string>

namespace isk {

// Failure modes reported by the library. Tests match on the code, the
// message carries context for humans.
enum class Errc {
  self_loop,
  duplicate_edge,
  vertex_out_of_range,
  impossible_degree_sequence,
  generation_failed,
  too_many_edges,
  odd_handshake,
  parse_error,
  io_error,
  ordering_violation,
  variable_out_of_range,
  arity_mismatch,
  unordered_store,
  too_large,
  empty_sample,
  insufficient_data,
  bad_config,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace isk
