#pragma once

#include <stdexcept>
#include <string>

namespace sbpmhd {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid user configuration (CLI exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Requested capability is not implemented (e.g. non-periodic boundaries).
class UnsupportedFeature : public Error {
 public:
  using Error::Error;
};

/// Non-finite or inadmissible state met during a solve (CLI exit code 3).
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, long element = -1, int node_i = -1, int node_j = -1)
      : Error(what), element_(element), node_i_(node_i), node_j_(node_j) {}

  long element() const { return element_; }
  int node_i() const { return node_i_; }
  int node_j() const { return node_j_; }

 private:
  long element_;
  int node_i_;
  int node_j_;
};

}  // namespace sbpmhd
