#pragma once

#include <stdexcept>
#include <string>

namespace hsep {

/// Base error for every rejection raised by the workbench.
///
/// `kind()` is a stable machine-readable tag (e.g. "NotAssociative") and
/// `locus()` names the offending tuple or input location. `what()` joins
/// both as "<kind>: <locus>", which is what the CLI prints on one line.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, std::string locus)
      : std::runtime_error(kind + ": " + locus), kind_(std::move(kind)), locus_(std::move(locus)) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::string& locus() const noexcept { return locus_; }

 private:
  std::string kind_;
  std::string locus_;
};

/// Raised when an enumeration would exceed its configured bound.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string what_was_searched, std::string size)
      : Error("CapExceeded", what_was_searched + " needs " + size + " evaluations"),
        size_(std::move(size)) {}

  /// Decimal size of the search space (or affine set) that tripped the cap.
  const std::string& size() const noexcept { return size_; }

 private:
  std::string size_;
};

}  // namespace hsep
