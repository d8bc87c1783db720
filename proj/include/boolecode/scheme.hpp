#pragma once

// End-to-end coded computation pipelines: encode -> worker payloads ->
// decode, behind one type-erased SchemeInstance.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "boolecode/boolfn.hpp"
#include "boolecode/codes.hpp"
#include "boolecode/polynomial.hpp"
#include "boolecode/rng.hpp"
#include "boolecode/security.hpp"

namespace boolecode {

struct SchemeConfig {
  SchemeId scheme = SchemeId::anf;
  std::size_t n = 0;
  std::size_t k = 0;
  /// Partition count for dptf.
  std::size_t d = 0;
  /// Augmentation degree for dataaug.
  unsigned q = 0;
  /// Random integer inputs for rational polynomials are drawn from [-R, R].
  std::int64_t input_radius = 5;
  /// Optional field overrides; 0 means automatic.
  BigInt prime = 0;
  unsigned binary_degree = 0;
};

using TargetFunction = std::variant<BooleanFunction, PolynomialSystem>;

/// One input per data block X_1..X_K.
using TrialInputs =
    std::variant<std::vector<BitVector>, std::vector<std::vector<Rational>>, std::vector<std::vector<double>>>;

enum class AdversaryStrategy { random_replace, additive_offset, codeword_targeted, erase };

std::string_view to_string(AdversaryStrategy s) noexcept;
AdversaryStrategy parse_strategy(std::string_view name);

struct DecodeReport {
  DecodeStatus status = DecodeStatus::ok;
  /// Decoded outputs equal direct evaluation on every block.
  bool correct = false;
};

/// Payloads of all N workers for one trial. A worker owns one slot in every
/// payload stream, so corrupting a worker corrupts all of its streams.
class WorkerResponses {
 public:
  virtual ~WorkerResponses() = default;

  virtual std::unique_ptr<WorkerResponses> clone() const = 0;
  virtual std::size_t workers() const = 0;
  virtual std::size_t streams() const = 0;

  /// Applies `strategy` to every stream slot of the listed workers.
  /// codeword_targeted shifts the corrupted slots onto another codeword
  /// that agrees with the honest one on `degree` other workers.
  virtual void corrupt(AdversaryStrategy strategy, std::span<const std::size_t> workers, Rng& rng) = 0;

  virtual DecodeReport decode() const = 0;
  /// Decoded outputs rendered as text, one entry per block.
  virtual std::vector<std::string> decoded_values() const = 0;
};

namespace detail {
class Pipeline;
}

class SchemeInstance {
 public:
  /// Validates the configuration against the target and builds the
  /// representation (LTFs, PTFs, augmentation, field and code).
  SchemeInstance(const SchemeConfig& config, TargetFunction target);

  const SchemeConfig& config() const noexcept;
  const TargetFunction& target() const noexcept;

  /// Closed-form security threshold for this instance.
  Threshold threshold() const;
  std::int64_t outer_bound() const;
  /// Degree of each worker payload as a polynomial in the encoded input.
  std::size_t payload_degree() const;
  /// Number of payload streams per worker.
  std::size_t streams() const;
  std::string field_description() const;
  /// Extra per-scheme facts (stream names, degrees, weights, ...), one line each.
  std::vector<std::string> notes() const;

  TrialInputs random_inputs(Rng& rng) const;
  /// Encodes the inputs and computes every worker's honest payloads.
  std::unique_ptr<WorkerResponses> prepare(const TrialInputs& inputs) const;
  /// Direct evaluation of the target on each block, as text.
  std::vector<std::string> expected_values(const TrialInputs& inputs) const;

 private:
  SchemeConfig config_;
  std::shared_ptr<const TargetFunction> target_;
  std::shared_ptr<const detail::Pipeline> impl_;
};

/// Default partition for D-PTF when the config leaves d = 0: D = 1.
/// Default q for data augmentation when unset: 2.
SchemeConfig with_defaults(SchemeConfig config);

}  // namespace boolecode
