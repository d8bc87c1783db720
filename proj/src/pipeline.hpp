#pragma once

// Internal pipeline interface and the generic stream container used by every
// scheme.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "boolecode/scheme.hpp"

namespace boolecode::detail {

class Pipeline {
 public:
  virtual ~Pipeline() = default;

  virtual Threshold threshold() const = 0;
  virtual std::size_t payload_degree() const = 0;
  virtual std::size_t streams() const = 0;
  virtual std::string field_description() const = 0;
  virtual std::vector<std::string> notes() const { return {}; }
  virtual TrialInputs random_inputs(Rng& rng) const = 0;
  virtual std::unique_ptr<WorkerResponses> prepare(const TrialInputs& inputs) const = 0;
  virtual std::vector<std::string> expected_values(const TrialInputs& inputs) const = 0;
};

template <class E>
using StreamMatrix = std::vector<ReceivedVector<E>>;

/// Result of decoding every stream: either per-block outputs as text plus a
/// correctness verdict, or a decoder status.
struct StreamVerdict {
  DecodeReport report;
  std::vector<std::string> values;
};

/// Generic WorkerResponses over a field: stream s holds one slot per worker,
/// and `decode_fn` turns the received streams into a verdict.
template <Field F>
class StreamResponses final : public WorkerResponses {
 public:
  using Element = typename F::Element;
  using DecodeFn = std::function<StreamVerdict(const StreamMatrix<Element>&)>;

  StreamResponses(F field, std::shared_ptr<const std::vector<Element>> alpha, std::vector<std::size_t> degrees,
                  StreamMatrix<Element> streams, std::shared_ptr<const DecodeFn> decode_fn)
      : field_(std::move(field)),
        alpha_(std::move(alpha)),
        degrees_(std::move(degrees)),
        streams_(std::move(streams)),
        decode_fn_(std::move(decode_fn)) {}

  std::unique_ptr<WorkerResponses> clone() const override { return std::make_unique<StreamResponses>(*this); }
  std::size_t workers() const override { return alpha_->size(); }
  std::size_t streams() const override { return streams_.size(); }

  void corrupt(AdversaryStrategy strategy, std::span<const std::size_t> who, Rng& rng) override {
    const auto& f = field_;
    for (auto w : who) require(w < workers(), "adversarial worker index out of range");
    if (strategy == AdversaryStrategy::codeword_targeted) {
      plant_codeword(who, rng);
      return;
    }
    for (auto& s : streams_) {
      for (auto w : who) {
        auto& slot = s.slots[w];
        switch (strategy) {
          case AdversaryStrategy::random_replace: slot = f.random(rng); break;
          case AdversaryStrategy::additive_offset:
            if (slot) slot = f.add(*slot, f.one());
            break;
          case AdversaryStrategy::erase: slot.reset(); break;
          case AdversaryStrategy::codeword_targeted: break;
        }
      }
    }
  }

  DecodeReport decode() const override { return (*decode_fn_)(streams_).report; }
  std::vector<std::string> decoded_values() const override { return (*decode_fn_)(streams_).values; }

 private:
  // Adds c * prod_{a in A} (x - alpha_a) to every corrupted slot, where A is
  // a set of `degree` honest anchor workers. The corrupted word then agrees
  // with a second codeword on the corrupted slots and the anchors.
  void plant_codeword(std::span<const std::size_t> who, Rng& rng) {
    const auto& f = field_;
    std::vector<bool> bad(workers(), false);
    for (auto w : who) bad[w] = true;
    std::vector<std::size_t> honest;
    for (std::size_t i = 0; i < workers(); ++i) {
      if (!bad[i]) honest.push_back(i);
    }
    for (std::size_t i = honest.size(); i > 1; --i) std::swap(honest[i - 1], honest[rng.below(i)]);
    for (std::size_t s = 0; s < streams_.size(); ++s) {
      const std::size_t anchors = std::min(degrees_[s], honest.size());
      Element c = f.random(rng);
      while (f.is_zero(c)) c = f.random(rng);
      for (auto w : who) {
        auto& slot = streams_[s].slots[w];
        if (!slot) continue;
        Element delta = c;
        for (std::size_t a = 0; a < anchors; ++a) delta = f.mul(delta, f.sub((*alpha_)[w], (*alpha_)[honest[a]]));
        slot = f.add(*slot, delta);
      }
    }
  }

  F field_;
  std::shared_ptr<const std::vector<Element>> alpha_;
  std::vector<std::size_t> degrees_;
  StreamMatrix<Element> streams_;
  std::shared_ptr<const DecodeFn> decode_fn_;
};

}  // namespace boolecode::detail
