#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "quartic/core.hpp"

namespace quartic {

inline constexpr std::string_view kFileHeader = "quartic-pkt v1";

/// Sender side of a one-shot exchange: Ready -> Sent.
class SenderSession {
 public:
  enum class State { Ready, Sent };

  explicit SenderSession(PublicKey key);

  /// Encrypts m and attaches its rank. A failed send leaves the session Ready.
  Envelope send(const Natural& m);

  State state() const noexcept { return state_; }
  const PublicKey& public_key() const noexcept { return key_; }

 private:
  PublicKey key_;
  State state_ = State::Ready;
};

/// Receiver side of a one-shot exchange: Waiting -> Done.
class ReceiverSession {
 public:
  enum class State { Waiting, Done };

  explicit ReceiverSession(PrivateKey key);

  Natural receive(const Envelope& envelope);

  State state() const noexcept { return state_; }
  const std::optional<Natural>& recovered() const noexcept { return recovered_; }

 private:
  PrivateKey key_;
  State state_ = State::Waiting;
  std::optional<Natural> recovered_;
};

// Key files:
//
//   quartic-pkt v1
//   type = public | private
//   mode = prime | composite4 | composite16
//   n = <decimal>
//   roots = <decimal>,<decimal>,...
//   p = <decimal>        (private only)
//   q = <decimal>        (private, composite modes only)
//   a = <decimal>        (private, prime/composite4 only)
//   d = <decimal>        (private, prime/composite4 only)
//
// Envelopes are two lines, "c=<decimal>" and "rank=<decimal>".
// Parsers throw SyntaxError for malformed text and InvariantViolation when a
// well-formed file describes an impossible key.

std::string serialize_public(const PublicKey& key);
PublicKey parse_public(std::string_view text);

std::string serialize_private(const PrivateKey& key);
PrivateKey parse_private(std::string_view text);

std::string serialize_envelope(const Envelope& envelope);
Envelope parse_envelope(std::string_view text);

}  // namespace quartic
