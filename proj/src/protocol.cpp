#include "quartic/protocol.hpp"

#include <limits>
#include <vector>

#include "quartic/error.hpp"

namespace quartic {

namespace {

struct Field {
  std::string key;
  std::string value;
};

std::string_view trim(std::string_view s) {
  const auto is_blank = [](char c) { return c == ' ' || c == '\t'; };
  while (!s.empty() && is_blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_blank(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto pos = text.find('\n');
    if (pos == std::string_view::npos) {
      lines.push_back(text);
      break;
    }
    lines.push_back(text.substr(0, pos));
    text.remove_prefix(pos + 1);
  }
  return lines;
}

Field parse_field(std::string_view line) {
  const auto eq = line.find('=');
  if (eq == std::string_view::npos) {
    throw Error(ErrorCode::SyntaxError, "expected 'key = value', got a line without '='");
  }
  return {std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1)))};
}

// Sequential reader over the fixed-order fields of one file.
class FieldReader {
 public:
  FieldReader(std::string_view text, bool expect_header) : lines_(split_lines(text)) {
    if (expect_header) {
      if (lines_.empty() || lines_.front() != kFileHeader) {
        throw Error(ErrorCode::SyntaxError, "missing header line '" + std::string(kFileHeader) + "'");
      }
      next_ = 1;
    }
  }


  std::string take(std::string_view key) {
    if (next_ >= lines_.size()) {
      throw Error(ErrorCode::SyntaxError, std::string(key) + ": field missing");
    }
    Field field = parse_field(lines_[next_]);
    if (field.key != key) {
      throw Error(ErrorCode::SyntaxError, std::string(key) + ": expected this field, found '" +
                                              field.key.substr(0, 32) + "'");
    }
    ++next_;
    return std::move(field.value);
  }

  void finish() const {
    if (next_ < lines_.size()) throw Error(ErrorCode::SyntaxError, "unexpected trailing content");
  }

 private:
  std::vector<std::string_view> lines_;
  std::size_t next_ = 0;
};

std::string join(const std::vector<Natural>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += to_string(values[i]);
  }
  return out;
}

std::vector<Natural> parse_list(std::string_view text, std::string_view field) {
  std::vector<Natural> values;
  for (;;) {
    const auto comma = text.find(',');
    values.push_back(parse_natural(trim(text.substr(0, comma)), field));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return values;
}

void expect_type(FieldReader& reader, std::string_view type) {
  const std::string value = reader.take("type");
  if (value != type) {
    throw Error(ErrorCode::SyntaxError, "type: expected '" + std::string(type) + "'");
  }
}

void append(std::string& out, std::string_view key, const std::string& value) {
  out += key;
  out += " = ";
  out += value;
  out += '\n';
}

std::string key_preamble(std::string_view type, KeyMode mode, const Natural& n,
                         const std::vector<Natural>& roots) {
  std::string out(kFileHeader);
  out += '\n';
  append(out, "type", std::string(type));
  append(out, "mode", std::string(to_string(mode)));
  append(out, "n", to_string(n));
  append(out, "roots", join(roots));
  return out;
}

}  // namespace

SenderSession::SenderSession(PublicKey key) : key_(std::move(key)) {}

Envelope SenderSession::send(const Natural& m) {
  if (state_ != State::Ready) throw Error(ErrorCode::SessionStateError, "sender already sent its message");
  Envelope envelope{encrypt(m, key_), rank_of(m, key_)};
  state_ = State::Sent;
  return envelope;
}

ReceiverSession::ReceiverSession(PrivateKey key) : key_(std::move(key)) {}

Natural ReceiverSession::receive(const Envelope& envelope) {
  if (state_ != State::Waiting) throw Error(ErrorCode::SessionStateError, "receiver already has its message");
  Natural m = decrypt(envelope, key_);
  recovered_ = m;
  state_ = State::Done;
  return m;
}

std::string serialize_public(const PublicKey& key) {
  return key_preamble("public", key.mode, key.n, key.unity_roots);
}

PublicKey parse_public(std::string_view text) {
  FieldReader reader(text, true);
  expect_type(reader, "public");
  PublicKey key;
  key.mode = parse_key_mode(reader.take("mode"));
  key.n = parse_natural(reader.take("n"), "n");
  key.unity_roots = parse_list(reader.take("roots"), "roots");
  reader.finish();
  validate(key);
  return key;
}

std::string serialize_private(const PrivateKey& key) {
  std::string out = key_preamble("private", key.mode, key.n, key.unity_roots);
  append(out, "p", to_string(key.p));
  if (key.q) append(out, "q", to_string(*key.q));
  if (key.a) append(out, "a", to_string(*key.a));
  if (key.d) append(out, "d", to_string(*key.d));
  return out;
}

PrivateKey parse_private(std::string_view text) {
  FieldReader reader(text, true);
  expect_type(reader, "private");
  PrivateKey key;
  key.mode = parse_key_mode(reader.take("mode"));
  key.n = parse_natural(reader.take("n"), "n");
  key.unity_roots = parse_list(reader.take("roots"), "roots");
  key.p = parse_natural(reader.take("p"), "p");
  if (key.mode != KeyMode::Prime) key.q = parse_natural(reader.take("q"), "q");
  if (key.mode != KeyMode::Composite16) {
    key.a = parse_natural(reader.take("a"), "a");
    key.d = parse_natural(reader.take("d"), "d");
  }
  reader.finish();
  validate(key);
  return key;
}

std::string serialize_envelope(const Envelope& envelope) {
  return "c=" + to_string(envelope.cipher) + "\nrank=" + std::to_string(envelope.rank) + "\n";
}

Envelope parse_envelope(std::string_view text) {
  FieldReader reader(text, false);
  Envelope envelope;
  envelope.cipher = parse_natural(reader.take("c"), "c");
  const Natural rank = parse_natural(reader.take("rank"), "rank");
  reader.finish();
  if (envelope.cipher == 0) {
    throw Error(ErrorCode::InvariantViolation, "c: zero is never a cipher of a unit");
  }
  if (rank < 1 || rank > std::numeric_limits<std::size_t>::max()) {
    throw Error(ErrorCode::InvariantViolation, "rank: must be a positive position");
  }
  envelope.rank = static_cast<std::size_t>(rank);
  return envelope;
}

}  // namespace quartic
