#include "quartic/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "quartic/core.hpp"
#include "quartic/error.hpp"
#include "quartic/group_events.hpp"
#include "quartic/numtheory.hpp"
#include "quartic/oracle.hpp"
#include "quartic/protocol.hpp"
#include "quartic/verify.hpp"

namespace quartic::cli {

namespace {

// Bad flag values are usage errors, not domain errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Natural natural_flag(const std::string& value, const std::string& flag) {
  try {
    return parse_natural(value, flag);
  } catch (const Error&) {
    throw UsageError(flag + ": expected a non-negative decimal integer");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << contents)) throw UsageError("cannot write " + path);
}

std::string join(const std::vector<Natural>& values, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += to_string(values[i]);
  }
  return out;
}

void print_groups(const GroupPartition& partition, std::ostream& out) {
  for (std::size_t i = 0; i < partition.groups.size(); ++i) {
    const RootGroup& g = partition.groups[i];
    out << "group " << i + 1 << ": generator=" << g.generator << " members="
        << join({g.members.begin(), g.members.end()}) << '\n';
  }
  out << "involutions=" << join(partition.involutions) << '\n';
}

void print_table(const Natural& p, const Natural& alpha, std::ostream& out) {
  out << "m\tm*alpha\tm*alpha^2\tm*alpha^3\tc\n";
  for (const auto& row : oracle::table_for_prime(p, alpha)) {
    out << row[0] << '\t' << row[1] << '\t' << row[2] << '\t' << row[3] << '\t' << row[4] << '\n';
  }
}

void demo_prime(std::ostream& out) {
  const Natural p = 37;
  const Natural m = 7;
  const KeyPair keys = make_keys(KeyMode::Prime, p);
  const PrivateKey& priv = keys.private_key;

  out << "# quartic map c = m^4 mod p with p = 37\n";
  out << "p=" << p << '\n';
  out << "roots=" << join(keys.public_key.unity_roots) << '\n';
  out << "alpha=" << select_alpha(keys.public_key.unity_roots, p) << '\n';
  out << "a=" << *priv.a << '\n';
  out << "d=" << *priv.d << '\n';

  out << "# sender\n";
  out << "m=" << m << '\n';
  out << "associates=" << join(associates(m, keys.public_key).members()) << '\n';
  SenderSession sender(keys.public_key);
  const Envelope envelope = sender.send(m);
  out << serialize_envelope(envelope);

  out << "# receiver\n";
  const Natural root = extract_quartic_root(envelope.cipher, priv);
  out << "root=" << root << "  # " << envelope.cipher << "^" << *priv.d << " mod " << p << '\n';
  out << "associates=" << join(associates(root, keys.public_key).members()) << '\n';
  ReceiverSession receiver(priv);
  out << "recovered=" << receiver.receive(envelope) << '\n';
}

void demo_composite(std::ostream& out) {
  const Natural p = 17, q = 13, m = 24;
  const KeyPair keys = make_keys(KeyMode::Composite16, p, q);
  const PrivateKey& priv = keys.private_key;

  out << "# quartic map c = m^4 mod n with n = 17 * 13\n";
  out << "p=" << p << '\n' << "q=" << q << '\n' << "n=" << priv.n << '\n';
  out << "roots_p=" << join(unity_roots_prime(p)) << '\n';
  out << "roots_q=" << join(unity_roots_prime(q)) << '\n';
  out << "roots=" << join(keys.public_key.unity_roots) << '\n';

  out << "# sender\n";
  out << "m=" << m << '\n';
  out << "associates=" << join(associates(m, keys.public_key).members()) << '\n';
  SenderSession sender(keys.public_key);
  const Envelope envelope = sender.send(m);
  out << serialize_envelope(envelope);

  out << "# receiver\n";
  const Natural root = extract_quartic_root(envelope.cipher, priv);
  out << "root=" << root << '\n';
  out << "associates=" << join(associates(root, keys.public_key).members()) << '\n';
  ReceiverSession receiver(priv);
  out << "recovered=" << receiver.receive(envelope) << '\n';

  out << "# groups of the sixteen roots\n";
  print_groups(partition_groups(keys.public_key.unity_roots, priv.n), out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quartic public-key transformation with side information", "quartic"};
  app.require_subcommand(1);
  std::function<void()> action;

  // keygen
  std::string mode_name, prefix, force_p, force_q;
  unsigned bits = 0;
  std::uint64_t seed = 1;
  auto* keygen_cmd = app.add_subcommand("keygen", "Generate a key pair");
  keygen_cmd->add_option("--mode", mode_name, "prime | composite4 | composite16")
      ->required()
      ->check(CLI::IsMember({"prime", "composite4", "composite16"}));
  keygen_cmd->add_option("--bits", bits, "Bits per prime");
  keygen_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  keygen_cmd->add_option("--out", prefix, "Output prefix for .qpub/.qpriv")->required();
  keygen_cmd->add_option("--p", force_p, "Use this prime instead of drawing one");
  keygen_cmd->add_option("--q", force_q, "Second prime for composite modes");
  keygen_cmd->callback([&] {
    action = [&] {
      const KeyMode mode = parse_key_mode(mode_name);
      KeyPair keys;
      if (!force_p.empty()) {
        std::optional<Natural> q;
        if (!force_q.empty()) q = natural_flag(force_q, "--q");
        keys = make_keys(mode, natural_flag(force_p, "--p"), q);
      } else {
        if (bits == 0) throw UsageError("--bits is required unless --p is given");
        Rng rng(seed);
        keys = keygen(mode, bits, rng);
      }
      write_file(prefix + ".qpub", serialize_public(keys.public_key));
      write_file(prefix + ".qpriv", serialize_private(keys.private_key));
      out << "n=" << keys.public_key.n << '\n';
      out << "wrote " << prefix << ".qpub " << prefix << ".qpriv\n";
    };
  });

  // roots
  std::string pub_path;
  auto* roots_cmd = app.add_subcommand("roots", "Print the fourth roots of unity of a public key");
  roots_cmd->add_option("--pub", pub_path, "Public key file")->required();
  roots_cmd->callback([&] {
    action = [&] {
      for (const Natural& r : parse_public(read_file(pub_path)).unity_roots) out << r << '\n';
    };
  });

  // table
  std::string table_p, table_alpha;
  auto* table_cmd = app.add_subcommand("table", "Print the 4-to-1 mapping table for a prime");
  table_cmd->add_option("--prime", table_p, "Prime p = 1 (mod 4)")->required();
  table_cmd->add_option("--alpha", table_alpha, "Root of unity of order 4")->required();
  table_cmd->callback([&] {
    action = [&] { print_table(natural_flag(table_p, "--prime"), natural_flag(table_alpha, "--alpha"), out); };
  });

  // encrypt
  std::string message, envelope_out;
  auto* encrypt_cmd = app.add_subcommand("encrypt", "Encrypt a message and compute its rank");
  encrypt_cmd->add_option("--pub", pub_path, "Public key file")->required();
  encrypt_cmd->add_option("--message", message, "Message, a unit below n")->required();
  encrypt_cmd->add_option("--out", envelope_out, "Also write the envelope to this .qmsg file");
  encrypt_cmd->callback([&] {
    action = [&] {
      SenderSession sender(parse_public(read_file(pub_path)));
      const std::string text = serialize_envelope(sender.send(natural_flag(message, "--message")));
      if (!envelope_out.empty()) write_file(envelope_out, text);
      out << text;
    };
  });

  // decrypt
  std::string priv_path, cipher, envelope_in;
  std::size_t rank = 0;
  auto* decrypt_cmd = app.add_subcommand("decrypt", "Recover a message from cipher and rank");
  decrypt_cmd->add_option("--priv", priv_path, "Private key file")->required();
  auto* cipher_opt = decrypt_cmd->add_option("--cipher", cipher, "Cipher c");
  auto* rank_opt = decrypt_cmd->add_option("--rank", rank, "Side information (1-based rank)");
  auto* in_opt = decrypt_cmd->add_option("--in", envelope_in, "Envelope file (.qmsg)");
  cipher_opt->needs(rank_opt);
  rank_opt->needs(cipher_opt);
  in_opt->excludes(cipher_opt)->excludes(rank_opt);
  decrypt_cmd->callback([&] {
    action = [&] {
      Envelope envelope;
      if (!envelope_in.empty()) {
        envelope = parse_envelope(read_file(envelope_in));
      } else if (!cipher.empty()) {
        envelope = {natural_flag(cipher, "--cipher"), rank};
      } else {
        throw UsageError("give --cipher and --rank, or --in");
      }
      ReceiverSession receiver(parse_private(read_file(priv_path)));
      out << "recovered=" << receiver.receive(envelope) << '\n';
    };
  });

  // groups
  auto* groups_cmd = app.add_subcommand("groups", "Split the sixteen roots into six cyclic groups");
  groups_cmd->add_option("--priv", priv_path, "Private key file (composite16)")->required();
  groups_cmd->callback([&] {
    action = [&] {
      const PrivateKey key = parse_private(read_file(priv_path));
      if (key.mode != KeyMode::Composite16) {
        throw Error(ErrorCode::ModeMismatch, "groups needs a composite16 key");
      }
      print_groups(partition_groups(key.unity_roots, key.n), out);
    };
  });

  // demo
  int example = 0;
  auto* demo_cmd = app.add_subcommand("demo", "Replay a worked example end to end");
  demo_cmd->add_option("--example", example, "1 (p = 37) or 2 (n = 221)")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  demo_cmd->callback([&] {
    action = [&] { example == 1 ? demo_prime(out) : demo_composite(out); };
  });

  // verify
  bool exhaustive = false;
  std::size_t samples = VerifyOptions{}.samples;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check a key against brute-force scans");
  verify_cmd->add_option("--priv", priv_path, "Private key file")->required();
  verify_cmd->add_flag("--exhaustive", exhaustive, "Check every unit message");
  verify_cmd->add_option("--samples", samples, "Sampled messages when not exhaustive")->capture_default_str();
  verify_cmd->add_option("--seed", seed, "Sampling seed")->capture_default_str();
  verify_cmd->callback([&] {
    action = [&] {
      Rng rng(seed);
      const VerifyReport report =
          verify_key(parse_private(read_file(priv_path)), {exhaustive, samples}, rng);
      for (const auto& mismatch : report.mismatches) out << "mismatch: " << mismatch << '\n';
      out << "checks=" << report.checks << '\n' << "mismatches=" << report.mismatches.size() << '\n';
      if (!report.ok()) throw Error(ErrorCode::VerificationFailed, "fast paths disagree with the oracle");
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    action();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace quartic::cli
