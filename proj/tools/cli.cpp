#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "expr_syntax.hpp"
#include "kaj/cipher.hpp"
#include "kaj/codec.hpp"
#include "kaj/cryptanalysis.hpp"
#include "kaj/error.hpp"
#include "kaj/transform.hpp"

namespace kaj::cli {

namespace {

struct CliConfig {
  std::string text;
  std::string input_path;
  std::string key_path;
  std::string output;
  std::string beta;
  std::string modulus;
  std::string expression;
  bool invert = false;
  bool printable = false;
  bool legacy_view = false;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path + "' for reading");
  }
  std::string data((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw IoError("error while reading '" + path + "'");
  }
  return data;
}

void write_file(const std::string& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) {
    throw IoError("error while writing '" + path + "'");
  }
}

BigInt parse_int_option(const std::string& name, const std::string& text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && digits.front() == '-') {
    negative = true;
    digits.remove_prefix(1);
  }
  if (digits.empty() ||
      digits.find_first_not_of("0123456789") != std::string_view::npos) {
    throw UsageError("--" + name + " expects an integer, got '" + text + "'");
  }
  BigInt value(std::string{digits});
  return negative ? BigInt(-value) : value;
}

CipherParams params_from(const CliConfig& config) {
  BigInt beta = parse_int_option("beta", config.beta);
  BigInt modulus = parse_int_option("modulus", config.modulus);
  try {
    return CipherParams(std::move(beta), std::move(modulus));
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::string render_candidates(const std::vector<std::uint8_t>& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out += ',';
    out += set[i] == ',' ? std::string("\\x2c") : escape_byte(set[i]);
  }
  out += '}';
  return out;
}

int run_encrypt(const CliConfig& config, std::ostream& out,
                std::ostream& err) {
  CipherParams params = params_from(config);
  Bytes message = config.input_path.empty()
                      ? encode_plaintext(config.text)
                      : encode_plaintext(read_file(config.input_path));
  if (message.empty()) {
    err << "kaj: EmptyMessage: nothing to encrypt\n";
    return kExitIntegrity;
  }
  Encrypted result = encrypt(message, params);
  const std::string cipher_path =
      config.output + std::string(kCiphertextExtension);
  const std::string key_path = config.output + std::string(kKeyExtension);
  write_file(cipher_path, serialize_ciphertext(result.ciphertext));
  write_file(key_path, serialize_key(result.key));
  out << "n=" << message.size() << " beta=" << to_decimal(params.beta())
      << " modulus=" << to_decimal(params.modulus()) << '\n'
      << "ciphertext: " << cipher_path << '\n'
      << "key: " << key_path << '\n';
  if (config.legacy_view) {
    out << "glyphs: " << render_legacy_glyphs(result.ciphertext) << '\n';
  }
  return kExitOk;
}

int run_decrypt(const CliConfig& config, std::ostream& out,
                std::ostream& err) {
  Ciphertext ciphertext = [&] {
    try {
      return parse_ciphertext(read_file(config.input_path));
    } catch (const FormatError& e) {
      throw FormatError(e.line(), config.input_path + ": " + e.what());
    }
  }();
  KeyStream key = [&] {
    try {
      return parse_key(read_file(config.key_path));
    } catch (const FormatError& e) {
      throw FormatError(e.line(), config.key_path + ": " + e.what());
    }
  }();
  Bytes plain = decrypt(ciphertext, key);
  std::string raw(plain.begin(), plain.end());
  if (!config.output.empty()) {
    write_file(config.output, raw);
    return kExitOk;
  }
  try {
    out << decode_plaintext(plain) << '\n';
  } catch (const Error& e) {
    err << "kaj: warning: " << e.what() << "; writing raw bytes\n";
    out << raw;
  }
  return kExitOk;
}

int run_transform(const CliConfig& config, std::ostream& out) {
  if (config.invert) {
    out << render_time(invert_expr(parse_image_expr(config.expression)))
        << '\n';
  } else {
    out << render_image(transform_expr(parse_basis_expr(config.expression)))
        << '\n';
  }
  return kExitOk;
}

int run_crack(const CliConfig& config, std::ostream& out, std::ostream& err) {
  Ciphertext ciphertext = parse_ciphertext(read_file(config.input_path));
  CandidateReport report =
      crack(ciphertext, CrackOptions{.printable_only = config.printable});
  for (std::size_t i = 0; i < report.candidates.size(); ++i) {
    const auto& set = report.candidates[i];
    out << "k=" << i + 1 << " candidates=" << set.size() << ' '
        << render_candidates(set) << '\n';
    if (set.empty()) {
      err << "kaj: warning: no candidate byte at position " << i + 1
          << " (parameters may not match the ciphertext)\n";
    }
  }
  return kExitOk;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::kFormatError:
      return kExitFormat;
    case Errc::kInvalidParams:
      return kExitUsage;
    default:
      return kExitIntegrity;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CliConfig config;
  CLI::App app{"KAJ transform cipher toolkit", "kaj"};
  app.require_subcommand(1);

  auto* enc = app.add_subcommand("encrypt", "Encrypt a message");
  auto* text_opt = enc->add_option("--text", config.text, "Literal message");
  auto* in_opt =
      enc->add_option("--in", config.input_path, "Read message bytes from file");
  text_opt->excludes(in_opt);
  enc->add_option("--beta", config.beta, "Growth base (>= 1)")->required();
  enc->add_option("--modulus", config.modulus, "Modulus (>= 2)")->required();
  enc->add_option("-o,--out", config.output,
                  "Output stem; writes <stem>.kajc and <stem>.kajk")
      ->required();
  enc->add_flag("--legacy-view", config.legacy_view,
                "Also print the escaped glyph view of the ciphertext");

  auto* dec = app.add_subcommand("decrypt", "Decrypt a ciphertext with its key");
  dec->add_option("--in", config.input_path, "Ciphertext file (.kajc)")
      ->required();
  dec->add_option("--key", config.key_path, "Key file (.kajk)")->required();
  dec->add_option("--out", config.output, "Write recovered bytes to a file");

  auto* tr = app.add_subcommand("transform", "Apply the transform table");
  tr->add_flag("--invert", config.invert, "Invert an image expression");
  tr->add_option("expr", config.expression, "Expression")->required();

  auto* cr = app.add_subcommand("crack", "List per-position byte candidates");
  cr->add_option("--in", config.input_path, "Ciphertext file (.kajc)")
      ->required();
  cr->add_flag("--printable", config.printable,
               "Restrict candidates to printable ASCII");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "kaj: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (enc->parsed()) {
      if (config.text.empty() && config.input_path.empty() &&
          enc->count("--text") == 0) {
        err << "kaj: encrypt requires --text or --in\n";
        return kExitUsage;
      }
      return run_encrypt(config, out, err);
    }
    if (dec->parsed()) return run_decrypt(config, out, err);
    if (tr->parsed()) return run_transform(config, out);
    return run_crack(config, out, err);
  } catch (const UsageError& e) {
    err << "kaj: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SyntaxError& e) {
    err << "kaj: parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "kaj: " << e.what() << '\n';
    return kExitFormat;
  } catch (const Error& e) {
    err << "kaj: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}

}  // namespace kaj::cli
