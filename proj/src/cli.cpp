#include "rsee/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rsee/bench.hpp"
#include "rsee/block_file.hpp"
#include "rsee/channel.hpp"
#include "rsee/codec.hpp"
#include "rsee/selftest.hpp"

namespace rsee {

namespace {

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CodeOptions {
  std::optional<unsigned> m;
  std::optional<std::size_t> n;
  std::optional<std::size_t> k;
  std::string prim_poly;

  void attach(CLI::App* cmd) {
    cmd->add_option("--m", m, "Field degree m (GF(2^m), 3..16)");
    cmd->add_option("--n", n, "Block length n = 2^m - 1 (alternative to --m)");
    cmd->add_option("--k", k, "Message length k");
    cmd->add_option("--prim-poly", prim_poly, "Primitive polynomial as hex (default per m)");
  }

  CodeParams resolve() const {
    if (!k) throw UsageError("--k is required");
    unsigned degree = 0;
    if (m) {
      degree = *m;
    } else if (n) {
      while (degree < 32 && ((std::size_t{1} << degree) - 1) < *n) ++degree;
      if (((std::size_t{1} << degree) - 1) != *n) {
        throw UsageError("--n must be 2^m - 1, got " + std::to_string(*n));
      }
    } else {
      throw UsageError("one of --m or --n is required");
    }
    std::optional<std::uint32_t> poly;
    if (!prim_poly.empty()) poly = parse_hex(prim_poly);
    auto field = std::make_shared<const Field>(degree, poly);
    if (n && *n != field->order()) {
      throw UsageError("--n " + std::to_string(*n) + " does not match --m " + std::to_string(degree));
    }
    return CodeParams(std::move(field), *k);
  }
};

// Input from --input or the caller's stream.
class Input {
 public:
  Input(const std::string& path, std::istream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open input file '" + path + "'");
      stream_ = &file_;
    }
  }
  std::istream& get() { return *stream_; }

 private:
  std::ifstream file_;
  std::istream* stream_;
};

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

}  // namespace

int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Reed-Solomon errors-and-erasures codec workbench", "rsee"};
  app.require_subcommand(1);

  std::string input_path;
  std::string output_path;

  // encode
  auto* encode_cmd = app.add_subcommand("encode", "Encode messages into a block file");
  CodeOptions encode_code;
  encode_code.attach(encode_cmd);
  std::vector<std::string> encode_messages;
  encode_cmd->add_option("--message", encode_messages,
                         "Message as k space-separated symbols (repeatable); else read --input");
  encode_cmd->add_option("--input", input_path, "Message file (default: stdin)");
  encode_cmd->add_option("--output", output_path, "Block file to write (default: stdout)");

  // corrupt
  auto* corrupt_cmd = app.add_subcommand("corrupt", "Apply errors and erasures to a block file");
  ChannelSpec channel;
  std::vector<std::size_t> error_positions;
  std::vector<std::size_t> erasure_positions;
  corrupt_cmd->add_option("--t", channel.t, "Errors per block");
  corrupt_cmd->add_option("--l", channel.l, "Erasures per block");
  corrupt_cmd->add_option("--seed", channel.seed, "RNG seed (block b uses seed + b)");
  auto* pos_opt = corrupt_cmd->add_option("--positions", error_positions,
                                          "Explicit error positions, comma separated")
                      ->delimiter(',');
  auto* era_opt = corrupt_cmd->add_option("--erasure-positions", erasure_positions,
                                          "Explicit erasure positions, comma separated")
                      ->delimiter(',');
  corrupt_cmd->add_option("--input", input_path, "Block file (default: stdin)");
  corrupt_cmd->add_option("--output", output_path, "Block file to write (default: stdout)");

  // decode
  auto* decode_cmd = app.add_subcommand("decode", "Decode a block file into messages");
  std::string algorithm_name = "suggested";
  bool self_check = false;
  decode_cmd->add_option("--algorithm", algorithm_name, "gao | truong | suggested | errors-only")
      ->check(CLI::IsMember({"gao", "truong", "suggested", "errors-only"}));
  decode_cmd->add_flag("--self-check", self_check, "Re-encode and verify every decoded block");
  decode_cmd->add_option("--input", input_path, "Block file (default: stdin)");
  decode_cmd->add_option("--output", output_path, "Message file to write (default: stdout)");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Count field operations of the three decoders");
  CodeOptions bench_code;
  bench_code.attach(bench_cmd);
  BenchSpec bench_spec;
  bench_spec.trials = 100;
  std::optional<std::size_t> bench_t, bench_l;
  std::string csv_path;
  bench_cmd->add_option("--t", bench_t, "Errors per trial (default: random within radius)");
  bench_cmd->add_option("--l", bench_l, "Erasures per trial (default: random below d)");
  bench_cmd->add_option("--trials", bench_spec.trials, "Number of trials");
  bench_cmd->add_option("--seed", bench_spec.seed, "RNG seed");
  bench_cmd->add_option("--csv", csv_path, "Also write mean counts as CSV");

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the built-in consistency checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*encode_cmd) {
      const CodeParams params = encode_code.resolve();
      std::vector<Message> messages;
      if (!encode_messages.empty()) {
        for (const auto& text : encode_messages) messages.push_back(parse_message(text, params));
      } else {
        Input source(input_path, in);
        messages = read_messages(source.get(), params);
      }
      std::vector<ReceivedWord> blocks;
      for (const auto& msg : messages) blocks.emplace_back(encode(params, msg));
      Output sink(output_path, out);
      write_block_file(sink.get(), BlockHeader::of(params), blocks);
      return kExitOk;
    }

    if (*corrupt_cmd) {
      Input source(input_path, in);
      const BlockFile file = read_block_file(source.get());
      const CodeParams params = file.header.params();
      if (*pos_opt) {
        channel.error_positions = error_positions;
        if (channel.t == 0) channel.t = error_positions.size();
      }
      if (*era_opt) {
        channel.erasure_positions = erasure_positions;
        if (channel.l == 0) channel.l = erasure_positions.size();
      }
      std::vector<ReceivedWord> blocks;
      for (std::size_t b = 0; b < file.blocks.size(); ++b) {
        if (!file.blocks[b].erasures().empty()) {
          throw UsageError("block " + std::to_string(b) + " already contains erasures");
        }
        ChannelSpec spec = channel;
        spec.seed = channel.seed + b;
        blocks.push_back(corrupt(params.field(), file.blocks[b].symbols(), spec));
      }
      Output sink(output_path, out);
      write_block_file(sink.get(), file.header, blocks);
      return kExitOk;
    }

    if (*decode_cmd) {
      Input source(input_path, in);
      const BlockFile file = read_block_file(source.get());
      const CodeParams params = file.header.params();
      const Algorithm algorithm = *parse_algorithm(algorithm_name);
      Output sink(output_path, out);
      int status = kExitOk;
      for (std::size_t b = 0; b < file.blocks.size(); ++b) {
        const auto result = decode(params, file.blocks[b], algorithm, {.self_check = self_check});
        if (result) {
          write_message(sink.get(), result.message());
        } else {
          sink.get() << "fail " << to_string(result.cause()) << '\n';
          err << "block " << b << ": decoding failed (" << to_string(result.cause()) << ")\n";
          status = kExitDecodeFailure;
        }
      }
      return status;
    }

    if (*bench_cmd) {
      const CodeParams params = bench_code.resolve();
      bench_spec.t = bench_t;
      bench_spec.l = bench_l;
      const auto report = bench(params, bench_spec);
      out << "RS(" << params.n() << "," << params.k() << ") over GF(" << params.field().size()
          << "), prim poly " << format_hex(params.field().prim_poly()) << '\n';
      print_report(out, report);
      if (!csv_path.empty()) {
        Output csv(csv_path, out);
        write_csv(csv.get(), report);
      }
      return report.suggested_mult_violations() == 0 &&
                     report.suggested_iteration_violations() == 0
                 ? kExitOk
                 : kExitDecodeFailure;
    }

    if (*selftest_cmd) return run_selftest(out) ? kExitOk : kExitDecodeFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rsee
