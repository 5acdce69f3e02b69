#include "rsee/block_file.hpp"

#include <charconv>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>

namespace rsee {

namespace {

bool skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  for (std::string tok; ss >> tok;) tokens.push_back(tok);
  return tokens;
}

bool parse_decimal(const std::string& tok, std::uint64_t& out) {
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), last, out);
  return ec == std::errc{} && ptr == last;
}

std::vector<Element> parse_symbols(const std::vector<std::string>& tokens, const Field& field,
                                   std::size_t line, std::vector<std::size_t>* erasures) {
  std::vector<Element> symbols;
  symbols.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i] == "?" && erasures) {
      erasures->push_back(i);
      symbols.push_back(Element::zero());
      continue;
    }
    std::uint64_t v = 0;
    if (!parse_decimal(tokens[i], v)) throw FormatError(line, "bad symbol '" + tokens[i] + "'");
    if (v >= field.size()) {
      throw FormatError(line, "symbol " + tokens[i] + " outside GF(" + std::to_string(field.size()) + ")");
    }
    symbols.emplace_back(static_cast<std::uint32_t>(v));
  }
  return symbols;
}

}  // namespace

std::uint32_t parse_hex(const std::string& text) {
  std::string_view s = text;
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s.remove_prefix(2);
  std::uint32_t v = 0;
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), last, v, 16);
  if (s.empty() || ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("malformed hexadecimal value '" + text + "'");
  }
  return v;
}

std::string format_hex(std::uint32_t value) {
  std::ostringstream ss;
  ss << "0x" << std::hex << value;
  return ss.str();
}

CodeParams BlockHeader::params() const {
  try {
    auto field = std::make_shared<const Field>(m, prim_poly);
    if (n != field->order()) {
      throw FormatError(1, "block length n = " + std::to_string(n) + " but 2^m - 1 = " +
                               std::to_string(field->order()));
    }
    return CodeParams(std::move(field), k);
  } catch (const std::invalid_argument& e) {
    throw FormatError(1, e.what());
  }
}

BlockHeader BlockHeader::of(const CodeParams& params) {
  return {params.n(), params.k(), params.field().degree(), params.field().prim_poly()};
}

BlockFile read_block_file(std::istream& in) {
  BlockFile file;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::unique_ptr<CodeParams> params;

  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    const auto tokens = split(line);
    if (!have_header) {
      std::uint64_t n = 0, k = 0, m = 0;
      if (tokens.size() != 5 || tokens[0] != "rs" || !parse_decimal(tokens[1], n) ||
          !parse_decimal(tokens[2], k) || !parse_decimal(tokens[3], m)) {
        throw FormatError(lineno, "expected header 'rs n k m prim_poly_hex'");
      }
      try {
        file.header = {n, k, static_cast<unsigned>(m), parse_hex(tokens[4])};
      } catch (const std::invalid_argument& e) {
        throw FormatError(lineno, e.what());
      }
      params = std::make_unique<CodeParams>(file.header.params());
      have_header = true;
      continue;
    }
    if (tokens.size() != params->n()) {
      throw FormatError(lineno, "expected " + std::to_string(params->n()) + " symbols, got " +
                                    std::to_string(tokens.size()));
    }
    std::vector<std::size_t> erasures;
    auto symbols = parse_symbols(tokens, params->field(), lineno, &erasures);
    file.blocks.emplace_back(EvaluationVector(std::move(symbols)), std::move(erasures));
  }
  if (!have_header) throw FormatError(lineno, "missing 'rs' header");
  return file;
}

void write_block_file(std::ostream& out, const BlockHeader& header,
                      const std::vector<ReceivedWord>& blocks) {
  out << "rs " << header.n << ' ' << header.k << ' ' << header.m << ' '
      << format_hex(header.prim_poly) << '\n';
  for (const auto& block : blocks) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out << ' ';
      if (block.is_erased(i)) {
        out << '?';
      } else {
        out << block.symbols()[i].value();
      }
    }
    out << '\n';
  }
}

Message parse_message(const std::string& line, const CodeParams& params) {
  const auto tokens = split(line);
  if (tokens.size() != params.k()) {
    throw FormatError(1, "expected " + std::to_string(params.k()) + " message symbols, got " +
                             std::to_string(tokens.size()));
  }
  return parse_symbols(tokens, params.field(), 1, nullptr);
}

std::vector<Message> read_messages(std::istream& in, const CodeParams& params) {
  std::vector<Message> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    const auto tokens = split(line);
    if (tokens.size() != params.k()) {
      throw FormatError(lineno, "expected " + std::to_string(params.k()) +
                                    " message symbols, got " + std::to_string(tokens.size()));
    }
    out.push_back(parse_symbols(tokens, params.field(), lineno, nullptr));
  }
  return out;
}

void write_message(std::ostream& out, const Message& message) {
  for (std::size_t i = 0; i < message.size(); ++i) {
    if (i) out << ' ';
    out << message[i].value();
  }
  out << '\n';
}

}  // namespace rsee
