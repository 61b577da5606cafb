#include <string>

#include "fanq/error.hpp"
#include "fanq/graph.hpp"

namespace fanq {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

[[noreturn]] void malformed(const std::string& why) { fail(ErrorCode::parse, "malformed graph6: " + why); }

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

Graph graph6_decode(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) malformed("empty input");
  for (char c : text) {
    const int b = static_cast<unsigned char>(c);
    if (b < kBias || b > 126) malformed("byte " + std::to_string(b) + " outside printable range 63..126");
  }
  std::size_t pos = 0;
  int n = text[0] - kBias;
  pos = 1;
  if (n == 63) {
    if (text.size() < 4) malformed("truncated order header");
    if (text[1] == '~') malformed("orders above 258047 are not supported");
    n = 0;
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (text[i] - kBias);
    if (n <= 62) malformed("long order header used for order " + std::to_string(n));
    pos = 4;
  }
  if (n > kMaxVertices) fail(ErrorCode::parse, "graph6 order " + std::to_string(n) + " exceeds vertex cap");

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  const std::size_t have = text.size() - pos;
  if (have < need) malformed("expected " + std::to_string(need) + " data bytes, found " + std::to_string(have));
  if (have > need) malformed("trailing garbage after " + std::to_string(need) + " data bytes");

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - kBias;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = text.back() - kBias;
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) malformed("non-zero padding bits");
  }
  return g;
}

}  // namespace fanq
