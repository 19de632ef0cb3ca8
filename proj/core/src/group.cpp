#include "rdmap/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <utility>

#include "rdmap/errors.hpp"

namespace rdmap {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

// Appends letter to a reduced word, cancelling against the last letter.
void push_letter(std::vector<std::int64_t>& word, std::int64_t letter) {
  if (!word.empty() && (word.back() ^ 1) == letter) {
    word.pop_back();
  } else {
    word.push_back(letter);
  }
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

void enumerate_vectors(std::int64_t d, Length budget, std::vector<std::int64_t>& prefix,
                       std::vector<GroupElement>& out) {
  if (static_cast<std::int64_t>(prefix.size()) == d) {
    out.emplace_back(prefix);
    return;
  }
  for (std::int64_t v = -budget; v <= budget; ++v) {
    prefix.push_back(v);
    enumerate_vectors(d, budget - (v < 0 ? -v : v), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

GroupDescriptor GroupDescriptor::free(int rank) {
  if (rank < 1 || rank > 26) {
    throw std::invalid_argument("free group rank must be in [1, 26]");
  }
  return {GroupKind::kFree, rank};
}

GroupDescriptor GroupDescriptor::free_abelian(int rank) {
  if (rank < 1) throw std::invalid_argument("free abelian rank must be >= 1");
  return {GroupKind::kFreeAbelian, rank};
}

GroupDescriptor GroupDescriptor::cyclic(std::int64_t order) {
  if (order < 2) throw std::invalid_argument("cyclic order must be >= 2");
  return {GroupKind::kCyclic, order};
}

GroupDescriptor GroupDescriptor::parse(std::string_view text) {
  std::string_view name;
  std::string_view arg;
  if (auto open = text.find('('); open != std::string_view::npos) {
    if (text.back() != ')') throw ParseError("bad group descriptor: " + std::string(text));
    name = text.substr(0, open);
    arg = text.substr(open + 1, text.size() - open - 2);
  } else if (auto colon = text.find(':'); colon != std::string_view::npos) {
    name = text.substr(0, colon);
    arg = text.substr(colon + 1);
  } else {
    throw ParseError("bad group descriptor: " + std::string(text));
  }
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), value);
  if (ec != std::errc() || ptr != arg.data() + arg.size()) {
    throw ParseError("bad group parameter: " + std::string(text));
  }
  if (name == "free") return free(static_cast<int>(value));
  if (name == "free-abelian" || name == "free_abelian" || name == "Z") {
    return free_abelian(static_cast<int>(value));
  }
  if (name == "cyclic") return cyclic(value);
  throw ParseError("unknown group kind: " + std::string(name));
}

std::string GroupDescriptor::to_string() const {
  switch (kind_) {
    case GroupKind::kFree:
      return "free(" + std::to_string(parameter_) + ")";
    case GroupKind::kFreeAbelian:
      return "free-abelian(" + std::to_string(parameter_) + ")";
    case GroupKind::kCyclic:
      return "cyclic(" + std::to_string(parameter_) + ")";
  }
  return {};
}

std::size_t GroupElementHash::operator()(const GroupElement& x) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (std::int64_t v : x.payload()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

void validate(const GroupDescriptor& g, const GroupElement& x) {
  const auto& p = x.payload();
  switch (g.kind()) {
    case GroupKind::kFree: {
      const std::int64_t letters = 2 * g.parameter();
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0 || p[i] >= letters) {
          throw GroupMismatch("letter out of range for " + g.to_string());
        }
        if (i > 0 && (p[i - 1] ^ 1) == p[i]) {
          throw GroupMismatch("free word is not reduced");
        }
      }
      return;
    }
    case GroupKind::kFreeAbelian:
      if (static_cast<std::int64_t>(p.size()) != g.parameter()) {
        throw GroupMismatch("vector dimension does not match " + g.to_string());
      }
      return;
    case GroupKind::kCyclic:
      if (p.size() != 1 || p[0] < 0 || p[0] >= g.parameter()) {
        throw GroupMismatch("residue invalid for " + g.to_string());
      }
      return;
  }
}

GroupElement identity(const GroupDescriptor& g) {
  switch (g.kind()) {
    case GroupKind::kFree:
      return GroupElement{};
    case GroupKind::kFreeAbelian:
      return GroupElement(std::vector<std::int64_t>(g.parameter(), 0));
    case GroupKind::kCyclic:
      return GroupElement({0});
  }
  return {};
}

GroupElement multiply(const GroupDescriptor& g, const GroupElement& x,
                      const GroupElement& y) {
  validate(g, x);
  validate(g, y);
  const auto& a = x.payload();
  const auto& b = y.payload();
  switch (g.kind()) {
    case GroupKind::kFree: {
      std::vector<std::int64_t> word = a;
      word.reserve(a.size() + b.size());
      for (std::int64_t letter : b) push_letter(word, letter);
      return GroupElement(std::move(word));
    }
    case GroupKind::kFreeAbelian: {
      std::vector<std::int64_t> sum(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
      return GroupElement(std::move(sum));
    }
    case GroupKind::kCyclic:
      return GroupElement({mod(a[0] + b[0], g.parameter())});
  }
  return {};
}

GroupElement inverse(const GroupDescriptor& g, const GroupElement& x) {
  validate(g, x);
  const auto& a = x.payload();
  switch (g.kind()) {
    case GroupKind::kFree: {
      std::vector<std::int64_t> word(a.rbegin(), a.rend());
      for (auto& letter : word) letter ^= 1;
      return GroupElement(std::move(word));
    }
    case GroupKind::kFreeAbelian: {
      std::vector<std::int64_t> neg(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
      return GroupElement(std::move(neg));
    }
    case GroupKind::kCyclic:
      return GroupElement({mod(-a[0], g.parameter())});
  }
  return {};
}

Length word_length(const GroupDescriptor& g, const GroupElement& x) {
  validate(g, x);
  const auto& a = x.payload();
  switch (g.kind()) {
    case GroupKind::kFree:
      return static_cast<Length>(a.size());
    case GroupKind::kFreeAbelian: {
      Length total = 0;
      for (std::int64_t v : a) total += v < 0 ? -v : v;
      return total;
    }
    case GroupKind::kCyclic:
      return std::min(a[0], g.parameter() - a[0]);
  }
  return 0;
}

GroupElement make_free_word(const GroupDescriptor& g, std::string_view letters) {
  if (g.kind() != GroupKind::kFree) {
    throw GroupMismatch("word given for non-free group " + g.to_string());
  }
  std::vector<std::int64_t> word;
  for (char c : letters) {
    std::int64_t code;
    if (c >= 'a' && c <= 'z') {
      code = 2 * (c - 'a');
    } else if (c >= 'A' && c <= 'Z') {
      code = 2 * (c - 'A') + 1;
    } else {
      throw ParseError(std::string("invalid generator letter '") + c + "'");
    }
    if (code / 2 >= g.parameter()) {
      throw GroupMismatch(std::string("generator '") + c + "' not in " + g.to_string());
    }
    push_letter(word, code);
  }
  return GroupElement(std::move(word));
}

GroupElement make_vector(const GroupDescriptor& g, std::vector<std::int64_t> v) {
  if (g.kind() != GroupKind::kFreeAbelian ||
      static_cast<std::int64_t>(v.size()) != g.parameter()) {
    throw GroupMismatch("vector does not match " + g.to_string());
  }
  return GroupElement(std::move(v));
}

GroupElement make_residue(const GroupDescriptor& g, std::int64_t r) {
  if (g.kind() != GroupKind::kCyclic) {
    throw GroupMismatch("residue given for non-cyclic group " + g.to_string());
  }
  return GroupElement({mod(r, g.parameter())});
}

std::uint64_t ball_size(const GroupDescriptor& g, Length n) {
  if (n < 0) return 0;
  const auto un = static_cast<std::uint64_t>(n);
  switch (g.kind()) {
    case GroupKind::kFree: {
      const auto k = static_cast<std::uint64_t>(g.parameter());
      // 1 + sum_{j=1..n} 2k (2k-1)^{j-1}
      std::uint64_t total = 1;
      std::uint64_t sphere = 2 * k;
      for (std::uint64_t j = 1; j <= un; ++j) {
        total = saturating_add(total, sphere);
        if (total == kSaturated) break;
        sphere = saturating_mul(sphere, 2 * k - 1);
      }
      return total;
    }
    case GroupKind::kFreeAbelian: {
      // |{v in Z^d : |v|_1 = L}| = sum_j 2^j C(d, j) C(L-1, j-1).
      const std::int64_t d = g.parameter();
      long double total = 1.0L;
      for (Length L = 1; L <= n; ++L) {
        long double sphere = 0.0L;
        long double cdj = 1.0L;   // C(d, j)
        long double cl = 1.0L;    // C(L-1, j-1)
        long double pow2 = 1.0L;
        for (std::int64_t j = 1; j <= std::min<std::int64_t>(d, L); ++j) {
          cdj = cdj * static_cast<long double>(d - j + 1) / static_cast<long double>(j);
          if (j > 1) {
            cl = cl * static_cast<long double>(L - j + 1) / static_cast<long double>(j - 1);
          }
          pow2 *= 2.0L;
          sphere += pow2 * cdj * cl;
        }
        total += sphere;
        if (total >= 1.8e19L) return kSaturated;
      }
      return static_cast<std::uint64_t>(std::llround(total));
    }
    case GroupKind::kCyclic: {
      const auto m = static_cast<std::uint64_t>(g.parameter());
      if (un >= m) return m;
      return std::min<std::uint64_t>(m, 2 * un + 1);
    }
  }
  return 0;
}

std::vector<GroupElement> ball(const GroupDescriptor& g, Length n, std::uint64_t cap) {
  if (n < 0) throw std::invalid_argument("ball radius must be nonnegative");
  const std::uint64_t size = ball_size(g, n);
  if (size > cap) throw BallCapExceeded(size, cap);

  std::vector<GroupElement> out;
  out.reserve(size);
  switch (g.kind()) {
    case GroupKind::kFree: {
      // Extending each sphere in order by letters in code order yields the
      // next sphere already sorted.
      out.emplace_back();
      std::size_t sphere_begin = 0;
      const std::int64_t letters = 2 * g.parameter();
      for (Length L = 1; L <= n; ++L) {
        const std::size_t sphere_end = out.size();
        for (std::size_t i = sphere_begin; i < sphere_end; ++i) {
          for (std::int64_t c = 0; c < letters; ++c) {
            const auto& w = out[i].payload();
            if (!w.empty() && (w.back() ^ 1) == c) continue;
            std::vector<std::int64_t> next = w;
            next.push_back(c);
            out.emplace_back(std::move(next));
          }
        }
        sphere_begin = sphere_end;
      }
      return out;
    }
    case GroupKind::kFreeAbelian: {
      std::vector<std::int64_t> prefix;
      enumerate_vectors(g.parameter(), n, prefix, out);
      break;
    }
    case GroupKind::kCyclic:
      for (std::int64_t r = 0; r < g.parameter(); ++r) {
        GroupElement x({r});
        if (word_length(g, x) <= n) out.push_back(std::move(x));
      }
      break;
  }
  std::stable_sort(out.begin(), out.end(), [&g](const GroupElement& x, const GroupElement& y) {
    const Length lx = word_length(g, x);
    const Length ly = word_length(g, y);
    if (lx != ly) return lx < ly;
    return x < y;
  });
  return out;
}

std::string free_word_string(const GroupDescriptor& g, const GroupElement& x) {
  if (g.kind() != GroupKind::kFree) {
    throw GroupMismatch("not a free group: " + g.to_string());
  }
  validate(g, x);
  std::string s;
  s.reserve(x.payload().size());
  for (std::int64_t code : x.payload()) {
    const char base = (code & 1) ? 'A' : 'a';
    s.push_back(static_cast<char>(base + code / 2));
  }
  return s;
}

}  // namespace rdmap
