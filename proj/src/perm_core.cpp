#include "starics/perm_core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace starics {

namespace {

constexpr std::string_view kDigits = "0123456789abcdefg";

char digit_for(int value) {
  if (value < 0 || value >= static_cast<int>(kDigits.size()))
    throw std::invalid_argument("symbol " + std::to_string(value) + " has no compact digit");
  return kDigits[static_cast<std::size_t>(value)];
}

int value_of_digit(char c) {
  const auto lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  const auto pos = kDigits.find(lower);
  if (pos == std::string_view::npos) throw std::invalid_argument(std::string("bad digit '") + c + "'");
  return static_cast<int>(pos);
}

}  // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = size();
  if (n < 2) throw std::invalid_argument("permutation needs n >= 2");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int symbol : entries_) {
    if (symbol < 1 || symbol > n || seen[static_cast<std::size_t>(symbol)])
      throw std::invalid_argument("not a permutation of {1.." + std::to_string(n) + "}");
    seen[static_cast<std::size_t>(symbol)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 2) throw std::invalid_argument("permutation needs n >= 2");
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

int Permutation::position_of(int symbol) const {
  const auto it = std::find(entries_.begin(), entries_.end(), symbol);
  if (it == entries_.end()) throw std::invalid_argument("symbol not in permutation");
  return static_cast<int>(it - entries_.begin()) + 1;
}

bool Permutation::is_identity() const {
  for (int p = 1; p <= size(); ++p)
    if (at(p) != p) return false;
  return true;
}

Permutation apply_star_generator(const Permutation& p, int i) {
  if (i < 2 || i > p.size())
    throw std::invalid_argument("generator index " + std::to_string(i) + " outside 2.." +
                                std::to_string(p.size()));
  Permutation q = p;
  std::swap(q.entries_[0], q.entries_[static_cast<std::size_t>(i - 1)]);
  return q;
}

int CycleStructure::moved_symbols() const {
  int total = 0;
  for (const auto& c : cycles) total += static_cast<int>(c.size());
  return total;
}

CycleStructure cycle_structure(const Permutation& p) {
  const int n = p.size();
  std::vector<bool> done(static_cast<std::size_t>(n) + 1, false);
  auto trace = [&](int start) {
    Cycle c;
    for (int s = start; !done[static_cast<std::size_t>(s)]; s = p.at(s)) {
      done[static_cast<std::size_t>(s)] = true;
      c.push_back(s);
    }
    return c;
  };

  CycleStructure cs;
  if (p.at(1) != 1) cs.cycles.push_back(trace(1));
  done[1] = true;
  for (int start = n; start >= 2; --start) {
    if (done[static_cast<std::size_t>(start)]) continue;
    if (p.at(start) == start) {
      done[static_cast<std::size_t>(start)] = true;
      continue;
    }
    // Scanning downward, the first unvisited symbol of a cycle is its maximum.
    cs.cycles.push_back(trace(start));
  }
  return cs;
}

int IcsKey::last_index() const {
  return (c1 - 1) + std::accumulate(others.begin(), others.end(), 0);
}

int IcsKey::support() const {
  return (c1 >= 2 ? c1 : 0) + std::accumulate(others.begin(), others.end(), 0);
}

IcsKey ics_key(const Permutation& p) {
  IcsKey key;
  for (const auto& c : cycle_structure(p).cycles) {
    if (c.front() == 1)
      key.c1 = static_cast<int>(c.size());
    else
      key.others.push_back(static_cast<int>(c.size()));
  }
  std::sort(key.others.begin(), key.others.end());
  return key;
}

int weight(const Permutation& p) {
  const auto cs = cycle_structure(p);
  const int base = cs.moved_symbols() + cs.count();
  return p.at(1) == 1 ? base : base - 2;
}

std::string format_permutation(const Permutation& p, PermFormat format) {
  if (format == PermFormat::automatic) format = p.size() <= 9 ? PermFormat::compact : PermFormat::decimal;
  std::string out;
  if (format == PermFormat::compact) {
    for (int s : p.entries()) out.push_back(digit_for(s));
    return out;
  }
  for (int pos = 1; pos <= p.size(); ++pos) {
    if (pos > 1) out.push_back(',');
    out += std::to_string(p.at(pos));
  }
  return out;
}

std::string format_prefix(const Permutation& p, int length) {
  const int shown = std::min(length, p.size());
  const bool compact = p.size() < static_cast<int>(kDigits.size());
  std::string out;
  for (int pos = 1; pos <= shown; ++pos) {
    if (compact) {
      out.push_back(digit_for(p.at(pos)));
    } else {
      if (pos > 1) out.push_back(',');
      out += std::to_string(p.at(pos));
    }
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  const bool separated = text.find_first_of(", \t") != std::string_view::npos;
  std::vector<int> entries;
  if (!separated) {
    for (char c : text) entries.push_back(value_of_digit(c));
    return Permutation(std::move(entries));
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto next = text.find_first_of(", \t", pos);
    const auto token = text.substr(pos, next == std::string_view::npos ? text.size() - pos : next - pos);
    if (!token.empty()) {
      int value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size())
        throw std::invalid_argument("bad permutation entry '" + std::string(token) + "'");
      entries.push_back(value);
    }
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return Permutation(std::move(entries));
}

std::string format_cycles(const CycleStructure& cs) {
  if (cs.cycles.empty()) return {};
  bool compact = true;
  for (const auto& c : cs.cycles)
    for (int s : c) compact = compact && s < static_cast<int>(kDigits.size());
  std::string out = "(";
  for (std::size_t k = 0; k < cs.cycles.size(); ++k) {
    if (k > 0) out.push_back('.');
    for (std::size_t e = 0; e < cs.cycles[k].size(); ++e) {
      if (compact) {
        out.push_back(digit_for(cs.cycles[k][e]));
      } else {
        if (e > 0) out.push_back(' ');
        out += std::to_string(cs.cycles[k][e]);
      }
    }
  }
  out.push_back(')');
  return out;
}

std::string format_ics(const IcsKey& key) {
  std::string out = "c1=" + std::to_string(key.c1) + " {";
  for (std::size_t k = 0; k < key.others.size(); ++k) {
    if (k > 0) out.push_back(',');
    out += std::to_string(key.others[k]);
  }
  out.push_back('}');
  return out;
}

}  // namespace starics
