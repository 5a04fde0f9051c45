#include "cherednik/kernel.hpp"

#include <sstream>

namespace cherednik {

std::string format_y_word(const std::vector<std::pair<std::size_t, std::size_t>>& word) {
  if (word.empty()) return "1";
  std::ostringstream out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out << '*';
    out << "(y" << word[k].first << "-y" << word[k].second << ')';
  }
  return out.str();
}

std::string format_y_monomial(const std::vector<unsigned>& a, std::size_t n) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!first) out << '*';
    first = false;
    out << "(y" << i + 1 << "-y" << n << ')';
    if (a[i] > 1) out << '^' << a[i];
  }
  return first ? "1" : out.str();
}

}  // namespace cherednik
