#pragma once

#include <set>
#include <string>

namespace seqcode {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Deterministic fresh-name supply. Seed it with every name already in
// play, then ask for variations of a hint: "y", "y1", "y2", ...
class FreshNames {
public:
  FreshNames() = default;
  explicit FreshNames(std::set<std::string> used) : used_(std::move(used)) {}

  void reserve(const std::string& name) { used_.insert(name); }
  bool is_used(const std::string& name) const { return used_.count(name) > 0; }

  std::string fresh(const std::string& hint) {
    if (!is_used(hint)) {
      used_.insert(hint);
      return hint;
    }
    for (unsigned long i = 1;; ++i) {
      std::string cand = hint + std::to_string(i);
      if (!is_used(cand)) {
        used_.insert(cand);
        return cand;
      }
    }
  }

private:
  std::set<std::string> used_;
};

}  // namespace seqcode
