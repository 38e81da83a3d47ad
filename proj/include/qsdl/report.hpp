#pragma once
// Structured record of one elimination step.

#include "qsdl/core.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qsdl {

struct Rejection {
  std::string item;
  std::string reason;
};

struct EliminationReport {
  std::string label;
  std::vector<std::pair<std::string, std::string>> bounds;  // name, value
  std::vector<std::string> items;                           // everything examined
  std::vector<Candidate> survivors;
  std::vector<Rejection> rejected;

  void bound(std::string name, std::string value) {
    bounds.emplace_back(std::move(name), std::move(value));
  }
  void reject(std::string item, std::string reason) {
    rejected.push_back({std::move(item), std::move(reason)});
  }
  // Plain-text rendering used by the CLI (one fact per line).
  std::string text() const;
};

}  // namespace qsdl
