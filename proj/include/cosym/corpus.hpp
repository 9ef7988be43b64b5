#pragma once

#include <string>
#include <vector>

#include "cosym/frame_file.hpp"

namespace cosym {

struct CorpusEntry {
  std::string name;
  std::string description;
};

/// Built-in examples, in canonical order.
std::vector<CorpusEntry> corpus_list();

/// Returns the built-in example named `spec`. Parameterized entries accept a
/// colon suffix: heisenberg:<gamma> (default 1) and dim5_random:<seed>
/// (default 1). Throws Precondition for unknown names.
FrameFile corpus_frame(const std::string& spec);

bool is_corpus_name(const std::string& spec);

}  // namespace cosym
