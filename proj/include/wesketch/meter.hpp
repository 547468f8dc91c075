// Copyright 2026 The Wesketch Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace wesketch {

// Cost model meter. A stream update counts as one state change when at
// least one persistent-state mutation was marked during its processing,
// no matter how many mutations occurred. Space is accounted in words: one
// word per stored counter, reservoir slot, or sketch cell.
class StateMeter {
 public:
  // Called by components on every persistent-state mutation.
  void mark_dirty() { dirty_ = true; }

  // Called once at the end of each stream update by the structure that
  // owns the update loop. Folds the dirty flag into the running total.
  void commit_update() {
    if (dirty_) {
      ++total_state_changes_;
      dirty_ = false;
    }
  }

  // Word accounting; components register allocations and releases.
  void add_words(std::uint64_t w) {
    current_words_ += w;
    if (current_words_ > peak_words_) peak_words_ = current_words_;
  }
  void release_words(std::uint64_t w) {
    current_words_ = (w > current_words_) ? 0 : current_words_ - w;
  }

  std::uint64_t total_state_changes() const { return total_state_changes_; }
  std::uint64_t peak_words() const { return peak_words_; }
  std::uint64_t current_words() const { return current_words_; }
  bool dirty() const { return dirty_; }

  void reset() {
    total_state_changes_ = 0;
    peak_words_ = 0;
    current_words_ = 0;
    dirty_ = false;
  }

 private:
  std::uint64_t total_state_changes_ = 0;
  std::uint64_t peak_words_ = 0;
  std::uint64_t current_words_ = 0;
  bool dirty_ = false;
};

}  // namespace wesketch
