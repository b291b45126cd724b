// Copyright 2026 The Authors.
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

#ifndef SUBRANK_ELEMENT_SET_H_
#define SUBRANK_ELEMENT_SET_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace subrank {

// Ground elements are 0-based internally. Files and CLI output use 1-based
// labels so that element 0 prints as "1".
using Element = int;

// Fixed-universe subset of {0, ..., universe - 1} stored as a bitset.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  ElementSet(int universe, std::initializer_list<Element> elements)
      : ElementSet(universe) {
    for (Element e : elements) Insert(e);
  }

  static ElementSet Full(int universe) {
    ElementSet s(universe);
    for (Element e = 0; e < universe; ++e) s.Insert(e);
    return s;
  }

  int universe() const { return universe_; }
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool Contains(Element e) const {
    return (words_[e >> 6] >> (e & 63)) & 1u;
  }
  void Insert(Element e) {
    const uint64_t bit = uint64_t{1} << (e & 63);
    if (!(words_[e >> 6] & bit)) {
      words_[e >> 6] |= bit;
      ++size_;
    }
  }
  void Erase(Element e) {
    const uint64_t bit = uint64_t{1} << (e & 63);
    if (words_[e >> 6] & bit) {
      words_[e >> 6] &= ~bit;
      --size_;
    }
  }

  bool IsSubsetOf(const ElementSet& other) const {
    for (size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & ~other.words_[w]) return false;
    }
    return true;
  }

  std::vector<Element> ToVector() const {
    std::vector<Element> out;
    out.reserve(size_);
    for (size_t w = 0; w < words_.size(); ++w) {
      uint64_t bits = words_[w];
      while (bits) {
        out.push_back(static_cast<Element>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  bool operator==(const ElementSet& other) const = default;

 private:
  int universe_ = 0;
  int size_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace subrank

#endif  // SUBRANK_ELEMENT_SET_H_
