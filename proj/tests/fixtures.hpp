#pragma once

#include "cm/knowledge_base.hpp"

#include <string>

namespace fixtures {

inline const char *kExample2 = "a & d\n!a\n!b\nb | !c\n!c & d\n!c | e\nc\n!e\ne & d\n";
inline const char *kExample6 = "a\n!a\na | b\n!b\nb\nc\n!c & d\n!d & e & f\n!e\n!f\n";

inline cm::KnowledgeBase example2() { return cm::parse_kb(kExample2); }
inline cm::KnowledgeBase example6() { return cm::parse_kb(kExample6); }

// a1, !a1, a1 | !a2, a2, !a2, ..., an, !an
inline cm::KnowledgeBase chain(int n) {
  std::string text;
  for (int i = 1; i <= n; ++i) {
    const std::string a = "a" + std::to_string(i);
    if (i > 1) text += "a" + std::to_string(i - 1) + " | !" + a + "\n";
    text += a + "\n!" + a + "\n";
  }
  return cm::parse_kb(text);
}

} // namespace fixtures
