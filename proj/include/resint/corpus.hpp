#ifndef RESINT_CORPUS_HPP
#define RESINT_CORPUS_HPP

#include <string>
#include <vector>

#include "resint/groebner.hpp"

namespace resint {

/// A built-in pair (a, I) given as polynomial text.
struct CorpusEntry {
  std::string name;
  std::vector<std::string> variables;
  std::vector<std::string> I, a;
  bool height_two = false;   ///< I perfect of height 2: the EN pipeline applies
  std::string note;
};

const std::vector<CorpusEntry>& corpus();
/// Throws ArgumentError for an unknown name.
const CorpusEntry& corpus_entry(const std::string& name);

struct CorpusInstance {
  GradedRing ring;
  GradedIdeal I, a;
};
CorpusInstance instantiate(const CorpusEntry& e, const Field& k);

}  // namespace resint

#endif
