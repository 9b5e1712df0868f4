#include "frobenian/corpus.hpp"

namespace frobenian {

const std::vector<CorpusEntry>& recurrence_corpus() {
  static const std::vector<CorpusEntry> corpus = {
      {"fibonacci", "1,1;0,1"},
      {"lucas", "1,1;2,1"},
      {"pell", "2,1;0,1"},
      {"powers of 2", "2;1"},
      {"2^n - 2", "3,-2;-1,0"},
      {"n + 1", "2,-1;1,2"},
      {"(1 + n/2) 2^n", "4,-4;1,3"},
      {"zero", "1;0"},
      {"(1/6)^n", "1/6;1"},
      {"i^n + (-i)^n", "0,-1;2,0"},
      {"mixed denominators", "1/2,1/3;1,1"},
      {"perrin", "0,1,1;3,0,2"},
      {"cube roots of 2", "0,0,2;3,0,0"},
      {"cyclic cubic", "0,3,1;3,0,6"},
      {"1 + legendre(-1, n)", "1,-1,1;1,2,1"},
  };
  return corpus;
}

}  // namespace frobenian
