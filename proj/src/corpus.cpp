#include "relchar/corpus.hpp"

#include "relchar/error.hpp"

namespace relchar {

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = [] {
    std::vector<CorpusEntry> c;
    c.push_back({"trivial", "trivial", {}, 1, "trivial group"});
    for (long long n = 2; n <= 12; ++n)
      c.push_back({"c" + std::to_string(n), "cyclic", {n}, static_cast<std::size_t>(n), "cyclic group"});
    for (long long n : {3, 4, 5, 6, 8, 10, 12, 16})
      c.push_back({"d" + std::to_string(2 * n), "dihedral", {n}, static_cast<std::size_t>(2 * n),
                   "dihedral group of order " + std::to_string(2 * n)});
    for (long long n : {8, 16, 32})
      c.push_back({"q" + std::to_string(n), "quaternion", {n}, static_cast<std::size_t>(n), "generalized quaternion"});
    c.push_back({"ea4", "elementary_abelian", {2, 2}, 4, "Klein four-group"});
    c.push_back({"ea8", "elementary_abelian", {2, 3}, 8, "elementary abelian 2^3"});
    c.push_back({"ea16", "elementary_abelian", {2, 4}, 16, "elementary abelian 2^4"});
    c.push_back({"ea9", "elementary_abelian", {3, 2}, 9, "elementary abelian 3^2"});
    c.push_back({"ea27", "elementary_abelian", {3, 3}, 27, "elementary abelian 3^3"});
    c.push_back({"s3", "symmetric", {3}, 6, "symmetric group"});
    c.push_back({"s4", "symmetric", {4}, 24, "symmetric group"});
    c.push_back({"s5", "symmetric", {5}, 120, "symmetric group"});
    c.push_back({"s6", "symmetric", {6}, 720, "symmetric group"});
    c.push_back({"a4", "alternating", {4}, 12, "alternating group"});
    c.push_back({"a5", "alternating", {5}, 60, "alternating group"});
    c.push_back({"sl23", "sl23", {}, 24, "SL(2,3) with Q8 and its centre tagged"});
    c.push_back({"gl23", "gl23", {}, 48, "GL(2,3); cd(G|SL(2,3)) = {2,3,4}"});
    c.push_back({"heis27", "heisenberg27", {}, 27, "extraspecial group of order 27 and exponent 3"});
    c.push_back({"berger216", "berger216", {}, 216, "Q8 acting faithfully on the extraspecial group of order 27"});
    c.push_back({"f20", "agl1", {5}, 20, "Frobenius group AGL(1,5)"});
    c.push_back({"f42", "agl1", {7}, 42, "Frobenius group AGL(1,7)"});
    c.push_back({"f110", "agl1", {11}, 110, "Frobenius group AGL(1,11)"});
    c.push_back({"f156", "agl1", {13}, 156, "Frobenius group AGL(1,13)"});
    c.push_back({"s3xs3", "s3xs3", {}, 36, "direct product S3 x S3"});
    c.push_back({"q8xc3", "q8xc3", {}, 24, "direct product Q8 x C3"});
    c.push_back({"c3wrc2", "c3wrc2", {}, 18, "wreath product C3 wr C2"});
    return c;
  }();
  return corpus;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const auto& e : builtin_corpus())
    if (e.name == name) return e;
  throw InputError("unknown builtin group '" + name + "' (see the corpus subcommand)");
}

TaggedGroup build_entry(const CorpusEntry& e, std::size_t max_elements) {
  TaggedGroup tg = builtin_group(e.constructor, e.params, max_elements);
  if (tg.group->order() != e.expected_order)
    throw Defect("corpus entry " + e.name + " has order " + std::to_string(tg.group->order()) + ", expected " +
                 std::to_string(e.expected_order));
  return tg;
}

}  // namespace relchar
