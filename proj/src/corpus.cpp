#include "resint/corpus.hpp"

#include "resint/error.hpp"

namespace resint {

namespace {

const std::vector<std::string> xyzw = {"x", "y", "z", "w"};

// Height-2 entries were found by random sparse search for a, then kept once
// J was checked to be a residual intersection of the wanted shape.
std::vector<CorpusEntry> make() {
  std::vector<CorpusEntry> c;
  c.push_back({"link_2x3", {"x", "y", "z"},
               {"x*z-y^2", "x^2-y*z", "x*y-z^2"},
               {"x*z-y^2", "x^2-y*z"},
               true, "2x3 minors of [[x,y,z],[y,z,x]], linked by two minors"});
  c.push_back({"generic_2x3_s3", {"a", "b", "c", "d", "e", "f"},
               {"a*e-b*d", "a*f-c*d", "b*f-c*e"},
               {"a*e-b*d", "a*f-c*d+b*f-c*e", "b*c*f-c^2*e+a*e*f-b*d*f"},
               false, "generic 2x3 minors, geometric with s = g + 1"});
  c.push_back({"cubic_s2", xyzw,
               {"-z^2+y*w", "-y*z+x*w", "-y^2+x*z"},
               {"z^2-y*w", "y*z-x*w"},
               true, "twisted cubic, r = 3, s = 2"});
  c.push_back({"cubic_s3", xyzw,
               {"-z^2+y*w", "-y*z+x*w", "-y^2+x*z"},
               {"y^2-x*z-z^2+y*w", "y^2-x*z-y*z-z^2+x*w+y*w", "x*y*z-x^2*w-z^2*w+y*w^2"},
               true, "twisted cubic, r = 3, s = 3, geometric"});
  c.push_back({"mixed_s2_eq", xyzw,
               {"-z^3+y*w^2", "-y*z^2+x*w^2", "-y^2+x*z"},
               {"-y^2+x*z", "-y^2*z+x*z^2+z^3-y*w^2"},
               true, "degrees (3,3,2), s - k = u"});
  c.push_back({"mixed_s2", xyzw,
               {"-z^3+y*w^2", "-y*z^2+x*w^2", "-y^2+x*z"},
               {"y*z^2+z^3-x*w^2-y*w^2", "x*y^2-x^2*z-z^3+y*w^2"},
               true, "degrees (3,3,2), s - k < u"});
  c.push_back({"four_s2", xyzw,
               {"z^3-2*x*z*w+y*w^2", "x*z^2-x^2*w-y*z*w", "x^2*z-y*z^2-x*y*w", "x^3-2*x*y*z+y^2*w"},
               {"-x^3+x^2*z+2*x*y*z-y*z^2-z^3-x*y*w-y^2*w+2*x*z*w-y*w^2",
                "-x^3-x^2*z+2*x*y*z+x*z^2+y*z^2+z^3-x^2*w+x*y*w-y^2*w-2*x*z*w-y*z*w+y*w^2"},
               true, "four cubics, r = 4, s = 2"});
  c.push_back({"m43_s3_eq", xyzw,
               {"-x*y^3+x^3*z+y^2*z*w-x^2*w^2-z^2*w^2+y*w^3",
                "x^3*y-x^2*y^2+y^2*z^2-x^2*z*w-y*z*w^2+x*w^3",
                "y^3*z-x^2*z^2+x^2*y*w-x*y^2*w-y^2*w^2+x*z*w^2",
                "-x*y^2+x^2*z-z^3+2*y*z*w-x*w^2"},
               {"-x*y^2+x^2*z-z^3+2*y*z*w-x*w^2",
                "x*y^3-x^3*z+y^3*z-x^2*z^2+x^2*y*w-2*x*y^2*w+x^2*z*w-y^2*z*w-z^3*w+x^2*w^2-y^2*w^2+x*z*w^2+2*y*z*w^2+z^2*w^2-x*w^3-y*w^3",
                "-x^3*y+x^2*y^2-x*y^3+x^3*z+y^3*z-x^2*z^2-y^2*z^2+x^2*y*w-x*y^2*w+x^2*z*w+y^2*z*w-x^2*w^2-y^2*w^2+x*z*w^2+y*z*w^2-z^2*w^2-x*w^3+y*w^3"},
               true, "degrees (4,4,4,3), s = 3, s - k = u, not geometric"});
  c.push_back({"m43_s3", xyzw,
               {"-x*y^3+x^3*z+y^2*z*w-x^2*w^2-z^2*w^2+y*w^3",
                "x^3*y-x^2*y^2+y^2*z^2-x^2*z*w-y*z*w^2+x*w^3",
                "y^3*z-x^2*z^2+x^2*y*w-x*y^2*w-y^2*w^2+x*z*w^2",
                "-x*y^2+x^2*z-z^3+2*y*z*w-x*w^2"},
               {"-x^3*y+x^2*y^2-x^3*z+x^2*y*z-y^3*z+x^2*z^2-y^2*z^2-y*z^3-x^2*y*w+x*y^2*w+x^2*z*w+y^2*z*w+x^2*w^2-x*y*w^2+y^2*w^2-x*z*w^2+y*z*w^2+z^2*w^2-x*w^3-y*w^3",
                "-x^3*y+x^2*y^2+y^3*z-x^2*z^2-y^2*z^2+x^2*y*w-x*y^2*w+x^2*z*w-y^2*w^2+x*z*w^2+y*z*w^2-x*w^3",
                "-x^3*y+x^2*y^2+x*y^3-x^3*z+x*y^2*z-y^3*z-y^2*z^2+z^4-x^2*y*w+x*y^2*w+x^2*z*w-y^2*z*w-2*y*z^2*w+x^2*w^2+y^2*w^2+y*z*w^2+z^2*w^2-x*w^3-y*w^3"},
               true, "degrees (4,4,4,3), s = 3, k = 3"});
  c.push_back({"five_s2", xyzw,
               {"y^4-3*x*y^2*z+x^2*z^2+2*x^2*y*w", "x*y^3-2*x^2*y*z+x^3*w", "x^2*y^2-x^3*z", "x^3*y", "x^4"},
               {"x^3*y-x^2*y^2+x*y^3+x^3*z-2*x^2*y*z+x^3*w", "x^3*y+y^4-3*x*y^2*z+x^2*z^2+2*x^2*y*w"},
               true, "five quartics, r = 5, s = 2"});
  c.push_back({"five_s3", xyzw,
               {"-x^3*y^2+2*x*y^3*z+z^5-y^4*w-2*x*z^3*w-x*z^2*w^2+y*z^2*w^2+x^2*w^3+y*z*w^3",
                "-x^2*y^3+y^4*z+x*z^4-x^2*z^2*w-y*z^3*w-x^2*z*w^2+2*x*y*w^3",
                "-x*y^4+x^2*z^3-y*z^4-x*y*z^2*w-x^3*w^2+x*y*z*w^2",
                "-y^5+x^3*z^2-2*x*y*z^3+y^2*z^2*w-x^2*y*w^2+y^2*z*w^2",
                "x^4-3*x^2*y*z+y^2*z^2+2*x*y^2*w"},
               {"-x^2*y^3+x*y^4-y^5-x^4*z+y^4*z+x^3*z^2+3*x^2*y*z^2-x^2*z^3-2*x*y*z^3-y^2*z^3+x*z^4+y*z^4-2*x*y^2*z*w-x^2*z^2*w+x*y*z^2*w+y^2*z^2*w-y*z^3*w+x^3*w^2-x^2*y*w^2-x^2*z*w^2-x*y*z*w^2+y^2*z*w^2+2*x*y*w^3",
                "x^3*y^2-x^2*y^3-x*y^4-y^5+x^4*z-2*x*y^3*z+y^4*z+x^3*z^2-3*x^2*y*z^2+x^2*z^3-2*x*y*z^3+y^2*z^3+x*z^4-y*z^4-z^5+y^4*w+2*x*y^2*z*w-x^2*z^2*w-x*y*z^2*w+y^2*z^2*w+2*x*z^3*w-y*z^3*w-x^3*w^2-x^2*y*w^2-x^2*z*w^2+x*y*z*w^2+y^2*z*w^2+x*z^2*w^2-y*z^2*w^2-x^2*w^3+2*x*y*w^3-y*z*w^3",
                "-x^5+x^3*y^2+x^2*y^3-x*y^4+3*x^3*y*z-2*x*y^3*z-y^4*z-x*y^2*z^2+x^2*z^3-x*z^4-y*z^4-z^5-2*x^2*y^2*w+y^4*w+x^2*z^2*w-x*y*z^2*w+2*x*z^3*w+y*z^3*w-x^3*w^2+x^2*z*w^2+x*y*z*w^2+x*z^2*w^2-y*z^2*w^2-x^2*w^3-2*x*y*w^3-y*z*w^3"},
               true, "degrees (5,5,5,5,4), r = 5, s = 3"});
  return c;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = make();
  return c;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return e;
  throw ArgumentError("no corpus entry named '" + name + "'");
}

CorpusInstance instantiate(const CorpusEntry& e, const Field& k) {
  auto R = GradedRing::create(k, e.variables);
  auto gens = [&](const std::vector<std::string>& xs) {
    std::vector<Polynomial> out;
    for (const auto& s : xs) out.push_back(R.parse(s));
    return GradedIdeal(R, out);
  };
  return {R, gens(e.I), gens(e.a)};
}

}  // namespace resint
