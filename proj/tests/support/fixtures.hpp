#pragma once

#include <string>

#include "gog/bench.hpp"
#include "gog/config.hpp"

namespace fixtures {

// Z * Z: two infinite cyclic factors joined by one tree edge pair.
inline const char* kZxZ = R"(
[vertices]
u
v
base = u

[edges]
t : reverse = t', from = u, to = v, in_tree = yes
t' : reverse = t, from = v, to = u, in_tree = yes

[oracles]
u = free(a)
v = free(b)
)";

// F2 * F2.
inline const char* kF2xF2 = R"(
[vertices]
u
v
base = u

[edges]
t : reverse = t', from = u, to = v, in_tree = yes
t' : reverse = t, from = v, to = u, in_tree = yes

[oracles]
u = free(a, c)
v = free(b, d)
)";

// Loop HNN over F2 x Z: one vertex, one loop edge pair, edge groups
// <x> x <z> and <y> x <z>, stable letter conjugation x -> z -> y.
inline const char* kHnnF2xZ = R"(
[vertices]
mu

[edges]
t : reverse = t', from = mu, to = mu, in_tree = no
t' : reverse = t, from = mu, to = mu, in_tree = no

[oracles]
mu = central_extension(free(x, y), z)

[admissible]
K = 2
t.c = z
t.o = x
t'.c = z
t'.o = y
)";

inline gog::GroupSchema zxz() { return gog::parse_schema(kZxZ); }
inline gog::GroupSchema f2xf2() { return gog::parse_schema(kF2xF2); }
inline gog::GroupSchema hnn() { return gog::parse_schema(kHnnF2xZ); }

inline gog::Word parse(const gog::GroupSchema& s, const std::string& text) {
  return s.alphabet().parse_word(text);
}

}  // namespace fixtures
