#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vkg/free_group.hpp"
#include "vkg/presentation.hpp"

namespace vkg {

enum class VBKind { Classical, Virtual };

/// One letter of a virtual braid word: sigma_i^{+-1} or the involution rho_i.
struct VBLetter {
  VBKind kind = VBKind::Classical;
  int index = 1;  // 1 <= index <= strands-1
  int sign = 1;   // ignored for Virtual
};

struct VirtualBraidWord {
  int strands = 1;
  std::vector<VBLetter> letters;

  /// Grammar: whitespace-separated tokens `s<i>` (sigma_i), `S<i>`
  /// (sigma_i^-1), `v<i>` (rho_i).
  static VirtualBraidWord parse(int strands, std::string_view text);
  std::string str() const;
};

enum class WadaFamily { W1, W2, W3 };

/// Which representation acts. W1 carries the positive twist exponent r.
struct WadaKind {
  WadaFamily family = WadaFamily::W1;
  int r = 1;

  static WadaKind w1(int r);
  static WadaKind w2() { return {WadaFamily::W2, 1}; }
  static WadaKind w3() { return {WadaFamily::W3, 1}; }
  std::string str() const;
};

/// Alphabet of F_{n+1} = <y, x1, ..., xn>; y sits at index 0.
Alphabet braid_target_alphabet(int strands);

/// The automorphism of F_{n+1} induced by a single braid letter. Only x_i and
/// x_{i+1} move; y is always fixed. Negative signs use closed-form inverses.
Endomorphism generator_action(const WadaKind& kind, const VBLetter& letter, int strands);

/// Image of a braid word: product of the letter actions in word order.
Endomorphism represent(const WadaKind& kind, const VirtualBraidWord& braid);

/// <y, x1..xn | x_i = phi(x_i)>; freely trivial relators are dropped.
GroupPresentation link_group(const WadaKind& kind, const VirtualBraidWord& braid);

/// Built-in presentations: trefoil-g1(r), trefoil-g2, trefoil-g3,
/// kishino-g3, unknot-g3. For trefoil-g1 pass r via the second argument.
GroupPresentation fixture(std::string_view name, int r = 1);
std::vector<std::string> fixture_names();

}  // namespace vkg
