#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gauss_code.hpp"

namespace vyb {

struct Site {
  size_t component = 0;
  size_t offset = 0;  // insertion point, 0..len
  bool operator==(const Site&) const = default;
};

enum class KinkOrder { OU, UO };
enum class VKinkOrder { RL, LR };
enum class PokeVariant { Parallel, Antiparallel };

// Replayable description of one rewrite; enough data to invert it exactly.
struct MoveRecord {
  std::string kind;  // kink | virtual_kink | virtual_poke | detour
  std::string params_json;
  std::vector<int> new_labels;
  std::string to_json() const;
};

struct MoveResult {
  GaussCode code;
  MoveRecord record;
};

// Reidemeister I: inserts the adjacent pair O k / U k (or U k / O k) with the
// given sign and a fresh classical label.
MoveResult insert_kink(const GaussCode& code, Site site, int sign, KinkOrder order);

// Virtual I: adjacent R k / L k (or L k / R k) with a fresh virtual label.
MoveResult insert_virtual_kink(const GaussCode& code, Site site, VKinkOrder order);

// Virtual II at arbitrary sites: inserts (R k, L l) at siteA and the
// complementary pair at siteB, ordered per the variant. siteA == siteB is
// rejected. The colorings extend uniquely across the new crossings and the
// two virtual weight contributions cancel, for every biquandle and cocycle.
MoveResult insert_virtual_poke(const GaussCode& code, Site siteA, Site siteB, PokeVariant variant);

struct DetourSegment {
  size_t component = 0;
  size_t start = 0;
  size_t length = 0;  // may be 0 (pure insertion along the strand)
};

struct DetourTarget {
  Site target;                   // position in the code after deletion
  bool segment_side_right = true;  // R on the segment side, L at the target
};

// Deletes the segment's virtual crossings (both passages of each, partners
// included wherever they sit) and inserts one fresh crossing per plan entry:
// the segment-side passages in plan order at the segment position, the
// complementary passage at each target. Rejects segments containing classical
// passages. Kink- and poke-shaped plans are always safe; the geometric
// validity of an arbitrary plan as a detour is the caller's responsibility.
MoveResult detour_reroute(const GaussCode& code, DetourSegment segment,
                          const std::vector<DetourTarget>& plan);

// Exact inverse of a recorded move; restores the pre-move code.
GaussCode apply_inverse(const GaussCode& code, const MoveRecord& record);

struct ShuffleResult {
  GaussCode code;
  std::vector<MoveRecord> records;  // moves still in effect, in order applied
};

// Deterministic seeded sequence of the rewrites above and their inverses.
// Detours are applied only to segments created by earlier moves in the
// sequence, so every step is invariance-preserving by construction.
ShuffleResult random_equivalent(const GaussCode& code, uint64_t seed, int n_moves);

}  // namespace vyb
