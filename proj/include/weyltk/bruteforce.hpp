#pragma once

#include "weyltk/gf.hpp"
#include "weyltk/signed_perm.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace weyltk {

/// Exhaustive point counts of {(g, B) : g in the class, B a Borel with
/// (B, g B g^{-1}) in the given relative position} over small fields.

/// Special linear group of degree 2: the class is given by an explicit
/// member (entries as integers reduced into GF(q)); relative position is
/// "e" or "s".  q <= 49.
long long sl2_pair_count(int q, const std::vector<long>& rep_entries, const std::string& w);

/// Size of the conjugacy class of the representative in SL_2(F_q).
long long sl2_class_size(int q, const std::vector<long>& rep_entries);

/// Symplectic group of degree 4 over F_3 (or another q small enough):
/// the class is given by an explicit member (16 entries, row-major,
/// preserving the form with Gram antidiag(1,1,-1,-1)); the relative
/// position is a signed window of length 2.  Enumeration cost grows like
/// |Sp_4(q)| * flags, so only q = 3 is practical.
long long sp4_pair_count(int q, const std::vector<long>& rep_entries,
                         const std::vector<int>& window);

long long sp4_class_size(int q, const std::vector<long>& rep_entries);
long long sp4_group_order(int q);

} // namespace weyltk
