#pragma once

namespace binrej {

// 128-bit integers for one-off precomputation and overflow-free comparisons.
__extension__ typedef __int128 int128;
__extension__ typedef unsigned __int128 uint128;

}  // namespace binrej
