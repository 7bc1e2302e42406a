#include "support/reference_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace oracle {
namespace {

// --- plain-buffer helpers, deliberately re-derived from scratch ---

int px_at(const std::vector<std::uint8_t>& px, int w, int u, int v) {
  return px[static_cast<std::size_t>(u) * w + v];
}

void px_put(std::vector<std::uint8_t>& px, int w, int u, int v, int value) {
  px[static_cast<std::size_t>(u) * w + v] = static_cast<std::uint8_t>(value);
}

bool interior(int u, int v, int w, int h) {
  return u >= 1 && u <= h - 2 && v >= 1 && v <= w - 2;
}

int complexity(const std::vector<std::uint8_t>& px, int w, int u, int v) {
  const int a = px_at(px, w, u - 1, v);
  const int b = px_at(px, w, u, v - 1);
  const int c = px_at(px, w, u, v + 1);
  const int d = px_at(px, w, u + 1, v);
  return std::abs(a - d) + std::abs(b - c) + std::abs(a + c - b - d) +
         std::abs(c + d - a - b);
}

// Predicted value: floored adaptive weighted mean of the four cross
// neighbors, carried as exact integer fractions (the weight scale factor is
// kept literally instead of being cancelled).
int predicted(const std::vector<std::uint8_t>& px, int w, int u, int v) {
  const int up = px_at(px, w, u - 1, v);
  const int down = px_at(px, w, u + 1, v);
  const int left = px_at(px, w, u, v - 1);
  const int right = px_at(px, w, u, v + 1);
  const int mean = (up + down + left + right) / 4;
  const int e1 = mean - up;
  const int e2 = mean - down;
  const int e3 = mean - left;
  const int e4 = mean - right;
  const std::int64_t s = std::abs(e1) + std::abs(e2) + std::abs(e3) +
                         std::abs(e4);
  if (s == 0) {
    return (up + down + left + right) / 4;
  }
  const std::int64_t q1 = 1 + std::abs(e1);
  const std::int64_t q2 = 1 + std::abs(e2);
  const std::int64_t q3 = 1 + std::abs(e3);
  const std::int64_t q4 = 1 + std::abs(e4);
  const std::int64_t d = q1 * q2 * q3 * q4;
  // raw weight i is s / q_i == (s * d / q_i) / d
  const std::int64_t w1 = s * (d / q1);
  const std::int64_t w2 = s * (d / q2);
  const std::int64_t w3 = s * (d / q3);
  const std::int64_t w4 = s * (d / q4);
  const std::int64_t num = w1 * up + w2 * down + w3 * left + w4 * right;
  const std::int64_t den = w1 + w2 + w3 + w4;
  return static_cast<int>(num / den);
}

struct Ordered {
  std::vector<int> us;
  std::vector<int> vs;
};

// Interior coords of one parity (0 = even u+v), sorted by ascending
// fluctuation with raster-position tie break.
Ordered ordered_coords(const std::vector<std::uint8_t>& px, int w, int h,
                       int parity) {
  std::vector<int> us;
  std::vector<int> vs;
  for (int u = 1; u <= h - 2; ++u) {
    for (int v = 1; v <= w - 2; ++v) {
      if ((u + v) % 2 == parity) {
        us.push_back(u);
        vs.push_back(v);
      }
    }
  }

  std::vector<long> fluct(us.size());
  for (std::size_t i = 0; i < us.size(); ++i) {
    const int u = us[i];
    const int v = vs[i];
    const int own = complexity(px, w, u, v);
    int sum = 0;
    int n = 0;
    const int dus[4] = {-1, -1, 1, 1};
    const int dvs[4] = {-1, 1, -1, 1};
    for (int k = 0; k < 4; ++k) {
      const int du = u + dus[k];
      const int dv = v + dvs[k];
      if (interior(du, dv, w, h)) {
        sum += complexity(px, w, du, dv);
        ++n;
      }
    }
    fluct[i] = (n == 0) ? own : own + sum / n;
  }

  std::vector<std::size_t> idx(us.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (fluct[a] != fluct[b]) return fluct[a] < fluct[b];
    return a < b;
  });

  Ordered out;
  for (const std::size_t i : idx) {
    out.us.push_back(us[i]);
    out.vs.push_back(vs[i]);
  }
  return out;
}

struct Peaks {
  int pk1 = 0;
  int pk2 = 0;
  int z1 = 0;
  int z2 = 0;
};

// Double peaks: two highest-count bins (ties: smaller |bin|, then smaller
// bin); if not adjacent, the adjacent pair with the highest combined count
// (ties: nearer zero, then leftmost). Zeros: nearest empty bins outside the
// peak span.
std::optional<Peaks> select_peaks(const std::vector<std::int64_t>& counts) {
  auto count_of = [&](int bin) { return counts[bin + 255]; };

  int occupied = 0;
  for (int bin = -255; bin <= 255; ++bin) {
    if (count_of(bin) > 0) ++occupied;
  }
  if (occupied < 2) return std::nullopt;

  auto peak_pref = [&](int a, int b) {  // a preferable to b
    if (count_of(a) != count_of(b)) return count_of(a) > count_of(b);
    if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
    return a < b;
  };

  int top1 = -256;
  int top2 = -256;
  for (int bin = -255; bin <= 255; ++bin) {
    if (count_of(bin) == 0) continue;
    if (top1 == -256 || peak_pref(bin, top1)) {
      top2 = top1;
      top1 = bin;
    } else if (top2 == -256 || peak_pref(bin, top2)) {
      top2 = bin;
    }
  }

  Peaks out;
  if (std::abs(top1 - top2) == 1) {
    out.pk1 = top1;
    out.pk2 = top2;
  } else {
    int best = -256;
    for (int b = -255; b <= 254; ++b) {
      if (count_of(b) + count_of(b + 1) == 0) continue;
      if (best == -256) {
        best = b;
        continue;
      }
      const std::int64_t cb = count_of(b) + count_of(b + 1);
      const std::int64_t cbest = count_of(best) + count_of(best + 1);
      if (cb != cbest) {
        if (cb > cbest) best = b;
        continue;
      }
      const int db = std::min(std::abs(b), std::abs(b + 1));
      const int dbest = std::min(std::abs(best), std::abs(best + 1));
      if (db != dbest) {
        if (db < dbest) best = b;
        continue;
      }
      // leftmost wins; b ascends, keep best
    }
    if (peak_pref(best, best + 1)) {
      out.pk1 = best;
      out.pk2 = best + 1;
    } else {
      out.pk1 = best + 1;
      out.pk2 = best;
    }
  }

  const int lo = std::min(out.pk1, out.pk2);
  const int hi = std::max(out.pk1, out.pk2);
  out.z1 = -256;
  for (int bin = lo - 1; bin >= -255; --bin) {
    if (count_of(bin) == 0) {
      out.z1 = bin;
      break;
    }
  }
  out.z2 = 256;
  for (int bin = hi + 1; bin <= 255; ++bin) {
    if (count_of(bin) == 0) {
      out.z2 = bin;
      break;
    }
  }
  if (out.z1 == -256 || out.z2 == 256) return std::nullopt;
  return out;
}

// Embeds `take` bits of payload (starting at `from`) into one parity set.
// Returns false when the set cannot host them.
bool embed_one_set(std::vector<std::uint8_t>& px, int w, int h, int parity,
                   const std::vector<std::uint8_t>& payload, std::size_t from,
                   std::size_t take, SetInfo& info) {
  if (take == 0) {
    info = SetInfo{0, 1, -1, 2, 0, 0};
    return true;
  }

  const Ordered ord = ordered_coords(px, w, h, parity);

  std::vector<std::int64_t> counts(511, 0);
  for (std::size_t i = 0; i < ord.us.size(); ++i) {
    const int e = px_at(px, w, ord.us[i], ord.vs[i]) -
                  predicted(px, w, ord.us[i], ord.vs[i]);
    counts[e + 255] += 1;
  }
  const std::optional<Peaks> peaks = select_peaks(counts);
  if (!peaks) return false;
  const std::int64_t cap =
      counts[peaks->pk1 + 255] + counts[peaks->pk2 + 255];
  if (static_cast<std::int64_t>(take) > cap) return false;

  const int min_pk = std::min(peaks->pk1, peaks->pk2);
  const int max_pk = std::max(peaks->pk1, peaks->pk2);
  const int min_z = std::min(peaks->z1, peaks->z2);
  const int max_z = std::max(peaks->z1, peaks->z2);

  std::size_t used = 0;
  std::int64_t visited = 0;
  for (std::size_t i = 0; i < ord.us.size(); ++i) {
    if (used == take) break;
    ++visited;
    const int u = ord.us[i];
    const int v = ord.vs[i];
    const int pred = predicted(px, w, u, v);
    const int e = px_at(px, w, u, v) - pred;
    int marked = e;
    if (e == max_pk) {
      marked = e + payload[from + used];
      ++used;
    } else if (e == min_pk) {
      marked = e - payload[from + used];
      ++used;
    } else if (e > max_pk && e < max_z) {
      marked = e + 1;
    } else if (e < min_pk && e > min_z) {
      marked = e - 1;
    }
    px_put(px, w, u, v, pred + marked);
  }

  info.pk1 = peaks->pk1;
  info.pk2 = peaks->pk2;
  info.z1 = peaks->z1;
  info.z2 = peaks->z2;
  info.bits = static_cast<std::int64_t>(used);
  info.prefix = visited;
  return true;
}

void extract_one_set(std::vector<std::uint8_t>& px, int w, int h, int parity,
                     const SetInfo& info, std::vector<std::uint8_t>& bits) {
  if (info.bits == 0) return;
  const Ordered ord = ordered_coords(px, w, h, parity);
  const int min_pk = std::min(info.pk1, info.pk2);
  const int max_pk = std::max(info.pk1, info.pk2);
  const int min_z = std::min(info.z1, info.z2);
  const int max_z = std::max(info.z1, info.z2);

  std::int64_t got = 0;
  for (std::size_t i = 0; i < ord.us.size(); ++i) {
    if (got == info.bits) break;
    const int u = ord.us[i];
    const int v = ord.vs[i];
    const int pred = predicted(px, w, u, v);
    const int marked = px_at(px, w, u, v) - pred;
    int e = marked;
    if (marked == max_pk + 1) {
      e = marked - 1;
      bits.push_back(1);
      ++got;
    } else if (marked == min_pk - 1) {
      e = marked + 1;
      bits.push_back(1);
      ++got;
    } else if (marked == info.pk1 || marked == info.pk2) {
      bits.push_back(0);
      ++got;
    } else if (marked <= max_z && marked > max_pk) {
      e = marked - 1;
    } else if (marked >= min_z && marked < min_pk) {
      e = marked + 1;
    }
    px_put(px, w, u, v, pred + e);
  }
}

}  // namespace

std::optional<EmbedOutput> embed(const std::vector<std::uint8_t>& pixels,
                                 int width, int height,
                                 const std::vector<std::uint8_t>& payload) {
  EmbedOutput out;
  out.stego = pixels;

  // Preprocess: clamp saturated interior pixels, record the map.
  for (int u = 1; u <= height - 2; ++u) {
    for (int v = 1; v <= width - 2; ++v) {
      const int p = px_at(out.stego, width, u, v);
      if (p == 0) {
        px_put(out.stego, width, u, v, 1);
        out.locmap.push_back(1);
      } else if (p == 255) {
        px_put(out.stego, width, u, v, 254);
        out.locmap.push_back(1);
      } else if (p == 1 || p == 254) {
        out.locmap.push_back(0);
      }
    }
  }

  const std::size_t bits_a = (payload.size() + 1) / 2;
  const std::size_t bits_b = payload.size() - bits_a;
  if (!embed_one_set(out.stego, width, height, 0, payload, 0, bits_a,
                     out.set_a)) {
    return std::nullopt;
  }
  if (!embed_one_set(out.stego, width, height, 1, payload, bits_a, bits_b,
                     out.set_b)) {
    return std::nullopt;
  }
  return out;
}

ExtractOutput extract(const std::vector<std::uint8_t>& stego, int width,
                      int height, const SetInfo& set_a, const SetInfo& set_b,
                      const std::vector<std::uint8_t>& locmap) {
  ExtractOutput out;
  out.cover = stego;

  std::vector<std::uint8_t> bits_b;
  std::vector<std::uint8_t> bits_a;
  extract_one_set(out.cover, width, height, 1, set_b, bits_b);
  extract_one_set(out.cover, width, height, 0, set_a, bits_a);

  std::size_t next = 0;
  for (int u = 1; u <= height - 2; ++u) {
    for (int v = 1; v <= width - 2; ++v) {
      const int p = px_at(out.cover, width, u, v);
      if (p != 1 && p != 254) continue;
      if (locmap[next++]) {
        px_put(out.cover, width, u, v, p == 1 ? 0 : 255);
      }
    }
  }

  out.payload = bits_a;
  out.payload.insert(out.payload.end(), bits_b.begin(), bits_b.end());
  return out;
}

}  // namespace oracle
