#include "qv/antichain.hpp"

#include <algorithm>

namespace qv {

static void check_ground(int ground) {
  require(ground >= 0 && ground <= 20, ErrorKind::TooLarge, "ground set beyond 20 elements");
}

Antichain normalize_antichain(int ground, std::vector<SetMask> sets) {
  check_ground(ground);
  SetMask all = ground >= 32 ? ~0u : (SetMask(1) << ground) - 1;
  for (SetMask s : sets)
    require((s & ~all) == 0, ErrorKind::InvalidParams, "set leaves the ground set");
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  Antichain a;
  a.ground = ground;
  for (SetMask s : sets) {
    bool dominated = false;
    for (SetMask t : sets)
      if (t != s && (t & s) == t) {
        dominated = true;
        break;
      }
    if (!dominated) a.minimal.push_back(s);
  }
  return a;
}

bool family_contains(const Antichain& a, SetMask set) {
  for (SetMask m : a.minimal)
    if ((set & m) == m) return true;
  return false;
}

std::vector<SetMask> upward_closure(const Antichain& a) {
  check_ground(a.ground);
  std::vector<SetMask> out;
  SetMask end = SetMask(1) << a.ground;
  for (SetMask s = 0; s < end; ++s)
    if (family_contains(a, s)) out.push_back(s);
  return out;
}

Antichain blocker(const Antichain& a) {
  check_ground(a.ground);
  // Meeting every member of the closure is the same as meeting every minimal
  // member, so scan the box once and minimalize.
  std::vector<SetMask> hitting;
  SetMask end = SetMask(1) << a.ground;
  for (SetMask s = 0; s < end; ++s) {
    bool hits_all = true;
    for (SetMask m : a.minimal)
      if ((s & m) == 0) {
        hits_all = false;
        break;
      }
    if (hits_all) hitting.push_back(s);
  }
  return normalize_antichain(a.ground, std::move(hitting));
}

Antichain blocker_by_complements(const Antichain& a) {
  check_ground(a.ground);
  SetMask all = (SetMask(1) << a.ground) - 1;
  std::vector<SetMask> out;
  for (SetMask s = 0; s <= all && a.ground > 0; ++s)
    if (!family_contains(a, s)) out.push_back(all & ~s);
  if (a.ground == 0 && !family_contains(a, 0)) out.push_back(0);
  return normalize_antichain(a.ground, std::move(out));
}

namespace {

std::int64_t box_size(const std::vector<std::int64_t>& cap) {
  std::int64_t total = 1;
  for (std::int64_t c : cap) {
    require(c >= 0, ErrorKind::InvalidParams, "negative cap");
    require(total <= (1 << 20) / std::max<std::int64_t>(c + 1, 1), ErrorKind::TooLarge,
            "vector box beyond 2^20 points");
    total *= c + 1;
  }
  return total;
}

std::vector<std::int64_t> unrank(const std::vector<std::int64_t>& cap, std::int64_t r) {
  std::vector<std::int64_t> v(cap.size());
  for (size_t i = cap.size(); i-- > 0;) {
    v[i] = r % (cap[i] + 1);
    r /= cap[i] + 1;
  }
  return v;
}

}  // namespace

VectorFamily make_vector_family(std::vector<std::int64_t> cap,
                                std::vector<std::vector<std::int64_t>> members) {
  box_size(cap);
  for (const auto& v : members) {
    require(v.size() == cap.size(), ErrorKind::InvalidParams, "member of wrong dimension");
    bool in_box = true;
    for (size_t i = 0; i < v.size(); ++i) in_box = in_box && v[i] >= 0 && v[i] <= cap[i];
    require(in_box, ErrorKind::InvalidParams, "member outside the box");
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  VectorFamily f{std::move(cap), std::move(members)};
  for (const auto& v : f.members)
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] < f.cap[i]) {
        auto up = v;
        ++up[i];
        require(vector_family_contains(f, up), ErrorKind::NotUpwardClosed,
                "missing a coordinate bump of a member");
      }
  return f;
}

bool vector_family_contains(const VectorFamily& f, const std::vector<std::int64_t>& v) {
  return std::binary_search(f.members.begin(), f.members.end(), v);
}

VectorFamily vector_blocker(const VectorFamily& f) {
  std::int64_t total = box_size(f.cap);
  VectorFamily out;
  out.cap = f.cap;
  for (std::int64_t r = 0; r < total; ++r) {
    std::vector<std::int64_t> w = unrank(f.cap, r);
    std::vector<std::int64_t> mirrored(w.size());
    for (size_t i = 0; i < w.size(); ++i) mirrored[i] = f.cap[i] - w[i];
    if (!vector_family_contains(f, mirrored)) out.members.push_back(std::move(w));
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

}  // namespace qv
