#include "cpoly/signature.hpp"

#include <algorithm>

namespace cpoly {

double ArcSignature::arc_total() const {
  double s = 0.0;
  for (const auto& b : buckets) s += b.sweep;
  return s;
}

ArcSignature signature(const ConvexChain& c, const Tolerance& t) {
  require_valid(c, t);
  ArcSignature sig;
  std::vector<RadiusBucket> raw;
  for (const auto& e : c.elements) {
    if (auto* s = std::get_if<Seg>(&e)) {
      sig.seg_total += s->len;
    } else if (auto* a = std::get_if<Arc>(&e)) {
      raw.push_back({a->radius, a->sweep});
    } else {
      sig.corners += std::get<Corner>(e).turn;
    }
  }
  std::sort(raw.begin(), raw.end(),
            [](const RadiusBucket& a, const RadiusBucket& b) { return a.radius < b.radius; });
  for (const auto& rb : raw) {
    if (!sig.buckets.empty() &&
        rb.radius - sig.buckets.back().radius <= t.eps_len) {
      // merge near radii, sweep-weighted
      auto& last = sig.buckets.back();
      last.radius = (last.radius * last.sweep + rb.radius * rb.sweep) /
                    (last.sweep + rb.sweep);
      last.sweep += rb.sweep;
    } else {
      sig.buckets.push_back(rb);
    }
  }
  return sig;
}

bool same_arc_buckets(const ArcSignature& a, const ArcSignature& b,
                      const Tolerance& t) {
  if (a.buckets.size() != b.buckets.size()) return false;
  double scale = 1.0;
  for (const auto& x : a.buckets) scale = std::max(scale, x.radius);
  for (std::size_t i = 0; i < a.buckets.size(); ++i) {
    if (std::abs(a.buckets[i].radius - b.buckets[i].radius) > t.eps_len * scale)
      return false;
    if (std::abs(a.buckets[i].sweep - b.buckets[i].sweep) > t.eps_ang)
      return false;
  }
  return true;
}

bool boundary_stably_equidecomposable(const ConvexChain& f,
                                      const ConvexChain& g,
                                      const Tolerance& t) {
  return same_arc_buckets(signature(f, t), signature(g, t), t);
}

double Profile::operator()(double r) const {
  double v = corners;
  for (const auto& s : steps) {
    if (s.radius <= r) v += s.sweep;
    else break;
  }
  return v;
}

double Profile::limit() const {
  double v = corners;
  for (const auto& s : steps) v += s.sweep;
  return v;
}

Profile profile(const ArcSignature& sig) {
  return {sig.corners, sig.buckets};
}

Profile profile(const ConvexChain& c, const Tolerance& t) {
  return profile(signature(c, t));
}

}  // namespace cpoly
