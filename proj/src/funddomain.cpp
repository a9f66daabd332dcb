#include <gamma0/funddomain.hpp>

#include <gamma0/errors.hpp>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace gamma0 {

namespace {

bool is_prime_long(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

const PrimeDomainData& build_domain(long p) {
  static std::mutex mu;
  static std::map<long, std::unique_ptr<PrimeDomainData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(p);
  if (it != cache.end()) return *it->second;

  if (p < 5 || !is_prime_long(p))
    throw std::invalid_argument("domain level must be a prime >= 5");

  auto d = std::make_unique<PrimeDomainData>();
  d->p = p;
  const long half = (p - 1) / 2;
  for (long k = -half; k <= half; ++k)
    if (k != 0) d->S.push_back(k);

  for (long k : d->S) {
    auto [kinv, kred] = sp_inverse(p, k);
    d->inv[k] = kinv;
    Mat2 g{Int(k), Int((k * kinv - 1) / p), Int(p), Int(kinv)};
    d->gamma[k] = g;
    if (((k * k + 1) % p) == 0) d->E2.push_back(k);
    if (((k * k - k + 1) % p + p) % p == 0) d->E3.push_back(k);
    d->k2[k] = std::min(k, -kinv);
  }

  // 3-cycles of k -> <1 - k^{-1}> on S_p - {1}.
  for (long k : d->S) {
    if (k == 1) continue;
    long f1 = sp_reduce(p, 1 - d->inv[k]);
    long f2 = sp_reduce(p, 1 - d->inv[f1]);
    d->k3[k] = std::min({k, f1, f2});
  }

  auto& ref = *d;
  cache[p] = std::move(d);
  return ref;
}

Mat2 gamma_k(long p, long k) {
  if (k % p == 0) throw std::invalid_argument("gamma_k needs k nonzero mod p");
  const PrimeDomainData& dom = build_domain(p);
  long ks = sp_reduce(p, k);
  return dom.gamma.at(ks);
}

namespace {

// p^2 |tau - k/p|^2 - 1, cleared to a rational; zero exactly on arc(k),
// negative strictly inside the disk.
Rat arc_value(const CmPoint& tau, long p, long k) {
  Rat m2 = tau.re * tau.re + tau.im2;
  return Rat(p * p) * m2 - Rat(2 * p * k) * tau.re + Rat(k * k - 1);
}

bool in_region_small_level(const CmPoint& tau, long N) {
  Rat half(1, 2);
  if (tau.re > half || tau.re < -half) return false;
  // |tau -+ 1/N| >= 1/N cleared: N(re^2 + im2) -+ 2 re >= 0.
  Rat m2 = tau.re * tau.re + tau.im2;
  Rat plus = Rat(N) * m2 + 2 * tau.re;   // distance to -1/N
  Rat minus = Rat(N) * m2 - 2 * tau.re;  // distance to +1/N
  if (plus < 0 || minus < 0) return false;
  bool boundary = (tau.re == half) || (tau.re == -half) || plus == 0 || minus == 0;
  if (boundary && tau.re > 0) return false;
  return true;
}

bool in_region_prime(const CmPoint& tau, long p) {
  const PrimeDomainData& dom = build_domain(p);
  Rat half(1, 2);

  // (1) strip, with (3) keeping only the left edge.
  if (tau.re > half || tau.re < -half) return false;
  if (tau.re == half) return false;

  // (2) outside every disk.
  for (long k : dom.S)
    if (arc_value(tau, p, k) < 0) return false;

  // (4), (5), (6): arc tie-breaks.
  for (long k : dom.S) {
    if (arc_value(tau, p, k) != 0) continue;
    if (k == 1 || k == -1) {
      if (tau.re > 0) return false;
    } else if (std::find(dom.E2.begin(), dom.E2.end(), k) != dom.E2.end()) {
      if (tau.re > Rat(k, p)) return false;
    } else {
      if (tau.re > Rat(2 * dom.k2.at(k) + 1, 2 * p)) return false;
    }
  }

  // (7) corner exclusion: tau = (2k - 1)/2p + i sqrt(3)/2p survives only
  // for k = 1, k elliptic of order 3, or k minimal in its 3-cycle.
  if (tau.im2 == Rat(3, 4 * p * p)) {
    Rat kk = (tau.re * Rat(2 * p) + 1) / 2;
    if (kk.get_den() == 1) {
      long k0 = static_cast<long>(kk.get_num().get_si());
      if (k0 != 0 && std::abs(k0) <= (p - 1) / 2 && k0 != 1 &&
          std::find(dom.E3.begin(), dom.E3.end(), k0) == dom.E3.end() &&
          dom.k3.at(k0) != k0)
        return false;
    }
  }
  return true;
}

}  // namespace

bool in_fundamental_region(const CmPoint& tau, long N) {
  require_level(N);
  if (tau.im2 <= 0) throw std::invalid_argument("point must lie in the upper half plane");
  if (N <= 4) return in_region_small_level(tau, N);
  return in_region_prime(tau, N);
}

EllipticPoints elliptic_points(long p) {
  const PrimeDomainData& dom = build_domain(p);
  EllipticPoints out;
  for (long k : dom.E2) out.order2.push_back({Rat(k, p), Rat(1, p * p)});
  for (long k : dom.E3)
    out.order3.push_back({Rat(2 * k - 1, 2 * p), Rat(3, 4 * p * p)});
  return out;
}

namespace {

nlohmann::ordered_json rat_pair(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return nlohmann::ordered_json::array({c.get_num().get_str(), c.get_den().get_str()});
}

}  // namespace

std::string export_domain_json(long p) {
  const PrimeDomainData& dom = build_domain(p);
  nlohmann::ordered_json doc;
  doc["p"] = p;
  auto arcs = nlohmann::ordered_json::array();
  for (long k : dom.S) {
    nlohmann::ordered_json arc;
    arc["k"] = k;
    arc["center"] = rat_pair(Rat(k, p));
    arc["radius"] = rat_pair(Rat(1, p));
    arcs.push_back(arc);
  }
  doc["arcs"] = arcs;

  auto e2 = nlohmann::ordered_json::array();
  for (long k : dom.E2) {
    nlohmann::ordered_json pt;
    pt["k"] = k;
    pt["re"] = rat_pair(Rat(k, p));
    pt["im"] = rat_pair(Rat(1, p));
    e2.push_back(pt);
  }
  doc["elliptic2"] = e2;

  // "im" here is the multiplier of sqrt(3).
  auto e3 = nlohmann::ordered_json::array();
  for (long k : dom.E3) {
    nlohmann::ordered_json pt;
    pt["k"] = k;
    pt["re"] = rat_pair(Rat(2 * k - 1, 2 * p));
    pt["im"] = rat_pair(Rat(1, 2 * p));
    e3.push_back(pt);
  }
  doc["elliptic3"] = e3;

  nlohmann::ordered_json k2j, k3j;
  for (long k : dom.S) k2j[std::to_string(k)] = dom.k2.at(k);
  for (long k : dom.S)
    if (k != 1) k3j[std::to_string(k)] = dom.k3.at(k);
  doc["k2"] = k2j;
  doc["k3"] = k3j;
  return doc.dump(2) + "\n";
}

namespace {

// Fixed picture frame: uniform scale so circles stay circles.
constexpr double kScale = 700.0;
constexpr double kOriginX = 440.0;  // svg x of Re = 0
constexpr double kBaseY = 470.0;    // svg y of Im = 0
constexpr double kWidth = 880.0;
constexpr double kHeight = 520.0;

double sx(double x) { return kOriginX + kScale * x; }
double sy(double y) { return kBaseY - kScale * y; }

}  // namespace

std::string export_domain_svg(long p) {
  const PrimeDomainData& dom = build_domain(p);
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
     << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
     << kHeight << "\">\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" fill=\"#ffffff\"/>\n";
  os << "  <line x1=\"" << sx(-0.55) << "\" y1=\"" << sy(0.0) << "\" x2=\""
     << sx(0.55) << "\" y2=\"" << sy(0.0)
     << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
  for (double e : {-0.5, 0.5})
    os << "  <line x1=\"" << sx(e) << "\" y1=\"" << sy(0.0) << "\" x2=\"" << sx(e)
       << "\" y2=\"" << sy(0.62) << "\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";
  double r = kScale / p;
  for (long k : dom.S) {
    double x1 = sx((k - 1.0) / p), x2 = sx((k + 1.0) / p);
    os << "  <path d=\"M " << x1 << " " << sy(0.0) << " A " << r << " " << r
       << " 0 0 1 " << x2 << " " << sy(0.0)
       << "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n";
  }
  for (long k : dom.E2)
    os << "  <circle cx=\"" << sx(double(k) / p) << "\" cy=\"" << sy(1.0 / p)
       << "\" r=\"4\" fill=\"#d62728\"/>\n";
  for (long k : dom.E3) {
    double cx = sx((2.0 * k - 1.0) / (2.0 * p));
    double cy = sy(std::sqrt(3.0) / (2.0 * p));
    os << "  <path d=\"M " << cx << " " << cy - 5.0 << " L " << cx + 5.0 << " "
       << cy << " L " << cx << " " << cy + 5.0 << " L " << cx - 5.0 << " " << cy
       << " Z\" fill=\"#2ca02c\"/>\n";
  }
  os << "  <text x=\"16\" y=\"28\" font-family=\"monospace\" font-size=\"16\""
     << " fill=\"#000000\">level " << p << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace gamma0
