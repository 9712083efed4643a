#include "braidvar/variety.hpp"

#include <algorithm>
#include <set>

#include "braidvar/deodhar.hpp"
#include "braidvar/errors.hpp"
#include "braidvar/ruling.hpp"
#include "braidvar/scalar.hpp"
#include "fp_points.hpp"

namespace braidvar {

namespace {

std::vector<Scalar> lift(const std::vector<std::uint32_t>& pt, std::uint32_t q) {
  std::vector<Scalar> z;
  z.reserve(pt.size());
  for (auto v : pt) z.push_back(Scalar::mod(v, q));
  return z;
}

}  // namespace

std::uint64_t brute_force_count(const BraidWord& beta, std::uint32_t q, std::uint64_t budget) {
  require_demazure_w0(beta);
  return detail::enumerate_variety_points(beta, q, budget, nullptr);
}

std::vector<std::vector<std::uint32_t>> variety_points(const BraidWord& beta, std::uint32_t q, std::uint64_t budget) {
  require_demazure_w0(beta);
  std::vector<std::vector<std::uint32_t>> out;
  detail::enumerate_variety_points(beta, q, budget, [&](const detail::Point& z) { out.push_back(z); });
  return out;
}

CountReport verify_decomposition(const BraidWord& beta, std::uint32_t q, std::uint64_t budget) {
  CountReport rep;
  rep.beta = beta;
  rep.q = q;
  auto points = variety_points(beta, q, budget);
  rep.brute_force = points.size();
  rep.by_rulings = ruling_point_count(beta, q);
  rep.by_deodhar = deodhar_point_count(beta, q);
  auto fail = [&rep](std::vector<std::uint32_t> pt, std::string why) {
    if (!rep.witness) rep.witness = Witness{std::move(pt), std::move(why)};
  };

  std::map<std::string, std::set<std::uint64_t>> fibers;
  for (const auto& pt : points) {
    try {
      NormalRuling r = classify_point(beta, lift(pt, q));
      fibers[r.to_string()].insert(detail::encode_point(pt, q));
    } catch (const DomainError& e) {
      fail(pt, std::string("classification failed: ") + e.what());
    }
  }
  for (const auto& [name, pts] : fibers) rep.piece_sizes[name] = pts.size();

  std::set<std::string> known;
  for (const auto& rho : enumerate_rulings(beta)) {
    const std::string name = rho.to_string();
    known.insert(name);
    const std::uint64_t expected = piece_size(rho.departures(), rho.switches(), q);
    const auto& fiber = fibers[name];
    if (fiber.size() != expected) {
      fail({}, "fiber " + name + " has " + std::to_string(fiber.size()) + " points, expected " +
                   std::to_string(expected));
      continue;
    }
    Morphism m = build_right_simplifying(beta, rho);
    std::set<std::uint64_t> image;
    for (const auto& pt : chart_image(m, q)) {
      const std::uint64_t code = detail::encode_point(pt, q);
      if (!fiber.count(code)) fail(pt, "chart point of " + name + " lies outside its fiber");
      image.insert(code);
    }
    if (image.size() != expected) fail({}, "chart of " + name + " is not injective");
  }
  for (const auto& [name, pts] : fibers)
    if (!known.count(name) && !pts.empty()) fail({}, "points classified into unknown ruling " + name);
  for (auto it = rep.piece_sizes.begin(); it != rep.piece_sizes.end();)
    it = it->second == 0 ? rep.piece_sizes.erase(it) : std::next(it);

  std::uint64_t total = 0;
  for (const auto& [name, size] : rep.piece_sizes) total += size;
  if (total != rep.brute_force) fail({}, "pieces do not sum to the point count");
  if (rep.brute_force != rep.by_rulings || rep.brute_force != rep.by_deodhar) fail({}, "point counts disagree");
  rep.partition_ok = !rep.witness.has_value();
  return rep;
}

ChartStrata chart_strata(const Morphism& m, std::uint32_t q) {
  ChartStrata out;
  const BraidWord& beta = m.source();
  std::optional<std::string> first;
  std::set<std::uint64_t> image;
  for (const auto& pt : chart_image(m, q)) {
    image.insert(detail::encode_point(pt, q));
    const std::string name = classify_point(beta, lift(pt, q)).to_string();
    ++out.hits[name];
    if (!first) first = name;
    if (name != *first && !out.witness)
      out.witness = Witness{pt, "chart point lies in the stratum of " + name + ", another lies in " + *first};
  }
  out.chart_size = image.size();
  if (out.hits.size() == 1) {
    const NormalRuling rho = parse_ruling(beta, *first);
    const std::uint64_t fiber = piece_size(rho.departures(), rho.switches(), q);
    out.single_stratum = out.chart_size == fiber;
    if (!out.single_stratum) {
      for (const auto& pt : variety_points(beta, q)) {
        if (image.count(detail::encode_point(pt, q))) continue;
        if (classify_point(beta, lift(pt, q)).to_string() == *first) {
          out.witness = Witness{pt, "point of the stratum " + *first + " missing from the chart"};
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace braidvar
