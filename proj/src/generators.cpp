#include "echreeb/generators.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace echreeb {

namespace {

struct OrbitSlot {
  const ReebOrbit* orbit;
  Surd action_lo;
  Surd action_hi;
};

OrbitSetGenerator finish_generator(const std::vector<OrbitSlot>& slots,
                                   const std::vector<long long>& mults, const Surd& lo,
                                   const Surd& hi) {
  OrbitSetGenerator gen;
  gen.action_lo = lo.to_double();
  gen.action_hi = hi.to_double();
  long long cls = 0;
  int hpos = 0;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (mults[i] == 0) continue;
    gen.pairs.push_back({slots[i].orbit->name, mults[i]});
    cls += mults[i] * slots[i].orbit->homology_class;
    if (slots[i].orbit->kind == OrbitKind::positive_hyperbolic) ++hpos;
  }
  std::sort(gen.pairs.begin(), gen.pairs.end(),
            [](const GeneratorEntry& a, const GeneratorEntry& b) { return a.orbit < b.orbit; });
  gen.total_class = cls;
  gen.parity = hpos % 2;
  return gen;
}

bool generator_less(const OrbitSetGenerator& a, const OrbitSetGenerator& b) {
  const auto key = [](const OrbitSetGenerator& g) {
    std::ostringstream os;
    for (const auto& p : g.pairs) os << p.orbit << ':' << p.multiplicity << ';';
    return os.str();
  };
  return key(a) < key(b);
}

}  // namespace

EnumeratedGenerators enumerate_generators(const OrbitCatalog& catalog, long long total_class,
                                          double L, const EnumerationOptions& opts) {
  if (!(L > 0.0)) throw std::invalid_argument("enumerate_generators: cutoff must be positive");
  std::vector<OrbitSlot> slots;
  for (const auto& o : catalog.orbits) {
    if (!(o.action_lo > 0.0))
      throw std::invalid_argument("enumerate_generators: orbit " + o.name +
                                  " has nonpositive action");
    slots.push_back({&o, Surd::from_double(o.action_lo), Surd::from_double(o.action_hi)});
  }
  std::sort(slots.begin(), slots.end(), [](const OrbitSlot& a, const OrbitSlot& b) {
    if (a.orbit->action_lo != b.orbit->action_lo) return a.orbit->action_lo < b.orbit->action_lo;
    return a.orbit->name < b.orbit->name;
  });

  const Surd budget = Surd::from_double(L);
  const std::optional<Surd> rho =
      opts.rho ? std::optional<Surd>(Surd::from_double(*opts.rho)) : std::nullopt;

  EnumeratedGenerators out;
  std::vector<long long> mults(slots.size(), 0);
  long long visited = 0;

  // Depth-first over multiplicities; the running lower-end action prunes the
  // branch since every deeper choice only adds action.
  auto rec = [&](auto&& self, std::size_t i, Surd lo, Surd hi, long long cls) -> void {
    if (++visited > opts.count_cap)
      throw std::runtime_error("enumerate_generators: count cap exceeded");
    if (i == slots.size()) {
      if (cls != total_class) return;
      if (!(lo < budget)) return;
      if (rho && (hi > *rho)) return;  // action <= rho when gated
      auto gen = finish_generator(slots, mults, lo, hi);
      if (hi < budget) {
        out.generators.push_back(std::move(gen));
      } else {
        out.borderline.push_back(std::move(gen));
      }
      return;
    }
    const auto& slot = slots[i];
    const bool hyperbolic = slot.orbit->kind != OrbitKind::elliptic;
    long long m = 0;
    Surd lo_m = lo, hi_m = hi;
    while (true) {
      if (m > 0) {
        lo_m += slot.action_lo;
        hi_m += slot.action_hi;
        if (!(lo_m < budget)) break;
      }
      mults[i] = m;
      self(self, i + 1, lo_m, hi_m, cls + m * slot.orbit->homology_class);
      if (hyperbolic && m == 1) break;
      ++m;
    }
    mults[i] = 0;
  };
  rec(rec, 0, Surd(0), Surd(0), 0);

  std::sort(out.generators.begin(), out.generators.end(), generator_less);
  std::sort(out.borderline.begin(), out.borderline.end(), generator_less);
  return out;
}

int grading_parity(const OrbitSetGenerator& gen) { return gen.parity; }

FilteredDimensions filtered_dimensions(const OrbitCatalog& catalog, long long total_class, double L,
                                       const EnumerationOptions& opts) {
  const auto enumerated = enumerate_generators(catalog, total_class, L, opts);
  FilteredDimensions dims;
  for (const auto& g : enumerated.generators) {
    if (g.parity == 0) {
      ++dims.even_count;
    } else {
      ++dims.odd_count;
    }
  }
  return dims;
}

namespace {

int permutation_parity_against(const std::vector<std::string>& reference,
                               const std::vector<std::string>& arranged, const char* what) {
  if (reference.size() != arranged.size())
    throw std::invalid_argument(std::string("epsilon_sign: ") + what + " lists differ in size");
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    if (!pos.emplace(reference[i], i).second)
      throw std::invalid_argument(std::string("epsilon_sign: duplicate ") + what + " label");
  }
  std::vector<std::size_t> perm;
  perm.reserve(arranged.size());
  for (const auto& label : arranged) {
    auto it = pos.find(label);
    if (it == pos.end())
      throw std::invalid_argument(std::string("epsilon_sign: unknown ") + what + " label " + label);
    perm.push_back(it->second);
  }
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace

int epsilon_sign(const std::vector<SignedComponent>& components,
                 const std::vector<std::string>& reference_hyperbolic,
                 const std::vector<std::string>& reference_loops) {
  std::vector<std::string> hyp, loops;
  for (const auto& comp : components) {
    const bool even_index = (comp.fredholm_index % 2) == 0;
    if (even_index != (comp.hyperbolic_ends.size() % 2 == 0) ||
        even_index != (comp.loops.size() % 2 == 0))
      throw std::invalid_argument("epsilon_sign: component " + comp.id +
                                  " violates the index-parity consistency");
    hyp.insert(hyp.end(), comp.hyperbolic_ends.begin(), comp.hyperbolic_ends.end());
    loops.insert(loops.end(), comp.loops.begin(), comp.loops.end());
  }
  return permutation_parity_against(reference_hyperbolic, hyp, "hyperbolic") *
         permutation_parity_against(reference_loops, loops, "loop");
}

long long total_weight(const std::vector<SignedComponent>& components,
                       const std::vector<std::string>& reference_hyperbolic,
                       const std::vector<std::string>& reference_loops) {
  long long product = 1;
  for (const auto& comp : components) {
    if (comp.r_weight) {
      product *= *comp.r_weight;
    } else if (comp.special_plane_or_sphere) {
      product *= 1;
    } else {
      throw std::runtime_error("total_weight: component " + comp.id +
                               " carries no resolvable weight");
    }
  }
  return epsilon_sign(components, reference_hyperbolic, reference_loops) * product;
}

int tensor_ordering_sign(const std::vector<int>& order, const std::vector<int>& parities) {
  if (order.size() != parities.size())
    throw std::invalid_argument("tensor_ordering_sign: size mismatch");
  std::vector<bool> seen(order.size(), false);
  for (int idx : order) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= order.size() || seen[idx])
      throw std::invalid_argument("tensor_ordering_sign: order is not a permutation");
    seen[idx] = true;
  }
  int inversions = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (parities[order[i]] % 2 != 0 && parities[order[j]] % 2 != 0 && order[i] > order[j])
        ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace echreeb
