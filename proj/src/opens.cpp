#include "gforge/opens.hpp"

#include <algorithm>
#include <stdexcept>

namespace gforge {

Generator Generator::per(std::string sort, int n, int m, CopyTag copy) {
  Generator g;
  g.kind = Kind::Per;
  g.tag = static_cast<std::uint8_t>(copy);
  g.symbol = std::move(sort);
  g.indices = {n, m};
  return g;
}

Generator Generator::rel(std::string relation, std::vector<int> args, CopyTag copy) {
  Generator g;
  g.kind = Kind::Rel;
  g.tag = static_cast<std::uint8_t>(copy);
  g.symbol = std::move(relation);
  g.indices = std::move(args);
  return g;
}

Generator Generator::alpha(IsoTag iso, std::string sort, int n, int m) {
  Generator g;
  g.kind = Kind::Alpha;
  g.tag = static_cast<std::uint8_t>(iso);
  g.symbol = std::move(sort);
  g.indices = {n, m};
  return g;
}

std::strong_ordering Generator::operator<=>(const Generator& o) const {
  if (auto c = kind <=> o.kind; c != 0) return c;
  if (auto c = symbol <=> o.symbol; c != 0) return c;
  if (auto c = tag <=> o.tag; c != 0) return c;
  return indices <=> o.indices;
}

std::string Generator::text() const {
  std::string out;
  switch (kind) {
    case Kind::Per: {
      out = "per";
      if (copy() != CopyTag::None) out += std::to_string(static_cast<int>(copy()));
      out += "." + symbol + "(" + std::to_string(indices[0]) + "," +
             std::to_string(indices[1]) + ")";
      break;
    }
    case Kind::Rel: {
      out = symbol;
      if (copy() != CopyTag::None) out += std::to_string(static_cast<int>(copy()));
      out += "(";
      for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(indices[i]);
      }
      out += ")";
      break;
    }
    case Kind::Alpha: {
      out = std::string(iso_tag_name(iso())) + "." + symbol + "(" +
            std::to_string(indices[0]) + ")=" + std::to_string(indices[1]);
      break;
    }
  }
  return out;
}

BasicOpen BasicOpen::meet_of(std::vector<Generator> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return BasicOpen{std::move(gens)};
}

bool BasicOpen::subset_of(const BasicOpen& other) const {
  return std::includes(other.gens.begin(), other.gens.end(), gens.begin(), gens.end());
}

Open Open::atom(Generator g) { return Open{{BasicOpen{{std::move(g)}}}}; }

Open Open::normalized(std::vector<BasicOpen> parts) { return normalize(std::move(parts)); }

std::string Open::text() const {
  if (is_bottom()) return "false";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " | ";
    if (parts[i].is_top()) {
      out += "true";
      continue;
    }
    for (std::size_t j = 0; j < parts[i].gens.size(); ++j) {
      if (j) out += " & ";
      out += parts[i].gens[j].text();
    }
  }
  return out;
}

namespace {

// Which presentation family a generator can live in. Copy-tagged Per/Rel
// generators are shared between the arrow and composition-domain
// presentations, so they sit below both in this little lattice.
enum class Layer : std::uint8_t { Any, Objects, ArrowsOrComp, Arrows, Comp };

Layer generator_layer(const Generator& g) {
  if (g.kind == Generator::Kind::Alpha)
    return g.iso() == IsoTag::Alpha ? Layer::Arrows : Layer::Comp;
  switch (g.copy()) {
    case CopyTag::None: return Layer::Objects;
    case CopyTag::Three: return Layer::Comp;
    default: return Layer::ArrowsOrComp;
  }
}

Layer combine_layer(Layer a, Layer b) {
  if (a == Layer::Any || a == b) return b;
  if (b == Layer::Any) return a;
  if (a == Layer::Objects || b == Layer::Objects)
    throw std::invalid_argument("open mixes object generators with tagged generators");
  if (a == Layer::ArrowsOrComp) return b;
  if (b == Layer::ArrowsOrComp) return a;
  throw std::invalid_argument(
      "open mixes arrow generators with composition-domain generators");
}

void check_one_presentation(const std::vector<BasicOpen>& parts) {
  Layer layer = Layer::Any;
  for (const BasicOpen& b : parts)
    for (const Generator& g : b.gens) layer = combine_layer(layer, generator_layer(g));
}

}  // namespace

Open normalize(std::vector<BasicOpen> parts) {
  for (BasicOpen& b : parts) {
    std::sort(b.gens.begin(), b.gens.end());
    b.gens.erase(std::unique(b.gens.begin(), b.gens.end()), b.gens.end());
  }
  check_one_presentation(parts);

  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());

  // Subsumption: drop any basic open whose generator set strictly contains
  // another's. Only strictly smaller sets can subsume, so candidates are
  // compared against the kept sets of smaller size.
  std::stable_sort(parts.begin(), parts.end(), [](const BasicOpen& a, const BasicOpen& b) {
    return a.gens.size() < b.gens.size();
  });
  std::vector<BasicOpen> kept;
  kept.reserve(parts.size());
  std::size_t smaller_end = 0;  // kept[0..smaller_end) have size < current
  std::size_t current_size = parts.empty() ? 0 : parts.front().gens.size();
  for (BasicOpen& cand : parts) {
    if (cand.gens.size() != current_size) {
      current_size = cand.gens.size();
      smaller_end = kept.size();
    }
    bool subsumed = false;
    for (std::size_t i = 0; i < smaller_end && !subsumed; ++i)
      subsumed = kept[i].subset_of(cand);
    if (!subsumed) kept.push_back(std::move(cand));
  }
  std::sort(kept.begin(), kept.end());
  return Open{std::move(kept)};
}

Open meet(const Open& a, const Open& b) {
  std::vector<BasicOpen> parts;
  parts.reserve(a.parts.size() * b.parts.size());
  for (const BasicOpen& x : a.parts)
    for (const BasicOpen& y : b.parts) {
      std::vector<Generator> gens = x.gens;
      gens.insert(gens.end(), y.gens.begin(), y.gens.end());
      parts.push_back(BasicOpen::meet_of(std::move(gens)));
    }
  return normalize(std::move(parts));
}

Open join(const Open& a, const Open& b) {
  std::vector<BasicOpen> parts = a.parts;
  parts.insert(parts.end(), b.parts.begin(), b.parts.end());
  return normalize(std::move(parts));
}

}  // namespace gforge
