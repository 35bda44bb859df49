#include "smgame/catalog.h"

#include <cmath>
#include <string>

#include "smgame/errors.h"

namespace smgame {
namespace {

using Scalar2 = double (*)(double, double, double);

double Sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

// Closed-form description of a two-player scalar game; every function takes
// (w1, w2, epsilon).
struct PlanarForms {
  Scalar2 profit1, profit2;
  Scalar2 grad1, grad2;
  // Jacobian entries d xi_r / d w_c.
  Scalar2 j11, j12, j21, j22;
};

GameSpec PlanarSpec(std::string name, StructureTag tag, const PlanarForms& f,
                    double eps) {
  GameSpec spec;
  spec.name = std::move(name);
  spec.partition = ParameterPartition::Scalars(2);
  spec.tag = tag;
  spec.profits = {
      [f, eps](JointView w) { return f.profit1(w[0], w[1], eps); },
      [f, eps](JointView w) { return f.profit2(w[0], w[1], eps); },
  };
  spec.gradients = {
      [f, eps](JointView w) { return Vector{f.grad1(w[0], w[1], eps)}; },
      [f, eps](JointView w) { return Vector{f.grad2(w[0], w[1], eps)}; },
  };
  spec.jacobian = [f, eps](JointView w) {
    Matrix j(2, 2);
    j(0, 0) = f.j11(w[0], w[1], eps);
    j(0, 1) = f.j12(w[0], w[1], eps);
    j(1, 0) = f.j21(w[0], w[1], eps);
    j(1, 1) = f.j22(w[0], w[1], eps);
    return j;
  };
  return spec;
}

// Adds the market decomposition pi_i = f_i(w_i) + g_12 (w1, w2) * (+-1).
void AttachMarket(GameSpec& spec, SelfTermFn f1, SelfTermFn f2, PairFn g12) {
  spec.self_terms = {std::move(f1), std::move(f2)};
  CouplingSpec c;
  c.first = 0;
  c.second = 1;
  c.value = std::move(g12);
  spec.couplings = {std::move(c)};
}

constexpr PlanarForms kPotential{
    [](double a, double b, double e) { return a * b - 0.5 * e * a * a; },
    [](double a, double b, double e) { return a * b - 0.5 * e * b * b; },
    [](double a, double b, double e) { return b - e * a; },
    [](double a, double b, double e) { return a - e * b; },
    [](double, double, double e) { return -e; },
    [](double, double, double) { return 1.0; },
    [](double, double, double) { return 1.0; },
    [](double, double, double e) { return -e; },
};

constexpr PlanarForms kHalfGame{
    [](double a, double b, double e) { return a * b - 0.5 * e * a * a; },
    [](double, double b, double e) { return -0.5 * e * b * b; },
    [](double a, double b, double e) { return b - e * a; },
    [](double, double b, double e) { return -e * b; },
    [](double, double, double e) { return -e; },
    [](double, double, double) { return 1.0; },
    [](double, double, double) { return 0.0; },
    [](double, double, double e) { return -e; },
};

constexpr PlanarForms kMinimalSm{
    [](double a, double b, double e) { return a * b - 0.5 * e * a * a; },
    [](double a, double b, double e) { return -a * b - 0.5 * e * b * b; },
    [](double a, double b, double e) { return b - e * a; },
    [](double a, double b, double e) { return -a - e * b; },
    [](double, double, double e) { return -e; },
    [](double, double, double) { return 1.0; },
    [](double, double, double) { return -1.0; },
    [](double, double, double e) { return -e; },
};

// sign(0) = 0 keeps xi continuous; |w| has no second derivative at 0 and the
// closed form below takes the value 1 there.
constexpr PlanarForms kSwirls{
    [](double a, double b, double) {
      return -std::fabs(a * a * a) / 6.0 + 0.5 * a * a - a * b;
    },
    [](double a, double b, double) {
      return -std::fabs(b * b * b) / 6.0 + 0.5 * b * b + a * b;
    },
    [](double a, double b, double) { return -Sign(a) * a * a / 2.0 + a - b; },
    [](double a, double b, double) { return -Sign(b) * b * b / 2.0 + b + a; },
    [](double a, double, double) { return 1.0 - std::fabs(a); },
    [](double, double, double) { return -1.0; },
    [](double, double, double) { return 1.0; },
    [](double, double b, double) { return 1.0 - std::fabs(b); },
};

constexpr PlanarForms kHamiltonian{
    [](double a, double b, double) { return a * b; },
    [](double a, double b, double) { return -a * b; },
    [](double, double b, double) { return b; },
    [](double a, double, double) { return -a; },
    [](double, double, double) { return 0.0; },
    [](double, double, double) { return 1.0; },
    [](double, double, double) { return -1.0; },
    [](double, double, double) { return 0.0; },
};

}  // namespace

const std::vector<CatalogEntry>& GameCatalog() {
  static const std::vector<CatalogEntry> entries{
      {"potential", "pi1 = w1 w2 - e/2 w1^2; pi2 = w1 w2 - e/2 w2^2", true,
       StructureTag::kGeneral},
      {"half_game", "pi1 = w1 w2 - e/2 w1^2; pi2 = -e/2 w2^2", true,
       StructureTag::kGeneral},
      {"minimal_sm", "pi1 = w1 w2 - e/2 w1^2; pi2 = -w1 w2 - e/2 w2^2", true,
       StructureTag::kSmDeclared},
      {"legibility_failure", "pi1 = w1 w2 - e/2 w1^2; pi2 = w1 w2 - e/2 w2^2",
       true, StructureTag::kGeneral},
      {"swirls",
       "pi1 = -|w1|^3/6 + w1^2/2 - w1 w2; pi2 = -|w2|^3/6 + w2^2/2 + w1 w2",
       false, StructureTag::kSmDeclared},
      {"hamiltonian_pair", "pi1 = w1 w2; pi2 = -w1 w2", false,
       StructureTag::kSmDeclared},
  };
  return entries;
}

GameDefinition BuiltinGame(std::string_view key, double epsilon) {
  const CatalogEntry* entry = nullptr;
  for (const CatalogEntry& e : GameCatalog()) {
    if (e.key == key) entry = &e;
  }
  if (entry == nullptr) {
    throw ArgumentError("unknown game '" + std::string(key) + "'");
  }
  if (entry->uses_epsilon && !(epsilon > 0.0 && std::isfinite(epsilon))) {
    throw ArgumentError("epsilon must be positive for '" + entry->key + "'");
  }
  const double e = epsilon;
  const std::string name(key);

  if (key == "potential" || key == "legibility_failure") {
    return GameDefinition(PlanarSpec(name, entry->tag, kPotential, e));
  }
  if (key == "half_game") {
    return GameDefinition(PlanarSpec(name, entry->tag, kHalfGame, e));
  }
  if (key == "minimal_sm") {
    GameSpec spec = PlanarSpec(name, entry->tag, kMinimalSm, e);
    const auto quad = [e](std::span<const double> wi) {
      return -0.5 * e * wi[0] * wi[0];
    };
    AttachMarket(spec, quad, quad,
                 [](std::span<const double> a, std::span<const double> b) {
                   return a[0] * b[0];
                 });
    return GameDefinition(std::move(spec));
  }
  if (key == "swirls") {
    GameSpec spec = PlanarSpec(name, entry->tag, kSwirls, e);
    const auto self = [](std::span<const double> wi) {
      const double x = wi[0];
      return -std::fabs(x * x * x) / 6.0 + 0.5 * x * x;
    };
    AttachMarket(spec, self, self,
                 [](std::span<const double> a, std::span<const double> b) {
                   return -a[0] * b[0];
                 });
    return GameDefinition(std::move(spec));
  }
  GameSpec spec = PlanarSpec(name, entry->tag, kHamiltonian, e);
  const auto zero = [](std::span<const double>) { return 0.0; };
  AttachMarket(spec, zero, zero,
               [](std::span<const double> a, std::span<const double> b) {
                 return a[0] * b[0];
               });
  return GameDefinition(std::move(spec));
}

}  // namespace smgame
