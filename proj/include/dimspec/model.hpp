#ifndef DIMSPEC_MODEL_HPP
#define DIMSPEC_MODEL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

#include "dimspec/error.hpp"
#include "dimspec/signed_log.hpp"

namespace dimspec {

/// Rule tying the Poisson-equation power m to the wave-equation power n.
enum class CouplingScheme { MEqualsN, MEqualsOne, Explicit };

constexpr std::string_view to_string(CouplingScheme s) {
  switch (s) {
    case CouplingScheme::MEqualsN: return "mn";
    case CouplingScheme::MEqualsOne: return "m1";
    case CouplingScheme::Explicit: return "explicit";
  }
  return "?";
}

inline CouplingScheme parse_scheme(std::string_view s) {
  if (s == "mn") return CouplingScheme::MEqualsN;
  if (s == "m1") return CouplingScheme::MEqualsOne;
  if (s == "explicit") return CouplingScheme::Explicit;
  throw Error(ErrorCode::Parse, "unknown coupling scheme '" + std::string(s) + "'");
}

/// Integer model configuration: space dimension D, wave-equation power n,
/// Poisson power m. Identity is (D, n, m); the scheme records how m was chosen.
struct SystemParams {
  int D = 3;
  int n = 1;
  int m = 1;
  CouplingScheme scheme = CouplingScheme::MEqualsN;

  static SystemParams make(int D, int n, CouplingScheme scheme, int explicit_m = 0) {
    SystemParams p{D, n, 0, scheme};
    switch (scheme) {
      case CouplingScheme::MEqualsN: p.m = n; break;
      case CouplingScheme::MEqualsOne: p.m = 1; break;
      case CouplingScheme::Explicit: p.m = explicit_m; break;
    }
    p.validate();
    return p;
  }

  /// Scheme implied by a bare (D, n, m) triple; m == n wins when both fit.
  static SystemParams infer(int D, int n, int m) {
    const CouplingScheme s = m == n ? CouplingScheme::MEqualsN
                             : m == 1 ? CouplingScheme::MEqualsOne
                                      : CouplingScheme::Explicit;
    return make(D, n, s, m);
  }

  int beta() const { return D - 2 * m; }

  void validate() const {
    if (D < 2) throw Error(ErrorCode::InvalidArgument, "dimension D must be >= 2");
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "Laplacian power n must be >= 1");
    if (m < 1) throw Error(ErrorCode::InvalidArgument, "Poisson power m must be >= 1");
    if (scheme == CouplingScheme::MEqualsN && m != n)
      throw Error(ErrorCode::InvalidArgument, "scheme mn requires m = n");
    if (scheme == CouplingScheme::MEqualsOne && m != 1)
      throw Error(ErrorCode::InvalidArgument, "scheme m1 requires m = 1");
  }

  friend bool operator==(const SystemParams& a, const SystemParams& b) {
    return a.D == b.D && a.n == b.n && a.m == b.m;
  }
};

enum class Nature { Attractive, Repulsive, Logarithmic };

constexpr std::string_view to_string(Nature n) {
  switch (n) {
    case Nature::Attractive: return "attractive";
    case Nature::Repulsive: return "repulsive";
    case Nature::Logarithmic: return "logarithmic";
  }
  return "?";
}

/// Generalized Coulomb potential alpha / r^beta. alpha is zero (undefined)
/// in the logarithmic case beta = 0.
struct PotentialSpec {
  SignedLogReal alpha;
  int beta = 0;
  Nature nature = Nature::Attractive;

  friend bool operator==(const PotentialSpec&, const PotentialSpec&) = default;
};

enum class Regime { BoundEligible, Divergent, Singular, Repulsive, Logarithmic, Invalid };

constexpr std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::BoundEligible: return "bound";
    case Regime::Divergent: return "divergent";
    case Regime::Singular: return "singular";
    case Regime::Repulsive: return "repulsive";
    case Regime::Logarithmic: return "logarithmic";
    case Regime::Invalid: return "invalid";
  }
  return "?";
}

enum class InvalidReason {
  MalformedParameters,
  ShortRange,
  RepulsiveCoupling,
  PrintedFormUndefined,
};

constexpr std::string_view reason_code(InvalidReason r) {
  switch (r) {
    case InvalidReason::MalformedParameters: return "malformed";
    case InvalidReason::ShortRange: return "short-range";
    case InvalidReason::RepulsiveCoupling: return "repulsive-coupling";
    case InvalidReason::PrintedFormUndefined: return "printed-form-undefined";
  }
  return "?";
}

constexpr std::string_view describe(InvalidReason r) {
  switch (r) {
    case InvalidReason::MalformedParameters: return "parameters outside D >= 2, n >= 1, m >= 1, beta >= 0";
    case InvalidReason::ShortRange: return "beta = D - 2m < 0: potential is not long-range";
    case InvalidReason::RepulsiveCoupling: return "even Poisson power gives a repulsive coupling";
    case InvalidReason::PrintedFormUndefined: return "printed-form undefined: bracket base is not positive";
  }
  return "?";
}

inline InvalidReason parse_reason_code(std::string_view s) {
  for (auto r : {InvalidReason::MalformedParameters, InvalidReason::ShortRange, InvalidReason::RepulsiveCoupling,
                 InvalidReason::PrintedFormUndefined}) {
    if (reason_code(r) == s) return r;
  }
  throw Error(ErrorCode::Parse, "unknown invalid-reason code '" + std::string(s) + "'");
}

/// Either a bound-state energy (hartree, strictly negative) or a classified failure.
class EnergyOutcome {
 public:
  struct Bound {
    SignedLogReal energy;
    friend bool operator==(const Bound&, const Bound&) = default;
  };
  struct Divergent {
    friend bool operator==(const Divergent&, const Divergent&) = default;
  };
  struct Singular {
    friend bool operator==(const Singular&, const Singular&) = default;
  };
  struct Repulsive {
    friend bool operator==(const Repulsive&, const Repulsive&) = default;
  };
  struct Logarithmic {
    friend bool operator==(const Logarithmic&, const Logarithmic&) = default;
  };
  struct Invalid {
    InvalidReason reason;
    friend bool operator==(const Invalid&, const Invalid&) = default;
  };

  using Value = std::variant<Bound, Divergent, Singular, Repulsive, Logarithmic, Invalid>;

  EnergyOutcome() : value_(Invalid{InvalidReason::MalformedParameters}) {}

  static EnergyOutcome bound(const SignedLogReal& energy) {
    if (!energy.is_negative()) throw Error(ErrorCode::InvalidArgument, "bound-state energy must be negative");
    return EnergyOutcome(Bound{energy});
  }
  static EnergyOutcome invalid(InvalidReason r) { return EnergyOutcome(Invalid{r}); }

  /// Outcome for a non-bound regime; BoundEligible has no energy and is rejected.
  static EnergyOutcome from_regime(Regime r, InvalidReason reason = InvalidReason::MalformedParameters) {
    switch (r) {
      case Regime::Divergent: return EnergyOutcome(Divergent{});
      case Regime::Singular: return EnergyOutcome(Singular{});
      case Regime::Repulsive: return EnergyOutcome(Repulsive{});
      case Regime::Logarithmic: return EnergyOutcome(Logarithmic{});
      case Regime::Invalid: return EnergyOutcome(Invalid{reason});
      case Regime::BoundEligible: break;
    }
    throw Error(ErrorCode::InvalidArgument, "bound-eligible regime needs an energy");
  }

  Regime regime() const {
    return std::visit(
        [](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Bound>) return Regime::BoundEligible;
          else if constexpr (std::is_same_v<T, Divergent>) return Regime::Divergent;
          else if constexpr (std::is_same_v<T, Singular>) return Regime::Singular;
          else if constexpr (std::is_same_v<T, Repulsive>) return Regime::Repulsive;
          else if constexpr (std::is_same_v<T, Logarithmic>) return Regime::Logarithmic;
          else return Regime::Invalid;
        },
        value_);
  }

  bool is_bound() const { return std::holds_alternative<Bound>(value_); }
  bool is_invalid() const { return std::holds_alternative<Invalid>(value_); }

  const SignedLogReal& energy() const {
    if (const auto* b = std::get_if<Bound>(&value_)) return b->energy;
    throw Error(ErrorCode::InvalidArgument, "outcome is " + std::string(to_string(regime())) + ", not bound");
  }

  std::optional<InvalidReason> reason() const {
    if (const auto* i = std::get_if<Invalid>(&value_)) return i->reason;
    return std::nullopt;
  }

  /// "bound", "divergent", ..., or "invalid:<reason-code>".
  std::string label() const {
    if (auto r = reason()) return "invalid:" + std::string(reason_code(*r));
    return std::string(to_string(regime()));
  }

  const Value& value() const { return value_; }

  friend bool operator==(const EnergyOutcome&, const EnergyOutcome&) = default;

 private:
  explicit EnergyOutcome(Value v) : value_(std::move(v)) {}
  Value value_;
};

/// Classifies (D, n, m) before any energy is evaluated. Checks run in order:
/// malformed or short-range -> Invalid; beta = 0 -> Logarithmic; even m ->
/// Repulsive; beta = 2n -> Divergent; beta > 2n -> Singular.
inline Regime classify_regime(int D, int n, int m) {
  if (D < 2 || n < 1 || m < 1) return Regime::Invalid;
  const int beta = D - 2 * m;
  if (beta < 0) return Regime::Invalid;
  if (beta == 0) return Regime::Logarithmic;
  if (m % 2 == 0) return Regime::Repulsive;
  if (beta == 2 * n) return Regime::Divergent;
  if (beta > 2 * n) return Regime::Singular;
  return Regime::BoundEligible;
}

/// Non-bound outcome matching classify_regime, with the Invalid reason filled in.
inline EnergyOutcome classification_outcome(int D, int n, int m) {
  const Regime r = classify_regime(D, n, m);
  const bool malformed = D < 2 || n < 1 || m < 1;
  return EnergyOutcome::from_regime(r, malformed ? InvalidReason::MalformedParameters : InvalidReason::ShortRange);
}

/// Which evaluator produced a record.
enum class Formula { General, SchemeMN, SchemeM1, OracleVeff, OracleRadial };

/// Wire tags used in CSV/JSON output.
constexpr std::string_view wire_tag(Formula f) {
  switch (f) {
    case Formula::General: return "Eq2";
    case Formula::SchemeMN: return "Eq6";
    case Formula::SchemeM1: return "Eq9";
    case Formula::OracleVeff: return "OracleVeff";
    case Formula::OracleRadial: return "OracleRadial";
  }
  return "?";
}

inline Formula parse_formula(std::string_view s) {
  for (auto f : {Formula::General, Formula::SchemeMN, Formula::SchemeM1, Formula::OracleVeff, Formula::OracleRadial}) {
    if (wire_tag(f) == s) return f;
  }
  throw Error(ErrorCode::Parse, "unknown formula tag '" + std::string(s) + "'");
}

/// One evaluated parameter point.
struct ScanRecord {
  SystemParams params;
  int beta = 0;
  SignedLogReal alpha;
  EnergyOutcome outcome;
  Formula formula = Formula::General;
  std::optional<SignedLogReal> paper_value;

  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

}  // namespace dimspec

#endif  // DIMSPEC_MODEL_HPP
