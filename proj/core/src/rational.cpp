#include "hyperjump/rational.hpp"

#include <cmath>

#include "hyperjump/error.hpp"

namespace hyperjump {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::duplicate_edge: return "DuplicateEdge";
    case ErrorCode::repeated_vertex_in_triple: return "RepeatedVertexInTriple";
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::cap_exceeded: return "CapExceeded";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::domain_error: return "DomainError";
    case ErrorCode::support_error: return "SupportError";
    case ErrorCode::hypothesis_violated: return "HypothesisViolated";
    case ErrorCode::unsupported_order: return "UnsupportedOrder";
    case ErrorCode::wrong_residue: return "WrongResidue";
    case ErrorCode::not_a_bijection: return "NotABijection";
    case ErrorCode::precondition_failed: return "PreconditionFailed";
    case ErrorCode::format_error: return "FormatError";
    case ErrorCode::schema_error: return "SchemaError";
    case ErrorCode::io_error: return "IoError";
  }
  return "Error";
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw FormatError("empty rational literal");
  std::size_t slash = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '/') {
      if (++slash > 1 || i == 0 || i + 1 == text.size()) {
        throw FormatError("malformed rational '" + std::string(text) + "'");
      }
    } else if (c == '-') {
      if (i != 0) throw FormatError("malformed rational '" + std::string(text) + "'");
    } else if (c < '0' || c > '9') {
      throw FormatError("malformed rational '" + std::string(text) + "'");
    }
  }
  Rational value;
  if (value.set_str(std::string(text), 10) != 0 || value.get_den() == 0) {
    throw FormatError("malformed rational '" + std::string(text) + "'");
  }
  value.canonicalize();
  return value;
}

Rational nearest_convergent(double value, std::uint64_t max_denominator) {
  if (!std::isfinite(value)) throw DomainError("cannot approximate a non-finite value");
  if (max_denominator == 0) throw DomainError("max_denominator must be positive");

  // The double is itself an exact dyadic rational; expand it.
  Rational remainder(value);
  // Convergent recurrence seeded with h(-2)/k(-2) = 0/1 and h(-1)/k(-1) = 1/0.
  mpz_class p_prev = 0, q_prev = 1;
  mpz_class p = 1, q = 0;
  const mpz_class limit(static_cast<unsigned long>(max_denominator));
  Rational best(0);
  while (true) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), remainder.get_num_mpz_t(), remainder.get_den_mpz_t());
    mpz_class p_next = a * p + p_prev;
    mpz_class q_next = a * q + q_prev;
    if (q_next > limit) break;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
    best = Rational(p, q);
    best.canonicalize();
    Rational frac = remainder - Rational(a);
    if (frac == 0) break;
    remainder = 1 / frac;
  }
  return best;
}

Rational binomial(unsigned n, unsigned k) {
  mpz_class result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return Rational(result);
}

}  // namespace hyperjump
