#pragma once

// Command dispatch for the `puiseux` executable. Kept in a header so tests can
// drive it in-process.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "puiseux/puiseux.hpp"

namespace puiseux::cli {

enum class Status { kOk = 0, kMathDomainError = 1, kParseError = 2, kResourceLimit = 3 };

struct CommandResult {
  Status status = Status::kOk;
  std::string out;
  std::string err;

  int exit_code() const { return static_cast<int>(status); }
};

namespace detail {

using nlohmann::ordered_json;

inline std::string str(const Rat& r) { return to_string(r); }
inline std::string str(const Coeff& c) { return to_string(c); }
inline std::string str(const Integer& z) { return to_string(z); }
inline std::string str(std::uint64_t v) { return std::to_string(v); }

inline std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

inline ordered_json poly_list(const std::vector<PuiseuxPoly>& ps) {
  ordered_json a = ordered_json::array();
  for (const auto& p : ps) a.push_back(format_poly(p));
  return a;
}

inline ordered_json rat_list(const std::vector<Rat>& rs) {
  ordered_json a = ordered_json::array();
  for (const auto& r : rs) a.push_back(str(r));
  return a;
}

/// Parses "Q", "F2", "F5", ... into an optional prime modulus.
inline std::optional<std::uint64_t> parse_field(const std::string& field) {
  if (field == "Q") return std::nullopt;
  if (field.size() < 2 || field[0] != 'F') throw ParseError("field must be Q or F<p>", 0);
  std::uint64_t p = 0;
  for (std::size_t i = 1; i < field.size(); ++i) {
    if (field[i] < '0' || field[i] > '9' || p > kMaxPrimeModulus) throw ParseError("malformed field", i);
    p = p * 10 + static_cast<std::uint64_t>(field[i] - '0');
  }
  require_prime_modulus(p);
  return p;
}

/// Reduces an integer-exponent element modulo p.
inline FpPoly to_fp(const PuiseuxPoly& f, std::uint64_t p) {
  std::vector<std::uint64_t> c;
  const Integer pz(static_cast<unsigned long>(p));
  for (const auto& t : f.terms()) {
    if (!t.exponent.is_integer()) throw DomainError("exponents over F_p must be integers");
    if (t.exponent.num() > 100'000) throw ResourceLimitError("degree too large");
    const std::size_t e = t.exponent.num().get_ui();
    if (c.size() <= e) c.resize(e + 1, 0);
    Integer den = t.coeff.get_den() % pz;
    if (den == 0) throw DomainError("coefficient denominator vanishes modulo p");
    Integer inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
    Integer v = (t.coeff.get_num() * inv) % pz;
    if (v < 0) v += pz;
    c[e] = v.get_ui();
  }
  return FpPoly(p, std::move(c));
}

inline QPoly to_q(const PuiseuxPoly& f) {
  if (f.is_zero()) return {};
  for (const auto& t : f.terms())
    if (!t.exponent.is_integer()) throw DomainError("expected integer exponents");
  return clear_denominators(f).poly;
}

template <class Field>
std::vector<std::string> render(const SymmetricVector<Field>& e) {
  std::vector<std::string> out;
  for (const auto& v : e.values) out.push_back(to_string(v));
  return out;
}

}  // namespace detail

/// Runs one invocation. `args` excludes the program name.
inline CommandResult run_command(const std::vector<std::string>& args) {
  using detail::ordered_json;
  using detail::str;

  CLI::App app{"Exact factorization and divisor enumeration in Puiseux algebras Q[S]", "puiseux"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  std::uint64_t limit = kDefaultDivisorLimit;
  app.add_flag("--json", json, "Emit a single JSON document");
  app.add_option("--limit", limit, "Cap on enumerated divisor candidates")->envname("PUISEUX_LIMIT");

  std::string poly_text, monoid_text, field = "Q", by_text, elem_text;
  std::uint64_t number = 0;

  auto* factor = app.add_subcommand("factor", "Canonical monomial/cyclotomic/prime factorization");
  factor->add_option("poly", poly_text)->required();
  auto* divisors = app.add_subcommand("divisors", "Non-associate divisors in Q[S]");
  divisors->add_option("poly", poly_text)->required();
  divisors->add_option("--monoid", monoid_text)->required();
  auto* atom = app.add_subcommand("atom", "Is the element an atom of Q[S]?");
  atom->add_option("poly", poly_text)->required();
  atom->add_option("--monoid", monoid_text)->required();
  auto* count = app.add_subcommand("count", "Number of non-associate divisors in Q[S]");
  count->add_option("poly", poly_text)->required();
  count->add_option("--monoid", monoid_text)->required();
  auto* symsupp = app.add_subcommand("symsupp", "Symmetric-support predicate");
  symsupp->add_option("poly", poly_text)->required();
  auto* cyclo = app.add_subcommand("cyclotomic", "Print the n-th cyclotomic polynomial");
  cyclo->add_option("n", number)->required();
  auto* totinv = app.add_subcommand("totient-inv", "All n with phi(n) = d");
  totinv->add_option("d", number)->required();
  auto* lemma = app.add_subcommand("lemma21", "Reciprocal vanishing check of elementary symmetric values");
  lemma->add_option("poly", poly_text)->required();
  lemma->add_option("--field", field, "Q (default) or F<p>");
  auto* matoms = app.add_subcommand("monoid-atoms", "Atoms of a finitely generated Puiseux monoid");
  matoms->add_option("--monoid", monoid_text)->required();
  auto* mdiv = app.add_subcommand("monoid-divisors", "Divisors of an element inside the monoid");
  mdiv->add_option("element", elem_text)->required();
  mdiv->add_option("--monoid", monoid_text)->required();
  auto* subst = app.add_subcommand("substitute", "Apply X^s -> X^(r s)");
  subst->add_option("poly", poly_text)->required();
  subst->add_option("--by", by_text)->required();

  CommandResult result;
  std::ostringstream out;

  // Every option is long or -h, so any other single-dash argument is a value
  // such as "-X + 1". A leading space keeps CLI11 from reading it as a flag
  // and is ignored by the text grammar.
  std::vector<std::string> reversed;
  for (auto it = args.rbegin(); it != args.rend(); ++it) {
    const bool value_like = it->size() > 1 && (*it)[0] == '-' && (*it)[1] != '-' && *it != "-h";
    reversed.push_back(value_like ? " " + *it : *it);
  }
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.status = Status::kParseError;
    result.err = std::string("usage error: ") + e.what() + "\n" + app.help();
    return result;
  }

  try {
    if (factor->parsed()) {
      const PuiseuxPoly f = parse_poly(poly_text);
      const CanonicalFactorization cf = canonical_factorization(f);
      if (json) {
        ordered_json j;
        j["command"] = "factor";
        j["input"] = format_poly(f);
        j["constant"] = str(cf.constant);
        j["m"] = str(cf.m);
        j["monomial"] = str(cf.monomial);
        j["cyclotomic"] = ordered_json::array();
        for (const auto& c : cf.cyclotomic)
          j["cyclotomic"].push_back({{"index", str(c.index)}, {"exponent", std::to_string(c.exponent)}});
        j["primes"] = ordered_json::array();
        for (const auto& p : cf.primes)
          j["primes"].push_back({{"poly", format_poly(p.poly)}, {"exponent", std::to_string(p.exponent)}});
        out << j.dump(2) << "\n";
      } else {
        const Rat inv_m(1, cf.m);
        const std::string var = format_monomial(inv_m);
        out << "input: " << format_poly(f) << "\n";
        out << "constant: " << str(cf.constant) << "\n";
        out << "clearing denominator: " << str(cf.m) << "\n";
        out << "monomial exponent: " << str(cf.monomial) << "\n";
        for (const auto& c : cf.cyclotomic)
          out << "cyclotomic: Phi_" << c.index << "(" << var << ")^" << c.exponent << " = ("
              << format_poly(generalized_poly(cyclotomic_poly(c.index), inv_m)) << ")^" << c.exponent << "\n";
        for (const auto& p : cf.primes)
          out << "prime: (" << format_poly(generalized_poly(p.poly, inv_m)) << ")^" << p.exponent << "\n";
      }
    } else if (divisors->parsed() || count->parsed() || atom->parsed()) {
      const PuiseuxPoly f = parse_poly(poly_text);
      const PuiseuxMonoid s = parse_monoid(monoid_text);
      if (atom->parsed() && f.is_constant()) throw DomainError("constants are zero or units, not atoms");
      const DivisorSet d = divisors_in_algebra(f, s, limit);
      ordered_json j;
      j["element"] = format_poly(f);
      j["monoid"] = format_monoid(s);
      if (divisors->parsed()) {
        j["command"] = "divisors";
        j["count"] = str(d.size());
        j["divisors"] = detail::poly_list(d.divisors);
        if (!json)
          for (const auto& g : d.divisors) out << format_poly(g) << "\n";
      } else if (count->parsed()) {
        j["command"] = "count";
        j["count"] = str(d.size());
        if (!json) out << d.size() << "\n";
      } else {
        j["command"] = "atom";
        j["atom"] = d.size() == 2;
        if (!json) out << (d.size() == 2 ? "true" : "false") << "\n";
      }
      if (json) out << j.dump(2) << "\n";
    } else if (symsupp->parsed()) {
      const PuiseuxPoly f = parse_poly(poly_text);
      const bool sym = is_symmetric_support(f);
      if (json)
        out << ordered_json{{"command", "symsupp"}, {"input", format_poly(f)}, {"symmetric", sym}}.dump(2) << "\n";
      else
        out << (sym ? "true" : "false") << "\n";
    } else if (cyclo->parsed()) {
      const QPoly phi = cyclotomic_poly(number);
      if (json)
        out << ordered_json{{"command", "cyclotomic"}, {"index", str(number)}, {"poly", format_poly(phi)}}.dump(2)
            << "\n";
      else
        out << format_poly(phi) << "\n";
    } else if (totinv->parsed()) {
      std::vector<std::string> ns;
      for (auto n : inverse_totient(number)) ns.push_back(std::to_string(n));
      if (json)
        out << ordered_json{{"command", "totient-inv"}, {"d", str(number)}, {"n", ns}}.dump(2) << "\n";
      else
        out << "{" << detail::join(ns, ", ") << "}\n";
    } else if (lemma->parsed()) {
      const PuiseuxPoly f = parse_poly(poly_text);
      const auto p = detail::parse_field(field);
      std::vector<std::string> values;
      ReciprocalReport report;
      if (p) {
        const FpPoly fp = detail::to_fp(f, *p);
        if (fp.degree() < 1) throw DomainError("lemma21 needs degree >= 1");
        const auto e = elementary_symmetric(fp);
        values = detail::render(e);
        report = reciprocal_vanishing_check(e);
      } else {
        const QPoly q = detail::to_q(f);
        if (q.degree() < 1) throw DomainError("lemma21 needs degree >= 1");
        const auto e = elementary_symmetric(q);
        values = detail::render(e);
        report = reciprocal_vanishing_check(e);
      }
      const std::size_t n = values.size() - 1;
      if (json) {
        ordered_json j{{"command", "lemma21"}, {"field", field}, {"input", format_poly(f)}, {"e", values},
                       {"holds", report.holds}};
        j["violations"] = ordered_json::array();
        for (auto k : report.witnesses) j["violations"].push_back(std::to_string(k));
        out << j.dump(2) << "\n";
      } else {
        out << "e: " << detail::join(values, " ") << "\n";
        out << "holds: " << (report.holds ? "true" : "false") << "\n";
        for (auto k : report.witnesses)
          out << "violation at k=" << k << ": e_" << k << " = " << values[k] << ", e_" << n - k << " = "
              << values[n - k] << "\n";
      }
    } else if (matoms->parsed()) {
      const PuiseuxMonoid s = parse_monoid(monoid_text);
      const auto atoms = monoid_atoms(s);
      if (json) {
        out << ordered_json{{"command", "monoid-atoms"}, {"monoid", format_monoid(s)}, {"atoms", detail::rat_list(atoms)}}
                   .dump(2)
            << "\n";
      } else {
        std::vector<std::string> items;
        for (const auto& a : atoms) items.push_back(str(a));
        out << "{" << detail::join(items, ", ") << "}\n";
      }
    } else if (mdiv->parsed()) {
      const PuiseuxMonoid s = parse_monoid(monoid_text);
      const Rat x = parse_rat(elem_text);
      const auto divs = divisors_in_monoid(s, x);
      if (json) {
        out << ordered_json{{"command", "monoid-divisors"}, {"monoid", format_monoid(s)}, {"element", str(x)},
                            {"divisors", detail::rat_list(divs)}}
                   .dump(2)
            << "\n";
      } else {
        std::vector<std::string> items;
        for (const auto& a : divs) items.push_back(str(a));
        out << "{" << detail::join(items, ", ") << "}\n";
      }
    } else if (subst->parsed()) {
      const PuiseuxPoly f = parse_poly(poly_text);
      const Rat r = parse_rat(by_text);
      const PuiseuxPoly g = substitute(f, r);
      if (json)
        out << ordered_json{{"command", "substitute"}, {"input", format_poly(f)}, {"by", str(r)},
                            {"result", format_poly(g)}}
                   .dump(2)
            << "\n";
      else
        out << format_poly(g) << "\n";
    }
  } catch (const ParseError& e) {
    result.status = Status::kParseError;
    result.err = std::string("parse error: ") + e.what() + "\n";
    return result;
  } catch (const DomainError& e) {
    result.status = Status::kMathDomainError;
    result.err = std::string("math domain error: ") + e.what() + "\n";
    return result;
  } catch (const ResourceLimitError& e) {
    result.status = Status::kResourceLimit;
    result.err = std::string("resource limit: ") + e.what() + "\n";
    return result;
  }
  result.out = out.str();
  return result;
}

}  // namespace puiseux::cli
