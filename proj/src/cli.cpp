#include "hk/cli.hpp"

#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hk/error.hpp"
#include "hk/hensel.hpp"
#include "hk/henselisation.hpp"
#include "hk/newton_polygon.hpp"
#include "hk/poly_io.hpp"
#include "hk/quotient_algebra.hpp"
#include "hk/tate_closure.hpp"
#include "hk/valued_field.hpp"

namespace hk::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string command;
  std::string field;
  std::string poly;
  std::string modulus;
  std::string elem;
  std::string start;
  long precision = 1;
  bool json = false;
};

template <class E>
Json coeffs_json(const Poly<E>& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

Json schema() {
  Json j;
  j["schema"] = 1;
  return j;
}

template <ValuedField F>
class Runner {
 public:
  using E = typename F::Elem;
  using P = Poly<E>;

  Runner(const Options& o, const F& field, std::istream& in, std::ostream& out)
      : o_(o), field_(field), in_(in), out_(out) {}

  void run() {
    const auto& c = o_.command;
    if (c == "polygon") return polygon();
    if (c == "zero-test") return zero_test(false);
    if (c == "valuation") return zero_test(true);
    if (c == "lift") return lift();
    if (c == "special-from") return special_from();
    if (c == "tate-check") return tate_check();
    if (c == "split") return split();
    if (c == "idempotent") return idempotent();
    if (c == "integrality") return integrality();
    if (c == "invert") return invert();
    throw Error(ErrorCode::Internal, "unhandled command " + c);
  }

 private:
  std::string operand(const std::string& value) {
    if (value != "-") return value;
    if (!stdin_cache_) {
      std::string all((std::istreambuf_iterator<char>(in_)), std::istreambuf_iterator<char>());
      while (!all.empty() && (all.back() == '\n' || all.back() == '\r')) all.pop_back();
      stdin_cache_ = all;
    }
    return *stdin_cache_;
  }
  P poly(const std::string& value) { return parse_poly(operand(value), field_); }
  E elem(const std::string& value) { return field_.parse_elem(operand(value)); }

  void emit(const Json& j) { out_ << j.dump() << '\n'; }

  void polygon() {
    const P q = poly(o_.poly);
    const auto np = build_polygon(q, field_);
    if (o_.json) {
      Json j = schema();
      j["ord0"] = np.ord0;
      j["vertices"] = Json::array();
      for (const auto& [i, v] : np.vertices) j["vertices"].push_back(Json::array({i, v}));
      j["segments"] = Json::array();
      for (const auto& s : np.segments) j["segments"].push_back(Json{{"slope", s.slope.get_str()}, {"len", s.length}});
      return emit(j);
    }
    out_ << "ord0: " << np.ord0 << "\nvertices:";
    for (const auto& [i, v] : np.vertices) out_ << " (" << i << "," << v << ")";
    out_ << "\nsegments:";
    for (const auto& s : np.segments) out_ << " [slope " << s.slope.get_str() << ", length " << s.length << "]";
    out_ << "\nroot valuations:";
    for (const auto& [w, n] : root_valuations(np)) out_ << " " << w << "^" << n;
    out_ << '\n';
  }

  void zero_test(bool valuation_only) {
    const P g1 = poly(o_.modulus);
    const P p = poly(o_.elem);
    const auto ring = new_step(g1, field_);
    const auto rep = ring.is_zero(p);
    if (valuation_only && !o_.json) {
      out_ << rep.valuation << '\n';
      return;
    }
    Json j = schema();
    j["verdict"] = std::string(to_string(rep.verdict));
    j["valuation"] = rep.valuation.to_string();
    j["q"] = coeffs_json(rep.q);
    j["r"] = coeffs_json(rep.r);
    if (rep.moved) {
      j["moved"] = Json::array({rep.moved->first.to_string(), rep.moved->second.to_string()});
    } else {
      j["moved"] = nullptr;
    }
    emit(j);
  }

  void lift() {
    const auto code = make_hensel_code(poly(o_.poly), elem(o_.start), field_);
    const E root = newton_lift(code, o_.precision, field_);
    if (o_.json) {
      Json j = schema();
      j["root"] = to_string(root);
      j["residual_valuation"] = field_.valuation(code.f(root)).to_string();
      return emit(j);
    }
    out_ << to_string(root) << '\n';
  }

  void special_from() {
    const auto sd = make_special(poly(o_.poly), field_);
    const Val v_gamma = field_.valuation(sd.a0);
    if (o_.json) {
      Json j = schema();
      j["g"] = coeffs_json(sd.g);
      j["g1"] = coeffs_json(sd.g1);
      j["gamma"] = Json{{"num", to_string(sd.gamma_num())}, {"den", coeffs_json(sd.gamma_den())}};
      j["gamma_valuation"] = v_gamma.to_string();
      return emit(j);
    }
    out_ << "g = " << pretty(sd.g) << "\ng1 = " << pretty(sd.g1) << "\ngamma = " << to_string(sd.gamma_num())
         << " / (1 + x)\nv(gamma) = " << v_gamma << '\n';
  }

  void tate_check() {
    QuotientAlgebra<E> q(poly(o_.modulus));
    const auto cert = tate_identity_check(q.reduce(poly(o_.elem)), q);
    if (o_.json) {
      Json j = schema();
      j["traces"] = Json::array();
      for (const auto& t : cert.traces) j["traces"].push_back(to_string(t));
      j["reconstruction"] = coeffs_json(cert.reconstruction);
      return emit(j);
    }
    out_ << "traces:";
    for (const auto& t : cert.traces) out_ << ' ' << to_string(t);
    out_ << "\nf'(x)*b = " << pretty(cert.reconstruction) << '\n';
  }

  void emit_factorisation(const Factorisation<E>& fac, Json extra = Json::object()) {
    if (o_.json) {
      Json j = schema();
      j["g"] = coeffs_json(fac.g);
      j["h"] = coeffs_json(fac.h);
      if (fac.bezout) {
        j["bezout"] = Json{{"u", coeffs_json(fac.bezout->u)}, {"v", coeffs_json(fac.bezout->v)}};
      } else {
        j["bezout"] = nullptr;
      }
      for (auto& [k, v] : extra.items()) j[k] = v;
      return emit(j);
    }
    out_ << "g = " << pretty(fac.g) << "\nh = " << pretty(fac.h) << '\n';
    if (fac.bezout) out_ << "u = " << pretty(fac.bezout->u) << "\nv = " << pretty(fac.bezout->v) << '\n';
    for (auto& [k, v] : extra.items()) out_ << k << " = " << v.dump() << '\n';
  }

  void split() {
    const P f = poly(o_.poly);
    if (o_.elem.empty()) return emit_factorisation(separable_split(f));
    emit_factorisation(unit_nilpotent_split(AlgebraElement<E>{poly(o_.elem)}, f));
  }

  void idempotent() {
    const P f = poly(o_.modulus);
    const auto fac = idempotent_to_factorisation(AlgebraElement<E>{poly(o_.elem)}, f);
    const auto e = factorisation_to_idempotent(f, fac);
    emit_factorisation(fac, Json{{"idempotent", coeffs_json(e.rep)}});
  }

  void integrality() {
    const P h = poly(o_.modulus);
    if (o_.elem.empty()) {
      const auto chk = integral_coefficients_check(h, field_);
      return emit_factorisation(chk.factorisation, Json{{"integral", chk.integral}});
    }
    const auto v = integral_trace_certificate(AlgebraElement<E>{poly(o_.elem)}, h, field_);
    if (o_.json) {
      Json j = schema();
      j["verdict"] = v.pass ? "pass" : "fail";
      j["traces"] = Json::array();
      for (const auto& t : v.certificate.traces) j["traces"].push_back(to_string(t));
      j["reconstruction"] = coeffs_json(v.certificate.reconstruction);
      if (v.offending_index) {
        j["offending_index"] = *v.offending_index;
      } else {
        j["offending_index"] = nullptr;
      }
      return emit(j);
    }
    out_ << (v.pass ? "PASS" : "FAIL");
    if (v.pass) out_ << ": h'(x)*b = " << pretty(v.certificate.reconstruction);
    if (v.offending_index) out_ << ": trace " << *v.offending_index << " = "
                                << to_string(v.certificate.traces[*v.offending_index]) << " is not in V";
    out_ << '\n';
  }

  void invert() {
    const auto ring = new_step(poly(o_.modulus), field_);
    const auto u = ring.element(poly(o_.elem));
    const auto w = ring.invert(u);
    if (o_.json) {
      Json j = schema();
      j["inverse"] = coeffs_json(w.num);
      return emit(j);
    }
    out_ << pretty(w.num) << '\n';
  }

  const Options& o_;
  const F& field_;
  std::istream& in_;
  std::ostream& out_;
  std::optional<std::string> stdin_cache_;
};

int classify_error(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidField:
    case ErrorCode::InvalidArgument:
      return kInputError;
    case ErrorCode::Internal:
      return kInternal;
    default:
      return kPrecondition;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& default_field) {
  Options o;
  CLI::App app{"Exact one-step henselisation kernel over discrete valued fields", "hk"};
  app.require_subcommand(1);

  struct Spec {
    const char* name;
    const char* help;
    std::vector<std::pair<std::string, bool>> operands;  // option name, required
  };
  const std::vector<Spec> specs = {
      {"polygon", "Newton polygon of --poly", {{"--poly", true}}},
      {"zero-test", "decide p(mu') = 0 in the step ring of --modulus", {{"--modulus", true}, {"--elem", true}}},
      {"valuation", "v(p(mu')) in the step ring of --modulus", {{"--modulus", true}, {"--elem", true}}},
      {"lift", "Newton lift of the Hensel code (--poly, --start)", {{"--poly", true}, {"--start", true}}},
      {"special-from", "special polynomial and zero gamma of --poly", {{"--poly", true}}},
      {"tate-check", "trace formula certificate for --elem modulo --modulus", {{"--modulus", true}, {"--elem", true}}},
      {"split", "separable split of --poly, or unit/nilpotent split w.r.t. --elem", {{"--poly", true}, {"--elem", false}}},
      {"idempotent", "factorisation attached to the idempotent --elem", {{"--modulus", true}, {"--elem", true}}},
      {"integrality", "trace certificate of --elem over --modulus, or coefficient check", {{"--modulus", true}, {"--elem", false}}},
      {"invert", "inverse of the unit --elem in the step ring of --modulus", {{"--modulus", true}, {"--elem", true}}},
  };
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--field", o.field, "padic:<p> or tadic (default: $HK_FIELD)");
    sub->add_flag("--json", o.json, "JSON output");
    for (const auto& [name, required] : s.operands) {
      std::string* target = name == "--poly" ? &o.poly : name == "--modulus" ? &o.modulus : name == "--elem" ? &o.elem : &o.start;
      auto* opt = sub->add_option(name, *target, "polynomial as ascending coefficients `c0,c1,...`, or `-` for stdin");
      if (required) opt->required();
    }
    if (std::string(s.name) == "lift") sub->add_option("--precision", o.precision, "target v(f(root))")->check(CLI::PositiveNumber);
    sub->callback([&o, name = std::string(s.name)] { o.command = name; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    std::string spec = o.field;
    if (spec.empty() && default_field) spec = *default_field;
    if (spec.empty()) throw Error(ErrorCode::InvalidField, "no field given (use --field or HK_FIELD)");
    const AnyField field = parse_field(spec);
    std::visit([&](const auto& f) { Runner(o, f, in, out).run(); }, field);
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return classify_error(e);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace hk::cli
